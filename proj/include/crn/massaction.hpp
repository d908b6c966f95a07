#ifndef CRN_MASSACTION_HPP
#define CRN_MASSACTION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "crn/network.hpp"

namespace crn {

/// One rate monomial kappa_i * x^y. The rate label travels with the reaction
/// index so polynomials can be specialized without the network at hand.
struct RateMonomial {
  std::size_t reaction = 0;
  std::string rate;
  Complex monomial;

  friend bool operator==(const RateMonomial&, const RateMonomial&) = default;
  friend auto operator<=>(const RateMonomial&, const RateMonomial&) = default;
};

/// Integer-linear combination of rate monomials, i.e. sum of c * kappa_i * x^y.
/// Monomials index species of the owning network.
class RatePolynomial {
 public:
  using Terms = std::map<RateMonomial, std::int64_t>;

  RatePolynomial() = default;

  static RatePolynomial term(std::size_t reaction, std::string rate, Complex monomial, std::int64_t coeff = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  std::int64_t coefficient(std::size_t reaction, const Complex& monomial) const;

  void add_term(const RateMonomial& m, std::int64_t coeff);

  RatePolynomial& operator+=(const RatePolynomial& o);
  RatePolynomial& operator-=(const RatePolynomial& o);
  RatePolynomial& operator*=(std::int64_t c);
  friend RatePolynomial operator+(RatePolynomial a, const RatePolynomial& b) { return a += b; }
  friend RatePolynomial operator-(RatePolynomial a, const RatePolynomial& b) { return a -= b; }
  friend RatePolynomial operator*(std::int64_t c, RatePolynomial p) { return p *= c; }
  RatePolynomial operator-() const { return -1 * *this; }

  friend bool operator==(const RatePolynomial&, const RatePolynomial&) = default;

 private:
  Terms terms_;
};

/// Renders e.g. `-k1*x_A^2 - 2*k2*x_A^2 - k3*x_A*x_B`, terms in reaction
/// order; the zero polynomial renders as `0`.
std::string format_rate_polynomial(const RatePolynomial& p, const std::vector<std::string>& species);
std::string format_monomial(const Complex& m, const std::vector<std::string>& species);

/// One steady-state polynomial per species of the network.
struct SteadyStateSystem {
  RingContext context;
  std::vector<RatePolynomial> rates;  // indexed like context.species

  const RatePolynomial& of(std::size_t species) const { return rates.at(species); }
};

/// Mass-action derivative of every species:
/// x_s' = sum over reactions of kappa_i x^{y_i} (y'_{i,s} - y_{i,s}).
SteadyStateSystem steady_state_system(const Network& n);

/// Lines `x_<s>' = <polynomial>`, one per species.
std::string format_system(const SteadyStateSystem& sys);

/// Distinct reactant complexes in first-appearance order.
std::vector<Complex> reactant_support_generators(const Network& n);

/// Reactants not strictly divisible by another reactant.
std::vector<Complex> minimal_reactants(const Network& n);

}  // namespace crn

#endif  // CRN_MASSACTION_HPP
