#ifndef CRN_POLYNOMIAL_HPP
#define CRN_POLYNOMIAL_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "crn/linear.hpp"
#include "crn/massaction.hpp"
#include "crn/network.hpp"

namespace crn {

enum class MonomialOrder { DegRevLex, Lex };

std::string_view to_string(MonomialOrder o);
MonomialOrder parse_order(std::string_view s);

using Exponents = std::vector<unsigned>;

/// Three-way comparison of monomials under `o`; the first variable is the
/// largest.
int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder o);
bool monomial_divides(const Exponents& a, const Exponents& b);
Exponents monomial_lcm(const Exponents& a, const Exponents& b);

/// Variables (rendered as x_<species>) and order of a polynomial ring over Q.
struct Ring {
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::DegRevLex;

  std::size_t size() const noexcept { return variables.size(); }
  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, MonomialOrder order = MonomialOrder::DegRevLex);

struct Term {
  Exponents exponents;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q with terms sorted strictly descending in the
/// ring's order and no zero coefficients.
class QPolynomial {
 public:
  explicit QPolynomial(RingPtr ring);
  static QPolynomial monomial(RingPtr ring, Exponents e, Rational c = 1);
  static QPolynomial constant(RingPtr ring, Rational c);
  static QPolynomial variable(RingPtr ring, std::size_t i);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  const Term& leading_term() const;
  const Exponents& leading_monomial() const { return leading_term().exponents; }
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  QPolynomial monic() const;
  /// Removes the leading term (no-op on zero).
  void drop_leading_term();
  QPolynomial times_term(const Exponents& e, const Rational& c) const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const Rational& c, const QPolynomial& p);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

  /// Same ring contents and same terms.
  friend bool operator==(const QPolynomial& a, const QPolynomial& b);

  std::string to_string() const;

 private:
  QPolynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws Error unless both polynomials live in rings with identical
/// variables and order.
void require_same_ring(const QPolynomial& a, const QPolynomial& b);

/// Substitutes rate values into `p` and maps species index s of the source
/// network to variable embedding[s] of `ring`. Throws Error on a missing
/// label or a zero value.
QPolynomial specialize(const RatePolynomial& p, const std::map<std::string, Rational>& assignment,
                       const std::vector<std::size_t>& embedding, const RingPtr& ring);

/// Same, with the identity embedding.
QPolynomial specialize(const RatePolynomial& p, const std::map<std::string, Rational>& assignment, const RingPtr& ring);

/// Monomial x^c of a complex of `n`, embedded into `ring`.
QPolynomial complex_monomial(const Complex& c, const std::vector<std::size_t>& embedding, const RingPtr& ring);

}  // namespace crn

#endif  // CRN_POLYNOMIAL_HPP
