#ifndef CRN_GROEBNER_HPP
#define CRN_GROEBNER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "crn/network.hpp"
#include "crn/polynomial.hpp"

namespace crn {

/// Reduced Groebner basis (monic, interreduced, sorted by descending
/// leading monomial) of the ideal generated by `gens`. Zero generators are
/// ignored; an empty or all-zero input yields the empty basis. All inputs
/// must share one ring.
std::vector<QPolynomial> reduced_groebner_basis(const std::vector<QPolynomial>& gens);

/// Remainder of full multivariate division of `f` by `basis`.
QPolynomial normal_form(const QPolynomial& f, const std::vector<QPolynomial>& basis);

QPolynomial s_polynomial(const QPolynomial& f, const QPolynomial& g);

struct BasisCheck {
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Every S-polynomial of `basis` and every generator reduces to 0, and the
/// basis is monic and interreduced.
BasisCheck check_groebner_basis(const std::vector<QPolynomial>& gens, const std::vector<QPolynomial>& basis);

enum class Answer { Equal, NotEqual, Member, NotMember, Monomial, NotMonomial };

std::string_view to_string(Answer a);
bool is_affirmative(Answer a);

/// A polynomial outside the other ideal, with its nonzero normal form.
struct Witness {
  std::string description;
  QPolynomial polynomial;
  QPolynomial remainder;
};

/// Generators and reduced basis of one specialized ideal.
struct SpecializedIdeal {
  std::string name;
  std::vector<QPolynomial> generators;
  std::vector<QPolynomial> basis;
};

struct TrialRecord {
  std::size_t index = 0;  // 0-based
  std::vector<std::pair<std::string, Rational>> kappa;  // in ring rate order
  std::vector<SpecializedIdeal> ideals;
  Answer answer = Answer::Equal;
  std::optional<Witness> witness;
};

/// Randomized-oracle outcome; every trial agreed on `answer`.
struct Verdict {
  Answer answer = Answer::Equal;
  unsigned trials = 0;
  std::uint64_t seed = 0;
  MonomialOrder order = MonomialOrder::DegRevLex;
  RingContext context;
  std::vector<TrialRecord> records;

  /// First recorded witness, if any.
  const Witness* witness() const;
};

/// Raised when trials disagree; rerun with more trials or another seed.
class UnluckySpecialization : public Error {
 public:
  using Error::Error;
};

struct OracleOptions {
  unsigned trials = 3;
  std::uint64_t seed = 0;
  MonomialOrder order = MonomialOrder::DegRevLex;
};

/// Draws one value in (0,1] per label, in order: denominator uniform in
/// [1,997], numerator uniform in [1,denominator]. Successive calls on the
/// same generator continue the stream.
class RateSampler {
 public:
  explicit RateSampler(std::uint64_t seed);
  std::vector<std::pair<std::string, Rational>> draw(const std::vector<std::string>& labels);

 private:
  std::mt19937_64 engine_;
};

/// Specialized steady-state generators of `n`, one per species of `n`, in
/// `ring` (whose variables must include every species of `n`).
std::vector<QPolynomial> specialized_generators(const Network& n,
                                                const std::vector<std::pair<std::string, Rational>>& kappa,
                                                const RingPtr& ring);

/// EQUAL iff in every trial each generator of either ideal reduces to 0
/// modulo the other's reduced basis, in the union ring.
Verdict ideal_equal(const Network& n1, const Network& n2, const OracleOptions& opt = {});

/// MEMBER iff x^m reduces to 0 in every trial. `m` indexes species of `n`.
Verdict contains_monomial(const Network& n, const Complex& m, const OracleOptions& opt = {});

/// MONOMIAL iff every trial's reduced basis consists of monomials and
/// equals the reduced basis of the reactant monomial ideal.
Verdict is_monomial_ideal(const Network& n, const OracleOptions& opt = {});

/// Reduced basis of I(n) for each trial (answer is always Equal).
Verdict groebner_trials(const Network& n, const OracleOptions& opt = {});

}  // namespace crn

#endif  // CRN_GROEBNER_HPP
