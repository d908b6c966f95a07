#ifndef CRN_LINEAR_HPP
#define CRN_LINEAR_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace crn {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<Integer>>;

/// Solves A z = b exactly. Returns a rational solution with every free
/// variable set to zero, or nullopt when b is outside the column span of A.
///
/// Fraction-free (Bareiss) elimination on the augmented matrix; pivots are
/// the first nonzero entry scanning rows top-down within each column,
/// columns left to right.
std::optional<std::vector<Rational>> solve_exact(const IntMatrix& a, const std::vector<Integer>& b);

std::size_t rank(const IntMatrix& a);

/// Scales a rational vector by the lcm of its denominators and divides by
/// the gcd of the resulting numerators.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& z);

}  // namespace crn

#endif  // CRN_LINEAR_HPP
