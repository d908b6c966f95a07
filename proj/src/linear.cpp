#include "crn/linear.hpp"

namespace crn {

namespace {

struct Echelon {
  IntMatrix m;                     // augmented matrix after elimination
  std::vector<std::size_t> pivot_cols;  // pivot column of row r
};

// Bareiss elimination restricted to the first `ncols` columns; the
// remaining columns ride along.
Echelon bareiss(IntMatrix m, std::size_t ncols) {
  Echelon out;
  const std::size_t nrows = m.size();
  const std::size_t width = nrows == 0 ? 0 : m[0].size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && m[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> solve_exact(const IntMatrix& a, const std::vector<Integer>& b) {
  const std::size_t nrows = a.size();
  const std::size_t ncols = nrows == 0 ? 0 : a[0].size();
  IntMatrix aug(nrows, std::vector<Integer>(ncols + 1));
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) aug[i][j] = a[i][j];
    aug[i][ncols] = b.at(i);
  }
  Echelon e = bareiss(std::move(aug), ncols);
  const std::size_t rk = e.pivot_cols.size();
  for (std::size_t i = rk; i < nrows; ++i) {
    if (e.m[i][ncols] != 0) return std::nullopt;
  }
  std::vector<Rational> z(ncols, 0);
  for (std::size_t rr = rk; rr-- > 0;) {
    std::size_t c = e.pivot_cols[rr];
    Rational acc = e.m[rr][ncols];
    for (std::size_t j = c + 1; j < ncols; ++j) {
      if (e.m[rr][j] != 0 && z[j] != 0) acc -= Rational(e.m[rr][j]) * z[j];
    }
    z[c] = acc / Rational(e.m[rr][c]);
    z[c].canonicalize();
  }
  return z;
}

std::size_t rank(const IntMatrix& a) {
  if (a.empty()) return 0;
  return bareiss(a, a[0].size()).pivot_cols.size();
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& z) {
  Integer l = 1;
  for (const auto& q : z) {
    if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(z.size());
  Integer g = 0;
  for (const auto& q : z) {
    Integer v = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g > 1) {
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

}  // namespace crn
