#ifndef RIORDAN_TESTS_ORACLES_HPP
#define RIORDAN_TESTS_ORACLES_HPP

// Independent oracles for the test suite. Everything here stays
// deliberately naive and separate from the library's code paths so the
// two can disagree when one is wrong.

#include <cstddef>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/series.hpp"
#include "riordan/triangular_matrix.hpp"

namespace riordan::test {

inline Series from_longs(const std::vector<long>& v) {
  std::vector<Rational> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
  return Series(std::move(c));
}

/// Long division of power series: the quotient num/den to order n,
/// computed by repeatedly cancelling the lowest remaining term.
/// Requires a unit denominator.
inline Series long_division(const Series& num, const Series& den, std::size_t n) {
  std::vector<Rational> quotient(n + 1);
  std::vector<Rational> remainder(n + 1);
  for (std::size_t i = 0; i <= n && i <= num.truncation(); ++i) remainder[i] = num.coeff(i);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational q = remainder[i] / den.coeff(0);
    quotient[i] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; i + j <= n && j <= den.truncation(); ++j)
      remainder[i + j] -= q * den.coeff(j);
  }
  return Series(std::move(quotient));
}

/// Pascal's triangle by the additive recurrence
/// m(n,k) = m(n-1,k-1) + m(n-1,k).
inline TriangularMatrix pascal_matrix(std::size_t size) {
  TriangularMatrix m(size);
  for (std::size_t n = 0; n < size; ++n) {
    m.set(n, 0, 1);
    for (std::size_t k = 1; k <= n; ++k)
      m.set(n, k, m.entry(n - 1, k - 1) + (k <= n - 1 ? m.entry(n - 1, k) : Rational(0)));
  }
  return m;
}

/// Inverse of a lower-triangular matrix by forward substitution, column
/// by column. Requires nonzero diagonal entries.
inline TriangularMatrix lt_inverse(const TriangularMatrix& m) {
  const std::size_t size = m.size();
  TriangularMatrix inv(size);
  for (std::size_t col = 0; col < size; ++col) {
    for (std::size_t row = col; row < size; ++row) {
      Rational rhs = (row == col) ? Rational(1) : Rational(0);
      for (std::size_t j = col; j < row; ++j) rhs -= m.entry(row, j) * inv.entry(j, col);
      inv.set(row, col, rhs / m.entry(row, row));
    }
  }
  return inv;
}

/// Composition a(f) the slow way: sum a_k * f^k term by term with
/// repeated naive multiplication.
inline Series brute_compose(const Series& a, const Series& f) {
  const std::size_t n = a.truncation();
  Series acc = Series::zero(n);
  Series power = Series::one(n);
  for (std::size_t k = 0; k <= n; ++k) {
    acc = acc + a.coeff(k) * power;
    power = power * f;
  }
  return acc;
}

}  // namespace riordan::test

#endif  // RIORDAN_TESTS_ORACLES_HPP
