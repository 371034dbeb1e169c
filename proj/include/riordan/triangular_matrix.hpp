#ifndef RIORDAN_TRIANGULAR_MATRIX_HPP
#define RIORDAN_TRIANGULAR_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"

namespace riordan {

/// Leading principal (N+1)x(N+1) submatrix of an infinite
/// lower-triangular matrix. Only the lower triangle is stored; entries
/// above the diagonal are exactly zero by construction.
class TriangularMatrix {
 public:
  explicit TriangularMatrix(std::size_t size) : rows_(size) {
    if (size == 0) throw PrecisionError("matrix must have at least one row");
    for (std::size_t n = 0; n < size; ++n) rows_[n].resize(n + 1);
  }

  static TriangularMatrix identity(std::size_t size) {
    TriangularMatrix m(size);
    for (std::size_t n = 0; n < size; ++n) m.rows_[n][n] = 1;
    return m;
  }

  std::size_t size() const { return rows_.size(); }

  /// Entry m_{n,j}; zero above the diagonal.
  Rational entry(std::size_t n, std::size_t j) const {
    check_row(n);
    if (j >= rows_.size()) throw PrecisionError("matrix column out of range");
    if (j > n) return 0;
    return rows_[n][j];
  }

  void set(std::size_t n, std::size_t j, Rational v) {
    check_row(n);
    if (j > n) throw PrecisionError("cannot set an entry above the diagonal");
    rows_[n][j] = std::move(v);
  }

  /// Row n of the lower triangle (n+1 entries).
  const std::vector<Rational>& row(std::size_t n) const {
    check_row(n);
    return rows_[n];
  }

  friend bool operator==(const TriangularMatrix& a, const TriangularMatrix& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator!=(const TriangularMatrix& a, const TriangularMatrix& b) {
    return !(a == b);
  }

  /// Exact matrix product; lower triangles compose to lower triangles.
  friend TriangularMatrix operator*(const TriangularMatrix& a, const TriangularMatrix& b) {
    if (a.size() != b.size()) throw PrecisionError("matrix product: size mismatch");
    TriangularMatrix c(a.size());
    for (std::size_t n = 0; n < a.size(); ++n)
      for (std::size_t j = 0; j <= n; ++j) {
        Rational acc = 0;
        for (std::size_t m = j; m <= n; ++m) acc += a.rows_[n][m] * b.rows_[m][j];
        c.rows_[n][j] = std::move(acc);
      }
    return c;
  }

  /// Matrix-vector product against a coefficient column.
  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != size()) throw PrecisionError("matrix-vector product: size mismatch");
    std::vector<Rational> out(size());
    for (std::size_t n = 0; n < size(); ++n) {
      Rational acc = 0;
      for (std::size_t j = 0; j <= n; ++j) acc += rows_[n][j] * v[j];
      out[n] = std::move(acc);
    }
    return out;
  }

 private:
  void check_row(std::size_t n) const {
    if (n >= rows_.size())
      throw PrecisionError("matrix row " + std::to_string(n) + " out of range");
  }

  std::vector<std::vector<Rational>> rows_;
};

}  // namespace riordan

#endif  // RIORDAN_TRIANGULAR_MATRIX_HPP
