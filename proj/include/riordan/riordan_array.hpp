#ifndef RIORDAN_RIORDAN_ARRAY_HPP
#define RIORDAN_RIORDAN_ARRAY_HPP

#include <cstddef>
#include <utility>

#include "riordan/errors.hpp"
#include "riordan/series.hpp"
#include "riordan/triangular_matrix.hpp"

namespace riordan {

/// An ordinary Riordan array (g, f): the lower-triangular matrix whose
/// column k is generated by g*f^k. Requires g with a nonzero constant
/// term and f of order exactly one, at equal truncation.
class RiordanArray {
 public:
  RiordanArray(Series g, Series f) : g_(std::move(g)), f_(std::move(f)) {
    if (g_.truncation() != f_.truncation())
      throw PrecisionError("riordan array: g and f must share a truncation");
    if (!g_.is_unit()) throw ArrayError("invalid g: constant term must be nonzero");
    if (!f_.is_delta()) throw ArrayError("invalid f: order must be exactly one");
  }

  /// The group identity (1, z).
  static RiordanArray identity(std::size_t trunc) {
    return RiordanArray(Series::one(trunc), Series::z(trunc));
  }

  const Series& g() const { return g_; }
  const Series& f() const { return f_; }
  std::size_t truncation() const { return g_.truncation(); }

  friend bool operator==(const RiordanArray& a, const RiordanArray& b) {
    return a.g_ == b.g_ && a.f_ == b.f_;
  }
  friend bool operator!=(const RiordanArray& a, const RiordanArray& b) { return !(a == b); }

 private:
  Series g_, f_;
};

inline RiordanArray retruncate(const RiordanArray& r, std::size_t trunc) {
  return RiordanArray(retruncate(r.g(), trunc), retruncate(r.f(), trunc));
}

/// Expansion to the leading (N+1)x(N+1) submatrix. Column k+1 is built
/// from column k by one multiplication with f.
inline TriangularMatrix to_matrix(const RiordanArray& r, std::size_t n) {
  if (n > r.truncation()) throw PrecisionError("to_matrix: size beyond truncation");
  TriangularMatrix m(n + 1);
  Series column = r.g();
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t row = k; row <= n; ++row) m.set(row, k, column.coeff(row));
    if (k < n) column = column * r.f();
  }
  return m;
}

/// Action of (g, f) on a column vector: B = g * A(f). Coincides with
/// the matrix-vector product of the expanded array against A's
/// coefficients.
inline Series ftra_apply(const RiordanArray& r, const Series& a) {
  return r.g() * compose(a, r.f());
}

/// Group law (g,f)*(G,F) = (g*G(f), F(f)).
inline RiordanArray operator*(const RiordanArray& lhs, const RiordanArray& rhs) {
  return RiordanArray(lhs.g() * compose(rhs.g(), lhs.f()), compose(rhs.f(), lhs.f()));
}

/// Group inverse (1/g(fbar), fbar) with fbar the compositional inverse.
inline RiordanArray inverse(const RiordanArray& r) {
  Series fbar = comp_inverse(r.f());
  Series g_inv = reciprocal(compose(r.g(), fbar));
  return RiordanArray(std::move(g_inv), std::move(fbar));
}

/// Membership in the Checkerboard subgroup: even g, odd f. The matrix
/// of such an array carries the checkerboard zero pattern.
inline bool is_checkerboard(const RiordanArray& r) {
  return support_is(r.g(), 2, 0) && support_is(r.f(), 2, 1);
}

}  // namespace riordan

#endif  // RIORDAN_RIORDAN_ARRAY_HPP
