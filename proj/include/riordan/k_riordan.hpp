#ifndef RIORDAN_K_RIORDAN_HPP
#define RIORDAN_K_RIORDAN_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"
#include "riordan/triangular_matrix.hpp"

namespace riordan {

/// A k-Riordan array (g, m_1, ..., m_k): column 0 is generated by g and
/// each next column multiplies the m_i cyclically. Support constraints
/// make the set a group: g lives on exponents = 0 (mod k) with g_0 != 0,
/// every multiplier on exponents = 1 (mod k) with order exactly one.
///
/// k = 1 degenerates to the ordinary Riordan array, k = 2 is the Double
/// Riordan array (even g, odd multipliers).
class KRiordanArray {
 public:
  KRiordanArray(unsigned k, Series g, std::vector<Series> multipliers)
      : k_(k), g_(std::move(g)), multipliers_(std::move(multipliers)) {
    if (k_ == 0) throw ArityError("k-riordan array: arity must be >= 1");
    if (multipliers_.size() != k_)
      throw ArityError("k-riordan array: expected " + std::to_string(k_) + " multipliers, got " +
                       std::to_string(multipliers_.size()));
    for (const auto& m : multipliers_)
      if (m.truncation() != g_.truncation())
        throw PrecisionError("k-riordan array: all series must share a truncation");
    if (!support_is(g_, k_, 0))
      throw ArrayError("invalid g: support must lie on exponents = 0 (mod " +
                       std::to_string(k_) + ")");
    if (g_.coeff(0).is_zero()) throw ArrayError("invalid g: constant term must be nonzero");
    for (unsigned i = 1; i <= k_; ++i) {
      const Series& m = multipliers_[i - 1];
      if (!support_is(m, k_, 1))
        throw ArrayError("invalid m" + std::to_string(i) +
                         ": support must lie on exponents = 1 (mod " + std::to_string(k_) + ")");
      if (m.order() != std::optional<std::size_t>(1))
        throw ArrayError("invalid m" + std::to_string(i) + ": order must be exactly one");
    }
  }

  /// The identity (1, z, ..., z).
  static KRiordanArray identity(unsigned k, std::size_t trunc) {
    return KRiordanArray(k, Series::one(trunc),
                         std::vector<Series>(k, Series::z(trunc)));
  }

  unsigned arity() const { return k_; }
  std::size_t truncation() const { return g_.truncation(); }
  const Series& g() const { return g_; }
  const std::vector<Series>& multipliers() const { return multipliers_; }

  /// 1-based, matching the (g, m_1, ..., m_k) notation.
  const Series& multiplier(unsigned i) const {
    if (i < 1 || i > k_)
      throw PositionError("multiplier position " + std::to_string(i) + " outside 1.." +
                          std::to_string(k_));
    return multipliers_[i - 1];
  }

  friend bool operator==(const KRiordanArray& a, const KRiordanArray& b) {
    if (a.k_ != b.k_) return false;
    if (a.g_ != b.g_) return false;
    for (unsigned i = 0; i < a.k_; ++i)
      if (a.multipliers_[i] != b.multipliers_[i]) return false;
    return true;
  }
  friend bool operator!=(const KRiordanArray& a, const KRiordanArray& b) { return !(a == b); }

 private:
  unsigned k_;
  Series g_;
  std::vector<Series> multipliers_;
};

inline KRiordanArray retruncate(const KRiordanArray& d, std::size_t trunc) {
  std::vector<Series> ms;
  ms.reserve(d.arity());
  for (const auto& m : d.multipliers()) ms.push_back(retruncate(m, trunc));
  return KRiordanArray(d.arity(), retruncate(d.g(), trunc), std::move(ms));
}

inline KRiordanArray as_k_riordan(const RiordanArray& r) {
  return KRiordanArray(1, r.g(), {r.f()});
}

inline RiordanArray as_riordan(const KRiordanArray& d) {
  if (d.arity() != 1) throw ArityError("as_riordan: array has arity > 1");
  return RiordanArray(d.g(), d.multiplier(1));
}

/// Every multiplier factors as m(z) = z * q(z^k) with q a unit; q is the
/// de-aerated core that all root-free computations work with.
inline Series multiplier_to_unit(const Series& m, unsigned k) {
  return deaerate(shift_down(m, 1), k, 0);
}

/// Rebuilds m(z) = z * q(z^k) at the requested truncation.
inline Series unit_to_multiplier(const Series& q, unsigned k, std::size_t trunc) {
  if (trunc == 0) throw PrecisionError("unit_to_multiplier: truncation must be >= 1");
  return shift_up(aerate(q, k, trunc - 1), 1, trunc);
}

/// The multiplier product P = m_1 * ... * m_k together with its
/// de-aerated core Phat = deaerate(P, k, 0). P has order k and support
/// k*Z, so Phat has order one and a compositional inverse; Phat carries
/// everything the classical formulas express through the k-th root
/// h = P^(1/k), via h^k = P = Phat(z^k).
struct AeratedProfile {
  Series product;  // P
  Series core;     // Phat
};

inline AeratedProfile profile(const KRiordanArray& d) {
  Series p = d.multiplier(1);
  for (unsigned i = 2; i <= d.arity(); ++i) p = p * d.multiplier(i);
  Series core = deaerate(p, d.arity(), 0);
  return AeratedProfile{std::move(p), std::move(core)};
}

/// Expansion to the leading (N+1)x(N+1) submatrix: column j applies the
/// multipliers cyclically, one multiplication per column.
inline TriangularMatrix to_matrix(const KRiordanArray& d, std::size_t n) {
  if (n > d.truncation()) throw PrecisionError("to_matrix: size beyond truncation");
  TriangularMatrix m(n + 1);
  Series column = d.g();
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t row = j; row <= n; ++row) m.set(row, j, column.coeff(row));
    if (j < n) column = column * d.multiplier(static_cast<unsigned>(j % d.arity()) + 1);
  }
  return m;
}

namespace detail {

inline void require_double(const KRiordanArray& d, const char* who) {
  if (d.arity() != 2)
    throw ArityError(std::string(who) + ": only defined for Double Riordan arrays (k = 2)");
}

inline void require_compatible(const KRiordanArray& a, const KRiordanArray& b) {
  if (a.arity() != b.arity())
    throw ArityError("arity mismatch: " + std::to_string(a.arity()) + " vs " +
                     std::to_string(b.arity()));
  if (a.truncation() != b.truncation())
    throw PrecisionError("truncation mismatch between operand arrays");
}

}  // namespace detail

/// FTDRA, even case: B = g * A(sqrt(f1*f2)) for even A. Since A is
/// even, A(sqrt(P)) = Ahat(P) with Ahat = deaerate(A,2,0), so the root
/// never materializes.
inline Series ftdra_apply_even(const KRiordanArray& d, const Series& a) {
  detail::require_double(d, "ftdra_apply_even");
  if (a.truncation() != d.truncation())
    throw PrecisionError("ftdra_apply_even: truncation mismatch");
  if (!support_is(a, 2, 0)) throw SupportError("ftdra_apply_even: input must be even");
  const AeratedProfile pr = profile(d);
  const Series ahat = deaerate(a, 2, 0);
  return mul_aerated(d.g(), compose(ahat, pr.core), 2);
}

/// FTDRA, odd case: B = g * sqrt(f1/f2) * A(sqrt(f1*f2)) for odd A.
/// With A(w) = w*Acheck(w^2) the roots cancel into B = g*f1*Acheck(P).
inline Series ftdra_apply_odd(const KRiordanArray& d, const Series& a) {
  detail::require_double(d, "ftdra_apply_odd");
  if (a.truncation() != d.truncation())
    throw PrecisionError("ftdra_apply_odd: truncation mismatch");
  if (!support_is(a, 2, 1)) throw SupportError("ftdra_apply_odd: input must be odd");
  const AeratedProfile pr = profile(d);
  const Series acheck = deaerate(a, 2, 1);
  const Series core = retruncate(pr.core, acheck.truncation());
  return mul_aerated(d.g() * d.multiplier(1), compose(acheck, core), 2);
}

/// Group law. The classical form
///   (g,m_1..m_k)*(G,M_1..M_k) = (g*G(h), (m_1/h)M_1(h), .., (m_k/h)M_k(h)),
/// h^k = m_1*..*m_k, is evaluated root-free: with G = Ghat(z^k) and
/// M_i = z*Q_i(z^k),
///   G(h)        = Ghat(Phat)(z^k)
///   (m_i/h)M_i(h) = m_i * Q_i(Phat)(z^k),
/// so every component is a composition with the de-aerated core Phat.
/// This keeps the group total over the rationals even when h itself has
/// an irrational leading coefficient.
inline KRiordanArray operator*(const KRiordanArray& lhs, const KRiordanArray& rhs) {
  detail::require_compatible(lhs, rhs);
  const unsigned k = lhs.arity();
  const std::size_t n = lhs.truncation();
  const AeratedProfile pr = profile(lhs);

  const Series ghat = deaerate(rhs.g(), k, 0);
  Series g_out = mul_aerated(lhs.g(), compose(ghat, pr.core), k);

  std::vector<Series> ms;
  ms.reserve(k);
  const std::size_t mq_trunc = (n - 1) / k;
  const Series core_short = retruncate(pr.core, mq_trunc);
  for (unsigned i = 1; i <= k; ++i) {
    const Series q = multiplier_to_unit(rhs.multiplier(i), k);
    ms.push_back(mul_aerated(lhs.multiplier(i), compose(q, core_short), k));
  }
  return KRiordanArray(k, std::move(g_out), std::move(ms));
}

/// Group inverse. The classical (1/g(hbar), z*hbar/m_1(hbar), ...) with
/// hbar the compositional inverse of h reduces root-free through
/// hbar^k = R(z^k), R = comp_inverse(Phat):
///   g(hbar)          = ghat(R)(z^k)
///   z*hbar/m_i(hbar) = z / Q_i(R)(z^k),
/// because m_i(hbar) = hbar * Q_i(hbar^k) and the hbar factors cancel.
inline KRiordanArray inverse(const KRiordanArray& d) {
  const unsigned k = d.arity();
  const std::size_t n = d.truncation();
  const AeratedProfile pr = profile(d);
  const Series r = comp_inverse(pr.core);

  const Series ghat = deaerate(d.g(), k, 0);
  Series g_out = reciprocal(aerate(compose(ghat, r), k, n));

  std::vector<Series> ms;
  ms.reserve(k);
  const std::size_t mq_trunc = (n - 1) / k;
  const Series r_short = retruncate(r, mq_trunc);
  for (unsigned i = 1; i <= k; ++i) {
    const Series q = multiplier_to_unit(d.multiplier(i), k);
    const Series u = reciprocal(aerate(compose(q, r_short), k, n - 1));
    ms.push_back(shift_up(u, 1, n));
  }
  return KRiordanArray(k, std::move(g_out), std::move(ms));
}

/// Literal evaluation of the product through h = kth_root(P, k).
/// Requires the root to be rational (e.g. monic multipliers); exists to
/// cross-validate the root-free path, which is the authoritative one.
inline KRiordanArray multiply_via_roots(const KRiordanArray& lhs, const KRiordanArray& rhs) {
  detail::require_compatible(lhs, rhs);
  const unsigned k = lhs.arity();
  Series p = lhs.multiplier(1);
  for (unsigned i = 2; i <= k; ++i) p = p * lhs.multiplier(i);
  const Series h = kth_root(p, k);

  Series g_out = lhs.g() * compose(rhs.g(), h);

  const Series h_unit_inv = reciprocal(shift_down(h, 1));  // 1/(h/z), truncation n-1
  std::vector<Series> ms;
  ms.reserve(k);
  for (unsigned i = 1; i <= k; ++i) {
    const Series quotient = shift_down(lhs.multiplier(i), 1) * h_unit_inv;  // m_i/h
    ms.push_back(mul_aerated(compose(rhs.multiplier(i), h), quotient, 1));
  }
  return KRiordanArray(k, std::move(g_out), std::move(ms));
}

}  // namespace riordan

#endif  // RIORDAN_K_RIORDAN_HPP
