#ifndef RIORDAN_RANDOM_ARRAYS_HPP
#define RIORDAN_RANDOM_ARRAYS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "riordan/k_riordan.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// splitmix64 step; used to derive independent per-trial seeds so that
/// results do not depend on trial execution order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Rng = std::mt19937_64;

/// Small rationals keep exact-arithmetic growth manageable at desk
/// truncations: numerators in [-5, 5], denominators in {1, 2, 3}.
inline Rational random_rational(Rng& rng) {
  const long num = static_cast<long>(rng() % 11) - 5;
  const long den = static_cast<long>(rng() % 3) + 1;
  return Rational(num, den);
}

inline Rational random_nonzero_rational(Rng& rng) {
  const long num = static_cast<long>(rng() % 5) + 1;
  const long sign = (rng() % 2 == 0) ? 1 : -1;
  const long den = static_cast<long>(rng() % 3) + 1;
  return Rational(sign * num, den);
}

inline Series random_series(Rng& rng, std::size_t trunc) {
  std::vector<Rational> c(trunc + 1);
  for (auto& x : c) x = random_rational(rng);
  return Series(std::move(c));
}

/// A random element of F0 (unit: nonzero constant term).
inline Series random_unit_series(Rng& rng, std::size_t trunc) {
  std::vector<Rational> c(trunc + 1);
  c[0] = random_nonzero_rational(rng);
  for (std::size_t i = 1; i <= trunc; ++i) c[i] = random_rational(rng);
  return Series(std::move(c));
}

/// A random element of F1 (order exactly one).
inline Series random_delta_series(Rng& rng, std::size_t trunc) {
  std::vector<Rational> c(trunc + 1);
  if (trunc >= 1) c[1] = random_nonzero_rational(rng);
  for (std::size_t i = 2; i <= trunc; ++i) c[i] = random_rational(rng);
  return Series(std::move(c));
}

inline RiordanArray random_riordan(Rng& rng, std::size_t trunc) {
  return RiordanArray(random_unit_series(rng, trunc), random_delta_series(rng, trunc));
}

/// Random (g, m_1..m_k) with the support structure baked in: g is an
/// aerated unit, every multiplier is z * q_i(z^k) for a random unit q_i.
/// With monic = true the multipliers' linear coefficients are 1, so the
/// multiplier product has a rational k-th root and the root-based
/// formulas apply.
inline KRiordanArray random_k_riordan(Rng& rng, unsigned k, std::size_t trunc,
                                      bool monic = false) {
  Series ghat = random_unit_series(rng, trunc / k);
  Series g = aerate(ghat, k, trunc);
  std::vector<Series> ms;
  ms.reserve(k);
  for (unsigned i = 0; i < k; ++i) {
    Series q = random_unit_series(rng, (trunc - 1) / k);
    if (monic) {
      std::vector<Rational> c = q.coeffs();
      c[0] = 1;
      q = Series(std::move(c));
    }
    ms.push_back(unit_to_multiplier(q, k, trunc));
  }
  return KRiordanArray(k, std::move(g), std::move(ms));
}

/// Random element of the Checkerboard subgroup (even g, odd f).
inline RiordanArray random_checkerboard(Rng& rng, std::size_t trunc) {
  const KRiordanArray d = random_k_riordan(rng, 2, trunc);
  return RiordanArray(d.g(), d.multiplier(1));
}

/// Random type-i almost Appell array: the i-th multiplier is pinned to z.
inline KRiordanArray random_almost_appell(Rng& rng, unsigned k, unsigned position,
                                          std::size_t trunc) {
  KRiordanArray d = random_k_riordan(rng, k, trunc);
  std::vector<Series> ms = d.multipliers();
  if (position < 1 || position > k)
    throw PositionError("almost Appell position outside 1..k");
  ms[position - 1] = Series::z(trunc);
  return KRiordanArray(k, d.g(), std::move(ms));
}

}  // namespace riordan

#endif  // RIORDAN_RANDOM_ARRAYS_HPP
