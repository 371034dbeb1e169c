#ifndef RIORDAN_SERIES_HPP
#define RIORDAN_SERIES_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"

namespace riordan {

/// Coarse classification of a truncated series by its first two
/// coefficients. Unit is the class of invertible series (nonzero
/// constant term); Delta is the class of series of order exactly one,
/// the compositionally invertible ones. The zero series is its own
/// class and belongs to neither.
enum class SeriesClass { Zero, Unit, Delta, Other };

/// A formal power series truncated at a fixed order N: exactly the
/// coefficients of z^0..z^N are retained, all of them exact rationals.
///
/// Binary operations insist on equal truncation; precision is never
/// coerced silently. Use retruncate() to shorten a series explicitly.
/// Values are immutable once built, so they can be shared freely.
class Series {
 public:
  /// The zero series truncated at `trunc`.
  explicit Series(std::size_t trunc) : coeffs_(trunc + 1) {}

  /// Truncation is inferred from the coefficient count (size N+1).
  explicit Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PrecisionError("a series needs at least its constant term");
  }

  static Series zero(std::size_t trunc) { return Series(trunc); }

  static Series constant(const Rational& c, std::size_t trunc) {
    Series s(trunc);
    s.coeffs_[0] = c;
    return s;
  }

  static Series one(std::size_t trunc) { return constant(1, trunc); }

  static Series monomial(const Rational& c, std::size_t exponent, std::size_t trunc) {
    if (exponent > trunc) throw PrecisionError("monomial exponent beyond truncation");
    Series s(trunc);
    s.coeffs_[exponent] = c;
    return s;
  }

  /// The series z itself.
  static Series z(std::size_t trunc) { return monomial(1, 1, trunc); }

  std::size_t truncation() const { return coeffs_.size() - 1; }

  /// [z^k]: the coefficient extraction operator. Indices beyond the
  /// truncation signal that the caller asked for unavailable precision.
  const Rational& coeff(std::size_t k) const {
    if (k >= coeffs_.size())
      throw PrecisionError("coefficient " + std::to_string(k) + " beyond truncation " +
                           std::to_string(truncation()));
    return coeffs_[k];
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Index of the lowest nonzero coefficient; nothing for the zero series.
  std::optional<std::size_t> order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return i;
    return std::nullopt;
  }

  SeriesClass classify() const {
    if (!coeffs_[0].is_zero()) return SeriesClass::Unit;
    if (coeffs_.size() > 1 && !coeffs_[1].is_zero()) return SeriesClass::Delta;
    return is_zero() ? SeriesClass::Zero : SeriesClass::Other;
  }

  bool is_unit() const { return classify() == SeriesClass::Unit; }
  bool is_delta() const { return classify() == SeriesClass::Delta; }

  friend bool operator==(const Series& a, const Series& b) {
    require_equal_truncation(a, b, "==");
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  friend Series operator+(const Series& a, const Series& b) {
    require_equal_truncation(a, b, "add");
    Series r(a.truncation());
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }

  friend Series operator-(const Series& a, const Series& b) {
    require_equal_truncation(a, b, "sub");
    Series r(a.truncation());
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }

  Series operator-() const {
    Series r(truncation());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
  }

  /// Cauchy product, truncated.
  friend Series operator*(const Series& a, const Series& b) {
    require_equal_truncation(a, b, "mul");
    Series r(a.truncation());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  friend Series operator*(const Rational& c, const Series& s) {
    Series r(s.truncation());
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) r.coeffs_[i] = c * s.coeffs_[i];
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Series& s) {
    os << "[";
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
      if (i) os << ", ";
      os << s.coeffs_[i];
    }
    return os << "]";
  }

 private:
  static void require_equal_truncation(const Series& a, const Series& b, const char* op) {
    if (a.truncation() != b.truncation())
      throw PrecisionError(std::string(op) + ": truncation mismatch (" +
                           std::to_string(a.truncation()) + " vs " +
                           std::to_string(b.truncation()) + ")");
  }

  std::vector<Rational> coeffs_;
};

/// Shortens a series to a lower truncation. Growing is refused: the
/// dropped coefficients are unknown, not zero.
inline Series retruncate(const Series& s, std::size_t trunc) {
  if (trunc > s.truncation()) throw PrecisionError("retruncate cannot extend a series");
  std::vector<Rational> c(s.coeffs().begin(), s.coeffs().begin() + static_cast<long>(trunc) + 1);
  return Series(std::move(c));
}

inline Series pow(const Series& s, unsigned long e) {
  Series acc = Series::one(s.truncation());
  Series base = s;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

/// Multiplication by z^count. The result truncation may extend up to
/// N + count, which is exact because the shifted-in coefficients all
/// come from the known range.
inline Series shift_up(const Series& s, std::size_t count, std::size_t out_trunc) {
  if (out_trunc > s.truncation() + count)
    throw PrecisionError("shift_up: requested truncation beyond available precision");
  Series r(out_trunc);
  std::vector<Rational> c(out_trunc + 1);
  for (std::size_t n = count; n <= out_trunc; ++n) c[n] = s.coeff(n - count);
  return Series(std::move(c));
}

inline Series shift_up(const Series& s, std::size_t count) {
  return shift_up(s, count, s.truncation());
}

/// Exact division by z^count; the low coefficients must vanish.
inline Series shift_down(const Series& s, std::size_t count) {
  if (count > s.truncation()) throw PrecisionError("shift_down: count beyond truncation");
  for (std::size_t i = 0; i < count; ++i)
    if (!s.coeff(i).is_zero())
      throw SupportError("shift_down: coefficient of z^" + std::to_string(i) + " is nonzero");
  std::vector<Rational> c(s.coeffs().begin() + static_cast<long>(count), s.coeffs().end());
  return Series(std::move(c));
}

/// True iff every nonzero coefficient sits at an exponent congruent to
/// r mod k. Evenness is support_is(s,2,0), oddness support_is(s,2,1).
inline bool support_is(const Series& s, unsigned k, unsigned r) {
  if (k == 0) throw InvalidStepError("support_is: step k must be >= 1");
  for (std::size_t e = 0; e <= s.truncation(); ++e)
    if (!s.coeff(e).is_zero() && e % k != r % k) return false;
  return true;
}

/// The substitution z -> z^k, spreading the sequence with k-1 zeros
/// between entries. Exact for any out_trunc <= k*(N+1)-1.
inline Series aerate(const Series& s, unsigned k, std::size_t out_trunc) {
  if (k == 0) throw InvalidStepError("aerate: step k must be >= 1");
  if (out_trunc > static_cast<std::size_t>(k) * (s.truncation() + 1) - 1)
    throw PrecisionError("aerate: requested truncation beyond available precision");
  Series r(out_trunc);
  std::vector<Rational> c(out_trunc + 1);
  for (std::size_t i = 0; k * i <= out_trunc; ++i) c[k * i] = s.coeff(i);
  return Series(std::move(c));
}

/// Truncation-preserving form: input coefficients beyond floor(N/k)
/// are discarded.
inline Series aerate(const Series& s, unsigned k) { return aerate(s, k, s.truncation()); }

/// Inverse of aeration on a series supported on exponents = r (mod k):
/// [z^i]result = [z^(ki+r)]s. The support precondition is what makes
/// this a faithful inverse; violations mean the series is not in the
/// claimed subgroup.
inline Series deaerate(const Series& s, unsigned k, unsigned r) {
  if (k == 0) throw InvalidStepError("deaerate: step k must be >= 1");
  if (r >= k) throw InvalidStepError("deaerate: residue must satisfy 0 <= r < k");
  if (!support_is(s, k, r))
    throw SupportError("deaerate: series has support outside residue class " +
                       std::to_string(r) + " mod " + std::to_string(k));
  if (s.truncation() < r) throw PrecisionError("deaerate: truncation below residue");
  const std::size_t out_trunc = (s.truncation() - r) / k;
  std::vector<Rational> c(out_trunc + 1);
  for (std::size_t i = 0; i <= out_trunc; ++i) c[i] = s.coeff(k * i + r);
  return Series(std::move(c));
}

/// a * w(z^k) for a short w: the product uses only the retained part of
/// w, which is enough whenever k*(trunc(w)+1) + order(a) exceeds
/// trunc(a), i.e. the missing tail of w can only meet zeros of a.
inline Series mul_aerated(const Series& a, const Series& w, unsigned k) {
  if (k == 0) throw InvalidStepError("mul_aerated: step k must be >= 1");
  const std::size_t n = a.truncation();
  const auto ord = a.order();
  if (ord && static_cast<std::size_t>(k) * (w.truncation() + 1) + *ord <= n)
    throw PrecisionError("mul_aerated: w is too short for the requested truncation");
  Series r(n);
  std::vector<Rational> c(n + 1);
  for (std::size_t j = 0; j <= w.truncation() && k * j <= n; ++j) {
    if (w.coeff(j).is_zero()) continue;
    for (std::size_t m = 0; m + k * j <= n; ++m) {
      if (a.coeff(m).is_zero()) continue;
      c[m + k * j] += w.coeff(j) * a.coeff(m);
    }
  }
  return Series(std::move(c));
}

/// Multiplicative inverse: r with s*r = 1 up to the truncation.
inline Series reciprocal(const Series& s) {
  if (s.coeff(0).is_zero())
    throw NotAUnitError("reciprocal: constant term is zero, series is not a unit");
  const std::size_t n = s.truncation();
  const Rational inv0 = s.coeff(0).reciprocal();
  std::vector<Rational> c(n + 1);
  c[0] = inv0;
  // r_n = -(1/s_0) * sum_{i=1..n} s_i r_{n-i}
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      if (s.coeff(i).is_zero()) continue;
      acc += s.coeff(i) * c[m - i];
    }
    c[m] = -(inv0 * acc);
  }
  return Series(std::move(c));
}

/// a(f(z)), truncated. The inner series must have a zero constant term
/// or the composition is ill-defined on truncations.
inline Series compose(const Series& a, const Series& f) {
  if (a.truncation() != f.truncation())
    throw PrecisionError("compose: truncation mismatch (" + std::to_string(a.truncation()) +
                         " vs " + std::to_string(f.truncation()) + ")");
  if (!f.coeff(0).is_zero())
    throw CompositionError("compose: inner series has a nonzero constant term");
  const std::size_t n = a.truncation();
  // Horner: terms a_k f^k with k > N have order > N and drop out.
  Series acc = Series::constant(a.coeff(n), n);
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * f;
    Series term = Series::constant(a.coeff(k), n);
    acc = acc + term;
  }
  return acc;
}

/// Compositional inverse of f in F1: the unique fbar with
/// f(fbar) = fbar(f) = z up to the truncation. Triangular solve of
/// fbar(f) = z; the coefficient of z^n is pinned by the pivot f_1^n.
inline Series comp_inverse(const Series& f) {
  if (!f.coeff(0).is_zero() || f.truncation() < 1 || f.coeff(1).is_zero())
    throw NotInvertibleError("comp_inverse: series must have order exactly one");
  const std::size_t n = f.truncation();
  // powers[k] = f^k
  std::vector<Series> powers;
  powers.reserve(n + 1);
  powers.push_back(Series::one(n));
  for (std::size_t k = 1; k <= n; ++k) powers.push_back(powers.back() * f);

  std::vector<Rational> w(n + 1);  // coefficients of fbar
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (std::size_t k = 1; k < m; ++k) acc += w[k] * powers[k].coeff(m);
    const Rational target = (m == 1) ? Rational(1) : Rational(0);
    w[m] = (target - acc) / powers[m].coeff(m);  // pivot f_1^m
  }
  return Series(std::move(w));
}

/// Exact k-th root. The order must be divisible by k and the leading
/// coefficient must possess a rational k-th root; otherwise the caller
/// is expected to use a root-free formulation. Coefficients beyond the
/// truncation of s are taken as zero when they are needed to pin the
/// top of the root, matching the use of this routine as a
/// cross-validation oracle on polynomial data.
inline Series kth_root(const Series& s, unsigned k) {
  if (k == 0) throw InvalidStepError("kth_root: degree k must be >= 1");
  const std::size_t n = s.truncation();
  if (k == 1) return s;
  const auto ord = s.order();
  if (!ord) return Series::zero(n);
  if (*ord % k != 0)
    throw RootError("kth_root: order " + std::to_string(*ord) + " is not divisible by " +
                    std::to_string(k));
  const auto lead = s.coeff(*ord).kth_root(k);
  if (!lead)
    throw RootError("kth_root: leading coefficient " + s.coeff(*ord).str() +
                    " has no rational " + std::to_string(k) + "-th root");

  const std::size_t shift = *ord / k;
  const std::size_t vt = n - shift;  // truncation of the unit-part root
  // u = s / z^ord, zero-extended to truncation vt.
  std::vector<Rational> u(vt + 1);
  for (std::size_t i = 0; i <= vt && *ord + i <= n; ++i) u[i] = s.coeff(*ord + i);

  std::vector<Rational> v(vt + 1);
  v[0] = *lead;
  const Rational pivot = Rational(static_cast<long>(k)) * lead->pow(k - 1);
  Series vs = Series::constant(v[0], vt);
  for (std::size_t m = 1; m <= vt; ++m) {
    // [z^m](v^k) = k*v0^(k-1)*v_m + (contribution of v_0..v_{m-1})
    const Series vk = pow(vs, k);
    v[m] = (u[m] - vk.coeff(m)) / pivot;
    std::vector<Rational> next = vs.coeffs();
    next[m] = v[m];
    vs = Series(std::move(next));
  }
  return shift_up(vs, shift, n);
}

}  // namespace riordan

#endif  // RIORDAN_SERIES_HPP
