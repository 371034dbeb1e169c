#ifndef RIORDAN_MORPHISMS_HPP
#define RIORDAN_MORPHISMS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/k_riordan.hpp"
#include "riordan/random_arrays.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// True iff the i-th multiplier is exactly z. Together with the array's
/// support constraints this characterizes the type-i almost Appell
/// subgroup.
inline bool is_type_almost_appell(const KRiordanArray& d, unsigned i) {
  return d.multiplier(i) == Series::z(d.truncation());
}

/// The embedding of the Checkerboard subgroup: (g, f) -> (g, f, f).
/// The image is the aerated form of the original array.
inline KRiordanArray psi_checkerboard(const RiordanArray& r) {
  if (!is_checkerboard(r))
    throw ArrayError("psi requires a checkerboard array (even g, odd f)");
  return KRiordanArray(2, r.g(), {r.f(), r.f()});
}

inline RiordanArray psi_checkerboard_preimage(const KRiordanArray& d) {
  detail::require_double(d, "psi preimage");
  if (d.multiplier(1) != d.multiplier(2))
    throw ArrayError("psi preimage: multipliers differ, array is not in the image");
  return RiordanArray(d.g(), d.multiplier(1));
}

/// (g, f) -> (g(z^k), z, ..., z, f(z^k)/z^(k-1)), with the non-z
/// multiplier placed at `position` (the theorem's arrangement is
/// position = k; every rearrangement embeds as well).
inline KRiordanArray phi_k(const RiordanArray& r, unsigned k, unsigned position) {
  if (k == 0) throw ArityError("phi_k: arity must be >= 1");
  if (position < 1 || position > k)
    throw PositionError("phi_k: position " + std::to_string(position) + " outside 1.." +
                        std::to_string(k));
  const std::size_t n = r.truncation();
  Series g = aerate(retruncate(r.g(), n / k), k, n);
  const Series q = retruncate(shift_down(r.f(), 1), (n - 1) / k);
  std::vector<Series> ms(k, Series::z(n));
  ms[position - 1] = unit_to_multiplier(q, k, n);
  return KRiordanArray(k, std::move(g), std::move(ms));
}

inline KRiordanArray phi_k(const RiordanArray& r, unsigned k) { return phi_k(r, k, k); }

/// The embedding (g, f) -> (g(z^2), z, f(z^2)/z) of the whole Riordan
/// group; its image is the type-1 almost Appell subgroup.
inline KRiordanArray phi(const RiordanArray& r) { return phi_k(r, 2, 2); }

/// The type-2 variant: (g, f) -> (g(z^2), f(z^2)/z, z).
inline KRiordanArray psi_type2(const RiordanArray& r) { return phi_k(r, 2, 1); }

/// Recovers (g, f) from a phi_k image; inverts phi_k on its image, at
/// the truncation the aerated data supports.
inline RiordanArray phi_k_preimage(const KRiordanArray& d, unsigned position) {
  const unsigned k = d.arity();
  if (position < 1 || position > k)
    throw PositionError("phi_k preimage: position outside 1..k");
  for (unsigned i = 1; i <= k; ++i)
    if (i != position && !is_type_almost_appell(d, i))
      throw ArrayError("phi_k preimage: multiplier m" + std::to_string(i) +
                       " is not z, array is not in the image");
  const Series ghat = deaerate(d.g(), k, 0);
  const Series q = multiplier_to_unit(d.multiplier(position), k);
  const std::size_t t = std::min(ghat.truncation(), q.truncation() + 1);
  return RiordanArray(retruncate(ghat, t), shift_up(retruncate(q, t - 1), 1, t));
}

/// chi_i : kR -> (k+1)R. All series are rebased from modulus k to
/// modulus k+1 (de-aerate, re-aerate) and a multiplier z is inserted at
/// position i.
inline KRiordanArray chi_i(const KRiordanArray& d, unsigned i) {
  const unsigned k = d.arity();
  if (i < 1 || i > k + 1)
    throw PositionError("chi_i: position " + std::to_string(i) + " outside 1.." +
                        std::to_string(k + 1));
  const std::size_t n = d.truncation();
  const Series ghat = deaerate(d.g(), k, 0);
  Series g = aerate(retruncate(ghat, n / (k + 1)), k + 1, n);
  std::vector<Series> ms;
  ms.reserve(k + 1);
  for (unsigned j = 1; j <= k; ++j) {
    const Series q = retruncate(multiplier_to_unit(d.multiplier(j), k), (n - 1) / (k + 1));
    ms.push_back(unit_to_multiplier(q, k + 1, n));
  }
  ms.insert(ms.begin() + (i - 1), Series::z(n));
  return KRiordanArray(k + 1, std::move(g), std::move(ms));
}

/// Monomorphism Theorem II map DR -> 3R; the i = 1 member of the chi_i
/// family.
inline KRiordanArray chi(const KRiordanArray& d) {
  detail::require_double(d, "chi");
  return chi_i(d, 1);
}

/// Recovers the arity-k array from a chi_i image.
inline KRiordanArray chi_i_preimage(const KRiordanArray& d, unsigned i) {
  const unsigned k1 = d.arity();  // = k + 1
  if (k1 < 2) throw ArityError("chi_i preimage: image arity must be >= 2");
  const unsigned k = k1 - 1;
  if (i < 1 || i > k1) throw PositionError("chi_i preimage: position outside 1..k+1");
  if (!is_type_almost_appell(d, i))
    throw ArrayError("chi_i preimage: multiplier m" + std::to_string(i) +
                     " is not z, array is not in the image");
  const std::size_t n = d.truncation();
  // Largest truncation the rebased data supports: the g-part is exact
  // up to k*(floor(n/k1)+1)-1, the multipliers up to k*(floor((n-1)/k1)+1).
  const std::size_t t =
      std::min(k * (n / k1 + 1) - 1, k * ((n - 1) / k1 + 1));
  const Series ghat = deaerate(d.g(), k1, 0);
  Series g = aerate(retruncate(ghat, t / k), k, t);
  std::vector<Series> ms;
  ms.reserve(k);
  for (unsigned j = 1; j <= k1; ++j) {
    if (j == i) continue;
    const Series q = retruncate(multiplier_to_unit(d.multiplier(j), k1), (t - 1) / k);
    ms.push_back(unit_to_multiplier(q, k, t));
  }
  return KRiordanArray(k, std::move(g), std::move(ms));
}

/// Identifies one of the paper's maps. PhiK carries the target arity
/// and the position of the non-z multiplier; ChiI carries the domain
/// arity k and the inserted-z position i in 1..k+1.
struct MorphismId {
  enum class Kind { PsiCheckerboard, Phi, PsiType2, PhiK, Chi, ChiI };

  Kind kind;
  unsigned k = 0;
  unsigned i = 0;

  static MorphismId psi_checkerboard() { return {Kind::PsiCheckerboard, 2, 0}; }
  static MorphismId phi() { return {Kind::Phi, 2, 2}; }
  static MorphismId psi_type2() { return {Kind::PsiType2, 2, 1}; }
  static MorphismId phi_k(unsigned k, unsigned position) {
    if (k == 0) throw ArityError("phi_k: arity must be >= 1");
    if (position < 1 || position > k) throw PositionError("phi_k: position outside 1..k");
    return {Kind::PhiK, k, position};
  }
  static MorphismId phi_k(unsigned k) { return phi_k(k, k); }
  static MorphismId chi() { return {Kind::Chi, 2, 1}; }
  static MorphismId chi_i(unsigned k, unsigned i) {
    if (k == 0) throw ArityError("chi_i: domain arity must be >= 1");
    if (i < 1 || i > k + 1) throw PositionError("chi_i: position outside 1..k+1");
    return {Kind::ChiI, k, i};
  }

  /// Arity of the domain group (1 = ordinary Riordan).
  unsigned domain_arity() const {
    switch (kind) {
      case Kind::PsiCheckerboard:
      case Kind::Phi:
      case Kind::PsiType2:
        return 1;
      case Kind::PhiK:
        return 1;
      case Kind::Chi:
        return 2;
      case Kind::ChiI:
        return k;
    }
    return 0;
  }

  unsigned codomain_arity() const {
    switch (kind) {
      case Kind::PsiCheckerboard:
      case Kind::Phi:
      case Kind::PsiType2:
        return 2;
      case Kind::PhiK:
        return k;
      case Kind::Chi:
        return 3;
      case Kind::ChiI:
        return k + 1;
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case Kind::PsiCheckerboard:
        return "psi";
      case Kind::Phi:
        return "phi";
      case Kind::PsiType2:
        return "psi2";
      case Kind::PhiK:
        return "phik(" + std::to_string(k) + ",pos=" + std::to_string(i) + ")";
      case Kind::Chi:
        return "chi";
      case Kind::ChiI:
        return "chii(" + std::to_string(k) + "," + std::to_string(i) + ")";
    }
    return "?";
  }

  friend bool operator==(const MorphismId& a, const MorphismId& b) {
    return a.kind == b.kind && a.k == b.k && a.i == b.i;
  }
};

/// Applies the identified map; the domain element travels as a
/// KRiordanArray of the domain arity (arity 1 for Riordan inputs).
inline KRiordanArray apply_morphism(const MorphismId& id, const KRiordanArray& a) {
  if (a.arity() != id.domain_arity())
    throw ArityError("apply_morphism: element arity " + std::to_string(a.arity()) +
                     " does not match the domain of " + id.name());
  switch (id.kind) {
    case MorphismId::Kind::PsiCheckerboard:
      return psi_checkerboard(as_riordan(a));
    case MorphismId::Kind::Phi:
      return phi(as_riordan(a));
    case MorphismId::Kind::PsiType2:
      return psi_type2(as_riordan(a));
    case MorphismId::Kind::PhiK:
      return phi_k(as_riordan(a), id.k, id.i);
    case MorphismId::Kind::Chi:
      return chi(a);
    case MorphismId::Kind::ChiI:
      return chi_i(a, id.i);
  }
  throw Error("apply_morphism: unknown map");
}

/// One mismatch found while checking a map; records where the two
/// sides of the law first differ and the inputs that exposed it.
struct HomomorphismFailure {
  std::size_t trial;
  std::string check;      // which law failed
  std::string component;  // "g" or "m<i>"
  std::size_t position;   // first differing coefficient
  std::string lhs, rhs;   // the differing values
  std::string input_a, input_b;
};

/// Outcome of a randomized check of one map. Verified means no trial
/// produced a counterexample.
struct HomomorphismReport {
  MorphismId map;
  std::size_t trials = 0;
  std::size_t truncation = 0;
  std::uint64_t seed = 0;
  std::vector<HomomorphismFailure> failures;

  bool verified() const { return failures.empty(); }
};

struct VerifyOptions {
  std::size_t trials = 100;
  std::size_t truncation = 16;
  std::uint64_t seed = 0;
  /// Test hook: applied to the image of A*B before comparison, so a
  /// deliberately corrupted map is seen to produce failures.
  std::function<KRiordanArray(const KRiordanArray&)> tamper;
};

namespace detail {

inline std::optional<std::pair<std::string, std::size_t>> first_difference(
    const KRiordanArray& a, const KRiordanArray& b) {
  for (std::size_t p = 0; p <= a.truncation(); ++p)
    if (a.g().coeff(p) != b.g().coeff(p)) return std::make_pair(std::string("g"), p);
  for (unsigned i = 1; i <= a.arity(); ++i)
    for (std::size_t p = 0; p <= a.truncation(); ++p)
      if (a.multiplier(i).coeff(p) != b.multiplier(i).coeff(p))
        return std::make_pair("m" + std::to_string(i), p);
  return std::nullopt;
}

inline std::string describe(const KRiordanArray& a) {
  std::string out = "(g=[";
  for (std::size_t p = 0; p <= a.truncation(); ++p) {
    if (p) out += ",";
    out += a.g().coeff(p).str();
  }
  out += "]";
  for (unsigned i = 1; i <= a.arity(); ++i) {
    out += ", m" + std::to_string(i) + "=[";
    for (std::size_t p = 0; p <= a.truncation(); ++p) {
      if (p) out += ",";
      out += a.multiplier(i).coeff(p).str();
    }
    out += "]";
  }
  return out + ")";
}

inline const Rational& component_coeff(const KRiordanArray& a, const std::string& comp,
                                       std::size_t p) {
  if (comp == "g") return a.g().coeff(p);
  return a.multiplier(static_cast<unsigned>(std::stoul(comp.substr(1)))).coeff(p);
}

inline KRiordanArray sample_domain(const MorphismId& id, Rng& rng, std::size_t trunc) {
  if (id.kind == MorphismId::Kind::PsiCheckerboard)
    return as_k_riordan(random_checkerboard(rng, trunc));
  return random_k_riordan(rng, id.domain_arity(), trunc);
}

/// Structural preimage recovery; inverts each map on its image.
inline KRiordanArray recover(const MorphismId& id, const KRiordanArray& image) {
  switch (id.kind) {
    case MorphismId::Kind::PsiCheckerboard:
      return as_k_riordan(psi_checkerboard_preimage(image));
    case MorphismId::Kind::Phi:
    case MorphismId::Kind::PsiType2:
    case MorphismId::Kind::PhiK:
      return as_k_riordan(phi_k_preimage(image, id.i));
    case MorphismId::Kind::Chi:
    case MorphismId::Kind::ChiI:
      return chi_i_preimage(image, id.kind == MorphismId::Kind::Chi ? 1 : id.i);
  }
  throw Error("recover: unknown map");
}

inline bool image_member(const MorphismId& id, const KRiordanArray& image) {
  switch (id.kind) {
    case MorphismId::Kind::PsiCheckerboard:
      return image.arity() == 2 && image.multiplier(1) == image.multiplier(2);
    case MorphismId::Kind::Phi:
    case MorphismId::Kind::PsiType2:
    case MorphismId::Kind::PhiK: {
      if (image.arity() != id.k) return false;
      for (unsigned j = 1; j <= id.k; ++j)
        if (j != id.i && !is_type_almost_appell(image, j)) return false;
      return true;
    }
    case MorphismId::Kind::Chi:
    case MorphismId::Kind::ChiI:
      return image.arity() == id.codomain_arity() &&
             is_type_almost_appell(image, id.kind == MorphismId::Kind::Chi ? 1 : id.i);
  }
  return false;
}

}  // namespace detail

/// Randomized executable check of one monomorphism: on each trial the
/// homomorphism law map(A*B) = map(A)*map(B) must hold coefficient for
/// coefficient, the inverse law map(A^-1) = map(A)^-1 likewise, images
/// must land in the expected subgroup, and structural preimage recovery
/// must invert the map (which also gives a deterministic injectivity
/// check). Failures are collected, not thrown. Deterministic for a
/// fixed seed: each trial derives its own generator from (seed, trial).
inline HomomorphismReport verify_homomorphism(const MorphismId& id, const VerifyOptions& opts) {
  HomomorphismReport report{id, opts.trials, opts.truncation, opts.seed, {}};
  const std::size_t n = opts.truncation;

  auto record = [&](std::size_t trial, const std::string& check, const KRiordanArray& lhs,
                    const KRiordanArray& rhs, const KRiordanArray& in_a,
                    const KRiordanArray& in_b) {
    const auto diff = detail::first_difference(lhs, rhs);
    if (!diff) return false;
    report.failures.push_back(HomomorphismFailure{
        trial, check, diff->first, diff->second,
        detail::component_coeff(lhs, diff->first, diff->second).str(),
        detail::component_coeff(rhs, diff->first, diff->second).str(),
        detail::describe(in_a), detail::describe(in_b)});
    return true;
  };

  // identity -> identity, checked once
  {
    const KRiordanArray dom_id = KRiordanArray::identity(id.domain_arity(), n);
    const KRiordanArray cod_id = KRiordanArray::identity(id.codomain_arity(), n);
    record(0, "identity", apply_morphism(id, dom_id), cod_id, dom_id, dom_id);
  }

  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    Rng rng(mix_seed(opts.seed, trial));
    const KRiordanArray a = detail::sample_domain(id, rng, n);
    const KRiordanArray b = detail::sample_domain(id, rng, n);

    const KRiordanArray image_a = apply_morphism(id, a);
    const KRiordanArray image_b = apply_morphism(id, b);

    KRiordanArray lhs = apply_morphism(id, a * b);
    if (opts.tamper) lhs = opts.tamper(lhs);
    record(trial, "product-law", lhs, image_a * image_b, a, b);
    record(trial, "inverse-law", apply_morphism(id, inverse(a)), inverse(image_a), a, a);

    if (!detail::image_member(id, image_a)) {
      report.failures.push_back(HomomorphismFailure{trial, "image-membership", "", 0, "", "",
                                                    detail::describe(a), ""});
    }

    // Injectivity via preimage recovery: the map loses nothing below
    // the recovered truncation, so distinct recovered data forces
    // distinct images.
    const KRiordanArray rec_a = detail::recover(id, image_a);
    const KRiordanArray rec_b = detail::recover(id, image_b);
    const std::size_t t = rec_a.truncation();
    record(trial, "preimage", rec_a, retruncate(a, t), a, a);
    if (rec_a != rec_b && image_a == image_b) {
      report.failures.push_back(HomomorphismFailure{trial, "injectivity", "", 0, "", "",
                                                    detail::describe(a), detail::describe(b)});
    }
  }

  std::sort(report.failures.begin(), report.failures.end(),
            [](const HomomorphismFailure& x, const HomomorphismFailure& y) {
              return x.trial < y.trial;
            });
  return report;
}

inline HomomorphismReport verify_homomorphism(const MorphismId& id, std::size_t trials,
                                              std::size_t truncation, std::uint64_t seed) {
  VerifyOptions opts;
  opts.trials = trials;
  opts.truncation = truncation;
  opts.seed = seed;
  return verify_homomorphism(id, opts);
}

/// Sampled demonstration that the type-1 almost Appell subgroup is not
/// normal: searches for a conjugate of a subgroup member that leaves
/// the subgroup. Returns the witness triple, or nothing if the search
/// budget runs out.
struct ConjugationWitness {
  KRiordanArray conjugator;
  KRiordanArray member;
  KRiordanArray conjugate;
};

inline std::optional<ConjugationWitness> non_normality_witness(std::size_t trials,
                                                               std::size_t trunc,
                                                               std::uint64_t seed) {
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(mix_seed(seed, trial));
    const KRiordanArray d = random_k_riordan(rng, 2, trunc);
    const KRiordanArray s = random_almost_appell(rng, 2, 1, trunc);
    const KRiordanArray conj = d * s * inverse(d);
    if (!is_type_almost_appell(conj, 1)) return ConjugationWitness{d, s, conj};
  }
  return std::nullopt;
}

}  // namespace riordan

#endif  // RIORDAN_MORPHISMS_HPP
