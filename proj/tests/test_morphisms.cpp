#include "riordan/morphisms.hpp"

#include <gtest/gtest.h>

#include "riordan/parse.hpp"
#include "riordan/random_arrays.hpp"

using namespace riordan;

namespace {

RiordanArray pascal(std::size_t n) {
  return RiordanArray(evaluate_expression("1/(1-z)", n), evaluate_expression("z/(1-z)", n));
}

RiordanArray pascal_checkerboard(std::size_t n) {
  return RiordanArray(evaluate_expression("1/(1-z^2)", n), evaluate_expression("z/(1-z^2)", n));
}

}  // namespace

TEST(Morphisms, PsiCheckerboard) {
  const std::size_t n = 8;
  EXPECT_EQ(psi_checkerboard(RiordanArray::identity(n)), KRiordanArray::identity(2, n));

  const RiordanArray c = pascal_checkerboard(n);
  const KRiordanArray image = psi_checkerboard(c);
  EXPECT_EQ(image, KRiordanArray(2, c.g(), {c.f(), c.f()}));
  EXPECT_EQ(psi_checkerboard_preimage(image), c);

  EXPECT_THROW(psi_checkerboard(pascal(n)), ArrayError);
}

TEST(Morphisms, Phi) {
  const std::size_t n = 8;
  EXPECT_EQ(phi(RiordanArray::identity(n)), KRiordanArray::identity(2, n));

  EXPECT_EQ(phi(pascal(n)),
            KRiordanArray(2, evaluate_expression("1/(1-z^2)", n),
                          {Series::z(n), evaluate_expression("z/(1-z^2)", n)}));

  const RiordanArray doubling(Series::one(n), evaluate_expression("2*z", n));
  EXPECT_EQ(phi(doubling), KRiordanArray(2, Series::one(n),
                                         {Series::z(n), evaluate_expression("2*z", n)}));

  EXPECT_TRUE(is_type_almost_appell(phi(pascal(n)), 1));
}

TEST(Morphisms, PsiType2) {
  const std::size_t n = 8;
  EXPECT_EQ(psi_type2(RiordanArray::identity(n)), KRiordanArray::identity(2, n));
  EXPECT_EQ(psi_type2(pascal(n)),
            KRiordanArray(2, evaluate_expression("1/(1-z^2)", n),
                          {evaluate_expression("z/(1-z^2)", n), Series::z(n)}));
  EXPECT_TRUE(is_type_almost_appell(psi_type2(pascal(n)), 2));
  EXPECT_FALSE(is_type_almost_appell(psi_type2(pascal(n)), 1));
}

TEST(Morphisms, PhiK) {
  const std::size_t n = 9;
  // degenerate k = 1 is the identity embedding
  Rng rng(41);
  const RiordanArray r = random_riordan(rng, n);
  EXPECT_EQ(phi_k(r, 1), as_k_riordan(r));

  EXPECT_EQ(phi_k(RiordanArray::identity(n), 3), KRiordanArray::identity(3, n));

  EXPECT_EQ(phi_k(pascal(n), 3),
            KRiordanArray(3, evaluate_expression("1/(1-z^3)", n),
                          {Series::z(n), Series::z(n), evaluate_expression("z/(1-z^3)", n)}));

  EXPECT_THROW(phi_k(r, 3, 4), PositionError);
}

TEST(Morphisms, PhiKPreimageRecovery) {
  Rng rng(42);
  const std::size_t n = 16;
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned pos = 1; pos <= k; ++pos) {
      const RiordanArray r = random_riordan(rng, n);
      const RiordanArray back = phi_k_preimage(phi_k(r, k, pos), pos);
      EXPECT_EQ(back, retruncate(r, back.truncation()));
    }
  }
}

TEST(Morphisms, Chi) {
  const std::size_t n = 9;
  EXPECT_EQ(chi(KRiordanArray::identity(2, n)), KRiordanArray::identity(3, n));

  const KRiordanArray d(2, evaluate_expression("1/(1-z^2)", n),
                        {Series::z(n), evaluate_expression("z/(1-z^2)", n)});
  EXPECT_EQ(chi(d),
            KRiordanArray(3, evaluate_expression("1/(1-z^3)", n),
                          {Series::z(n), Series::z(n), evaluate_expression("z/(1-z^3)", n)}));
  EXPECT_TRUE(is_type_almost_appell(chi(d), 1));

  // chi coincides with the i = 1 member of the chi_i family
  Rng rng(43);
  const KRiordanArray e = random_k_riordan(rng, 2, n);
  EXPECT_EQ(chi(e), chi_i(e, 1));
}

TEST(Morphisms, ChiIIdentity) {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned i = 1; i <= k + 1; ++i)
      EXPECT_EQ(chi_i(KRiordanArray::identity(k, 10), i), KRiordanArray::identity(k + 1, 10));
}

TEST(Morphisms, ChiIOnRiordanIsPhiFamily) {
  // on arity-1 arrays the chi_i family reproduces the R -> DR embeddings
  Rng rng(52);
  const RiordanArray r = random_riordan(rng, 12);
  EXPECT_EQ(chi_i(as_k_riordan(r), 1), phi(r));
  EXPECT_EQ(chi_i(as_k_riordan(r), 2), psi_type2(r));
}

TEST(Morphisms, ChiIPreimageRecovery) {
  Rng rng(44);
  const std::size_t n = 16;
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned i = 1; i <= k + 1; ++i) {
      const KRiordanArray d = random_k_riordan(rng, k, n);
      const KRiordanArray back = chi_i_preimage(chi_i(d, i), i);
      EXPECT_EQ(back, retruncate(d, back.truncation()));
    }
  }
  EXPECT_THROW(chi_i(KRiordanArray::identity(2, 8), 4), PositionError);
}

TEST(Morphisms, HomomorphismLawByHand) {
  // map(A*B) = map(A)*map(B) spot-checked outside the harness
  Rng rng(45);
  const std::size_t n = 14;
  for (int i = 0; i < 10; ++i) {
    const RiordanArray a = random_riordan(rng, n);
    const RiordanArray b = random_riordan(rng, n);
    EXPECT_EQ(phi(a * b), phi(a) * phi(b));
    EXPECT_EQ(psi_type2(a * b), psi_type2(a) * psi_type2(b));
    EXPECT_EQ(phi_k(a * b, 3), phi_k(a, 3) * phi_k(b, 3));
    EXPECT_EQ(phi(inverse(a)), inverse(phi(a)));
  }
  for (int i = 0; i < 10; ++i) {
    const KRiordanArray a = random_k_riordan(rng, 2, n);
    const KRiordanArray b = random_k_riordan(rng, 2, n);
    EXPECT_EQ(chi(a * b), chi(a) * chi(b));
    EXPECT_EQ(chi(inverse(a)), inverse(chi(a)));
  }
}

TEST(Morphisms, PsiIsomorphicActionOnCheckerboard) {
  Rng rng(46);
  const std::size_t n = 12;
  for (int i = 0; i < 10; ++i) {
    const RiordanArray a = random_checkerboard(rng, n);
    const RiordanArray b = random_checkerboard(rng, n);
    EXPECT_EQ(psi_checkerboard(a * b), psi_checkerboard(a) * psi_checkerboard(b));
    EXPECT_EQ(psi_checkerboard(inverse(a)), inverse(psi_checkerboard(a)));
  }
}

TEST(Morphisms, ChiAfterPhiIsPhi3) {
  // composing the two embeddings lands in the canonical copy of R
  // inside 3R, with z fixed in the first two multiplier slots
  Rng rng(47);
  const std::size_t n = 12;
  for (int i = 0; i < 10; ++i) {
    const RiordanArray r = random_riordan(rng, n);
    const KRiordanArray composite = chi(phi(r));
    EXPECT_EQ(composite, phi_k(r, 3));
    EXPECT_TRUE(is_type_almost_appell(composite, 1));
    EXPECT_TRUE(is_type_almost_appell(composite, 2));
    EXPECT_EQ(to_matrix(composite, n), to_matrix(phi_k(r, 3), n));
  }
}

TEST(Morphisms, AlmostAppellClosure) {
  // products and inverses stay in the type-i subgroup
  Rng rng(48);
  const std::size_t n = 12;
  for (unsigned k = 2; k <= 3; ++k) {
    for (unsigned i = 1; i <= k; ++i) {
      for (int t = 0; t < 8; ++t) {
        const KRiordanArray a = random_almost_appell(rng, k, i, n);
        const KRiordanArray b = random_almost_appell(rng, k, i, n);
        EXPECT_TRUE(is_type_almost_appell(a * b, i));
        EXPECT_TRUE(is_type_almost_appell(inverse(a), i));
      }
    }
  }
}

TEST(Morphisms, ImageCharacterization) {
  // every image member is type-1 almost Appell, and every type-1
  // member is phi of its recovered preimage
  Rng rng(49);
  const std::size_t n = 16;
  for (int t = 0; t < 10; ++t) {
    const RiordanArray r = random_riordan(rng, n);
    EXPECT_TRUE(is_type_almost_appell(phi(r), 1));

    const KRiordanArray d = random_almost_appell(rng, 2, 1, n);
    const RiordanArray pre = phi_k_preimage(d, 2);
    const KRiordanArray rebuilt = phi(pre);
    EXPECT_EQ(rebuilt, retruncate(d, rebuilt.truncation()));
  }
}

TEST(Morphisms, VerifyHomomorphismCleanMaps) {
  const std::vector<MorphismId> maps = {
      MorphismId::psi_checkerboard(), MorphismId::phi(),        MorphismId::psi_type2(),
      MorphismId::phi_k(3, 2),        MorphismId::chi(),        MorphismId::chi_i(2, 3),
      MorphismId::chi_i(3, 1),
  };
  for (const auto& id : maps) {
    const HomomorphismReport report = verify_homomorphism(id, 12, 12, 99);
    EXPECT_TRUE(report.verified()) << id.name() << ": " << report.failures.size()
                                   << " failures, first in " << report.failures.front().check;
    EXPECT_EQ(report.trials, 12u);
    EXPECT_EQ(report.truncation, 12u);
  }
}

TEST(Morphisms, VerifyDetectsCorruptedMap) {
  // flip one coefficient of the image of A*B: the harness must notice
  VerifyOptions opts;
  opts.trials = 5;
  opts.truncation = 10;
  opts.seed = 7;
  opts.tamper = [](const KRiordanArray& d) {
    std::vector<Rational> c = d.g().coeffs();
    c[2] += 1;
    std::vector<Series> ms = d.multipliers();
    return KRiordanArray(d.arity(), Series(std::move(c)), std::move(ms));
  };
  const HomomorphismReport report = verify_homomorphism(MorphismId::phi(), opts);
  EXPECT_FALSE(report.verified());
  EXPECT_EQ(report.failures.front().check, "product-law");
  EXPECT_EQ(report.failures.front().component, "g");
  EXPECT_EQ(report.failures.front().position, 2u);
}

TEST(Morphisms, VerifyIsDeterministic) {
  const HomomorphismReport a = verify_homomorphism(MorphismId::chi(), 6, 10, 5);
  const HomomorphismReport b = verify_homomorphism(MorphismId::chi(), 6, 10, 5);
  EXPECT_EQ(a.failures.size(), b.failures.size());
  EXPECT_TRUE(a.verified());
}

TEST(Morphisms, NonNormalityWitness) {
  const auto witness = non_normality_witness(50, 10, 2);
  ASSERT_TRUE(witness.has_value());
  EXPECT_TRUE(is_type_almost_appell(witness->member, 1));
  EXPECT_FALSE(is_type_almost_appell(witness->conjugate, 1));
}

TEST(Morphisms, MorphismIdValidation) {
  EXPECT_THROW(MorphismId::phi_k(3, 4), PositionError);
  EXPECT_THROW(MorphismId::chi_i(2, 4), PositionError);
  EXPECT_THROW(MorphismId::phi_k(0), ArityError);
  EXPECT_EQ(MorphismId::phi().name(), "phi");
  EXPECT_EQ(MorphismId::chi_i(3, 2).name(), "chii(3,2)");
}
