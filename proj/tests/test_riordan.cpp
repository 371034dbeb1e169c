#include "riordan/riordan_array.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "riordan/parse.hpp"
#include "riordan/random_arrays.hpp"

using namespace riordan;
using riordan::test::from_longs;
using riordan::test::lt_inverse;
using riordan::test::pascal_matrix;

namespace {

RiordanArray pascal(std::size_t n) {
  return RiordanArray(evaluate_expression("1/(1-z)", n), evaluate_expression("z/(1-z)", n));
}

}  // namespace

TEST(TriangularMatrix, Basics) {
  TriangularMatrix m(3);
  m.set(2, 1, Rational(5, 2));
  EXPECT_EQ(m.entry(2, 1), Rational(5, 2));
  EXPECT_EQ(m.entry(0, 2), Rational(0));  // above the diagonal
  EXPECT_THROW(m.set(0, 1, 1), PrecisionError);
  EXPECT_THROW(m.entry(3, 0), PrecisionError);

  const TriangularMatrix id = TriangularMatrix::identity(3);
  EXPECT_EQ(id * m, m);
  EXPECT_EQ(m * id, m);
  EXPECT_THROW(m * TriangularMatrix(4), PrecisionError);

  const std::vector<Rational> v{1, 2, 3};
  EXPECT_EQ(id.apply(v), v);
  EXPECT_THROW(m.apply({1, 2}), PrecisionError);
}

TEST(TriangularMatrix, ProductAgainstHandExpansion) {
  // [[1],[1,1],[1,2,1]] squared by hand
  const TriangularMatrix p = pascal_matrix(3);
  TriangularMatrix expect(3);
  expect.set(0, 0, 1);
  expect.set(1, 0, 2);
  expect.set(1, 1, 1);
  expect.set(2, 0, 4);
  expect.set(2, 1, 4);
  expect.set(2, 2, 1);
  EXPECT_EQ(p * p, expect);
}

TEST(Riordan, Construction) {
  EXPECT_EQ(RiordanArray(Series::one(4), Series::z(4)), RiordanArray::identity(4));
  EXPECT_THROW(RiordanArray(Series::z(4), Series::z(4)), ArrayError);
  EXPECT_THROW(RiordanArray(Series::one(4), Series::one(4)), ArrayError);
  EXPECT_THROW(RiordanArray(Series::one(4), Series::z(5)), PrecisionError);
}

TEST(Riordan, PascalExpansion) {
  EXPECT_EQ(to_matrix(pascal(4), 4), pascal_matrix(5));
  EXPECT_EQ(to_matrix(RiordanArray::identity(3), 3), TriangularMatrix::identity(4));

  // (1, 2z) has diagonal 1, 2, 4
  const RiordanArray doubled(Series::one(2), from_longs({0, 2, 0}));
  const TriangularMatrix m = to_matrix(doubled, 2);
  EXPECT_EQ(m.entry(0, 0), Rational(1));
  EXPECT_EQ(m.entry(1, 1), Rational(2));
  EXPECT_EQ(m.entry(2, 2), Rational(4));
  EXPECT_EQ(m.entry(2, 1), Rational(0));

  EXPECT_THROW(to_matrix(pascal(4), 5), PrecisionError);
}

TEST(Riordan, DiagonalLawProperty) {
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    const RiordanArray r = random_riordan(rng, 8);
    const TriangularMatrix m = to_matrix(r, 8);
    for (std::size_t n = 0; n <= 8; ++n)
      EXPECT_EQ(m.entry(n, n), r.g().coeff(0) * r.f().coeff(1).pow(n));
  }
}

TEST(Riordan, FtraApply) {
  const std::size_t n = 4;
  const Series a = from_longs({2, 7, 1, 8, 2});
  EXPECT_EQ(ftra_apply(RiordanArray::identity(n), a), a);

  // row sums of Pascal are 2^n
  EXPECT_EQ(ftra_apply(pascal(n), evaluate_expression("1/(1-z)", n)),
            from_longs({1, 2, 4, 8, 16}));

  // A = 1 selects column 0
  const Series geo = evaluate_expression("1/(1-z)", n);
  EXPECT_EQ(ftra_apply(RiordanArray(geo, Series::z(n)), Series::one(n)), geo);
}

TEST(Riordan, FtraMatchesMatrixVectorProperty) {
  Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    const RiordanArray r = random_riordan(rng, 10);
    const Series a = random_series(rng, 10);
    const Series via_series = ftra_apply(r, a);
    const auto via_matrix = to_matrix(r, 10).apply(a.coeffs());
    EXPECT_EQ(via_series.coeffs(), via_matrix);
  }
}

TEST(Riordan, Multiply) {
  const std::size_t n = 6;
  const RiordanArray p = pascal(n);
  EXPECT_EQ(p * RiordanArray::identity(n), p);
  EXPECT_EQ(RiordanArray::identity(n) * p, p);

  // Pascal^2 = (1/(1-2z), z/(1-2z))
  const RiordanArray expected(evaluate_expression("1/(1-2*z)", n),
                              evaluate_expression("z/(1-2*z)", n));
  EXPECT_EQ(p * p, expected);

  // (1,2z)*(1,3z) = (1,6z)
  const RiordanArray a(Series::one(2), from_longs({0, 2, 0}));
  const RiordanArray b(Series::one(2), from_longs({0, 3, 0}));
  EXPECT_EQ(a * b, RiordanArray(Series::one(2), from_longs({0, 6, 0})));
}

TEST(Riordan, MatrixFunctorProperty) {
  Rng rng(23);
  for (int i = 0; i < 25; ++i) {
    const RiordanArray a = random_riordan(rng, 8);
    const RiordanArray b = random_riordan(rng, 8);
    EXPECT_EQ(to_matrix(a * b, 8), to_matrix(a, 8) * to_matrix(b, 8));
  }
}

TEST(Riordan, Inverse) {
  const std::size_t n = 6;
  EXPECT_EQ(inverse(RiordanArray::identity(n)), RiordanArray::identity(n));

  // Pascal^-1 = (1/(1+z), z/(1+z))
  EXPECT_EQ(inverse(pascal(n)),
            RiordanArray(evaluate_expression("1/(1+z)", n), evaluate_expression("z/(1+z)", n)));

  // (2, z/2)^-1 = (1/2, 2z)
  const RiordanArray r(Series::constant(2, n), evaluate_expression("z/2", n));
  EXPECT_EQ(inverse(r),
            RiordanArray(Series::constant(Rational(1, 2), n), evaluate_expression("2*z", n)));
}

TEST(Riordan, InverseMatchesMatrixInversionOracle) {
  Rng rng(24);
  for (int i = 0; i < 15; ++i) {
    const RiordanArray r = random_riordan(rng, 8);
    EXPECT_EQ(to_matrix(inverse(r), 8), lt_inverse(to_matrix(r, 8)));
  }
}

TEST(Riordan, GroupAxiomsProperty) {
  Rng rng(25);
  const std::size_t n = 12;
  for (int i = 0; i < 15; ++i) {
    const RiordanArray a = random_riordan(rng, n);
    const RiordanArray b = random_riordan(rng, n);
    const RiordanArray c = random_riordan(rng, n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * inverse(a), RiordanArray::identity(n));
    EXPECT_EQ(inverse(a) * a, RiordanArray::identity(n));
  }
}

TEST(Riordan, Checkerboard) {
  const std::size_t n = 6;
  EXPECT_TRUE(is_checkerboard(RiordanArray::identity(n)));
  EXPECT_FALSE(is_checkerboard(pascal(n)));
  EXPECT_TRUE(is_checkerboard(RiordanArray(evaluate_expression("1/(1-z^2)", n),
                                           evaluate_expression("z/(1-z^2)", n))));
}

TEST(Riordan, CheckerboardClosureProperty) {
  Rng rng(26);
  for (int i = 0; i < 15; ++i) {
    const RiordanArray a = random_checkerboard(rng, 9);
    const RiordanArray b = random_checkerboard(rng, 9);
    EXPECT_TRUE(is_checkerboard(a * b));
    EXPECT_TRUE(is_checkerboard(inverse(a)));
  }
}
