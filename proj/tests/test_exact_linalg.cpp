#include "homhopf/linsolve.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace homhopf;

namespace {

const Field Q = Field::rationals();
const Field GF7 = Field::prime(7);

Scalar q(long n, long d = 1) { return Scalar(Q, mpq_class(n, d)); }

}  // namespace

TEST(Field, ParsesNames) {
  EXPECT_TRUE(Field::parse("Q").is_rational());
  EXPECT_EQ(Field::parse("GF(7)").characteristic(), 7u);
  EXPECT_EQ(Field::parse("GF7").characteristic(), 7u);
  EXPECT_THROW(Field::parse("GF(8)"), std::invalid_argument);
  EXPECT_THROW(Field::parse("R"), std::invalid_argument);
  EXPECT_THROW(Field::prime(1), std::invalid_argument);
}

TEST(Scalar, RationalArithmeticIsExact) {
  EXPECT_EQ((q(1, 3) + q(1, 6)).to_string(), "1/2");
  EXPECT_EQ((q(2, 3) * q(3, 4)).to_string(), "1/2");
  EXPECT_EQ((q(1) / q(-3)).to_string(), "-1/3");
  EXPECT_EQ(Scalar::parse(Q, "-6/4").to_string(), "-3/2");
  EXPECT_EQ(Scalar::parse(Q, "0/5").to_string(), "0");
  EXPECT_TRUE(Scalar::parse(Q, "4/4").is_one());
}

TEST(Scalar, OverflowPromotesToBigRationals) {
  Scalar x = Scalar::parse(Q, "9223372036854775807");
  x += Scalar::one(Q);
  EXPECT_EQ(x.to_string(), "9223372036854775808");
  x -= Scalar::one(Q);
  EXPECT_EQ(x, Scalar::parse(Q, "9223372036854775807"));
  Scalar p = Scalar::parse(Q, "3037000500");
  p *= p;
  EXPECT_EQ(p.to_string(), "9223372037000250000");
  EXPECT_EQ((p / p).to_string(), "1");
  EXPECT_EQ(Scalar::parse(Q, "123456789012345678901234567890/10").to_string(), "12345678901234567890123456789");
}

TEST(Scalar, PrimeFieldUsesCanonicalResidues) {
  EXPECT_EQ(Scalar(GF7, -1).to_string(), "6");
  EXPECT_EQ(Scalar::parse(GF7, "1/2").to_string(), "4");
  EXPECT_EQ((Scalar(GF7, 3) * Scalar(GF7, 5)).to_string(), "1");
  EXPECT_EQ(Scalar(GF7, 3).inverse().to_string(), "5");
  EXPECT_TRUE(Scalar::parse(GF7, "14").is_zero());
  EXPECT_THROW(Scalar::parse(GF7, "1/7"), std::domain_error);
}

TEST(Scalar, ErrorsAreReported) {
  EXPECT_THROW(Scalar::zero(Q).inverse(), std::domain_error);
  EXPECT_THROW(q(1) / Scalar::zero(Q), std::domain_error);
  EXPECT_THROW(Scalar::parse(Q, "1/0"), std::domain_error);
  EXPECT_THROW(Scalar::parse(Q, "abc"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse(Q, "1.5"), std::invalid_argument);
  EXPECT_THROW(Scalar(Q, 1) + Scalar(GF7, 1), std::invalid_argument);
}

TEST(Scalar, AddProductMatchesMultiplyThenAdd) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-50, 50);
  for (const Field f : {Q, GF7}) {
    for (int i = 0; i < 200; ++i) {
      Scalar acc(f, d(rng));
      const Scalar a(f, d(rng)), b(f, d(rng));
      const Scalar expect = acc + a * b;
      acc.add_product(a, b);
      EXPECT_EQ(acc, expect);
    }
  }
}

TEST(Matrix, ComposeTensorAndInverse) {
  const Matrix a = Matrix::from_rows(Q, {{1, 2}, {3, 4}});
  const Matrix ai = inverse(a);
  EXPECT_EQ(compose(a, ai), Matrix::identity(Q, 2));
  EXPECT_EQ(ai(0, 0).to_string(), "-2");
  EXPECT_EQ(ai(1, 0).to_string(), "3/2");
  const Matrix t = tensor(a, Matrix::identity(Q, 2));
  EXPECT_EQ(t.rows(), 4u);
  EXPECT_EQ(t(2, 0), Scalar(Q, 3));
  EXPECT_EQ(t(3, 1), Scalar(Q, 3));
  EXPECT_EQ(power(a, 2), compose(a, a));
  EXPECT_EQ(power(a, -1), ai);
  EXPECT_EQ(power(a, 0), Matrix::identity(Q, 2));
  EXPECT_FALSE(try_inverse(Matrix::from_rows(Q, {{1, 2}, {2, 4}})));
  EXPECT_THROW(compose(a, Matrix::identity(Q, 3)), DimensionError);
}

TEST(Matrix, PermuteFactorsSwapsTensorLegs) {
  const Vector x{q(1), q(2)}, y{q(3), q(5), q(7)};
  EXPECT_EQ(permute_factors(kron(x, y), {2, 3}, {1, 0}), kron(y, x));
}

TEST(Rref, LeftmostPivotsAndDeterministicParticularSolution) {
  const Matrix a = Matrix::from_rows(Q, {{1, 1, 1}, {0, 1, 2}});
  const auto r = rref(a);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  const AffineSolution s = solve_affine(a, Vector{q(3), q(2)});
  ASSERT_TRUE(s.feasible);
  // free variable x2 = 0
  EXPECT_EQ(s.particular, (Vector{q(1), q(2), q(0)}));
  ASSERT_EQ(s.nullspace_basis.size(), 1u);
  EXPECT_EQ(a.apply(s.nullspace_basis[0]), zero_vector(Q, 2));
}

TEST(Rref, NullspaceOfRandomMatricesIsExact) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix a(Q, 4, 6);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 6; ++j) a(i, j) = Scalar(Q, d(rng));
    }
    const auto ns = nullspace(a);
    EXPECT_EQ(ns.size() + rank(a), 6u);
    for (const auto& v : ns) EXPECT_EQ(a.apply(v), zero_vector(Q, 4));
  }
}

TEST(Rref, InconsistencyWitnessCertifiesZeroEqualsOne) {
  const Matrix a = Matrix::from_rows(Q, {{1, 1}, {2, 2}, {0, 1}});
  const Vector b{q(1), q(3), q(0)};
  EXPECT_FALSE(solve_affine(a, b).feasible);
  const auto w = find_inconsistency(a, b);
  ASSERT_TRUE(w);
  Vector ya = zero_vector(Q, 2);
  Scalar yb(Q);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) ya[j] += w->combination[i] * a(i, j);
    yb += w->combination[i] * b[i];
  }
  EXPECT_EQ(ya, zero_vector(Q, 2));
  EXPECT_TRUE(yb.is_one());
  EXPECT_FALSE(find_inconsistency(a, Vector{q(1), q(2), q(0)}));
}

TEST(Rref, PrimeFieldSolving) {
  // det 7 vanishes mod 7
  EXPECT_FALSE(solve_affine(Matrix::from_rows(GF7, {{2, 3}, {1, 5}}), Vector{Scalar(GF7, 1), Scalar(GF7, 0)}).feasible);
  const Matrix a = Matrix::from_rows(GF7, {{2, 3}, {1, 4}});
  const AffineSolution s = solve_affine(a, Vector{Scalar(GF7, 1), Scalar(GF7, 0)});
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(a.apply(s.particular), (Vector{Scalar(GF7, 1), Scalar(GF7, 0)}));
}
