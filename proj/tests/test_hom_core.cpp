#include "corpus.hpp"

#include <gtest/gtest.h>

using namespace homhopf;

namespace {

const Field Q = Field::rationals();
const Field GF7 = Field::prime(7);

const Violation& first_of(const AxiomReport& r, const std::string& axiom) {
  for (const auto& v : r.violations()) {
    if (v.axiom == axiom) return v;
  }
  throw std::logic_error("no violation of " + axiom);
}

}  // namespace

TEST(Catalog, ClassicalExamplesPass) {
  for (const Field f : {Q, GF7}) {
    for (std::size_t n : {1u, 2u, 3u, 4u, 6u}) {
      EXPECT_TRUE(check_hom_hopf(catalog::group_algebra(f, n)).passed()) << "kZ" << n;
    }
    EXPECT_TRUE(check_hom_hopf(catalog::sweedler(f)).passed());
    EXPECT_TRUE(check_hom_hopf(ground_field_hopf(f)).passed());
  }
}

TEST(Catalog, TwistedExamplesPass) {
  for (const Field f : {Q, GF7}) {
    for (std::size_t n : {3u, 4u, 6u}) {
      const HomHopfAlgebra h = yau_twist(catalog::group_algebra(f, n), catalog::group_inversion(f, n));
      EXPECT_TRUE(check_hom_hopf(h).passed());
      EXPECT_FALSE(h.alpha().is_identity());
    }
    const HomHopfAlgebra t = catalog::twisted_sweedler(f);
    EXPECT_TRUE(check_hom_hopf(t).passed());
    EXPECT_EQ(t.alpha(), catalog::sweedler_scaling(f, 2));
  }
}

TEST(Catalog, TwistedMultiplicationIsAlphaOfProduct) {
  const HomHopfAlgebra h = yau_twist(catalog::group_algebra(Q, 4), catalog::group_inversion(Q, 4));
  // g . e = alpha(g) = g^3
  EXPECT_EQ(h.multiply(h.basis(1), h.basis(0)), h.basis(3));
  // Delta(g) = g^3 @ g^3
  EXPECT_EQ(h.comultiply(h.basis(1)), kron(h.basis(3), h.basis(3)));
}

TEST(Checker, CorruptedMultiplicationIsLocated) {
  const AxiomReport r = check_hom_hopf(catalog::with_corrupted_mult(catalog::group_algebra(Q, 2)));
  ASSERT_FALSE(r.passed());
  const Violation& v = first_of(r, "a1=alpha(a)");
  EXPECT_EQ(v.indices, std::vector<std::size_t>{0});
  EXPECT_EQ(v.residual, (Vector{Scalar(Q, -1), Scalar(Q, 1)}));
}

TEST(Checker, CorruptedComultiplicationIsLocated) {
  const AxiomReport r = check_hom_hopf(catalog::with_corrupted_comult(catalog::group_algebra(Q, 3)));
  ASSERT_TRUE(r.has("eps(c1)c2=gamma^-1(c)"));
  EXPECT_EQ(first_of(r, "eps(c1)c2=gamma^-1(c)").indices, std::vector<std::size_t>{1});
}

TEST(Checker, CorruptedAntipodeIsLocated) {
  for (const HomHopfAlgebra& h : {catalog::sweedler(Q), catalog::twisted_sweedler(Q)}) {
    const AxiomReport r = check_hom_hopf(catalog::with_corrupted_antipode(h));
    ASSERT_TRUE(r.has("S*I=eta.eps"));
    const Violation& v = first_of(r, "S*I=eta.eps");
    EXPECT_EQ(v.indices, std::vector<std::size_t>{2});
    EXPECT_FALSE(v.residual == zero_vector(Q, 4));
  }
}

TEST(Checker, ReportsAreDeterministic) {
  const HomHopfAlgebra bad = catalog::with_corrupted_antipode(catalog::twisted_sweedler(Q));
  EXPECT_EQ(check_hom_hopf(bad), check_hom_hopf(bad));
}

TEST(YauTwist, RejectsNonAutomorphisms) {
  const HomHopfAlgebra h = catalog::group_algebra(Q, 4);
  EXPECT_THROW(yau_twist(h, catalog::group_power_map(Q, 4, 2)), CheckFailure);
  EXPECT_THROW(yau_twist(h, Matrix::identity(Q, 3)), DimensionError);
  EXPECT_THROW(yau_twist(catalog::sweedler(Q), catalog::sweedler_scaling(Q, 0)), CheckFailure);
  const HomHopfAlgebra twisted = yau_twist(h, catalog::group_inversion(Q, 4));
  EXPECT_THROW(yau_twist(twisted, Matrix::identity(Q, 4)), std::invalid_argument);
}

TEST(YauTwist, AutomorphismCheckNamesFailures) {
  const HomHopfAlgebra h = catalog::group_algebra(Q, 3);
  EXPECT_TRUE(check_hopf_automorphism(h, catalog::group_inversion(Q, 3)).passed());
  const AxiomReport r = check_hopf_automorphism(h, catalog::group_power_map(Q, 3, 0));
  // x -> e is a bialgebra endomorphism, only invertibility fails
  EXPECT_EQ(r.failed_axioms(), std::vector<std::string>{"a invertible"});
  const Matrix swap = Matrix::from_rows(Q, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  const AxiomReport s = check_hopf_automorphism(h, swap);
  EXPECT_TRUE(s.has("a(1)=1"));
  EXPECT_FALSE(s.has("a invertible"));
}

TEST(Structures, ConstructorsValidateShapes) {
  const Field f = Q;
  EXPECT_THROW(HomAlgebra(Matrix::identity(f, 2), Tensor3(f, 2, 2, 3), Vector{Scalar(f, 1), Scalar(f)}), DimensionError);
  EXPECT_THROW(HomAlgebra(Matrix(f, 2, 2), Tensor3(f, 2, 2, 2), Vector{Scalar(f, 1), Scalar(f)}), std::domain_error);
  EXPECT_THROW(HomModule(Matrix::identity(f, 2), Tensor3(f, 3, 2, 3)), DimensionError);
  EXPECT_THROW(check_hom_module(HomModule(Matrix::identity(f, 1), Tensor3(f, 1, 3, 1)),
                                catalog::group_algebra(f, 2).algebra()),
               DimensionError);
}

TEST(Modules, RegularAndRandomModulesPass) {
  std::mt19937 rng(5);
  for (const Field f : {Q, GF7}) {
    const HomHopfAlgebra h = yau_twist(catalog::group_algebra(f, 3), catalog::group_inversion(f, 3));
    EXPECT_TRUE(check_hom_module(regular_module(h.algebra()), h.algebra()).passed());
    EXPECT_TRUE(check_hom_comodule(regular_comodule(h.coalgebra()), h.coalgebra()).passed());
    for (std::size_t dim : {1u, 2u, 3u}) {
      const HomModule m = corpus::random_kz2_module(f, rng, dim, false);
      EXPECT_TRUE(check_hom_module(m, catalog::group_algebra(f, 2).algebra()).passed());
      // e must act as mu
      const HomModule bad(m.mu(), corpus::perturbed(m.action(), 0, 0, 0));
      EXPECT_FALSE(check_hom_module(bad, catalog::group_algebra(f, 2).algebra()).passed());
    }
    for (std::size_t n : {2u, 3u}) {
      const HomComodule c = corpus::random_graded_comodule(f, rng, 3, n);
      EXPECT_TRUE(check_hom_comodule(c, catalog::group_algebra(f, n).coalgebra()).passed());
    }
  }
}

TEST(OppositeTensor, BothPlacementsYieldHopfStructures) {
  for (const HomHopfAlgebra& h : {catalog::sweedler(Q), catalog::twisted_sweedler(Q), catalog::group_algebra(Q, 3)}) {
    for (const auto side : {OppositeFactor::First, OppositeFactor::Second}) {
      const OppositeTensor o = opposite_tensor(h, side);
      EXPECT_EQ(o.hopf.dim(), h.dim() * h.dim());
      EXPECT_EQ(o.opposite, side);
      EXPECT_TRUE(check_hom_hopf(o.hopf).passed()) << to_string(side) << " " << o.antipode_convention;
    }
  }
  EXPECT_EQ(opposite_tensor(catalog::sweedler(Q), OppositeFactor::Second).antipode_convention, "S(x)S^-1");
}

TEST(OppositeTensor, MultiplicationReversesTheOppositeFactor) {
  const HomHopfAlgebra h = catalog::sweedler(Q);
  const OppositeTensor o = opposite_tensor(h, OppositeFactor::Second);
  // (1@g)(1@x) = 1@(x g) in H (x) H^op
  const Vector lhs = o.hopf.multiply(kron(h.basis(0), h.basis(1)), kron(h.basis(0), h.basis(2)));
  EXPECT_EQ(lhs, kron(h.basis(0), h.multiply(h.basis(2), h.basis(1))));
}

TEST(Oracle, CheckersAgreeWithBruteForce) {
  for (const Field f : {Q, GF7}) {
    std::size_t pass = 0, fail = 0;
    for (const auto& c : corpus::classical_corpus(f)) {
      const bool verdict = c.checker();
      EXPECT_EQ(verdict, c.oracle()) << c.name << " over " << f.to_string();
      (verdict ? pass : fail)++;
    }
    EXPECT_GT(pass, 0u);
    EXPECT_GT(fail, 0u);
  }
}
