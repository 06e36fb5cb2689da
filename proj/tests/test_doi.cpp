#include "corpus.hpp"

#include <gtest/gtest.h>

using namespace homhopf;

namespace {

const Field Q = Field::rationals();
const Field GF7 = Field::prime(7);

struct NamedDatum {
  std::string name;
  DoiDatum datum;
};

std::vector<NamedDatum> data(Field f) {
  const HomHopfAlgebra z4 = yau_twist(catalog::group_algebra(f, 4), catalog::group_inversion(f, 4));
  std::vector<NamedDatum> out;
  out.push_back({"trivial kZ3", trivial_datum(catalog::group_algebra(f, 3))});
  out.push_back({"trivial twisted kZ4", trivial_datum(z4)});
  out.push_back({"trivial twisted H4", trivial_datum(catalog::twisted_sweedler(f))});
  out.push_back({"relative kZ2", corpus::relative_kz2(f)});
  out.push_back({"relative twisted kZ4", relative_datum(z4, regular_comodule_algebra(z4))});
  out.push_back({"relative H4", relative_datum(catalog::sweedler(f), regular_comodule_algebra(catalog::sweedler(f)))});
  out.push_back({"yd kZ2", yd_datum(catalog::group_algebra(f, 2)).datum});
  return out;
}

}  // namespace

TEST(Datum, StandardDataPass) {
  for (const Field f : {Q, GF7}) {
    for (const auto& [name, dd] : data(f)) EXPECT_TRUE(check_doi_datum(dd).passed()) << name;
  }
}

TEST(Datum, CorruptedCoactionIsRejected) {
  const HomHopfAlgebra h = catalog::group_algebra(Q, 2);
  const ComoduleAlgebra bad(h.algebra(), corpus::perturbed(h.comult(), 1, 0, 0));
  const AxiomReport r = check_comodule_algebra(bad, h);
  EXPECT_FALSE(r.passed());
  EXPECT_THROW(relative_datum(h, bad), CheckFailure);
}

TEST(Datum, MismatchedDimensionsThrow) {
  const HomHopfAlgebra h2 = catalog::group_algebra(Q, 2), h3 = catalog::group_algebra(Q, 3);
  EXPECT_THROW(DoiDatum(h3, regular_comodule_algebra(h2), ModuleCoalgebra(h3.coalgebra(), h3.mult())), DimensionError);
  EXPECT_THROW(DoiDatum(h2, regular_comodule_algebra(catalog::group_algebra(GF7, 2)),
                        ModuleCoalgebra(h2.coalgebra(), h2.mult())),
               DimensionError);
}

TEST(Induce, InducedModulesAreDoiModules) {
  std::mt19937 rng(17);
  for (const Field f : {Q, GF7}) {
    for (const auto& [name, dd] : data(f)) {
      const HomModule reg = regular_module(dd.algebra().algebra());
      const DoiModule g = induce(reg, dd);
      EXPECT_EQ(g.dim(), dd.algebra().dim() * dd.coalgebra().dim());
      EXPECT_TRUE(check_doi_module(g, dd).passed()) << name;
    }
    const DoiDatum rel = corpus::relative_kz2(f);
    for (std::size_t dim : {1u, 2u, 3u}) {
      const DoiModule g = induce(corpus::random_kz2_module(f, rng, dim, false), rel);
      EXPECT_TRUE(check_doi_module(g, rel).passed());
    }
  }
}

TEST(Induce, WrongAlgebraDimensionThrows) {
  const DoiDatum rel = corpus::relative_kz2(Q);
  EXPECT_THROW(induce(regular_module(catalog::group_algebra(Q, 3).algebra()), rel), DimensionError);
}

TEST(Adjunction, UnitCounitAndTriangleIdentities) {
  std::mt19937 rng(23);
  for (const Field f : {Q, GF7}) {
    for (const auto& [name, dd] : data(f)) {
      const HomModule n = regular_module(dd.algebra().algebra());
      const DoiModule m = induce(n, dd);
      EXPECT_TRUE(check_unit_map(m, dd).passed()) << name;
      EXPECT_TRUE(check_counit_map(n, dd).passed()) << name;
      EXPECT_TRUE(check_triangle_identities(dd, m, n).passed()) << name;
    }
    const DoiDatum rel = corpus::relative_kz2(f);
    const HomModule n = corpus::random_kz2_module(f, rng, 2, false);
    const DoiModule m = induce(corpus::random_kz2_module(f, rng, 3, false), rel);
    EXPECT_TRUE(check_triangle_identities(rel, m, n).passed());
  }
}

TEST(Morphisms, FlagsSeparateLinearityFromColinearity) {
  const corpus::ProjectionExample ex = corpus::projection_example(Q);
  EXPECT_TRUE(morphism_flags(ex.proj, ex.sum, ex.regular).is_doi_morphism());
  EXPECT_TRUE(morphism_flags(ex.incl, ex.regular, ex.sum).is_doi_morphism());
  const MorphismFlags s = morphism_flags(ex.section, ex.regular, ex.sum);
  EXPECT_TRUE(s.a_linear.passed());
  EXPECT_FALSE(s.c_colinear.passed());
  EXPECT_TRUE(s.twist_commuting.passed());
  EXPECT_FALSE(s.is_doi_morphism());
  // t -> e is colinear since rho(t) = t@e
  EXPECT_TRUE(morphism_flags(ex.retract, ex.sum, ex.regular).is_doi_morphism());
  EXPECT_EQ(compose(ex.retract, ex.incl), Matrix::identity(Q, 2));
  EXPECT_EQ(compose(ex.proj, ex.section), Matrix::identity(Q, 2));
}

TEST(Morphisms, TwistCommutingIsChecked) {
  const HomHopfAlgebra h = yau_twist(catalog::group_algebra(Q, 3), catalog::group_inversion(Q, 3));
  const DoiModule m = trivial_doi_module(regular_comodule(h.coalgebra()));
  EXPECT_TRUE(morphism_flags(Matrix::identity(Q, 3), m, m).is_doi_morphism());
  // Delta o alpha = (alpha@alpha) o Delta, so alpha is not colinear
  const MorphismFlags a = morphism_flags(h.alpha(), m, m);
  EXPECT_TRUE(a.twist_commuting.passed());
  EXPECT_FALSE(a.c_colinear.passed());
  Matrix p(Q, 3, 3);
  p(0, 1) = p(1, 1) = Scalar::one(Q);
  EXPECT_FALSE(morphism_flags(p, m, m).twist_commuting.passed());
}

TEST(DirectSum, BlockDiagonalSumIsADoiModule) {
  for (const Field f : {Q, GF7}) {
    const corpus::ProjectionExample ex = corpus::projection_example(f);
    EXPECT_EQ(ex.sum.dim(), 3u);
    EXPECT_TRUE(check_doi_module(ex.sum, ex.datum).passed());
    const DoiDatum rel = corpus::relative_kz2(f);
    const DoiModule g = induce(regular_module(rel.algebra().algebra()), rel);
    EXPECT_TRUE(check_doi_module(direct_sum(g, g), rel).passed());
    EXPECT_THROW(direct_sum(g, ex.regular), DimensionError);
  }
}

TEST(DoiModule, PerturbationsAreDetected) {
  const DoiDatum rel = corpus::relative_kz2(Q);
  const DoiModule g = induce(regular_module(rel.algebra().algebra()), rel);
  EXPECT_FALSE(check_doi_module(corpus::perturb_action(g, 0, 1, 2), rel).passed());
  EXPECT_FALSE(check_doi_module(corpus::perturb_coaction(g, 3, 0, 1), rel).passed());
}
