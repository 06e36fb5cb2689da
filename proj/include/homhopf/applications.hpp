#ifndef HOMHOPF_APPLICATIONS_HPP
#define HOMHOPF_APPLICATIONS_HPP

// Special Doi data: relative Hom-Hopf modules (H, A, H), the trivial datum
// (k, k, H), and Hom-Yetter-Drinfeld modules realised as Doi modules over a
// datum on H (x) H with one opposite factor.

#include "homhopf/integrals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homhopf {

/// (H, A, H) with H acting on itself by multiplication.
inline DoiDatum relative_datum(const HomHopfAlgebra& h, const ComoduleAlgebra& a) {
  DoiDatum dd(h, a, ModuleCoalgebra(h.coalgebra(), h.mult()));
  if (auto r = check_doi_datum(dd); !r.passed()) throw CheckFailure("relative_datum", r);
  return dd;
}

/// H as a comodule algebra over itself via Delta.
inline ComoduleAlgebra regular_comodule_algebra(const HomHopfAlgebra& h) {
  return ComoduleAlgebra(h.algebra(), h.comult());
}

/// Hopf algebra k, A = k, C = H with c.1 = alpha(c). Doi modules over it are
/// the (H, alpha)-comodules, with A-action given by the module twist.
inline DoiDatum trivial_datum(const HomHopfAlgebra& h) {
  const Field f = h.field();
  const Scalar one = Scalar::one(f);
  HomHopfAlgebra k = ground_field_hopf(f);
  ComoduleAlgebra a(k.algebra(), Tensor3(f, 1, 1, 1, {one}));
  const std::size_t d = h.dim();
  Tensor3 act(f, d, 1, d);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t c2 = 0; c2 < d; ++c2) act(c, 0, c2) = h.alpha()(c2, c);
  }
  return DoiDatum(std::move(k), std::move(a), ModuleCoalgebra(h.coalgebra(), std::move(act)));
}

/// A Doi module over trivial_datum(H) from an H-comodule.
inline DoiModule trivial_doi_module(const HomComodule& m) {
  const Field f = m.field();
  const std::size_t d = m.dim();
  Tensor3 act(f, d, 1, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) act(i, 0, j) = m.mu()(j, i);
  }
  return DoiModule(m.mu(), std::move(act), m.coaction());
}

/// The k-module (N, nu) over the one-dimensional algebra: n.1 = nu(n).
inline HomModule scalar_module(const Matrix& nu) {
  const Field f = nu.field();
  const std::size_t d = nu.rows();
  Tensor3 act(f, d, 1, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) act(i, 0, j) = nu(j, i);
  }
  return HomModule(nu, std::move(act));
}

// ---------------------------------------------------------------------------
// Yetter-Drinfeld

struct YDDatum {
  HomHopfAlgebra base;  ///< H itself
  DoiDatum datum;
  OppositeFactor opposite;          ///< which factor of H (x) H carries the opposite product
  std::string antipode_convention;  ///< antipode of the tensor product that verified
};

namespace detail {

/// Coaction h -> alpha(h21) @ (h22 @ S(alpha^-1(h1))) into H (x) K, K = H (x) H.
inline Tensor3 yd_coaction(const HomHopfAlgebra& h) {
  const Field f = h.field();
  const std::size_t d = h.dim();
  const Matrix id = Matrix::identity(f, d);
  const Matrix& dm = h.coalgebra().comult_matrix();
  const Matrix s_ai = compose(h.antipode(), h.alpha_inv());
  Tensor3 out(f, d, d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    // h1 @ h21 @ h22
    const Vector t = apply_kron({id, dm}, h.comultiply(h.basis(i)));
    // -> alpha(h21) @ h22 @ S(alpha^-1(h1))
    const Vector u = apply_kron({h.alpha(), id, s_ai}, permute_factors(t, {d, d, d}, {1, 2, 0}));
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d * d; ++k) out(i, j, k) = u[j * d * d + k];
    }
  }
  return out;
}

/// Action c <| (x @ y) = alpha(y)(alpha^-1(c) x) of K = H (x) H on H.
inline Tensor3 yd_action(const HomHopfAlgebra& h) {
  const Field f = h.field();
  const std::size_t d = h.dim();
  Tensor3 out(f, d, d * d, d);
  for (std::size_t c = 0; c < d; ++c) {
    const Vector ac = h.alpha_inv().apply(h.basis(c));
    for (std::size_t x = 0; x < d; ++x) {
      const Vector inner = h.multiply(ac, h.basis(x));
      for (std::size_t y = 0; y < d; ++y) {
        const Vector v = h.multiply(h.alpha().apply(h.basis(y)), inner);
        for (std::size_t k = 0; k < d; ++k) out(c, x * d + y, k) = v[k];
      }
    }
  }
  return out;
}

}  // namespace detail

/// The datum (H (x) H with one opposite factor, H, H). Both placements of
/// the opposite factor are tried; the first whose comodule-algebra and
/// module-coalgebra checks pass is returned.
inline YDDatum yd_datum(const HomHopfAlgebra& h) {
  if (!h.antipode_invertible()) throw std::domain_error("yd_datum requires a bijective antipode");
  ComoduleAlgebra a(h.algebra(), detail::yd_coaction(h));
  ModuleCoalgebra c(h.coalgebra(), detail::yd_action(h));
  AxiomReport failures;
  for (auto side : {OppositeFactor::Second, OppositeFactor::First}) {
    OppositeTensor k = opposite_tensor(h, side);
    AxiomReport r = check_comodule_algebra(a, k.hopf);
    r.merge(check_module_coalgebra(c, k.hopf));
    if (r.passed()) return {h, DoiDatum(std::move(k.hopf), a, c), side, k.antipode_convention};
    failures.merge(r);
  }
  throw CheckFailure("yd_datum: no placement of the opposite factor verified", failures);
}

/// A right-right Hom-Yetter-Drinfeld module (M, mu) over H: one twist shared
/// by the action psi[m][h][m'] and the coaction rho[m][m'][h].
class YDModule {
 public:
  YDModule(Matrix mu, Tensor3 action, Tensor3 coaction) : module_(mu, std::move(action)), comodule_(mu, std::move(coaction)) {}

  const Field& field() const noexcept { return module_.field(); }
  std::size_t dim() const noexcept { return module_.dim(); }
  const Matrix& mu() const noexcept { return module_.mu(); }
  const Tensor3& action() const noexcept { return module_.action(); }
  const Tensor3& coaction() const noexcept { return comodule_.coaction(); }
  const HomModule& module() const noexcept { return module_; }
  const HomComodule& comodule() const noexcept { return comodule_; }

  friend bool operator==(const YDModule& a, const YDModule& b) {
    return a.mu() == b.mu() && a.action() == b.action() && a.coaction() == b.coaction();
  }

 private:
  HomModule module_;
  HomComodule comodule_;
};

inline constexpr const char* kYDCompatibility = "m0.h1@m1h2=mu((mu^-1(m).h2)0)@h1(mu^-1(m).h2)1";
inline constexpr const char* kYDCoactionOfProduct = "rho(m.h)=m0.alpha(h21)@S(h1)(alpha^-1(m1)h22)";

namespace detail {

inline void require_yd_shape(const YDModule& m, const HomHopfAlgebra& h) {
  if (m.module().algebra_dim() != h.dim() || m.comodule().coalgebra_dim() != h.dim() || m.field() != h.field()) {
    throw DimensionError("YD structure does not match Hopf algebra of dimension " + std::to_string(h.dim()));
  }
}

}  // namespace detail

/// The YD compatibility condition alone, on every basis pair (m, h).
inline AxiomReport check_yd_compatibility(const YDModule& m, const HomHopfAlgebra& h) {
  detail::require_yd_shape(m, h);
  const Field f = h.field();
  const std::size_t dm = m.dim(), d = h.dim();
  const Matrix& psi = m.module().action_matrix();
  const Matrix& rho = m.comodule().coaction_matrix();
  const Matrix& mh = h.algebra().mult_matrix();
  const Matrix id_h = Matrix::identity(f, d);
  const auto em = [&](std::size_t i) { return basis_vector(f, dm, i); };
  AxiomReport report;
  check_identity(
      report, kYDCompatibility, {dm, d},
      [&](const auto& i) {
        const Vector t = kron(rho.apply(em(i[0])), h.comultiply(h.basis(i[1])));
        return apply_kron({psi, mh}, permute_factors(t, {dm, d, d, d}, {0, 2, 1, 3}));
      },
      [&](const auto& i) {
        const Vector w = kron(m.module().mu_inv().apply(em(i[0])), h.comultiply(h.basis(i[1])));
        const Vector x = apply_kron({id_h, psi}, permute_factors(w, {dm, d, d}, {1, 0, 2}));
        const Vector y = apply_kron({id_h, rho}, x);
        return apply_kron({m.mu(), mh}, permute_factors(y, {d, dm, d}, {1, 0, 2}));
      });
  return report;
}

/// The equivalent coaction-of-a-product form of the YD condition.
inline AxiomReport check_yd_product_identity(const YDModule& m, const HomHopfAlgebra& h) {
  detail::require_yd_shape(m, h);
  const Field f = h.field();
  const std::size_t dm = m.dim(), d = h.dim();
  const Matrix& psi = m.module().action_matrix();
  const Matrix& rho = m.comodule().coaction_matrix();
  const Matrix& mh = h.algebra().mult_matrix();
  const Matrix id_h = Matrix::identity(f, d);
  const Matrix id_m = Matrix::identity(f, dm);
  const Matrix psi_alpha = compose(psi, tensor(id_m, h.alpha()));
  const Matrix triple = compose(mh, tensor(id_h, mh));  // x (y z)
  const auto em = [&](std::size_t i) { return basis_vector(f, dm, i); };
  AxiomReport report;
  check_identity(
      report, kYDCoactionOfProduct, {dm, d},
      [&](const auto& i) { return rho.apply(m.module().act(em(i[0]), h.basis(i[1]))); },
      [&](const auto& i) {
        const Vector h3 = apply_kron({id_h, h.coalgebra().comult_matrix()}, h.comultiply(h.basis(i[1])));
        // (m0, m1, h1, h21, h22) -> (m0, h21, h1, m1, h22)
        const Vector w = permute_factors(kron(rho.apply(em(i[0])), h3), {dm, d, d, d, d}, {0, 3, 2, 1, 4});
        const Vector x = apply_kron({psi_alpha, h.antipode(), h.alpha_inv(), id_h}, w);
        return apply_kron({id_m, triple}, x);
      });
  return report;
}

/// Module axioms, comodule axioms and the YD compatibility condition.
inline AxiomReport check_yd_module(const YDModule& m, const HomHopfAlgebra& h) {
  detail::require_yd_shape(m, h);
  AxiomReport report = check_hom_module(m.module(), h.algebra());
  report.merge(check_hom_comodule(m.comodule(), h.coalgebra()));
  report.merge(check_yd_compatibility(m, h));
  return report;
}

/// Records a violation when exactly one of the two equivalent YD forms holds.
inline AxiomReport check_yd_form_equivalence(const YDModule& m, const HomHopfAlgebra& h) {
  const bool compat = check_yd_compatibility(m, h).passed();
  const bool product = check_yd_product_identity(m, h).passed();
  AxiomReport report;
  if (compat != product) {
    report.add({std::string("equivalence: ") + kYDCompatibility + " is " + (compat ? "true" : "false") + " but " +
                    kYDCoactionOfProduct + " is " + (product ? "true" : "false"),
                {},
                {}});
  }
  return report;
}

/// Reinterprets the stored tensors without checking.
inline DoiModule as_doi_module(const YDModule& m) { return DoiModule(m.mu(), m.action(), m.coaction()); }
inline YDModule as_yd_module(const DoiModule& m) { return YDModule(m.mu(), m.action(), m.coaction()); }

inline DoiModule yd_to_doi(const YDModule& m, const YDDatum& yd) {
  DoiModule out = as_doi_module(m);
  if (auto r = check_doi_module(out, yd.datum); !r.passed()) throw CheckFailure("yd_to_doi", r);
  return out;
}

inline YDModule doi_to_yd(const DoiModule& m, const YDDatum& yd) {
  YDModule out = as_yd_module(m);
  if (auto r = check_yd_module(out, yd.base); !r.passed()) {
    throw CheckFailure("doi_to_yd", r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dual integrals and the trivial datum

/// Basis of {phi : phi(h1) h2 = phi(h) 1, phi o alpha = phi}.
inline std::vector<Vector> dual_right_integrals(const HomHopfAlgebra& h) {
  const Field f = h.field();
  const std::size_t d = h.dim();
  Matrix sys(f, d * d + d, d);
  for (std::size_t b = 0; b < d; ++b) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t row = b * d + k;
      for (std::size_t i = 0; i < d; ++i) sys(row, i) += h.comult()(b, i, k);
      sys(row, b) -= h.unit()[k];
    }
    const std::size_t row = d * d + b;
    for (std::size_t i = 0; i < d; ++i) sys(row, i) += h.alpha()(i, b);
    sys(row, b) -= Scalar::one(f);
  }
  return nullspace(sys);
}

struct DualIntegralTheta {
  IntegralCandidate theta;
  AxiomReport report;  ///< verify_integral against trivial_datum(H)
};

/// theta(h @ g) = phi(g S^-1(h)), verified against the trivial datum.
inline DualIntegralTheta integral_from_dual(const Vector& phi, const HomHopfAlgebra& h) {
  const Field f = h.field();
  const std::size_t d = h.dim();
  if (phi.size() != d) throw DimensionError("functional has length " + std::to_string(phi.size()));
  const Matrix& si = h.antipode_inv();
  Tensor3 t(f, d, d, 1);
  for (std::size_t x = 0; x < d; ++x) {
    const Vector sx = si.apply(h.basis(x));
    for (std::size_t y = 0; y < d; ++y) {
      const Vector p = h.multiply(h.basis(y), sx);
      Scalar v(f);
      for (std::size_t k = 0; k < d; ++k) v.add_product(phi[k], p[k]);
      t(x, y, 0) = v;
    }
  }
  DualIntegralTheta out{{std::move(t)}, {}};
  out.report = verify_integral(out.theta, trivial_datum(h));
  return out;
}

inline constexpr const char* kKIntegralColinear = "alpha(h2)theta(alpha^-1(g)@h1)=alpha(g1)theta(g2@alpha^-1(h))";
inline constexpr const char* kKIntegralNormalized = "theta(h1@h2)=eps(h)";
inline constexpr const char* kKIntegralTwist = "theta(alpha(g)@alpha(h))=theta(g@h)";

/// The conditions a normalized k-integral theta: H (x) H -> k must satisfy.
inline AxiomReport check_k_integral_conditions(const IntegralCandidate& t, const HomHopfAlgebra& h) {
  const std::size_t d = h.dim();
  if (t.theta.d1() != d || t.theta.d2() != d || t.theta.d3() != 1) {
    throw DimensionError("k-integral must be " + std::to_string(d) + "x" + std::to_string(d) + "x1, got " +
                         t.theta.shape());
  }
  const Matrix theta = t.matrix();
  const Matrix& a = h.alpha();
  const Matrix& ai = h.alpha_inv();
  const auto e = [&](std::size_t i) { return h.basis(i); };
  AxiomReport report;
  check_identity(
      report, kKIntegralColinear, {d, d},
      [&](const auto& i) {
        // (g, h1, h2) -> theta(alpha^-1 g @ h1) alpha(h2)
        const Vector w = kron(ai.apply(e(i[0])), h.comultiply(e(i[1])));
        return apply_kron({theta, a}, w);
      },
      [&](const auto& i) {
        // (g1, g2, h) -> alpha(g1) theta(g2 @ alpha^-1 h)
        const Vector w = kron(h.comultiply(e(i[0])), ai.apply(e(i[1])));
        return apply_kron({a, theta}, w);
      });
  check_identity(
      report, kKIntegralNormalized, {d}, [&](const auto& i) { return theta.apply(h.comultiply(e(i[0]))); },
      [&](const auto& i) { return Vector{h.epsilon(e(i[0]))}; });
  check_identity(
      report, kKIntegralTwist, {d, d}, [&](const auto& i) { return theta.apply(kron(a.apply(e(i[0])), a.apply(e(i[1])))); },
      [&](const auto& i) { return theta.apply(kron(e(i[0]), e(i[1]))); });
  return report;
}

}  // namespace homhopf

#endif  // HOMHOPF_APPLICATIONS_HPP
