#ifndef HOMHOPF_DOI_HPP
#define HOMHOPF_DOI_HPP

// Doi Hom-Hopf data (H, A, C), Doi Hom-Hopf modules, the induction functor
// G(N) = N (x) C and the unit/counit of the adjunction F -| G.

#include "homhopf/hom_core.hpp"

#include <string>
#include <utility>

namespace homhopf {

/// (A, beta) with a right H-coaction rho_A[a][a'][h] that is an algebra map.
class ComoduleAlgebra {
 public:
  ComoduleAlgebra(HomAlgebra algebra, Tensor3 coaction)
      : algebra_(std::move(algebra)), comodule_(algebra_.alpha(), std::move(coaction)) {}

  const HomAlgebra& algebra() const noexcept { return algebra_; }
  const HomComodule& comodule() const noexcept { return comodule_; }
  const Field& field() const noexcept { return algebra_.field(); }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  const Matrix& beta() const noexcept { return algebra_.alpha(); }
  const Tensor3& coaction() const noexcept { return comodule_.coaction(); }
  std::size_t hopf_dim() const noexcept { return comodule_.coalgebra_dim(); }

 private:
  HomAlgebra algebra_;
  HomComodule comodule_;
};

/// (C, gamma) with a right H-action phi[c][h][c'] compatible with Delta and eps.
class ModuleCoalgebra {
 public:
  ModuleCoalgebra(HomCoalgebra coalgebra, Tensor3 action)
      : coalgebra_(std::move(coalgebra)), module_(coalgebra_.gamma(), std::move(action)) {}

  const HomCoalgebra& coalgebra() const noexcept { return coalgebra_; }
  const HomModule& module() const noexcept { return module_; }
  const Field& field() const noexcept { return coalgebra_.field(); }
  std::size_t dim() const noexcept { return coalgebra_.dim(); }
  const Matrix& gamma() const noexcept { return coalgebra_.gamma(); }
  const Tensor3& action() const noexcept { return module_.action(); }
  std::size_t hopf_dim() const noexcept { return module_.algebra_dim(); }

 private:
  HomCoalgebra coalgebra_;
  HomModule module_;
};

class DoiDatum {
 public:
  DoiDatum(HomHopfAlgebra h, ComoduleAlgebra a, ModuleCoalgebra c)
      : h_(std::move(h)), a_(std::move(a)), c_(std::move(c)) {
    detail::require(a_.hopf_dim() == h_.dim(), "comodule algebra coacts by a Hopf algebra of dimension " +
                                                   std::to_string(a_.hopf_dim()) + ", expected " +
                                                   std::to_string(h_.dim()));
    detail::require(c_.hopf_dim() == h_.dim(), "module coalgebra is acted on by a Hopf algebra of dimension " +
                                                   std::to_string(c_.hopf_dim()) + ", expected " +
                                                   std::to_string(h_.dim()));
    detail::require(a_.field() == h_.field() && c_.field() == h_.field(), "datum components over different fields");
  }

  const HomHopfAlgebra& hopf() const noexcept { return h_; }
  const ComoduleAlgebra& algebra() const noexcept { return a_; }
  const ModuleCoalgebra& coalgebra() const noexcept { return c_; }
  const Field& field() const noexcept { return h_.field(); }

 private:
  HomHopfAlgebra h_;
  ComoduleAlgebra a_;
  ModuleCoalgebra c_;
};

/// (M, mu) with a right A-action psi[m][a][m'] and a right C-coaction rho[m][m'][c].
class DoiModule {
 public:
  DoiModule(Matrix mu, Tensor3 action, Tensor3 coaction) : module_(mu, std::move(action)), comodule_(mu, std::move(coaction)) {}

  const Field& field() const noexcept { return module_.field(); }
  std::size_t dim() const noexcept { return module_.dim(); }
  const Matrix& mu() const noexcept { return module_.mu(); }
  const Matrix& mu_inv() const noexcept { return module_.mu_inv(); }
  const Tensor3& action() const noexcept { return module_.action(); }
  const Tensor3& coaction() const noexcept { return comodule_.coaction(); }

  /// The forgetful functor F.
  const HomModule& module() const noexcept { return module_; }
  const HomComodule& comodule() const noexcept { return comodule_; }

 private:
  HomModule module_;
  HomComodule comodule_;
};

namespace detail {

inline void require_same(std::size_t got, std::size_t want, const std::string& what) {
  if (got != want) {
    throw DimensionError(what + ": dimension " + std::to_string(got) + ", expected " + std::to_string(want));
  }
}

}  // namespace detail

inline AxiomReport check_comodule_algebra(const ComoduleAlgebra& a, const HomHopfAlgebra& h) {
  detail::require_same(a.hopf_dim(), h.dim(), "comodule algebra coaction");
  AxiomReport report = check_hom_algebra(a.algebra());
  report.merge(check_hom_comodule(a.comodule(), h.coalgebra()));
  const std::size_t d = a.dim(), dh = h.dim();
  const Matrix& ma = a.algebra().mult_matrix();
  const Matrix& mh = h.algebra().mult_matrix();
  const auto e = [&](std::size_t i) { return a.algebra().basis(i); };
  const auto rho = [&](const Vector& v) { return a.comodule().coact(v); };
  check_identity(
      report, "rho(ab)=a0b0@a1b1", {d, d}, [&](const auto& i) { return rho(a.algebra().multiply(e(i[0]), e(i[1]))); },
      [&](const auto& i) {
        const Vector t = kron(rho(e(i[0])), rho(e(i[1])));
        return apply_kron({ma, mh}, permute_factors(t, {d, dh, d, dh}, {0, 2, 1, 3}));
      });
  check_identity(
      report, "rho(1)=1@1", {}, [&](const auto&) { return rho(a.algebra().unit()); },
      [&](const auto&) { return kron(a.algebra().unit(), h.unit()); });
  return report;
}

inline AxiomReport check_module_coalgebra(const ModuleCoalgebra& c, const HomHopfAlgebra& h) {
  detail::require_same(c.hopf_dim(), h.dim(), "module coalgebra action");
  AxiomReport report = check_hom_coalgebra(c.coalgebra());
  report.merge(check_hom_module(c.module(), h.algebra()));
  const std::size_t d = c.dim(), dh = h.dim();
  const Matrix& phi = c.module().action_matrix();
  const auto ec = [&](std::size_t i) { return c.coalgebra().basis(i); };
  const auto eh = [&](std::size_t i) { return h.basis(i); };
  check_identity(
      report, "Delta(c.h)=c1.h1@c2.h2", {d, dh},
      [&](const auto& i) { return c.coalgebra().comultiply(c.module().act(ec(i[0]), eh(i[1]))); },
      [&](const auto& i) {
        const Vector t = kron(c.coalgebra().comultiply(ec(i[0])), h.comultiply(eh(i[1])));
        return apply_kron({phi, phi}, permute_factors(t, {d, d, dh, dh}, {0, 2, 1, 3}));
      });
  check_identity(
      report, "eps(c.h)=eps(c)eps(h)", {d, dh},
      [&](const auto& i) { return Vector{c.coalgebra().epsilon(c.module().act(ec(i[0]), eh(i[1])))}; },
      [&](const auto& i) { return Vector{c.coalgebra().epsilon(ec(i[0])) * h.epsilon(eh(i[1]))}; });
  return report;
}

inline AxiomReport check_doi_datum(const DoiDatum& dd) {
  AxiomReport report = check_hom_hopf(dd.hopf());
  report.merge(check_comodule_algebra(dd.algebra(), dd.hopf()));
  report.merge(check_module_coalgebra(dd.coalgebra(), dd.hopf()));
  return report;
}

/// Module and comodule axioms for the shared twist, plus rho(m.a) = m0.a0 @ m1.a1.
inline AxiomReport check_doi_module(const DoiModule& m, const DoiDatum& dd) {
  const std::size_t dm = m.dim(), da = dd.algebra().dim(), dc = dd.coalgebra().dim(), dh = dd.hopf().dim();
  detail::require_same(m.module().algebra_dim(), da, "Doi module action");
  detail::require_same(m.comodule().coalgebra_dim(), dc, "Doi module coaction");
  AxiomReport report = check_hom_module(m.module(), dd.algebra().algebra());
  report.merge(check_hom_comodule(m.comodule(), dd.coalgebra().coalgebra()));
  const Matrix& psi = m.module().action_matrix();
  const Matrix& phi = dd.coalgebra().module().action_matrix();
  const auto em = [&](std::size_t i) { return basis_vector(m.field(), dm, i); };
  const auto ea = [&](std::size_t i) { return basis_vector(m.field(), da, i); };
  check_identity(
      report, "rho(m.a)=m0.a0@m1.a1", {dm, da}, [&](const auto& i) { return m.comodule().coact(m.module().act(em(i[0]), ea(i[1]))); },
      [&](const auto& i) {
        const Vector t = kron(m.comodule().coact(em(i[0])), dd.algebra().comodule().coact(ea(i[1])));
        return apply_kron({psi, phi}, permute_factors(t, {dm, dc, da, dh}, {0, 2, 1, 3}));
      });
  return report;
}

/// G(N) = N (x) C with (n@c).a = n.a0 @ c.a1, rho(n@c) = nu^-1(n)@c1 @ gamma(c2), twist nu@gamma.
inline DoiModule induce(const HomModule& n, const DoiDatum& dd) {
  const auto& a = dd.algebra();
  const auto& c = dd.coalgebra();
  detail::require_same(n.algebra_dim(), a.dim(), "induce: module action");
  const Field f = dd.field();
  const std::size_t dn = n.dim(), dc = c.dim(), da = a.dim(), dh = dd.hopf().dim();
  const std::size_t dg = dn * dc;
  const Tensor3& rho_a = a.coaction();
  const Tensor3& psi = n.action();
  const Tensor3& phi = c.action();
  const Tensor3& delta = c.coalgebra().comult();
  const Matrix& nu_inv = n.mu_inv();
  const Matrix& gamma = c.gamma();

  Tensor3 action(f, dg, da, dg);
  for (std::size_t x = 0; x < dn; ++x) {
    for (std::size_t y = 0; y < dc; ++y) {
      for (std::size_t b = 0; b < da; ++b) {
        for (std::size_t s = 0; s < da; ++s) {
          for (std::size_t h = 0; h < dh; ++h) {
            const Scalar& r = rho_a(b, s, h);
            if (r.is_zero()) continue;
            for (std::size_t x2 = 0; x2 < dn; ++x2) {
              const Scalar& p = psi(x, s, x2);
              if (p.is_zero()) continue;
              const Scalar rp = r * p;
              for (std::size_t y2 = 0; y2 < dc; ++y2) {
                const Scalar& q = phi(y, h, y2);
                if (!q.is_zero()) action(x * dc + y, b, x2 * dc + y2).add_product(rp, q);
              }
            }
          }
        }
      }
    }
  }

  Tensor3 coaction(f, dg, dg, dc);
  for (std::size_t x = 0; x < dn; ++x) {
    for (std::size_t y = 0; y < dc; ++y) {
      for (std::size_t x2 = 0; x2 < dn; ++x2) {
        const Scalar& v = nu_inv(x2, x);
        if (v.is_zero()) continue;
        for (std::size_t y1 = 0; y1 < dc; ++y1) {
          for (std::size_t j = 0; j < dc; ++j) {
            const Scalar& dl = delta(y, y1, j);
            if (dl.is_zero()) continue;
            const Scalar vd = v * dl;
            for (std::size_t y2 = 0; y2 < dc; ++y2) {
              const Scalar& g = gamma(y2, j);
              if (!g.is_zero()) coaction(x * dc + y, x2 * dc + y1, y2).add_product(vd, g);
            }
          }
        }
      }
    }
  }
  return DoiModule(tensor(n.mu(), gamma), std::move(action), std::move(coaction));
}

/// A viewed as a right module over itself: action = multiplication, twist beta.
inline HomModule regular_module(const HomAlgebra& a) { return HomModule(a.alpha(), a.mult()); }

/// The Hom-comodule (C, gamma) over itself via Delta.
inline HomComodule regular_comodule(const HomCoalgebra& c) { return HomComodule(c.gamma(), c.comult()); }

/// eta_M = rho_M : M -> G(F(M)).
inline Matrix unit_map(const DoiModule& m) { return m.comodule().coaction_matrix(); }

/// delta_N(n@c) = eps(c) nu(n) : G(N) -> N.
inline Matrix counit_map(const HomModule& n, const DoiDatum& dd) {
  return tensor(n.mu(), dd.coalgebra().coalgebra().counit_matrix());
}

/// G on morphisms: f -> f @ id_C.
inline Matrix induce_morphism(const Matrix& f, const DoiDatum& dd) {
  return tensor(f, Matrix::identity(dd.field(), dd.coalgebra().dim()));
}

// ---------------------------------------------------------------------------
// Morphism flags

/// f(m.a) = f(m).a as f o psi_M = psi_N o (f @ id_A).
inline AxiomReport check_a_linear(const Matrix& f, const HomModule& m, const HomModule& n) {
  detail::require(f.cols() == m.dim() && f.rows() == n.dim(), "morphism shape " + f.shape() + " does not match modules");
  AxiomReport report;
  check_matrix_identity(report, "f(m.a)=f(m).a", compose(f, m.action_matrix()),
                        compose(n.action_matrix(), tensor(f, Matrix::identity(f.field(), m.algebra_dim()))));
  return report;
}

/// rho_N o f = (f @ id_C) o rho_M.
inline AxiomReport check_c_colinear(const Matrix& f, const HomComodule& m, const HomComodule& n) {
  detail::require(f.cols() == m.dim() && f.rows() == n.dim(), "morphism shape " + f.shape() + " does not match comodules");
  AxiomReport report;
  check_matrix_identity(report, "rho(f(m))=f(m0)@m1", compose(n.coaction_matrix(), f),
                        compose(tensor(f, Matrix::identity(f.field(), m.coalgebra_dim())), m.coaction_matrix()));
  return report;
}

inline AxiomReport check_twist_commuting(const Matrix& f, const Matrix& mu_m, const Matrix& mu_n) {
  AxiomReport report;
  check_matrix_identity(report, "f.mu=nu.f", compose(f, mu_m), compose(mu_n, f));
  return report;
}

struct MorphismFlags {
  AxiomReport a_linear;
  AxiomReport c_colinear;
  AxiomReport twist_commuting;

  bool is_doi_morphism() const { return a_linear.passed() && c_colinear.passed() && twist_commuting.passed(); }

  AxiomReport combined() const {
    AxiomReport r = a_linear;
    r.merge(c_colinear);
    r.merge(twist_commuting);
    return r;
  }
};

inline MorphismFlags morphism_flags(const Matrix& f, const DoiModule& m, const DoiModule& n) {
  return {check_a_linear(f, m.module(), n.module()), check_c_colinear(f, m.comodule(), n.comodule()),
          check_twist_commuting(f, m.mu(), n.mu())};
}

/// eta_M is A-linear and C-colinear as a map M -> G(F(M)).
inline AxiomReport check_unit_map(const DoiModule& m, const DoiDatum& dd) {
  const DoiModule g = induce(m.module(), dd);
  return morphism_flags(unit_map(m), m, g).combined();
}

/// delta_N is A-linear as a map G(N) -> N.
inline AxiomReport check_counit_map(const HomModule& n, const DoiDatum& dd) {
  const DoiModule g = induce(n, dd);
  const Matrix delta = counit_map(n, dd);
  AxiomReport r = check_a_linear(delta, g.module(), n);
  r.merge(check_twist_commuting(delta, g.mu(), n.mu()));
  return r;
}

/// G(delta_N) o eta_G(N) = id and delta_F(M) o F(eta_M) = id.
inline AxiomReport check_triangle_identities(const DoiDatum& dd, const DoiModule& m, const HomModule& n) {
  AxiomReport report;
  const DoiModule gn = induce(n, dd);
  check_matrix_identity(report, "G(delta_N).eta_G(N)=id", compose(induce_morphism(counit_map(n, dd), dd), unit_map(gn)),
                        Matrix::identity(dd.field(), gn.dim()));
  check_matrix_identity(report, "delta_F(M).F(eta_M)=id", compose(counit_map(m.module(), dd), unit_map(m)),
                        Matrix::identity(dd.field(), m.dim()));
  return report;
}

/// M (+) N with block-diagonal structure maps.
inline DoiModule direct_sum(const DoiModule& m, const DoiModule& n) {
  const Field f = m.field();
  const std::size_t a = m.dim(), b = n.dim(), da = m.module().algebra_dim(), dc = m.comodule().coalgebra_dim();
  detail::require_same(n.module().algebra_dim(), da, "direct_sum: action");
  detail::require_same(n.comodule().coalgebra_dim(), dc, "direct_sum: coaction");
  Matrix mu(f, a + b, a + b);
  Tensor3 act(f, a + b, da, a + b);
  Tensor3 co(f, a + b, a + b, dc);
  const auto place = [&](const DoiModule& x, std::size_t off) {
    for (std::size_t i = 0; i < x.dim(); ++i) {
      for (std::size_t j = 0; j < x.dim(); ++j) {
        mu(off + i, off + j) = x.mu()(i, j);
        for (std::size_t k = 0; k < da; ++k) act(off + i, k, off + j) = x.action()(i, k, j);
        for (std::size_t k = 0; k < dc; ++k) co(off + i, off + j, k) = x.coaction()(i, j, k);
      }
    }
  };
  place(m, 0);
  place(n, a);
  return DoiModule(std::move(mu), std::move(act), std::move(co));
}

}  // namespace homhopf

#endif  // HOMHOPF_DOI_HPP
