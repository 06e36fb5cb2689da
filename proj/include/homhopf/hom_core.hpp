#ifndef HOMHOPF_HOM_CORE_HPP
#define HOMHOPF_HOM_CORE_HPP

// Monoidal Hom-algebras, Hom-coalgebras, Hom-Hopf algebras and their
// modules/comodules, stored by structure constants, with exhaustive axiom
// checkers over basis tuples.

#include "homhopf/matrix.hpp"
#include "homhopf/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homhopf {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DimensionError(what);
}

inline Matrix checked_inverse(const Matrix& m, const std::string& name) {
  if (m.rows() != m.cols()) throw DimensionError(name + " must be square, got " + m.shape());
  auto inv = try_inverse(m);
  if (!inv) throw std::domain_error(name + " is not invertible");
  return *std::move(inv);
}

}  // namespace detail

/// (A, alpha, m, 1_A): m(a (x) b) = ab with alpha(a)(bc) = (ab)alpha(c).
class HomAlgebra {
 public:
  HomAlgebra(Matrix alpha, Tensor3 mult, Vector unit)
      : alpha_(std::move(alpha)), mult_(std::move(mult)), unit_(std::move(unit)) {
    const std::size_t d = alpha_.rows();
    detail::require(mult_.d1() == d && mult_.d2() == d && mult_.d3() == d,
                    "multiplication tensor " + mult_.shape() + " does not match twist " + alpha_.shape());
    detail::require(unit_.size() == d, "unit has wrong length");
    alpha_inv_ = detail::checked_inverse(alpha_, "algebra twist");
    mult_matrix_ = product_matrix(mult_);
  }

  const Field& field() const noexcept { return alpha_.field(); }
  std::size_t dim() const noexcept { return alpha_.rows(); }
  const Matrix& alpha() const noexcept { return alpha_; }
  const Matrix& alpha_inv() const noexcept { return alpha_inv_; }
  const Tensor3& mult() const noexcept { return mult_; }
  const Matrix& mult_matrix() const noexcept { return mult_matrix_; }
  const Vector& unit() const noexcept { return unit_; }

  Vector basis(std::size_t i) const { return basis_vector(field(), dim(), i); }
  Vector multiply(const Vector& a, const Vector& b) const { return apply3(mult_, a, b); }

 private:
  Matrix alpha_;
  Matrix alpha_inv_;
  Tensor3 mult_;
  Matrix mult_matrix_;
  Vector unit_;
};

/// (C, gamma, Delta, epsilon) with comult[i][j][k] the coefficient of e_j (x) e_k in Delta(e_i).
class HomCoalgebra {
 public:
  HomCoalgebra(Matrix gamma, Tensor3 comult, Vector counit)
      : gamma_(std::move(gamma)), comult_(std::move(comult)), counit_(std::move(counit)) {
    const std::size_t d = gamma_.rows();
    detail::require(comult_.d1() == d && comult_.d2() == d && comult_.d3() == d,
                    "comultiplication tensor " + comult_.shape() + " does not match twist " + gamma_.shape());
    detail::require(counit_.size() == d, "counit has wrong length");
    gamma_inv_ = detail::checked_inverse(gamma_, "coalgebra twist");
    comult_matrix_ = coproduct_matrix(comult_);
    counit_matrix_ = Matrix::row(counit_);
  }

  const Field& field() const noexcept { return gamma_.field(); }
  std::size_t dim() const noexcept { return gamma_.rows(); }
  const Matrix& gamma() const noexcept { return gamma_; }
  const Matrix& gamma_inv() const noexcept { return gamma_inv_; }
  const Tensor3& comult() const noexcept { return comult_; }
  const Matrix& comult_matrix() const noexcept { return comult_matrix_; }
  const Vector& counit() const noexcept { return counit_; }
  const Matrix& counit_matrix() const noexcept { return counit_matrix_; }

  Vector basis(std::size_t i) const { return basis_vector(field(), dim(), i); }
  Vector comultiply(const Vector& c) const { return comult_matrix_.apply(c); }
  Scalar epsilon(const Vector& c) const { return counit_matrix_.apply(c).front(); }

 private:
  Matrix gamma_;
  Matrix gamma_inv_;
  Tensor3 comult_;
  Matrix comult_matrix_;
  Vector counit_;
  Matrix counit_matrix_;
};

/// (H, alpha, m, 1, Delta, epsilon, S) sharing one twist alpha for the algebra and coalgebra.
class HomHopfAlgebra {
 public:
  HomHopfAlgebra(Matrix alpha, Tensor3 mult, Vector unit, Tensor3 comult, Vector counit, Matrix antipode)
      : algebra_(alpha, std::move(mult), std::move(unit)),
        coalgebra_(std::move(alpha), std::move(comult), std::move(counit)),
        antipode_(std::move(antipode)) {
    detail::require(antipode_.rows() == dim() && antipode_.cols() == dim(), "antipode has wrong shape");
    antipode_inv_ = try_inverse(antipode_);
  }

  const HomAlgebra& algebra() const noexcept { return algebra_; }
  const HomCoalgebra& coalgebra() const noexcept { return coalgebra_; }

  const Field& field() const noexcept { return algebra_.field(); }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  const Matrix& alpha() const noexcept { return algebra_.alpha(); }
  const Matrix& alpha_inv() const noexcept { return algebra_.alpha_inv(); }
  const Tensor3& mult() const noexcept { return algebra_.mult(); }
  const Vector& unit() const noexcept { return algebra_.unit(); }
  const Tensor3& comult() const noexcept { return coalgebra_.comult(); }
  const Vector& counit() const noexcept { return coalgebra_.counit(); }
  const Matrix& antipode() const noexcept { return antipode_; }

  /// Recorded eagerly; the Yetter-Drinfeld constructions need a bijective antipode.
  bool antipode_invertible() const noexcept { return antipode_inv_.has_value(); }
  const Matrix& antipode_inv() const {
    if (!antipode_inv_) throw std::domain_error("antipode is not invertible");
    return *antipode_inv_;
  }

  Vector basis(std::size_t i) const { return algebra_.basis(i); }
  Vector multiply(const Vector& a, const Vector& b) const { return algebra_.multiply(a, b); }
  Vector comultiply(const Vector& c) const { return coalgebra_.comultiply(c); }
  Scalar epsilon(const Vector& c) const { return coalgebra_.epsilon(c); }

 private:
  HomAlgebra algebra_;
  HomCoalgebra coalgebra_;
  Matrix antipode_;
  std::optional<Matrix> antipode_inv_;
};

/// Right Hom-module (M, mu) over a Hom-algebra; action[m][a][m'] is the coefficient of e_m' in e_m . e_a.
class HomModule {
 public:
  HomModule(Matrix mu, Tensor3 action) : mu_(std::move(mu)), action_(std::move(action)) {
    detail::require(action_.d1() == dim() && action_.d3() == dim(),
                    "action tensor " + action_.shape() + " does not match twist " + mu_.shape());
    mu_inv_ = detail::checked_inverse(mu_, "module twist");
    action_matrix_ = product_matrix(action_);
  }

  const Field& field() const noexcept { return mu_.field(); }
  std::size_t dim() const noexcept { return mu_.rows(); }
  std::size_t algebra_dim() const noexcept { return action_.d2(); }
  const Matrix& mu() const noexcept { return mu_; }
  const Matrix& mu_inv() const noexcept { return mu_inv_; }
  const Tensor3& action() const noexcept { return action_; }
  /// M (x) A -> M as a matrix.
  const Matrix& action_matrix() const noexcept { return action_matrix_; }

  Vector act(const Vector& m, const Vector& a) const { return apply3(action_, m, a); }

 private:
  Matrix mu_;
  Matrix mu_inv_;
  Tensor3 action_;
  Matrix action_matrix_;
};

/// Right Hom-comodule (M, mu); coaction[m][m'][c] is the coefficient of e_m' (x) e_c in rho(e_m).
class HomComodule {
 public:
  HomComodule(Matrix mu, Tensor3 coaction) : mu_(std::move(mu)), coaction_(std::move(coaction)) {
    detail::require(coaction_.d1() == dim() && coaction_.d2() == dim(),
                    "coaction tensor " + coaction_.shape() + " does not match twist " + mu_.shape());
    mu_inv_ = detail::checked_inverse(mu_, "comodule twist");
    coaction_matrix_ = coproduct_matrix(coaction_);
  }

  const Field& field() const noexcept { return mu_.field(); }
  std::size_t dim() const noexcept { return mu_.rows(); }
  std::size_t coalgebra_dim() const noexcept { return coaction_.d3(); }
  const Matrix& mu() const noexcept { return mu_; }
  const Matrix& mu_inv() const noexcept { return mu_inv_; }
  const Tensor3& coaction() const noexcept { return coaction_; }
  /// M -> M (x) C as a matrix.
  const Matrix& coaction_matrix() const noexcept { return coaction_matrix_; }

  Vector coact(const Vector& m) const { return coaction_matrix_.apply(m); }

 private:
  Matrix mu_;
  Matrix mu_inv_;
  Tensor3 coaction_;
  Matrix coaction_matrix_;
};

// ---------------------------------------------------------------------------
// Axiom checkers

inline AxiomReport check_hom_algebra(const HomAlgebra& a) {
  AxiomReport report;
  const std::size_t d = a.dim();
  const auto e = [&](std::size_t i) { return a.basis(i); };
  const Matrix& al = a.alpha();
  check_identity(
      report, "alpha(ab)=alpha(a)alpha(b)", {d, d},
      [&](const auto& i) { return al.apply(a.multiply(e(i[0]), e(i[1]))); },
      [&](const auto& i) { return a.multiply(al.apply(e(i[0])), al.apply(e(i[1]))); });
  check_identity(
      report, "alpha(1)=1", {}, [&](const auto&) { return al.apply(a.unit()); },
      [&](const auto&) { return a.unit(); });
  check_identity(
      report, "alpha(a)(bc)=(ab)alpha(c)", {d, d, d},
      [&](const auto& i) { return a.multiply(al.apply(e(i[0])), a.multiply(e(i[1]), e(i[2]))); },
      [&](const auto& i) { return a.multiply(a.multiply(e(i[0]), e(i[1])), al.apply(e(i[2]))); });
  check_identity(
      report, "a1=alpha(a)", {d}, [&](const auto& i) { return a.multiply(e(i[0]), a.unit()); },
      [&](const auto& i) { return al.apply(e(i[0])); });
  check_identity(
      report, "1a=alpha(a)", {d}, [&](const auto& i) { return a.multiply(a.unit(), e(i[0])); },
      [&](const auto& i) { return al.apply(e(i[0])); });
  return report;
}

inline AxiomReport check_hom_coalgebra(const HomCoalgebra& c) {
  AxiomReport report;
  const std::size_t d = c.dim();
  const auto e = [&](std::size_t i) { return c.basis(i); };
  const Matrix& g = c.gamma();
  const Matrix& gi = c.gamma_inv();
  const Matrix& dm = c.comult_matrix();
  const Matrix& eps = c.counit_matrix();
  const Matrix id = Matrix::identity(c.field(), d);
  check_identity(
      report, "Delta(gamma(c))=gamma(c1)@gamma(c2)", {d}, [&](const auto& i) { return c.comultiply(g.apply(e(i[0]))); },
      [&](const auto& i) { return apply_kron({g, g}, c.comultiply(e(i[0]))); });
  check_identity(
      report, "eps(gamma(c))=eps(c)", {d}, [&](const auto& i) { return eps.apply(g.apply(e(i[0]))); },
      [&](const auto& i) { return eps.apply(e(i[0])); });
  check_identity(
      report, "gamma^-1(c1)@c21@c22=c11@c12@gamma^-1(c2)", {d},
      [&](const auto& i) { return apply_kron({gi, dm}, c.comultiply(e(i[0]))); },
      [&](const auto& i) { return apply_kron({dm, gi}, c.comultiply(e(i[0]))); });
  check_identity(
      report, "eps(c1)c2=gamma^-1(c)", {d}, [&](const auto& i) { return apply_kron({eps, id}, c.comultiply(e(i[0]))); },
      [&](const auto& i) { return gi.apply(e(i[0])); });
  check_identity(
      report, "c1eps(c2)=gamma^-1(c)", {d}, [&](const auto& i) { return apply_kron({id, eps}, c.comultiply(e(i[0]))); },
      [&](const auto& i) { return gi.apply(e(i[0])); });
  return report;
}

/// The antipode identities alone: S*I = I*S = eta eps and S alpha = alpha S.
inline AxiomReport check_antipode(const HomHopfAlgebra& h) {
  AxiomReport report;
  const std::size_t d = h.dim();
  const auto e = [&](std::size_t i) { return h.basis(i); };
  const Matrix id = Matrix::identity(h.field(), d);
  const Matrix& s = h.antipode();
  const Matrix& m = h.algebra().mult_matrix();
  const auto eta_eps = [&](const auto& i) { return scale(h.epsilon(e(i[0])), h.unit()); };
  check_identity(
      report, "S*I=eta.eps", {d}, [&](const auto& i) { return m.apply(apply_kron({s, id}, h.comultiply(e(i[0])))); },
      eta_eps);
  check_identity(
      report, "I*S=eta.eps", {d}, [&](const auto& i) { return m.apply(apply_kron({id, s}, h.comultiply(e(i[0])))); },
      eta_eps);
  check_identity(
      report, "S.alpha=alpha.S", {d}, [&](const auto& i) { return s.apply(h.alpha().apply(e(i[0]))); },
      [&](const auto& i) { return h.alpha().apply(s.apply(e(i[0]))); });
  return report;
}

/// Hom-algebra, Hom-coalgebra, bialgebra compatibility and antipode axioms.
inline AxiomReport check_hom_hopf(const HomHopfAlgebra& h) {
  AxiomReport report = check_hom_algebra(h.algebra());
  report.merge(check_hom_coalgebra(h.coalgebra()));
  const std::size_t d = h.dim();
  const auto e = [&](std::size_t i) { return h.basis(i); };
  const Matrix& m = h.algebra().mult_matrix();
  const Field f = h.field();
  const auto one = [&](const auto&) { return Vector{Scalar::one(f)}; };
  check_identity(
      report, "Delta(ab)=a1b1@a2b2", {d, d}, [&](const auto& i) { return h.comultiply(h.multiply(e(i[0]), e(i[1]))); },
      [&](const auto& i) {
        const Vector t = kron(h.comultiply(e(i[0])), h.comultiply(e(i[1])));
        return apply_kron({m, m}, permute_factors(t, {d, d, d, d}, {0, 2, 1, 3}));
      });
  check_identity(
      report, "Delta(1)=1@1", {}, [&](const auto&) { return h.comultiply(h.unit()); },
      [&](const auto&) { return kron(h.unit(), h.unit()); });
  check_identity(
      report, "eps(ab)=eps(a)eps(b)", {d, d},
      [&](const auto& i) { return Vector{h.epsilon(h.multiply(e(i[0]), e(i[1])))}; },
      [&](const auto& i) { return Vector{h.epsilon(e(i[0])) * h.epsilon(e(i[1]))}; });
  check_identity(
      report, "eps(1)=1", {}, [&](const auto&) { return Vector{h.epsilon(h.unit())}; }, one);
  report.merge(check_antipode(h));
  return report;
}

inline AxiomReport check_hom_module(const HomModule& mod, const HomAlgebra& a) {
  if (mod.algebra_dim() != a.dim() || mod.field() != a.field()) {
    throw DimensionError("module action " + mod.action().shape() + " does not match algebra of dimension " +
                         std::to_string(a.dim()));
  }
  AxiomReport report;
  const std::size_t dm = mod.dim(), da = a.dim();
  const auto em = [&](std::size_t i) { return basis_vector(mod.field(), dm, i); };
  const auto ea = [&](std::size_t i) { return a.basis(i); };
  check_identity(
      report, "(m.a).alpha(b)=mu(m).(ab)", {dm, da, da},
      [&](const auto& i) { return mod.act(mod.act(em(i[0]), ea(i[1])), a.alpha().apply(ea(i[2]))); },
      [&](const auto& i) { return mod.act(mod.mu().apply(em(i[0])), a.multiply(ea(i[1]), ea(i[2]))); });
  check_identity(
      report, "m.1=mu(m)", {dm}, [&](const auto& i) { return mod.act(em(i[0]), a.unit()); },
      [&](const auto& i) { return mod.mu().apply(em(i[0])); });
  check_identity(
      report, "mu(m.a)=mu(m).alpha(a)", {dm, da},
      [&](const auto& i) { return mod.mu().apply(mod.act(em(i[0]), ea(i[1]))); },
      [&](const auto& i) { return mod.act(mod.mu().apply(em(i[0])), a.alpha().apply(ea(i[1]))); });
  return report;
}

inline AxiomReport check_hom_comodule(const HomComodule& com, const HomCoalgebra& c) {
  if (com.coalgebra_dim() != c.dim() || com.field() != c.field()) {
    throw DimensionError("comodule coaction " + com.coaction().shape() + " does not match coalgebra of dimension " +
                         std::to_string(c.dim()));
  }
  AxiomReport report;
  const std::size_t dm = com.dim();
  const auto em = [&](std::size_t i) { return basis_vector(com.field(), dm, i); };
  const Matrix& rho = com.coaction_matrix();
  const Matrix id_m = Matrix::identity(com.field(), dm);
  check_identity(
      report, "m00@m01@gamma^-1(m1)=mu^-1(m0)@Delta(m1)", {dm},
      [&](const auto& i) { return apply_kron({rho, c.gamma_inv()}, com.coact(em(i[0]))); },
      [&](const auto& i) { return apply_kron({com.mu_inv(), c.comult_matrix()}, com.coact(em(i[0]))); });
  check_identity(
      report, "m0eps(m1)=mu^-1(m)", {dm},
      [&](const auto& i) { return apply_kron({id_m, c.counit_matrix()}, com.coact(em(i[0]))); },
      [&](const auto& i) { return com.mu_inv().apply(em(i[0])); });
  check_identity(
      report, "rho(mu(m))=mu(m0)@gamma(m1)", {dm}, [&](const auto& i) { return com.coact(com.mu().apply(em(i[0]))); },
      [&](const auto& i) { return apply_kron({com.mu(), c.gamma()}, com.coact(em(i[0]))); });
  return report;
}

// ---------------------------------------------------------------------------
// Constructions

/// The one-dimensional Hom-Hopf algebra k with every structure map equal to 1.
inline HomHopfAlgebra ground_field_hopf(Field f) {
  const Scalar one = Scalar::one(f);
  return HomHopfAlgebra(Matrix::identity(f, 1), Tensor3(f, 1, 1, 1, {one}), Vector{one}, Tensor3(f, 1, 1, 1, {one}),
                        Vector{one}, Matrix::identity(f, 1));
}

/// Checks that `a` is a Hopf algebra automorphism of a classical (alpha = id) Hopf algebra.
inline AxiomReport check_hopf_automorphism(const HomHopfAlgebra& h, const Matrix& a) {
  if (a.rows() != h.dim() || a.cols() != h.dim()) throw DimensionError("automorphism has wrong shape " + a.shape());
  AxiomReport report;
  const std::size_t d = h.dim();
  const auto e = [&](std::size_t i) { return h.basis(i); };
  if (!try_inverse(a)) report.add({"a invertible", {}, {}});
  check_identity(
      report, "a(xy)=a(x)a(y)", {d, d}, [&](const auto& i) { return a.apply(h.multiply(e(i[0]), e(i[1]))); },
      [&](const auto& i) { return h.multiply(a.apply(e(i[0])), a.apply(e(i[1]))); });
  check_identity(
      report, "Delta(a(x))=(a@a)Delta(x)", {d}, [&](const auto& i) { return h.comultiply(a.apply(e(i[0]))); },
      [&](const auto& i) { return apply_kron({a, a}, h.comultiply(e(i[0]))); });
  check_identity(
      report, "a(1)=1", {}, [&](const auto&) { return a.apply(h.unit()); }, [&](const auto&) { return h.unit(); });
  check_identity(
      report, "eps(a(x))=eps(x)", {d}, [&](const auto& i) { return Vector{h.epsilon(a.apply(e(i[0])))}; },
      [&](const auto& i) { return Vector{h.epsilon(e(i[0]))}; });
  check_identity(
      report, "a(S(x))=S(a(x))", {d}, [&](const auto& i) { return a.apply(h.antipode().apply(e(i[0]))); },
      [&](const auto& i) { return h.antipode().apply(a.apply(e(i[0]))); });
  return report;
}

/// Twists a classical Hopf algebra by an automorphism a into the monoidal
/// Hom-Hopf algebra (H, a o m, 1, Delta o a^{-1}, eps, S, a).
inline HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const Matrix& a) {
  if (!classical.alpha().is_identity()) {
    throw std::invalid_argument("yau_twist expects a structure with identity twist");
  }
  if (auto base = check_hom_hopf(classical); !base.passed()) {
    throw CheckFailure("yau_twist: input is not a Hopf algebra", base);
  }
  if (auto aut = check_hopf_automorphism(classical, a); !aut.passed()) {
    throw CheckFailure("yau_twist: map is not a Hopf algebra automorphism", aut);
  }
  const std::size_t d = classical.dim();
  const Field f = classical.field();
  const Matrix a_inv = inverse(a);
  Tensor3 mult(f, d, d, d);
  Tensor3 comult(f, d, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vector prod = a.apply(classical.multiply(classical.basis(i), classical.basis(j)));
      for (std::size_t k = 0; k < d; ++k) mult(i, j, k) = prod[k];
    }
    const Vector co = classical.comultiply(a_inv.apply(classical.basis(i)));
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) comult(i, j, k) = co[j * d + k];
    }
  }
  HomHopfAlgebra out(a, std::move(mult), classical.unit(), std::move(comult), classical.counit(),
                     classical.antipode());
  if (auto rep = check_hom_hopf(out); !rep.passed()) throw CheckFailure("yau_twist: output failed", rep);
  return out;
}

enum class OppositeFactor { First, Second };

inline std::string to_string(OppositeFactor f) { return f == OppositeFactor::First ? "Hop(x)H" : "H(x)Hop"; }

struct OppositeTensor {
  HomHopfAlgebra hopf;
  OppositeFactor opposite;
  std::string antipode_convention;  ///< which candidate antipode passed, e.g. "S^-1(x)S"
};

/// H^op (x) H (or H (x) H^op) on the flattened space H (x) H with
/// componentwise coalgebra and twist alpha (x) alpha. Candidate antipodes
/// built from S and S^{-1} are tried in order; the first one satisfying the
/// antipode identities is kept and the full structure is re-verified.
inline OppositeTensor opposite_tensor(const HomHopfAlgebra& h, OppositeFactor opposite = OppositeFactor::First) {
  if (!h.antipode_invertible()) throw std::domain_error("opposite_tensor requires a bijective antipode");
  const std::size_t d = h.dim();
  const std::size_t n = d * d;
  const Field f = h.field();
  Tensor3 mult(f, n, n, n);
  Tensor3 comult(f, n, n, n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
          const bool first_op = opposite == OppositeFactor::First;
          const Vector left = first_op ? h.multiply(h.basis(k), h.basis(i)) : h.multiply(h.basis(i), h.basis(k));
          const Vector right = first_op ? h.multiply(h.basis(j), h.basis(l)) : h.multiply(h.basis(l), h.basis(j));
          const Vector prod = kron(left, right);
          for (std::size_t t = 0; t < n; ++t) mult(i * d + j, k * d + l, t) = prod[t];
        }
      }
      // Delta(x (x) y) = (x1 (x) y1) (x) (x2 (x) y2)
      const Vector co = permute_factors(kron(h.comultiply(h.basis(i)), h.comultiply(h.basis(j))), {d, d, d, d},
                                        {0, 2, 1, 3});
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) comult(i * d + j, p, q) = co[p * n + q];
      }
    }
  }
  const Vector unit = kron(h.unit(), h.unit());
  const Vector counit = kron(h.counit(), h.counit());
  const Matrix alpha = tensor(h.alpha(), h.alpha());
  const Matrix& s = h.antipode();
  const Matrix& si = h.antipode_inv();
  struct Candidate {
    std::string name;
    Matrix map;
  };
  std::vector<Candidate> candidates;
  if (opposite == OppositeFactor::First) {
    candidates = {{"S^-1(x)S", tensor(si, s)}, {"S(x)S^-1", tensor(s, si)}, {"S(x)S", tensor(s, s)},
                  {"S^-1(x)S^-1", tensor(si, si)}};
  } else {
    candidates = {{"S(x)S^-1", tensor(s, si)}, {"S^-1(x)S", tensor(si, s)}, {"S(x)S", tensor(s, s)},
                  {"S^-1(x)S^-1", tensor(si, si)}};
  }
  AxiomReport last;
  for (auto& c : candidates) {
    HomHopfAlgebra candidate(alpha, mult, unit, comult, counit, c.map);
    last = check_antipode(candidate);
    if (!last.passed()) continue;
    if (auto full = check_hom_hopf(candidate); !full.passed()) {
      throw CheckFailure("opposite_tensor: construction failed axiom check", full);
    }
    return {std::move(candidate), opposite, c.name};
  }
  throw CheckFailure("opposite_tensor: construction failed axiom check", last);
}

}  // namespace homhopf

#endif  // HOMHOPF_HOM_CORE_HPP
