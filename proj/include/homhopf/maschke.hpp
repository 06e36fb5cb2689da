#ifndef HOMHOPF_MASCHKE_HPP
#define HOMHOPF_MASCHKE_HPP

// Retractions of the adjunction unit built from an integral, the inverse
// extraction of an integral from a retraction, and Maschke-type splittings.

#include "homhopf/integrals.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace homhopf {

/// nu_M(m @ c) = mu(m0) . theta(m1 @ gamma^-1(c)) as a map M (x) C -> M.
inline Matrix retraction_map(const IntegralCandidate& t, const DoiModule& m, const DoiDatum& dd) {
  detail::require_integral_shape(t, dd);
  const Matrix split = tensor(m.comodule().coaction_matrix(), dd.coalgebra().coalgebra().gamma_inv());
  return compose(m.module().action_matrix(), compose(tensor(m.mu(), t.matrix()), split));
}

/// nu o eta = id, and nu: G(F(M)) -> M is A-linear, C-colinear and twist-commuting.
inline AxiomReport check_retraction(const Matrix& nu, const DoiModule& m, const DoiDatum& dd) {
  const DoiModule g = induce(m.module(), dd);
  if (nu.rows() != m.dim() || nu.cols() != g.dim()) {
    throw DimensionError("retraction must be " + std::to_string(m.dim()) + "x" + std::to_string(g.dim()) + ", got " +
                         nu.shape());
  }
  AxiomReport report;
  check_matrix_identity(report, "nu.eta=id", compose(nu, unit_map(m)), Matrix::identity(dd.field(), m.dim()));
  report.merge(morphism_flags(nu, g, m).combined());
  return report;
}

/// The retraction for M, verified before it is returned.
inline Matrix build_retraction(const IntegralCandidate& t, const DoiModule& m, const DoiDatum& dd) {
  Matrix nu = retraction_map(t, m, dd);
  if (auto r = check_retraction(nu, m, dd); !r.passed()) throw CheckFailure("build_retraction", r);
  return nu;
}

/// f o nu_M = nu_M' o (f @ id_C) for a Doi morphism f: M -> M'.
inline AxiomReport check_retraction_naturality(const Matrix& f, const Matrix& nu_m, const Matrix& nu_m2,
                                               const DoiDatum& dd) {
  AxiomReport report;
  check_matrix_identity(report, "f.nu_M=nu_M'.(f@id)", compose(f, nu_m), compose(nu_m2, induce_morphism(f, dd)));
  return report;
}

/// A (x) C with (a@c).b = ab0 @ c.b1 and rho(a@c) = beta^-1(a)@c1 @ gamma(c2).
inline DoiModule algebra_coalgebra_object(const DoiDatum& dd) {
  return induce(regular_module(dd.algebra().algebra()), dd);
}

/// theta(c @ d) = (id @ eps) nu((1 @ c) @ gamma(d)) for a retraction nu on A (x) C.
inline IntegralCandidate extract_integral(const Matrix& nu, const DoiDatum& dd) {
  const DoiModule ac = algebra_coalgebra_object(dd);
  if (auto r = check_retraction(nu, ac, dd); !r.passed()) throw CheckFailure("extract_integral: not a retraction", r);
  const Field f = dd.field();
  const std::size_t da = dd.algebra().dim(), dc = dd.coalgebra().dim();
  const Matrix collapse = tensor(Matrix::identity(f, da), dd.coalgebra().coalgebra().counit_matrix());
  const Matrix& g = dd.coalgebra().gamma();
  Tensor3 theta(f, dc, dc, da);
  for (std::size_t c = 0; c < dc; ++c) {
    for (std::size_t d = 0; d < dc; ++d) {
      const Vector in = kron(kron(dd.algebra().algebra().unit(), basis_vector(f, dc, c)), g.apply(basis_vector(f, dc, d)));
      const Vector out = collapse.apply(nu.apply(in));
      for (std::size_t a = 0; a < da; ++a) theta(c, d, a) = out[a];
    }
  }
  IntegralCandidate t{std::move(theta)};
  if (auto r = verify_integral(t, dd); !r.passed()) throw CheckFailure("extract_integral: result", r);
  return t;
}

struct Splitting {
  Matrix map;
  int pre_power = 0;   ///< j in mu_target^j o nu o (g@id) o rho o mu_source^k
  int post_power = 0;  ///< k
  AxiomReport verification;
};

namespace detail {

inline std::vector<std::pair<int, int>> twist_window(int max_power) {
  std::vector<std::pair<int, int>> out;
  for (int j = -max_power; j <= max_power; ++j) {
    for (int k = -max_power; k <= max_power; ++k) out.emplace_back(j, k);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::abs(a.first) + std::abs(a.second) < std::abs(b.first) + std::abs(b.second);
  });
  return out;
}

/// Searches mu_to^j o nu_to o (g @ id) o rho_from o mu_from^k for a Doi morphism from -> to
/// satisfying `identity`.
template <class Identity>
Splitting search_twisted_candidate(const Matrix& g, const DoiModule& from, const DoiModule& to, const Matrix& nu_to,
                                   const DoiDatum& dd, int max_power, const std::string& what,
                                   Identity&& identity) {
  const Matrix base = compose(nu_to, compose(induce_morphism(g, dd), from.comodule().coaction_matrix()));
  AxiomReport last;
  for (auto [j, k] : twist_window(max_power)) {
    Matrix candidate = compose(power(to.mu(), j), compose(base, power(from.mu(), k)));
    AxiomReport r = identity(candidate);
    r.merge(morphism_flags(candidate, from, to).combined());
    if (r.passed()) return {std::move(candidate), j, k, std::move(r)};
    if (j == 0 && k == 0) last = r;
  }
  throw CheckFailure(what + ": no twist adjustment in [-" + std::to_string(max_power) + "," +
                         std::to_string(max_power) + "] gives a verified map; untwisted candidate",
                     last);
}

}  // namespace detail

/// Given a Doi epimorphism f: M -> N and an A-linear section g (f g = id_N),
/// returns a section of f that is a Doi morphism.
inline Splitting split_epimorphism(const Matrix& f, const Matrix& g, const DoiModule& m, const DoiModule& n,
                                   const IntegralCandidate& t, const DoiDatum& dd, int max_power = 2) {
  AxiomReport pre = morphism_flags(f, m, n).combined();
  pre.merge(check_a_linear(g, n.module(), m.module()));
  check_matrix_identity(pre, "f.g=id", compose(f, g), Matrix::identity(dd.field(), n.dim()));
  if (!pre.passed()) throw CheckFailure("split_epimorphism: precondition", pre);
  const Matrix nu = build_retraction(t, m, dd);
  return detail::search_twisted_candidate(g, n, m, nu, dd, max_power, "split_epimorphism", [&](const Matrix& c) {
    AxiomReport r;
    check_matrix_identity(r, "f.g~=id", compose(f, c), Matrix::identity(dd.field(), n.dim()));
    return r;
  });
}

/// Given a Doi monomorphism f: M -> N and an A-linear retraction g (g f = id_M),
/// returns a retraction of f that is a Doi morphism.
inline Splitting split_monomorphism(const Matrix& f, const Matrix& g, const DoiModule& m, const DoiModule& n,
                                    const IntegralCandidate& t, const DoiDatum& dd, int max_power = 2) {
  AxiomReport pre = morphism_flags(f, m, n).combined();
  pre.merge(check_a_linear(g, n.module(), m.module()));
  check_matrix_identity(pre, "g.f=id", compose(g, f), Matrix::identity(dd.field(), m.dim()));
  if (!pre.passed()) throw CheckFailure("split_monomorphism: precondition", pre);
  const Matrix nu = build_retraction(t, m, dd);
  return detail::search_twisted_candidate(g, n, m, nu, dd, max_power, "split_monomorphism", [&](const Matrix& c) {
    AxiomReport r;
    check_matrix_identity(r, "g~.f=id", compose(c, f), Matrix::identity(dd.field(), m.dim()));
    return r;
  });
}

struct CheckedModule {
  std::string name;
  AxiomReport report;
  bool passed() const { return report.passed(); }
};

struct SeparabilityCertificate {
  IntegralCandidate theta;
  std::vector<CheckedModule> modules;

  bool passed() const {
    return std::all_of(modules.begin(), modules.end(), [](const auto& m) { return m.passed(); });
  }
};

using SeparabilityResult = std::variant<SeparabilityCertificate, Infeasible>;

/// Solves for an integral and checks the retraction it induces on every test module.
inline SeparabilityResult separability_report(const DoiDatum& dd,
                                              const std::vector<std::pair<std::string, DoiModule>>& test_modules) {
  IntegralResult solved = solve_normalized_integral(dd);
  if (auto* inf = std::get_if<Infeasible>(&solved)) return *inf;
  SeparabilityCertificate cert{std::get<IntegralCandidate>(std::move(solved)), {}};
  for (const auto& [name, m] : test_modules) {
    AxiomReport r = check_doi_module(m, dd);
    if (r.passed()) r = check_retraction(retraction_map(cert.theta, m, dd), m, dd);
    cert.modules.push_back({name, std::move(r)});
  }
  return cert;
}

}  // namespace homhopf

#endif  // HOMHOPF_MASCHKE_HPP
