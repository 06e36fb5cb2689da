#ifndef HOMHOPF_INTEGRALS_HPP
#define HOMHOPF_INTEGRALS_HPP

// Normalized (A, beta)-integrals theta: C (x) C -> A of a Doi datum. The
// defining conditions are linear in theta, so existence is an exact linear
// feasibility problem. Rows are assembled with explicit index loops; the
// verifier evaluates the same conditions through composed linear maps.

#include "homhopf/doi.hpp"
#include "homhopf/linsolve.hpp"

#include <string>
#include <variant>
#include <vector>

namespace homhopf {

namespace integral_family {
inline constexpr const char* twist = "theta(gamma(c)@gamma(d))=beta(theta(c@d))";
inline constexpr const char* colinear = "theta(gamma^-1(d)@c1)@gamma(c2)=beta(theta(d2@gamma^-1(c))0)@d1.theta(d2@gamma^-1(c))1";
inline constexpr const char* normalized = "theta(c1@c2)=eps(c)1";
inline constexpr const char* a_linear =
    "beta^2(a00)theta(gamma^-1(d).a01@gamma^-1(c).alpha^-1(a1))=theta(d@c)a";
}  // namespace integral_family

/// theta[c][d][a]: coefficient of e_a in theta(e_c @ e_d).
struct IntegralCandidate {
  Tensor3 theta;

  std::size_t coalgebra_dim() const noexcept { return theta.d1(); }
  std::size_t algebra_dim() const noexcept { return theta.d3(); }
  /// theta as a (dim A) x (dim C)^2 matrix.
  Matrix matrix() const { return product_matrix(theta); }
  /// Unknown vector in the solver's order: index (c * dim C + d) * dim A + a.
  const Vector& unknowns() const noexcept { return theta.entries(); }

  static IntegralCandidate from_unknowns(Field f, std::size_t dim_c, std::size_t dim_a, Vector x) {
    return {Tensor3(f, dim_c, dim_c, dim_a, std::move(x))};
  }

  friend bool operator==(const IntegralCandidate&, const IntegralCandidate&) = default;
};

/// The equation family and basis multi-index that produced one row.
struct RowOrigin {
  std::string family;
  std::vector<std::size_t> indices;
};

/// Homogeneous rows: twist (c,d,a), colinear (d,c,a,e), A-linear (a,d,c,z).
/// Affine rows: normalized (c,a).
struct IntegralSystem {
  Matrix homogeneous;
  std::vector<RowOrigin> homogeneous_origin;
  Matrix affine_lhs;
  Vector affine_rhs;
  std::vector<RowOrigin> affine_origin;
  std::size_t dim_a = 0;
  std::size_t dim_c = 0;

  std::size_t unknown_count() const noexcept { return dim_a * dim_c * dim_c; }
  std::size_t row_count() const noexcept { return homogeneous.rows() + affine_lhs.rows(); }

  /// [homogeneous; affine_lhs] with right-hand side [0; affine_rhs].
  Matrix combined_lhs() const {
    Matrix out(homogeneous.field(), row_count(), unknown_count());
    for (std::size_t i = 0; i < homogeneous.rows(); ++i) {
      for (std::size_t j = 0; j < unknown_count(); ++j) out(i, j) = homogeneous(i, j);
    }
    for (std::size_t i = 0; i < affine_lhs.rows(); ++i) {
      for (std::size_t j = 0; j < unknown_count(); ++j) out(homogeneous.rows() + i, j) = affine_lhs(i, j);
    }
    return out;
  }

  Vector combined_rhs() const {
    Vector out = zero_vector(homogeneous.field(), homogeneous.rows());
    out.insert(out.end(), affine_rhs.begin(), affine_rhs.end());
    return out;
  }

  const RowOrigin& origin(std::size_t combined_row) const {
    return combined_row < homogeneous_origin.size() ? homogeneous_origin[combined_row]
                                                    : affine_origin.at(combined_row - homogeneous_origin.size());
  }

  /// Row residuals A theta - b in combined row order.
  Vector residuals(const IntegralCandidate& t) const {
    Vector out = homogeneous.apply(t.unknowns());
    const Vector aff = affine_lhs.apply(t.unknowns()) - affine_rhs;
    out.insert(out.end(), aff.begin(), aff.end());
    return out;
  }
};

inline IntegralSystem assemble_integral_system(const DoiDatum& dd) {
  const Field f = dd.field();
  const auto& alg = dd.algebra();
  const auto& co = dd.coalgebra();
  const std::size_t da = alg.dim(), dc = co.dim(), dh = dd.hopf().dim();
  const std::size_t n = da * dc * dc;
  const auto var = [&](std::size_t c, std::size_t d, std::size_t a) { return (c * dc + d) * da + a; };

  const Matrix& g = co.gamma();
  const Matrix& gi = co.coalgebra().gamma_inv();
  const Matrix& b = alg.beta();
  const Matrix b2 = compose(b, b);
  const Matrix& hi = dd.hopf().alpha_inv();
  const Tensor3& delta = co.coalgebra().comult();
  const Tensor3& rho = alg.coaction();
  const Tensor3& phi = co.action();
  const Tensor3& m = alg.algebra().mult();

  IntegralSystem sys;
  sys.dim_a = da;
  sys.dim_c = dc;
  const std::size_t twist_rows = dc * dc * da;
  const std::size_t colinear_rows = dc * dc * da * dc;
  const std::size_t linear_rows = da * dc * dc * da;
  sys.homogeneous = Matrix(f, twist_rows + colinear_rows + linear_rows, n);
  Matrix& h = sys.homogeneous;

  // twist: sum gamma[p][x] gamma[q][y] theta[p][q][a] - sum beta[a][r] theta[x][y][r]
  std::size_t row = 0;
  for (std::size_t x = 0; x < dc; ++x) {
    for (std::size_t y = 0; y < dc; ++y) {
      for (std::size_t a = 0; a < da; ++a, ++row) {
        sys.homogeneous_origin.push_back({"twist", {x, y, a}});
        for (std::size_t p = 0; p < dc; ++p) {
          for (std::size_t q = 0; q < dc; ++q) {
            if (!g(p, x).is_zero() && !g(q, y).is_zero()) h(row, var(p, q, a)) += g(p, x) * g(q, y);
          }
        }
        for (std::size_t r = 0; r < da; ++r) {
          if (!b(a, r).is_zero()) h(row, var(x, y, r)) -= b(a, r);
        }
      }
    }
  }

  // colinear, output coordinate e_a @ e_e of A @ C
  for (std::size_t d = 0; d < dc; ++d) {
    for (std::size_t c = 0; c < dc; ++c) {
      for (std::size_t a = 0; a < da; ++a) {
        for (std::size_t e = 0; e < dc; ++e, ++row) {
          sys.homogeneous_origin.push_back({"colinear", {d, c, a, e}});
          for (std::size_t p = 0; p < dc; ++p) {
            if (gi(p, d).is_zero()) continue;
            for (std::size_t i = 0; i < dc; ++i) {
              for (std::size_t j = 0; j < dc; ++j) {
                if (delta(c, i, j).is_zero() || g(e, j).is_zero()) continue;
                h(row, var(p, i, a)) += gi(p, d) * delta(c, i, j) * g(e, j);
              }
            }
          }
          for (std::size_t i = 0; i < dc; ++i) {
            for (std::size_t j = 0; j < dc; ++j) {
              if (delta(d, i, j).is_zero()) continue;
              for (std::size_t q = 0; q < dc; ++q) {
                if (gi(q, c).is_zero()) continue;
                const Scalar outer = delta(d, i, j) * gi(q, c);
                for (std::size_t r = 0; r < da; ++r) {
                  Scalar acc(f);
                  for (std::size_t s = 0; s < da; ++s) {
                    if (b(a, s).is_zero()) continue;
                    for (std::size_t k = 0; k < dh; ++k) {
                      if (rho(r, s, k).is_zero() || phi(i, k, e).is_zero()) continue;
                      acc += rho(r, s, k) * b(a, s) * phi(i, k, e);
                    }
                  }
                  if (!acc.is_zero()) h(row, var(j, q, r)) -= outer * acc;
                }
              }
            }
          }
        }
      }
    }
  }

  // A-linear. x_d[v][x] = coefficient of e_x in gamma^-1(d).v;
  // y_c[k][y] = coefficient of e_y in gamma^-1(c).alpha^-1(k).
  Tensor3 xt(f, dc, dh, dc), yt(f, dc, dh, dc);
  for (std::size_t d = 0; d < dc; ++d) {
    for (std::size_t v = 0; v < dh; ++v) {
      for (std::size_t x = 0; x < dc; ++x) {
        for (std::size_t p = 0; p < dc; ++p) {
          if (!gi(p, d).is_zero()) xt(d, v, x).add_product(gi(p, d), phi(p, v, x));
          for (std::size_t w = 0; w < dh; ++w) {
            if (gi(p, d).is_zero() || hi(w, v).is_zero()) continue;
            yt(d, v, x) += gi(p, d) * hi(w, v) * phi(p, w, x);
          }
        }
      }
    }
  }
  // b2m[u][r][z] = coefficient of e_z in beta^2(e_u) e_r
  Tensor3 b2m(f, da, da, da);
  for (std::size_t u = 0; u < da; ++u) {
    for (std::size_t t = 0; t < da; ++t) {
      if (b2(t, u).is_zero()) continue;
      for (std::size_t r = 0; r < da; ++r) {
        for (std::size_t z = 0; z < da; ++z) b2m(u, r, z).add_product(b2(t, u), m(t, r, z));
      }
    }
  }
  for (std::size_t a = 0; a < da; ++a) {
    // k_a[u][v][k]: coefficient of e_u @ e_v @ e_k in a00 @ a01 @ a1
    Tensor3 ka(f, da, dh, dh);
    for (std::size_t s = 0; s < da; ++s) {
      for (std::size_t k = 0; k < dh; ++k) {
        if (rho(a, s, k).is_zero()) continue;
        for (std::size_t u = 0; u < da; ++u) {
          for (std::size_t v = 0; v < dh; ++v) {
            if (!rho(s, u, v).is_zero()) ka(u, v, k) += rho(a, s, k) * rho(s, u, v);
          }
        }
      }
    }
    for (std::size_t d = 0; d < dc; ++d) {
      for (std::size_t c = 0; c < dc; ++c) {
        // coeff[u][x][y] = sum_{v,k} k_a[u][v][k] x_d[v][x] y_c[k][y]
        Tensor3 coeff(f, da, dc, dc);
        for (std::size_t u = 0; u < da; ++u) {
          for (std::size_t v = 0; v < dh; ++v) {
            for (std::size_t k = 0; k < dh; ++k) {
              const Scalar& kk = ka(u, v, k);
              if (kk.is_zero()) continue;
              for (std::size_t x = 0; x < dc; ++x) {
                if (xt(d, v, x).is_zero()) continue;
                const Scalar kx = kk * xt(d, v, x);
                for (std::size_t y = 0; y < dc; ++y) {
                  if (!yt(c, k, y).is_zero()) coeff(u, x, y).add_product(kx, yt(c, k, y));
                }
              }
            }
          }
        }
        for (std::size_t z = 0; z < da; ++z, ++row) {
          sys.homogeneous_origin.push_back({"A-linear", {a, d, c, z}});
          for (std::size_t u = 0; u < da; ++u) {
            for (std::size_t x = 0; x < dc; ++x) {
              for (std::size_t y = 0; y < dc; ++y) {
                if (coeff(u, x, y).is_zero()) continue;
                for (std::size_t r = 0; r < da; ++r) {
                  if (!b2m(u, r, z).is_zero()) h(row, var(x, y, r)).add_product(coeff(u, x, y), b2m(u, r, z));
                }
              }
            }
          }
          for (std::size_t r = 0; r < da; ++r) {
            if (!m(r, a, z).is_zero()) h(row, var(d, c, r)) -= m(r, a, z);
          }
        }
      }
    }
  }

  // normalized: sum Delta[c][i][j] theta[i][j][a] = eps(c) 1_A[a]
  sys.affine_lhs = Matrix(f, dc * da, n);
  sys.affine_rhs = zero_vector(f, dc * da);
  const Vector& eps = co.coalgebra().counit();
  const Vector& unit = alg.algebra().unit();
  for (std::size_t c = 0; c < dc; ++c) {
    for (std::size_t a = 0; a < da; ++a) {
      const std::size_t r = c * da + a;
      sys.affine_origin.push_back({"normalized", {c, a}});
      for (std::size_t i = 0; i < dc; ++i) {
        for (std::size_t j = 0; j < dc; ++j) {
          if (!delta(c, i, j).is_zero()) sys.affine_lhs(r, var(i, j, a)) += delta(c, i, j);
        }
      }
      sys.affine_rhs[r] = eps[c] * unit[a];
    }
  }
  return sys;
}

namespace detail {

struct IntegralEvaluator {
  const DoiDatum& dd;
  Matrix theta;  // dim A x (dim C)^2

  std::size_t da() const { return dd.algebra().dim(); }
  std::size_t dc() const { return dd.coalgebra().dim(); }
  std::size_t dh() const { return dd.hopf().dim(); }
  Vector ec(std::size_t i) const { return basis_vector(dd.field(), dc(), i); }
  Vector ea(std::size_t i) const { return basis_vector(dd.field(), da(), i); }

  Vector twist_lhs(std::size_t x, std::size_t y) const {
    const Matrix& g = dd.coalgebra().gamma();
    return theta.apply(kron(g.apply(ec(x)), g.apply(ec(y))));
  }
  Vector twist_rhs(std::size_t x, std::size_t y) const {
    return dd.algebra().beta().apply(theta.apply(kron(ec(x), ec(y))));
  }

  Vector colinear_lhs(std::size_t d, std::size_t c) const {
    const auto& co = dd.coalgebra().coalgebra();
    return apply_kron({theta, co.gamma()}, kron(co.gamma_inv().apply(ec(d)), co.comultiply(ec(c))));
  }
  Vector colinear_rhs(std::size_t d, std::size_t c) const {
    const auto& co = dd.coalgebra().coalgebra();
    const Matrix id_c = Matrix::identity(dd.field(), dc());
    const Matrix id_h = Matrix::identity(dd.field(), dh());
    // d1 @ theta(d2 @ gamma^-1 c) in C @ A
    const Vector t = apply_kron({id_c, theta}, kron(co.comultiply(ec(d)), co.gamma_inv().apply(ec(c))));
    const Vector u = apply_kron({id_c, dd.algebra().comodule().coaction_matrix()}, t);
    const Vector v = permute_factors(u, {dc(), da(), dh()}, {1, 0, 2});
    return apply_kron({dd.algebra().beta(), dd.coalgebra().module().action_matrix()}, v);
  }

  Vector normalized_lhs(std::size_t c) const { return theta.apply(dd.coalgebra().coalgebra().comultiply(ec(c))); }
  Vector normalized_rhs(std::size_t c) const {
    return scale(dd.coalgebra().coalgebra().epsilon(ec(c)), dd.algebra().algebra().unit());
  }

  Vector a_linear_lhs(std::size_t a, std::size_t d, std::size_t c) const {
    const auto& alg = dd.algebra();
    const auto& co = dd.coalgebra();
    const Matrix& rho = alg.comodule().coaction_matrix();
    const Matrix id_h = Matrix::identity(dd.field(), dh());
    const Matrix id_c = Matrix::identity(dd.field(), dc());
    const Matrix id_a = Matrix::identity(dd.field(), da());
    const Matrix b2 = compose(alg.beta(), alg.beta());
    const Matrix& phi = co.module().action_matrix();
    const Matrix phi_twisted = compose(phi, tensor(id_c, dd.hopf().alpha_inv()));
    // a00 @ a01 @ a1
    const Vector a3 = apply_kron({rho, id_h}, rho.apply(ea(a)));
    const Vector w = kron(a3, kron(co.coalgebra().gamma_inv().apply(ec(d)), co.coalgebra().gamma_inv().apply(ec(c))));
    // (a00, a01, a1, d, c) -> (a00, d, a01, c, a1)
    const Vector p = permute_factors(w, {da(), dh(), dh(), dc(), dc()}, {0, 3, 1, 4, 2});
    const Vector q = apply_kron({b2, phi, phi_twisted}, p);
    return alg.algebra().mult_matrix().apply(apply_kron({id_a, theta}, q));
  }
  Vector a_linear_rhs(std::size_t a, std::size_t d, std::size_t c) const {
    return dd.algebra().algebra().multiply(theta.apply(kron(ec(d), ec(c))), ea(a));
  }
};

inline void require_integral_shape(const IntegralCandidate& t, const DoiDatum& dd) {
  const auto& th = t.theta;
  if (th.d1() != dd.coalgebra().dim() || th.d2() != dd.coalgebra().dim() || th.d3() != dd.algebra().dim()) {
    throw DimensionError("integral candidate " + th.shape() + " does not match datum (dim C = " +
                         std::to_string(dd.coalgebra().dim()) + ", dim A = " + std::to_string(dd.algebra().dim()) + ")");
  }
}

}  // namespace detail

/// Direct evaluation of all four condition families on every basis instance.
inline AxiomReport verify_integral(const IntegralCandidate& t, const DoiDatum& dd) {
  detail::require_integral_shape(t, dd);
  const detail::IntegralEvaluator ev{dd, t.matrix()};
  const std::size_t da = ev.da(), dc = ev.dc();
  AxiomReport report;
  check_identity(
      report, integral_family::twist, {dc, dc}, [&](const auto& i) { return ev.twist_lhs(i[0], i[1]); },
      [&](const auto& i) { return ev.twist_rhs(i[0], i[1]); });
  check_identity(
      report, integral_family::colinear, {dc, dc}, [&](const auto& i) { return ev.colinear_lhs(i[0], i[1]); },
      [&](const auto& i) { return ev.colinear_rhs(i[0], i[1]); });
  check_identity(
      report, integral_family::a_linear, {da, dc, dc},
      [&](const auto& i) { return ev.a_linear_lhs(i[0], i[1], i[2]); },
      [&](const auto& i) { return ev.a_linear_rhs(i[0], i[1], i[2]); });
  check_identity(
      report, integral_family::normalized, {dc}, [&](const auto& i) { return ev.normalized_lhs(i[0]); },
      [&](const auto& i) { return ev.normalized_rhs(i[0]); });
  return report;
}

/// Residuals of the direct evaluation flattened in the assembled system's row
/// order, so the two routes can be compared entry for entry.
inline Vector integral_residuals(const IntegralCandidate& t, const DoiDatum& dd) {
  detail::require_integral_shape(t, dd);
  const detail::IntegralEvaluator ev{dd, t.matrix()};
  const std::size_t da = ev.da(), dc = ev.dc();
  Vector out;
  const auto append = [&](const Vector& v) { out.insert(out.end(), v.begin(), v.end()); };
  for (std::size_t x = 0; x < dc; ++x) {
    for (std::size_t y = 0; y < dc; ++y) append(ev.twist_lhs(x, y) - ev.twist_rhs(x, y));
  }
  for (std::size_t d = 0; d < dc; ++d) {
    for (std::size_t c = 0; c < dc; ++c) append(ev.colinear_lhs(d, c) - ev.colinear_rhs(d, c));
  }
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t d = 0; d < dc; ++d) {
      for (std::size_t c = 0; c < dc; ++c) append(ev.a_linear_lhs(a, d, c) - ev.a_linear_rhs(a, d, c));
    }
  }
  for (std::size_t c = 0; c < dc; ++c) append(ev.normalized_lhs(c) - ev.normalized_rhs(c));
  return out;
}

struct Infeasible {
  InconsistencyWitness witness;
  /// Origins of the rows with a nonzero coefficient in the witness combination.
  std::vector<RowOrigin> provenance;
  std::size_t row_count = 0;
};

using IntegralResult = std::variant<IntegralCandidate, Infeasible>;

/// Deterministic particular solution (free variables zero) or an exact witness
/// y with y^T A = 0 and y^T b = 1.
inline IntegralResult solve_normalized_integral(const DoiDatum& dd) {
  const IntegralSystem sys = assemble_integral_system(dd);
  const Matrix a = sys.combined_lhs();
  const Vector b = sys.combined_rhs();
  const AffineSolution sol = solve_affine(a, b);
  if (!sol.feasible) {
    auto w = find_inconsistency(a, b);
    if (!w) throw std::logic_error("solver reported infeasible but no witness row exists");
    Infeasible out{*w, {}, sys.row_count()};
    for (std::size_t r = 0; r < w->combination.size(); ++r) {
      if (!w->combination[r].is_zero()) out.provenance.push_back(sys.origin(r));
    }
    return out;
  }
  IntegralCandidate theta = IntegralCandidate::from_unknowns(dd.field(), sys.dim_c, sys.dim_a, sol.particular);
  if (auto report = verify_integral(theta, dd); !report.passed()) {
    throw CheckFailure("solved integral failed direct verification", report);
  }
  return theta;
}

}  // namespace homhopf

#endif  // HOMHOPF_INTEGRALS_HPP
