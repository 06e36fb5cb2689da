#ifndef HOMHOPF_LINSOLVE_HPP
#define HOMHOPF_LINSOLVE_HPP

// Deterministic exact Gauss-Jordan elimination: leftmost pivot column, first
// nonzero row below the current position, free variables set to zero.

#include "homhopf/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace homhopf {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots are only taken in the first `pivot_limit`
/// columns (all columns by default), which lets callers carry an augmented
/// block along without eliminating inside it.
inline RrefResult rref(Matrix m, std::optional<std::size_t> pivot_limit = std::nullopt) {
  const std::size_t limit = pivot_limit.value_or(m.cols());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Scalar s = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= s;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

struct AffineSolution {
  bool feasible = false;
  Vector particular;
  std::vector<Vector> nullspace_basis;
};

/// Basis of {x : A x = 0}, one vector per free column in increasing order.
inline std::vector<Vector> nullspace(const Matrix& a) {
  const auto [r, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(a.field(), a.cols());
    v[free] = Scalar::one(a.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace detail {

inline Matrix augment(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) {
    throw DimensionError("solve_affine: " + a.shape() + " system with right-hand side of length " +
                         std::to_string(b.size()));
  }
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  return aug;
}

}  // namespace detail

/// Full solution set of A x = b: particular + span(nullspace_basis), or infeasible.
inline AffineSolution solve_affine(const Matrix& a, const Vector& b) {
  const auto [r, pivots] = rref(detail::augment(a, b));
  AffineSolution out;
  if (!pivots.empty() && pivots.back() == a.cols()) return out;
  out.feasible = true;
  out.particular = zero_vector(a.field(), a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) out.particular[pivots[i]] = r(i, a.cols());
  out.nullspace_basis = nullspace(a);
  return out;
}

/// Exact certificate that A x = b has no solution: y^T A = 0 and y^T b = 1.
struct InconsistencyWitness {
  std::size_t rref_row = 0;  ///< row of rref([A | b]) that reads 0 = 1
  Vector combination;        ///< y, one coefficient per row of A
};

inline std::optional<InconsistencyWitness> find_inconsistency(const Matrix& a, const Vector& b) {
  const Matrix aug = detail::augment(a, b);
  // [A | b | I]: the identity block records which combination of rows produced each reduced row.
  Matrix tracked(a.field(), a.rows(), a.cols() + 1 + a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j <= a.cols(); ++j) tracked(i, j) = aug(i, j);
    tracked(i, a.cols() + 1 + i) = Scalar::one(a.field());
  }
  const auto [r, pivots] = rref(std::move(tracked), a.cols() + 1);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] != a.cols()) continue;
    InconsistencyWitness w;
    w.rref_row = i;
    for (std::size_t k = 0; k < a.rows(); ++k) w.combination.push_back(r(i, a.cols() + 1 + k));
    return w;
  }
  return std::nullopt;
}

}  // namespace homhopf

#endif  // HOMHOPF_LINSOLVE_HPP
