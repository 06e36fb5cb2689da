#ifndef HOMHOPF_MATRIX_HPP
#define HOMHOPF_MATRIX_HPP

// Dense exact matrices, structure-constant tensors and the tensor-product
// bookkeeping shared by every axiom check.
//
// Flattening convention: the basis vector e_i (x) e_j of V (x) W has index
// i * dim W + j. The convention is associative, so V (x) W (x) U can be read
// as (V (x) W) (x) U or V (x) (W (x) U) without reindexing.

#include "homhopf/scalar.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace homhopf {

using Vector = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Vector zero_vector(Field field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

inline Vector basis_vector(Field field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

inline Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

inline Vector scale(const Scalar& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

/// v (x) w in the flattened tensor product.
inline Vector kron(const Vector& v, const Vector& w) {
  if (v.empty() || w.empty()) return {};
  Vector out = zero_vector(v.front().field(), v.size() * w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j].is_zero()) continue;
      out[i * w.size() + j].add_product(v[i], w[j]);
    }
  }
  return out;
}

class Matrix {
 public:
  Matrix() = default;

  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw DimensionError("matrix entry count mismatch");
    for (const auto& e : entries_) {
      if (e.field() != field_) throw std::invalid_argument("matrix entries must share one field");
    }
  }

  /// Row-major integer literal, e.g. Matrix::from_rows(Q, {{1, 2}, {3, 4}}).
  static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("ragged matrix literal");
      std::size_t j = 0;
      for (long x : row) m(i, j++) = Scalar(field, x);
      ++i;
    }
    return m;
  }

  static Matrix identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
  }

  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw DimensionError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  /// A linear functional as a 1 x n matrix.
  static Matrix row(const Vector& v) {
    if (v.empty()) throw DimensionError("empty functional");
    return Matrix(v.front().field(), 1, v.size(), v);
  }

  /// A vector as an n x 1 matrix (a map k -> V).
  static Matrix column(const Vector& v) {
    if (v.empty()) throw DimensionError("empty vector");
    return Matrix(v.front().field(), v.size(), 1, v);
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector col(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) {
      throw DimensionError("cannot apply " + shape() + " matrix to vector of length " + std::to_string(v.size()));
    }
    Vector out = zero_vector(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Scalar& a = (*this)(r, c);
        if (!a.is_zero()) out[r].add_product(a, v[c]);
      }
    }
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  bool is_identity() const { return rows_ == cols_ && *this == identity(field_, rows_); }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Matrix product f o g.
inline Matrix compose(const Matrix& f, const Matrix& g) {
  if (f.cols() != g.rows()) throw DimensionError("compose: " + f.shape() + " o " + g.shape());
  Matrix out(f.field(), f.rows(), g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < f.cols(); ++k) {
      const Scalar& a = f(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const Scalar& b = g(k, j);
        if (!b.is_zero()) out(i, j).add_product(a, b);
      }
    }
  }
  return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference shape mismatch");
  auto e = a.entries();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
  return Matrix(a.field(), a.rows(), a.cols(), std::move(e));
}

/// Kronecker product f (x) g, rows/cols flattened as i * dim_g + j.
inline Matrix tensor(const Matrix& f, const Matrix& g) {
  Matrix out(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Scalar& a = f(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < g.rows(); ++k) {
        for (std::size_t l = 0; l < g.cols(); ++l) {
          if (!g(k, l).is_zero()) out(i * g.rows() + k, j * g.cols() + l) = a * g(k, l);
        }
      }
    }
  }
  return out;
}

inline std::optional<Matrix> try_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix work = m;
  Matrix inv = Matrix::identity(m.field(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar s = work(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Scalar f = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!work(col, j).is_zero()) work(r, j) -= f * work(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

inline Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw std::domain_error("matrix " + m.shape() + " is not invertible");
  return *std::move(inv);
}

/// m^k for any integer k; negative powers require m invertible.
inline Matrix power(const Matrix& m, int k) {
  if (m.rows() != m.cols()) throw DimensionError("power of non-square matrix");
  Matrix base = k < 0 ? inverse(m) : m;
  Matrix out = Matrix::identity(m.field(), m.rows());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = compose(base, out);
  return out;
}

/// Structure constants t[i][j][k], stored at i * d2 * d3 + j * d3 + k.
class Tensor3 {
 public:
  Tensor3() = default;

  Tensor3(Field field, std::size_t d1, std::size_t d2, std::size_t d3)
      : field_(field), d1_(d1), d2_(d2), d3_(d3), entries_(d1 * d2 * d3, Scalar::zero(field)) {}

  Tensor3(Field field, std::size_t d1, std::size_t d2, std::size_t d3, std::vector<Scalar> entries)
      : field_(field), d1_(d1), d2_(d2), d3_(d3), entries_(std::move(entries)) {
    if (entries_.size() != d1 * d2 * d3) throw DimensionError("tensor entry count mismatch");
  }

  const Field& field() const noexcept { return field_; }
  std::size_t d1() const noexcept { return d1_; }
  std::size_t d2() const noexcept { return d2_; }
  std::size_t d3() const noexcept { return d3_; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return entries_[(i * d2_ + j) * d3_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * d2_ + j) * d3_ + k];
  }

  std::string shape() const {
    return std::to_string(d1_) + "x" + std::to_string(d2_) + "x" + std::to_string(d3_);
  }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  Field field_;
  std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
  std::vector<Scalar> entries_;
};

/// Bilinear evaluation: apply3(t, v, w)[k] = sum_{i,j} t[i][j][k] v[i] w[j].
inline Vector apply3(const Tensor3& t, const Vector& v, const Vector& w) {
  if (v.size() != t.d1() || w.size() != t.d2()) {
    throw DimensionError("apply3: tensor " + t.shape() + " on vectors of length " + std::to_string(v.size()) +
                         ", " + std::to_string(w.size()));
  }
  Vector out = zero_vector(t.field(), t.d3());
  for (std::size_t i = 0; i < t.d1(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < t.d2(); ++j) {
      if (w[j].is_zero()) continue;
      const Scalar vw = v[i] * w[j];
      for (std::size_t k = 0; k < t.d3(); ++k) {
        const Scalar& c = t(i, j, k);
        if (!c.is_zero()) out[k].add_product(c, vw);
      }
    }
  }
  return out;
}

/// Binary operation V (x) W -> U as a (dim U) x (dim V * dim W) matrix.
inline Matrix product_matrix(const Tensor3& t) {
  Matrix m(t.field(), t.d3(), t.d1() * t.d2());
  for (std::size_t i = 0; i < t.d1(); ++i) {
    for (std::size_t j = 0; j < t.d2(); ++j) {
      for (std::size_t k = 0; k < t.d3(); ++k) m(k, i * t.d2() + j) = t(i, j, k);
    }
  }
  return m;
}

/// Co-operation V -> U (x) W with t[i][j][k] the coefficient of e_j (x) e_k in the image of e_i.
inline Matrix coproduct_matrix(const Tensor3& t) {
  Matrix m(t.field(), t.d2() * t.d3(), t.d1());
  for (std::size_t i = 0; i < t.d1(); ++i) {
    for (std::size_t j = 0; j < t.d2(); ++j) {
      for (std::size_t k = 0; k < t.d3(); ++k) m(j * t.d3() + k, i) = t(i, j, k);
    }
  }
  return m;
}

inline Tensor3 product_tensor(const Matrix& m, std::size_t d1, std::size_t d2) {
  if (m.cols() != d1 * d2) throw DimensionError("product_tensor: column count mismatch");
  Tensor3 t(m.field(), d1, d2, m.rows());
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      for (std::size_t k = 0; k < m.rows(); ++k) t(i, j, k) = m(k, i * d2 + j);
    }
  }
  return t;
}

inline Tensor3 coproduct_tensor(const Matrix& m, std::size_t d2, std::size_t d3) {
  if (m.rows() != d2 * d3) throw DimensionError("coproduct_tensor: row count mismatch");
  Tensor3 t(m.field(), m.cols(), d2, d3);
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      for (std::size_t k = 0; k < d3; ++k) t(i, j, k) = m(j * d3 + k, i);
    }
  }
  return t;
}

namespace detail {

inline void kron_accumulate(std::span<const std::reference_wrapper<const Matrix>> factors,
                            const std::vector<std::size_t>& in_index, std::size_t depth, std::size_t out_index,
                            const Scalar& coeff, Vector& out) {
  if (depth == factors.size()) {
    out[out_index] += coeff;
    return;
  }
  const Matrix& f = factors[depth].get();
  const std::size_t c = in_index[depth];
  for (std::size_t r = 0; r < f.rows(); ++r) {
    const Scalar& a = f(r, c);
    if (a.is_zero()) continue;
    kron_accumulate(factors, in_index, depth + 1, out_index * f.rows() + r, coeff * a, out);
  }
}

}  // namespace detail

/// (f_1 (x) ... (x) f_n)(v) without materialising the Kronecker product.
inline Vector apply_kron(std::initializer_list<std::reference_wrapper<const Matrix>> list, const Vector& v) {
  std::vector<std::reference_wrapper<const Matrix>> factors(list);
  std::size_t in_dim = 1, out_dim = 1;
  for (const Matrix& f : factors) {
    in_dim *= f.cols();
    out_dim *= f.rows();
  }
  if (v.size() != in_dim) {
    throw DimensionError("apply_kron: input length " + std::to_string(v.size()) + " != " + std::to_string(in_dim));
  }
  const Field field = factors.front().get().field();
  Vector out = zero_vector(field, out_dim);
  std::vector<std::size_t> idx(factors.size());
  for (std::size_t flat = 0; flat < v.size(); ++flat) {
    if (v[flat].is_zero()) continue;
    std::size_t rest = flat;
    for (std::size_t k = factors.size(); k-- > 0;) {
      idx[k] = rest % factors[k].get().cols();
      rest /= factors[k].get().cols();
    }
    detail::kron_accumulate(factors, idx, 0, 0, v[flat], out);
  }
  return out;
}

/// Reorders tensor factors: output factor k is input factor order[k].
inline Vector permute_factors(const Vector& v, std::span<const std::size_t> dims, std::span<const std::size_t> order) {
  if (dims.size() != order.size()) throw DimensionError("permute_factors: arity mismatch");
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  if (v.size() != total) throw DimensionError("permute_factors: vector length mismatch");
  if (v.empty()) return v;
  Vector out = zero_vector(v.front().field(), total);
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (v[flat].is_zero()) continue;
    std::size_t rest = flat;
    for (std::size_t k = dims.size(); k-- > 0;) {
      idx[k] = rest % dims[k];
      rest /= dims[k];
    }
    std::size_t target = 0;
    for (std::size_t k = 0; k < order.size(); ++k) target = target * dims[order[k]] + idx[order[k]];
    out[target] = v[flat];
  }
  return out;
}

inline Vector permute_factors(const Vector& v, std::initializer_list<std::size_t> dims,
                              std::initializer_list<std::size_t> order) {
  return permute_factors(v, std::span<const std::size_t>(dims.begin(), dims.size()),
                         std::span<const std::size_t>(order.begin(), order.size()));
}

}  // namespace homhopf

#endif  // HOMHOPF_MATRIX_HPP
