#ifndef HOMHOPF_CATALOG_HPP
#define HOMHOPF_CATALOG_HPP

// Built-in desk-scale structures: cyclic group algebras, Sweedler's
// four-dimensional Hopf algebra, their automorphisms and a few deliberately
// broken variants used as negative examples.

#include "homhopf/hom_core.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace homhopf::catalog {

/// Basis labels e, g, g2, ..., g{n-1}.
inline std::vector<std::string> cyclic_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
  return out;
}

/// The group algebra k[Z_n] with group-like basis g^i and identity twist.
inline HomHopfAlgebra group_algebra(Field f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("group order must be positive");
  const Scalar one = Scalar::one(f);
  Tensor3 mult(f, n, n, n);
  Tensor3 comult(f, n, n, n);
  Matrix antipode(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult(i, j, (i + j) % n) = one;
    comult(i, i, i) = one;
    antipode((n - i) % n, i) = one;
  }
  return HomHopfAlgebra(Matrix::identity(f, n), std::move(mult), basis_vector(f, n, 0), std::move(comult),
                        Vector(n, one), std::move(antipode));
}

/// g^i -> g^{k i}; a Hopf automorphism iff gcd(k, n) = 1.
inline Matrix group_power_map(Field f, std::size_t n, std::size_t k) {
  Matrix a(f, n, n);
  for (std::size_t i = 0; i < n; ++i) a((k * i) % n, i) = Scalar::one(f);
  return a;
}

/// Inversion g -> g^{-1}, the nontrivial automorphism of Z_n for n >= 3.
inline Matrix group_inversion(Field f, std::size_t n) { return group_power_map(f, n, n - 1); }

inline std::vector<std::string> sweedler_labels() { return {"1", "g", "x", "gx"}; }

/// Sweedler's H4: g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x(x)1 + g(x)x,
/// basis ordered 1, g, x, gx.
inline HomHopfAlgebra sweedler(Field f) {
  const std::size_t d = 4;
  Tensor3 mult(f, d, d, d);
  const auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) { mult(i, j, k) = Scalar(f, c); };
  for (std::size_t i = 0; i < d; ++i) {
    set(0, i, i, 1);
    set(i, 0, i, 1);
  }
  set(1, 1, 0, 1);   // g g = 1
  set(1, 2, 3, 1);   // g x = gx
  set(1, 3, 2, 1);   // g gx = x
  set(2, 1, 3, -1);  // x g = -gx
  set(3, 1, 2, -1);  // gx g = -x
  Tensor3 comult(f, d, d, d);
  const auto co = [&](std::size_t i, std::size_t j, std::size_t k) { comult(i, j, k) = Scalar::one(f); };
  co(0, 0, 0);
  co(1, 1, 1);
  co(2, 2, 0);  // x (x) 1
  co(2, 1, 2);  // g (x) x
  co(3, 3, 1);  // gx (x) g
  co(3, 0, 3);  // 1 (x) gx
  Vector counit = {Scalar::one(f), Scalar::one(f), Scalar::zero(f), Scalar::zero(f)};
  Matrix antipode(f, d, d);
  antipode(0, 0) = Scalar::one(f);
  antipode(1, 1) = Scalar::one(f);
  antipode(3, 2) = Scalar(f, -1L);  // S(x) = -gx
  antipode(2, 3) = Scalar::one(f);  // S(gx) = x
  return HomHopfAlgebra(Matrix::identity(f, d), std::move(mult), basis_vector(f, d, 0), std::move(comult),
                        std::move(counit), std::move(antipode));
}

/// g -> g, x -> lambda x: a Hopf automorphism of H4 for lambda != 0.
inline Matrix sweedler_scaling(Field f, long lambda) {
  Matrix a = Matrix::identity(f, 4);
  a(2, 2) = Scalar(f, lambda);
  a(3, 3) = Scalar(f, lambda);
  return a;
}

/// H4 twisted by x -> 2x.
inline HomHopfAlgebra twisted_sweedler(Field f) { return yau_twist(sweedler(f), sweedler_scaling(f, 2)); }

namespace detail {

inline HomHopfAlgebra replace(const HomHopfAlgebra& h, const Tensor3* mult, const Tensor3* comult,
                              const Matrix* antipode) {
  return HomHopfAlgebra(h.alpha(), mult ? *mult : h.mult(), h.unit(), comult ? *comult : h.comult(), h.counit(),
                        antipode ? *antipode : h.antipode());
}

}  // namespace detail

/// S(x) = +gx instead of -gx.
inline HomHopfAlgebra with_corrupted_antipode(const HomHopfAlgebra& sweedler_like) {
  Matrix s = sweedler_like.antipode();
  s(3, 2) = -s(3, 2);
  return detail::replace(sweedler_like, nullptr, nullptr, &s);
}

/// e . e = g in k[Z_n].
inline HomHopfAlgebra with_corrupted_mult(const HomHopfAlgebra& group) {
  Tensor3 m = group.mult();
  const Field f = group.field();
  for (std::size_t k = 0; k < group.dim(); ++k) m(0, 0, k) = Scalar::zero(f);
  m(0, 0, 1 % group.dim()) = Scalar::one(f);
  return detail::replace(group, &m, nullptr, nullptr);
}

/// Delta(g) = g (x) e in k[Z_n].
inline HomHopfAlgebra with_corrupted_comult(const HomHopfAlgebra& group) {
  Tensor3 c = group.comult();
  const Field f = group.field();
  c(1, 1, 1) = Scalar::zero(f);
  c(1, 1, 0) = Scalar::one(f);
  return detail::replace(group, nullptr, &c, nullptr);
}

}  // namespace homhopf::catalog

#endif  // HOMHOPF_CATALOG_HPP
