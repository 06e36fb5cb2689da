#ifndef HOMHOPF_GOLDEN_HPP
#define HOMHOPF_GOLDEN_HPP

// Built-in structure files: group algebras, Sweedler's algebra, their twists
// and corruptions, and the data built from them.

#include "homhopf/catalog.hpp"
#include "homhopf/structure_file.hpp"

#include <string>
#include <vector>

namespace homhopf {

namespace detail {

inline std::size_t parse_group_order(const std::string& digits) {
  if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad group order '" + digits + "'");
  }
  const std::size_t n = std::stoul(digits);
  if (n == 0) throw std::invalid_argument("group order must be positive");
  return n;
}

struct NamedHopf {
  HomHopfAlgebra hopf;
  std::vector<std::string> basis;
};

/// "k", "kZ<n>", "kZ<n>-twisted", "H4", "H4-twisted".
inline NamedHopf named_hopf(const std::string& name, Field f) {
  if (name == "k") return {ground_field_hopf(f), {"1"}};
  if (name == "H4") return {catalog::sweedler(f), catalog::sweedler_labels()};
  if (name == "H4-twisted") return {catalog::twisted_sweedler(f), catalog::sweedler_labels()};
  if (name.rfind("kZ", 0) == 0) {
    const bool twisted = name.size() > 8 && name.substr(name.size() - 8) == "-twisted";
    const std::size_t n = parse_group_order(name.substr(2, name.size() - 2 - (twisted ? 8 : 0)));
    HomHopfAlgebra h = catalog::group_algebra(f, n);
    if (twisted) h = yau_twist(h, catalog::group_inversion(f, n));
    return {std::move(h), catalog::cyclic_labels(n)};
  }
  throw std::invalid_argument("unknown Hopf algebra '" + name + "'");
}

inline void put_trivial_datum(StructureFile& sf, const HomHopfAlgebra& h, const std::vector<std::string>& basis) {
  const DoiDatum dd = trivial_datum(h);
  sf.put("H", encode_hopf(h, basis));
  sf.put("k", encode_hopf(dd.hopf(), {"1"}));
  sf.put("A", encode_comodule_algebra(dd.algebra(), "k", {"1"}));
  sf.put("C", encode_module_coalgebra(dd.coalgebra(), "k", basis));
  sf.put("D", encode_datum("k", "A", "C"));
  sf.put("regular", encode_doi_module(trivial_doi_module(regular_comodule(h.coalgebra())), "D", basis));
}

/// Adds the projection example: regular (+) trivial -> regular, with a section
/// and a retraction that are linear but not colinear.
inline void put_projection_example(StructureFile& sf, const HomHopfAlgebra& h, const std::vector<std::string>& basis) {
  const Field f = h.field();
  const std::size_t d = h.dim();
  Tensor3 co(f, 1, 1, d);
  for (std::size_t c = 0; c < d; ++c) co(0, 0, c) = h.unit()[c];
  const DoiModule trivial = trivial_doi_module(HomComodule(Matrix::identity(f, 1), std::move(co)));
  const DoiModule regular = trivial_doi_module(regular_comodule(h.coalgebra()));
  const DoiModule sum = direct_sum(regular, trivial);
  std::vector<std::string> sum_basis = basis;
  sum_basis.push_back("t");
  sf.put("trivial", encode_doi_module(trivial, "D", {"t"}));
  sf.put("sum", encode_doi_module(sum, "D", sum_basis));

  Matrix proj(f, d, d + 1), incl(f, d + 1, d), section(f, d + 1, d), retract(f, d, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    proj(i, i) = incl(i, i) = section(i, i) = retract(i, i) = Scalar::one(f);
    section(d, i) = Scalar::one(f);
  }
  // t -> last group element; t -> e would already be colinear
  retract(d - 1, d) = Scalar::one(f);
  sf.put("proj", encode_linear_map(proj, "sum", "regular"));
  sf.put("section", encode_linear_map(section, "regular", "sum"));
  sf.put("incl", encode_linear_map(incl, "regular", "sum"));
  sf.put("retract", encode_linear_map(retract, "sum", "regular"));
}

inline void put_relative_datum(StructureFile& sf, const HomHopfAlgebra& h, const std::vector<std::string>& basis) {
  const ComoduleAlgebra a = regular_comodule_algebra(h);
  const DoiDatum dd = relative_datum(h, a);
  sf.put("H", encode_hopf(h, basis));
  sf.put("A", encode_comodule_algebra(a, "H", basis));
  sf.put("C", encode_module_coalgebra(dd.coalgebra(), "H", basis));
  sf.put("D", encode_datum("H", "A", "C"));
  sf.put("A_regular", encode_hom_module(regular_module(a.algebra()), "A", basis));
  sf.put("induced", encode_doi_module(induce(regular_module(a.algebra()), dd), "D", tensor_labels(basis, basis)));
}

inline void put_yd_datum(StructureFile& sf, const HomHopfAlgebra& h, const std::vector<std::string>& basis) {
  const YDDatum yd = yd_datum(h);
  const std::vector<std::string> kb = tensor_labels(basis, basis);
  sf.put("H", encode_hopf(h, basis));
  sf.put("K", encode_hopf(yd.datum.hopf(), kb));
  sf.put("A", encode_comodule_algebra(yd.datum.algebra(), "K", basis));
  sf.put("C", encode_module_coalgebra(yd.datum.coalgebra(), "K", basis));
  sf.put("D", encode_datum("K", "A", "C"));
}

/// The trivial YD module and a two-dimensional graded one over kZ2.
inline void put_yd_modules_kz2(StructureFile& sf, const HomHopfAlgebra& h) {
  const Field f = h.field();
  const Scalar one = Scalar::one(f);
  Tensor3 act1(f, 1, 2, 1), co1(f, 1, 1, 2);
  act1(0, 0, 0) = act1(0, 1, 0) = one;
  co1(0, 0, 0) = one;
  sf.put("trivial", encode_yd_module(YDModule(Matrix::identity(f, 1), act1, co1), "H", {"t"}));

  Tensor3 act2(f, 2, 2, 2), co2(f, 2, 2, 2);
  act2(0, 0, 0) = act2(1, 0, 1) = act2(0, 1, 0) = one;
  act2(1, 1, 1) = -one;
  co2(0, 0, 0) = co2(1, 1, 1) = one;
  sf.put("graded", encode_yd_module(YDModule(Matrix::identity(f, 2), act2, co2), "H", {"u", "v"}));
}

}  // namespace detail

/// Names accepted by builtin_example; "kZ<n>" variants accept any order n >= 1.
inline std::vector<std::string> builtin_example_names() {
  return {"k",          "kZ2",           "kZ3",          "kZ4",          "kZ6",          "kZ3-twisted",
          "kZ4-twisted", "kZ6-twisted",  "kZ2-bad-mult", "kZ2-bad-comult", "H4",        "H4-twisted",
          "H4-bad-antipode", "H4-twisted-bad-antipode", "trivial-k", "trivial-kZ2", "trivial-kZ3",
          "trivial-kZ4", "trivial-kZ6", "trivial-H4", "trivial-H4-twisted", "relative-kZ2", "relative-H4",
          "yd-kZ2",     "yd-H4-twisted"};
}

inline StructureFile builtin_example(const std::string& name, Field f = Field::rationals()) {
  StructureFile sf(f);
  auto ends_with = [&](const std::string& suffix) {
    return name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  auto stem = [&](const std::string& prefix, const std::string& suffix) {
    return name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
  };

  if (name.rfind("trivial-", 0) == 0) {
    auto [h, basis] = detail::named_hopf(stem("trivial-", ""), f);
    detail::put_trivial_datum(sf, h, basis);
    if (h.dim() >= 2 && h.alpha().is_identity() && h.dim() <= 6 && name.rfind("trivial-kZ", 0) == 0) {
      detail::put_projection_example(sf, h, basis);
    }
    return sf;
  }
  if (name.rfind("relative-", 0) == 0) {
    auto [h, basis] = detail::named_hopf(stem("relative-", ""), f);
    detail::put_relative_datum(sf, h, basis);
    return sf;
  }
  if (name.rfind("yd-", 0) == 0) {
    auto [h, basis] = detail::named_hopf(stem("yd-", ""), f);
    detail::put_yd_datum(sf, h, basis);
    if (stem("yd-", "") == "kZ2") detail::put_yd_modules_kz2(sf, h);
    return sf;
  }
  if (ends_with("-bad-antipode")) {
    auto [h, basis] = detail::named_hopf(stem("", "-bad-antipode"), f);
    if (h.dim() != 4) throw std::invalid_argument("antipode corruption is defined for Sweedler's algebra only");
    sf.put("H", encode_hopf(catalog::with_corrupted_antipode(h), basis));
    return sf;
  }
  if (ends_with("-bad-mult") || ends_with("-bad-comult")) {
    const bool mult = ends_with("-bad-mult");
    auto [h, basis] = detail::named_hopf(stem("", mult ? "-bad-mult" : "-bad-comult"), f);
    if (name.rfind("kZ", 0) != 0 || h.dim() < 2) throw std::invalid_argument("corruption needs kZ<n> with n >= 2");
    sf.put("H", encode_hopf(mult ? catalog::with_corrupted_mult(h) : catalog::with_corrupted_comult(h), basis));
    return sf;
  }

  auto [h, basis] = detail::named_hopf(name, f);
  sf.put("H", encode_hopf(h, basis));
  if (name.rfind("kZ", 0) == 0 && !ends_with("-twisted")) {
    sf.put("inverse", encode_linear_map(catalog::group_inversion(f, h.dim()), "H", "H"));
  } else if (name == "H4") {
    sf.put("scale2", encode_linear_map(catalog::sweedler_scaling(f, 2), "H", "H"));
  }
  return sf;
}

}  // namespace homhopf

#endif  // HOMHOPF_GOLDEN_HPP
