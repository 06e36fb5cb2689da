#ifndef HOMHOPF_STRUCTURE_FILE_HPP
#define HOMHOPF_STRUCTURE_FILE_HPP

// JSON structure files: {"field": "Q" | {"GF": p}, "objects": {name: {...}}}.
// Coefficients are strings ("3/2", "-1"); matrices are lists of rows and
// three-index tensors nested lists t[i][j][k]. Output is canonical: sorted
// keys, two-space indent, scalar lists on one line, trailing newline.

#include "homhopf/applications.hpp"

#include "json.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace homhopf {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Canonical writer

namespace detail {

inline bool is_flat_array(const Json& j) {
  for (const auto& x : j) {
    if (x.is_array() || x.is_object()) return false;
  }
  return true;
}

inline void write_canonical(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << Json(it.key()).dump() << ": ";
      write_canonical(os, it.value(), indent + 1);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
    } else if (is_flat_array(j)) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
      os << "]";
    } else {
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        os << inner;
        write_canonical(os, j[i], indent + 1);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << pad << "]";
    }
  } else {
    os << j.dump();
  }
}

}  // namespace detail

inline std::string canonical_json(const Json& j) {
  std::ostringstream os;
  detail::write_canonical(os, j, 0);
  os << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Encoders

inline Json encode_field(const Field& f) {
  if (f.is_rational()) return "Q";
  return Json{{"GF", f.characteristic()}};
}

inline Json encode_vector(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

inline Json encode_matrix(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

inline Json encode_tensor(const Tensor3& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.d1(); ++i) {
    Json a = Json::array();
    for (std::size_t j = 0; j < t.d2(); ++j) {
      Json b = Json::array();
      for (std::size_t k = 0; k < t.d3(); ++k) b.push_back(t(i, j, k).to_string());
      a.push_back(std::move(b));
    }
    out.push_back(std::move(a));
  }
  return out;
}

inline std::vector<std::string> index_labels(std::size_t n, const std::string& prefix = "b") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// Labels x@y for a tensor product basis.
inline std::vector<std::string> tensor_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x + "@" + y);
  }
  return out;
}

inline Json encode_hopf(const HomHopfAlgebra& h, const std::vector<std::string>& basis) {
  return {{"kind", "hopf_algebra"},
          {"basis", basis},
          {"alpha", encode_matrix(h.alpha())},
          {"mult", encode_tensor(h.mult())},
          {"unit", encode_vector(h.unit())},
          {"comult", encode_tensor(h.comult())},
          {"counit", encode_vector(h.counit())},
          {"antipode", encode_matrix(h.antipode())}};
}

inline Json encode_hom_algebra(const HomAlgebra& a, const std::vector<std::string>& basis) {
  return {{"kind", "hom_algebra"},
          {"basis", basis},
          {"alpha", encode_matrix(a.alpha())},
          {"mult", encode_tensor(a.mult())},
          {"unit", encode_vector(a.unit())}};
}

inline Json encode_hom_coalgebra(const HomCoalgebra& c, const std::vector<std::string>& basis) {
  return {{"kind", "hom_coalgebra"},
          {"basis", basis},
          {"gamma", encode_matrix(c.gamma())},
          {"comult", encode_tensor(c.comult())},
          {"counit", encode_vector(c.counit())}};
}

inline Json encode_comodule_algebra(const ComoduleAlgebra& a, const std::string& hopf,
                                    const std::vector<std::string>& basis) {
  return {{"kind", "comodule_algebra"},
          {"hopf", hopf},
          {"basis", basis},
          {"beta", encode_matrix(a.beta())},
          {"mult", encode_tensor(a.algebra().mult())},
          {"unit", encode_vector(a.algebra().unit())},
          {"coaction", encode_tensor(a.coaction())}};
}

inline Json encode_module_coalgebra(const ModuleCoalgebra& c, const std::string& hopf,
                                    const std::vector<std::string>& basis) {
  return {{"kind", "module_coalgebra"},
          {"hopf", hopf},
          {"basis", basis},
          {"gamma", encode_matrix(c.gamma())},
          {"comult", encode_tensor(c.coalgebra().comult())},
          {"counit", encode_vector(c.coalgebra().counit())},
          {"action", encode_tensor(c.action())}};
}

inline Json encode_datum(const std::string& hopf, const std::string& algebra, const std::string& coalgebra) {
  return {{"kind", "datum"}, {"hopf", hopf}, {"algebra", algebra}, {"coalgebra", coalgebra}};
}

inline Json encode_hom_module(const HomModule& m, const std::string& algebra, const std::vector<std::string>& basis) {
  return {{"kind", "hom_module"},
          {"algebra", algebra},
          {"basis", basis},
          {"mu", encode_matrix(m.mu())},
          {"action", encode_tensor(m.action())}};
}

inline Json encode_hom_comodule(const HomComodule& m, const std::string& coalgebra,
                                const std::vector<std::string>& basis) {
  return {{"kind", "hom_comodule"},
          {"coalgebra", coalgebra},
          {"basis", basis},
          {"mu", encode_matrix(m.mu())},
          {"coaction", encode_tensor(m.coaction())}};
}

inline Json encode_doi_module(const DoiModule& m, const std::string& datum, const std::vector<std::string>& basis) {
  return {{"kind", "doi_module"},
          {"datum", datum},
          {"basis", basis},
          {"mu", encode_matrix(m.mu())},
          {"action", encode_tensor(m.action())},
          {"coaction", encode_tensor(m.coaction())}};
}

inline Json encode_yd_module(const YDModule& m, const std::string& hopf, const std::vector<std::string>& basis) {
  return {{"kind", "yd_module"},
          {"hopf", hopf},
          {"basis", basis},
          {"mu", encode_matrix(m.mu())},
          {"action", encode_tensor(m.action())},
          {"coaction", encode_tensor(m.coaction())}};
}

inline Json encode_linear_map(const Matrix& m, const std::string& source = "", const std::string& target = "") {
  Json out = {{"kind", "linear_map"}, {"matrix", encode_matrix(m)}};
  if (!source.empty()) out["source"] = source;
  if (!target.empty()) out["target"] = target;
  return out;
}

inline Json encode_integral(const IntegralCandidate& t, const std::string& datum) {
  return {{"kind", "integral"}, {"datum", datum}, {"theta", encode_tensor(t.theta)}};
}

// ---------------------------------------------------------------------------
// Structure file

namespace detail {

struct KindSchema {
  std::set<std::string> required;
  std::set<std::string> optional;
};

inline const std::map<std::string, KindSchema>& kind_schemas() {
  static const std::map<std::string, KindSchema> schemas = {
      {"hopf_algebra", {{"basis", "alpha", "mult", "unit", "comult", "counit", "antipode"}, {}}},
      {"hom_algebra", {{"basis", "alpha", "mult", "unit"}, {}}},
      {"hom_coalgebra", {{"basis", "gamma", "comult", "counit"}, {}}},
      {"comodule_algebra", {{"hopf", "basis", "beta", "mult", "unit", "coaction"}, {}}},
      {"module_coalgebra", {{"hopf", "basis", "gamma", "comult", "counit", "action"}, {}}},
      {"datum", {{"hopf", "algebra", "coalgebra"}, {}}},
      {"hom_module", {{"algebra", "basis", "mu", "action"}, {}}},
      {"hom_comodule", {{"coalgebra", "basis", "mu", "coaction"}, {}}},
      {"doi_module", {{"datum", "basis", "mu", "action", "coaction"}, {}}},
      {"yd_module", {{"hopf", "basis", "mu", "action", "coaction"}, {}}},
      {"linear_map", {{"matrix"}, {"source", "target"}}},
      {"integral", {{"datum", "theta"}, {}}},
      {"separability_certificate", {{"datum", "theta", "modules"}, {}}},
  };
  return schemas;
}

inline const std::set<std::string>& coefficient_keys() {
  static const std::set<std::string> keys = {"alpha",  "mult", "unit",     "comult", "counit", "antipode", "beta",
                                             "gamma",  "coaction", "action", "mu",    "matrix", "theta"};
  return keys;
}

}  // namespace detail

class StructureFile {
 public:
  explicit StructureFile(Field field = Field::rationals()) : field_(field), objects_(Json::object()) {}

  /// Parses and validates; `field_override` reinterprets every coefficient in another field.
  static StructureFile parse(const std::string& text, std::optional<Field> field_override = std::nullopt) {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (it.key() != "field" && it.key() != "objects") throw ParseError("unknown top-level key '" + it.key() + "'");
    }
    if (!doc.contains("field")) throw ParseError("missing 'field'");
    if (!doc.contains("objects") || !doc["objects"].is_object()) throw ParseError("missing 'objects' object");
    StructureFile out(field_override.value_or(parse_field(doc["field"])));
    for (auto it = doc["objects"].begin(); it != doc["objects"].end(); ++it) {
      out.validate_keys(it.key(), it.value());
      Json obj = it.value();
      out.normalize(it.key(), obj);
      out.objects_[it.key()] = std::move(obj);
    }
    // decode everything once so dimension errors surface at load time
    for (const auto& name : out.names()) out.validate_object(name);
    return out;
  }

  static StructureFile load(const std::string& path, std::optional<Field> field_override = std::nullopt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), field_override);
  }

  const Field& field() const noexcept { return field_; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (auto it = objects_.begin(); it != objects_.end(); ++it) out.push_back(it.key());
    return out;
  }

  bool contains(const std::string& name) const { return objects_.contains(name); }

  const Json& object(const std::string& name) const {
    if (!objects_.contains(name)) throw ParseError("no object named '" + name + "'");
    return objects_.at(name);
  }

  std::string kind(const std::string& name) const { return object(name).at("kind").get<std::string>(); }

  void put(const std::string& name, Json obj) {
    validate_keys(name, obj);
    objects_[name] = std::move(obj);
    validate_object(name);
  }

  Json to_json() const { return {{"field", encode_field(field_)}, {"objects", objects_}}; }
  std::string serialize() const { return canonical_json(to_json()); }

  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << serialize();
  }

  // ---- typed access

  std::vector<std::string> basis(const std::string& name) const {
    const Json& o = object(name);
    if (o.contains("basis")) return string_list(name, o.at("basis"));
    const std::string k = kind(name);
    if (k == "datum") return basis(ref(name, "coalgebra"));
    throw ParseError("object '" + name + "' of kind " + k + " has no basis");
  }

  std::size_t dim(const std::string& name) const { return basis(name).size(); }

  HomHopfAlgebra hopf(const std::string& name) const {
    expect_kind(name, {"hopf_algebra"});
    const Json& o = object(name);
    const std::size_t d = dim(name);
    return HomHopfAlgebra(matrix(name, "alpha", d, d), tensor(name, "mult", d, d, d), vector(name, "unit", d),
                          tensor(name, "comult", d, d, d), vector(name, "counit", d),
                          matrix(name, "antipode", d, d));
    (void)o;
  }

  /// The algebra structure of a hopf_algebra, hom_algebra or comodule_algebra.
  HomAlgebra algebra(const std::string& name) const {
    const std::string k = kind(name);
    if (k == "hopf_algebra") return hopf(name).algebra();
    if (k == "comodule_algebra") return comodule_algebra(name).algebra();
    expect_kind(name, {"hom_algebra"});
    const std::size_t d = dim(name);
    return HomAlgebra(matrix(name, "alpha", d, d), tensor(name, "mult", d, d, d), vector(name, "unit", d));
  }

  /// The coalgebra structure of a hopf_algebra, hom_coalgebra or module_coalgebra.
  HomCoalgebra coalgebra(const std::string& name) const {
    const std::string k = kind(name);
    if (k == "hopf_algebra") return hopf(name).coalgebra();
    if (k == "module_coalgebra") return module_coalgebra(name).coalgebra();
    expect_kind(name, {"hom_coalgebra"});
    const std::size_t d = dim(name);
    return HomCoalgebra(matrix(name, "gamma", d, d), tensor(name, "comult", d, d, d), vector(name, "counit", d));
  }

  ComoduleAlgebra comodule_algebra(const std::string& name) const {
    expect_kind(name, {"comodule_algebra"});
    const std::size_t d = dim(name);
    const std::size_t dh = dim(ref(name, "hopf", {"hopf_algebra"}));
    return ComoduleAlgebra(HomAlgebra(matrix(name, "beta", d, d), tensor(name, "mult", d, d, d), vector(name, "unit", d)),
                           tensor(name, "coaction", d, d, dh));
  }

  ModuleCoalgebra module_coalgebra(const std::string& name) const {
    expect_kind(name, {"module_coalgebra"});
    const std::size_t d = dim(name);
    const std::size_t dh = dim(ref(name, "hopf", {"hopf_algebra"}));
    return ModuleCoalgebra(
        HomCoalgebra(matrix(name, "gamma", d, d), tensor(name, "comult", d, d, d), vector(name, "counit", d)),
        tensor(name, "action", d, dh, d));
  }

  DoiDatum datum(const std::string& name) const {
    expect_kind(name, {"datum"});
    const std::string h = ref(name, "hopf", {"hopf_algebra"});
    const std::string a = ref(name, "algebra", {"comodule_algebra"});
    const std::string c = ref(name, "coalgebra", {"module_coalgebra"});
    if (ref(a, "hopf") != h || ref(c, "hopf") != h) {
      throw ParseError("datum '" + name + "': components must refer to hopf algebra '" + h + "'");
    }
    return DoiDatum(hopf(h), comodule_algebra(a), module_coalgebra(c));
  }

  HomModule hom_module(const std::string& name) const {
    expect_kind(name, {"hom_module"});
    const std::size_t d = dim(name);
    const std::size_t da = dim(ref(name, "algebra", {"hopf_algebra", "hom_algebra", "comodule_algebra"}));
    return HomModule(matrix(name, "mu", d, d), tensor(name, "action", d, da, d));
  }

  HomComodule hom_comodule(const std::string& name) const {
    expect_kind(name, {"hom_comodule"});
    const std::size_t d = dim(name);
    const std::size_t dc = dim(ref(name, "coalgebra", {"hopf_algebra", "hom_coalgebra", "module_coalgebra"}));
    return HomComodule(matrix(name, "mu", d, d), tensor(name, "coaction", d, d, dc));
  }

  DoiModule doi_module(const std::string& name) const {
    expect_kind(name, {"doi_module"});
    const std::string dn = ref(name, "datum", {"datum"});
    const std::size_t d = dim(name);
    const std::size_t da = dim(ref(dn, "algebra"));
    const std::size_t dc = dim(ref(dn, "coalgebra"));
    return DoiModule(matrix(name, "mu", d, d), tensor(name, "action", d, da, d), tensor(name, "coaction", d, d, dc));
  }

  YDModule yd_module(const std::string& name) const {
    expect_kind(name, {"yd_module"});
    const std::size_t d = dim(name);
    const std::size_t dh = dim(ref(name, "hopf", {"hopf_algebra"}));
    return YDModule(matrix(name, "mu", d, d), tensor(name, "action", d, dh, d), tensor(name, "coaction", d, d, dh));
  }

  Matrix linear_map(const std::string& name) const {
    expect_kind(name, {"linear_map"});
    const Json& m = object(name).at("matrix");
    if (!m.is_array() || m.empty() || !m[0].is_array()) throw ParseError(name + ".matrix: expected a list of rows");
    std::size_t rows = m.size(), cols = m[0].size();
    if (object(name).contains("target")) rows = dim(ref(name, "target"));
    if (object(name).contains("source")) cols = dim(ref(name, "source"));
    return matrix(name, "matrix", rows, cols);
  }

  IntegralCandidate integral(const std::string& name) const {
    expect_kind(name, {"integral", "separability_certificate"});
    const std::string dn = ref(name, "datum", {"datum"});
    const std::size_t dc = dim(ref(dn, "coalgebra"));
    const std::size_t da = dim(ref(dn, "algebra"));
    return {tensor(name, "theta", dc, dc, da)};
  }

  /// Name stored under `key` in object `name`, which must exist (and have one of `kinds`).
  std::string ref(const std::string& name, const std::string& key, std::initializer_list<const char*> kinds = {}) const {
    const Json& o = object(name);
    if (!o.contains(key) || !o.at(key).is_string()) throw ParseError(name + "." + key + ": expected an object name");
    const std::string target = o.at(key).get<std::string>();
    if (!contains(target)) throw ParseError(name + "." + key + ": no object named '" + target + "'");
    if (kinds.size() > 0) expect_kind(target, kinds);
    return target;
  }

 private:
  static Field parse_field(const Json& j) {
    try {
      if (j.is_string()) return Field::parse(j.get<std::string>());
      if (j.is_object() && j.size() == 1 && j.contains("GF") && j.at("GF").is_number_unsigned()) {
        return Field::prime(j.at("GF").get<std::uint64_t>());
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
    throw ParseError("field must be \"Q\" or {\"GF\": p}");
  }

  void validate_keys(const std::string& name, const Json& o) const {
    if (!o.is_object()) throw ParseError("object '" + name + "' must be a JSON object");
    if (!o.contains("kind") || !o.at("kind").is_string()) throw ParseError("object '" + name + "' has no kind");
    const std::string k = o.at("kind").get<std::string>();
    const auto& schemas = detail::kind_schemas();
    auto it = schemas.find(k);
    if (it == schemas.end()) throw ParseError("object '" + name + "': unknown kind '" + k + "'");
    for (const auto& req : it->second.required) {
      if (!o.contains(req)) throw ParseError("object '" + name + "' (" + k + "): missing key '" + req + "'");
    }
    for (auto kv = o.begin(); kv != o.end(); ++kv) {
      if (kv.key() == "kind") continue;
      if (!it->second.required.count(kv.key()) && !it->second.optional.count(kv.key())) {
        throw ParseError("object '" + name + "' (" + k + "): unknown key '" + kv.key() + "'");
      }
    }
  }

  void normalize_leaves(const std::string& where, Json& j) const {
    if (j.is_array()) {
      for (auto& x : j) normalize_leaves(where, x);
    } else if (j.is_string()) {
      try {
        j = Scalar::parse(field_, j.get<std::string>()).to_string();
      } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
      }
    } else {
      throw ParseError(where + ": coefficients must be strings");
    }
  }

  void normalize(const std::string& name, Json& o) const {
    for (auto kv = o.begin(); kv != o.end(); ++kv) {
      if (detail::coefficient_keys().count(kv.key())) normalize_leaves(name + "." + kv.key(), kv.value());
    }
  }

  void validate_object(const std::string& name) const {
    const std::string k = kind(name);
    try {
      if (k == "hopf_algebra") (void)hopf(name);
      else if (k == "hom_algebra") (void)algebra(name);
      else if (k == "hom_coalgebra") (void)coalgebra(name);
      else if (k == "comodule_algebra") (void)comodule_algebra(name);
      else if (k == "module_coalgebra") (void)module_coalgebra(name);
      else if (k == "datum") (void)datum(name);
      else if (k == "hom_module") (void)hom_module(name);
      else if (k == "hom_comodule") (void)hom_comodule(name);
      else if (k == "doi_module") (void)doi_module(name);
      else if (k == "yd_module") (void)yd_module(name);
      else if (k == "linear_map") (void)linear_map(name);
      else (void)integral(name);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError("object '" + name + "': " + e.what());
    }
  }

  void expect_kind(const std::string& name, std::initializer_list<const char*> kinds) const {
    const std::string k = kind(name);
    std::string list;
    for (const char* want : kinds) {
      if (k == want) return;
      list += std::string(list.empty() ? "" : " or ") + want;
    }
    throw ParseError("object '" + name + "' is a " + k + ", expected " + list);
  }

  std::vector<std::string> string_list(const std::string& name, const Json& j) const {
    if (!j.is_array()) throw ParseError(name + ".basis: expected a list of labels");
    std::vector<std::string> out;
    for (const auto& x : j) {
      if (!x.is_string()) throw ParseError(name + ".basis: labels must be strings");
      out.push_back(x.get<std::string>());
    }
    return out;
  }

  Scalar scalar(const std::string& where, const Json& j) const {
    if (!j.is_string()) throw ParseError(where + ": coefficients must be strings");
    try {
      return Scalar::parse(field_, j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  }

  const Json& list(const std::string& where, const Json& j, std::size_t n) const {
    if (!j.is_array() || j.size() != n) {
      throw ParseError(where + ": expected a list of length " + std::to_string(n) +
                       (j.is_array() ? ", got " + std::to_string(j.size()) : ""));
    }
    return j;
  }

  Vector vector(const std::string& name, const std::string& key, std::size_t n) const {
    const std::string where = name + "." + key;
    const Json& j = list(where, object(name).at(key), n);
    Vector v;
    for (const auto& x : j) v.push_back(scalar(where, x));
    return v;
  }

  Matrix matrix(const std::string& name, const std::string& key, std::size_t rows, std::size_t cols) const {
    const std::string where = name + "." + key;
    const Json& j = list(where, object(name).at(key), rows);
    Matrix m(field_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const Json& row = list(where + "[" + std::to_string(i) + "]", j[i], cols);
      for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar(where, row[c]);
    }
    return m;
  }

  Tensor3 tensor(const std::string& name, const std::string& key, std::size_t d1, std::size_t d2,
                 std::size_t d3) const {
    const std::string where = name + "." + key;
    const Json& j = list(where, object(name).at(key), d1);
    Tensor3 t(field_, d1, d2, d3);
    for (std::size_t a = 0; a < d1; ++a) {
      const std::string wa = where + "[" + std::to_string(a) + "]";
      const Json& ja = list(wa, j[a], d2);
      for (std::size_t b = 0; b < d2; ++b) {
        const Json& jb = list(wa + "[" + std::to_string(b) + "]", ja[b], d3);
        for (std::size_t c = 0; c < d3; ++c) t(a, b, c) = scalar(where, jb[c]);
      }
    }
    return t;
  }

  Field field_;
  Json objects_;
};

}  // namespace homhopf

#endif  // HOMHOPF_STRUCTURE_FILE_HPP
