#ifndef HOMHOPF_COMMANDS_HPP
#define HOMHOPF_COMMANDS_HPP

// Command implementations behind the homhopf executable. Each returns the
// process exit code: 0 ok, 1 check failure, 2 parse/usage error, 3 infeasible.

#include "homhopf/golden.hpp"
#include "homhopf/maschke.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace homhopf {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitInfeasible = 3 };

struct CommandOptions {
  std::optional<Field> field;  ///< reinterpret input coefficients (or choose the field for examples)
  std::string out;             ///< output structure file; empty means none (or stdout for file-only commands)
  bool verbose = false;
  int max_twist_power = 2;
};

namespace detail {

inline std::string format_residual(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "]";
}

/// Labels for violation indices when every index ranges over one basis.
inline std::string format_indices(const std::vector<std::size_t>& idx, const std::vector<std::string>* labels) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ", ";
    s += labels && idx[i] < labels->size() ? (*labels)[idx[i]] : std::to_string(idx[i]);
  }
  return idx.size() == 1 ? s : "(" + s + ")";
}

inline void print_report(std::ostream& out, const std::string& title, const AxiomReport& r, bool verbose,
                         const std::vector<std::string>* labels = nullptr) {
  out << title << ": " << (r.passed() ? "passed" : "FAILED") << "\n";
  if (r.passed()) return;
  for (const auto& axiom : r.failed_axioms()) {
    std::size_t count = 0;
    for (const auto& v : r.violations()) {
      if (v.axiom != axiom) continue;
      if (count == 0 || verbose) {
        out << "  violation \"" << v.axiom << "\" at basis " << format_indices(v.indices, labels) << ": residual "
            << format_residual(v.residual) << "\n";
      }
      ++count;
    }
    if (!verbose && count > 1) out << "  (" << count - 1 << " more for \"" << axiom << "\"; use --verbose)\n";
  }
}

inline void write_or_print(const StructureFile& sf, const CommandOptions& opt, std::ostream& out) {
  if (opt.out.empty()) {
    out << sf.serialize();
  } else {
    sf.save(opt.out);
  }
}

inline AxiomReport check_object(const StructureFile& sf, const std::string& name) {
  const std::string k = sf.kind(name);
  if (k == "hopf_algebra") return check_hom_hopf(sf.hopf(name));
  if (k == "hom_algebra") return check_hom_algebra(sf.algebra(name));
  if (k == "hom_coalgebra") return check_hom_coalgebra(sf.coalgebra(name));
  if (k == "comodule_algebra") {
    const ComoduleAlgebra a = sf.comodule_algebra(name);
    AxiomReport r = check_hom_algebra(a.algebra());
    r.merge(check_hom_comodule(a.comodule(), sf.hopf(sf.ref(name, "hopf")).coalgebra()));
    r.merge(check_comodule_algebra(a, sf.hopf(sf.ref(name, "hopf"))));
    return r;
  }
  if (k == "module_coalgebra") {
    const ModuleCoalgebra c = sf.module_coalgebra(name);
    AxiomReport r = check_hom_coalgebra(c.coalgebra());
    r.merge(check_hom_module(c.module(), sf.hopf(sf.ref(name, "hopf")).algebra()));
    r.merge(check_module_coalgebra(c, sf.hopf(sf.ref(name, "hopf"))));
    return r;
  }
  if (k == "datum") {
    const DoiDatum dd = sf.datum(name);
    AxiomReport r = check_hom_hopf(dd.hopf());
    r.merge(check_doi_datum(dd));
    return r;
  }
  if (k == "hom_module") return check_hom_module(sf.hom_module(name), sf.algebra(sf.ref(name, "algebra")));
  if (k == "hom_comodule") return check_hom_comodule(sf.hom_comodule(name), sf.coalgebra(sf.ref(name, "coalgebra")));
  if (k == "doi_module") return check_doi_module(sf.doi_module(name), sf.datum(sf.ref(name, "datum")));
  if (k == "yd_module") return check_yd_module(sf.yd_module(name), sf.hopf(sf.ref(name, "hopf")));
  if (k == "integral" || k == "separability_certificate") {
    return verify_integral(sf.integral(name), sf.datum(sf.ref(name, "datum")));
  }
  // linear_map: morphism of Doi modules or automorphism of a Hopf algebra, by endpoint kinds
  const Matrix f = sf.linear_map(name);
  const Json& o = sf.object(name);
  if (o.contains("source") && o.contains("target")) {
    const std::string s = sf.ref(name, "source"), t = sf.ref(name, "target");
    if (sf.kind(s) == "doi_module" && sf.kind(t) == "doi_module") {
      return morphism_flags(f, sf.doi_module(s), sf.doi_module(t)).combined();
    }
    if (s == t && sf.kind(s) == "hopf_algebra") return check_hopf_automorphism(sf.hopf(s), f);
  }
  return {};
}

inline const std::vector<std::string>* labels_for(const StructureFile& sf, const std::string& name,
                                                  std::vector<std::string>& storage) {
  const std::string k = sf.kind(name);
  if (k == "hopf_algebra" || k == "hom_algebra" || k == "hom_coalgebra") {
    storage = sf.basis(name);
    return &storage;
  }
  return nullptr;
}

inline std::string theta_value(const IntegralCandidate& t, std::size_t c, std::size_t d, std::size_t da) {
  if (da == 1) return t.theta(c, d, 0).to_string();
  std::string s = "(";
  for (std::size_t a = 0; a < da; ++a) s += (a ? ", " : "") + t.theta(c, d, a).to_string();
  return s + ")";
}

inline void print_theta(std::ostream& out, const StructureFile& sf, const std::string& datum,
                        const IntegralCandidate& t) {
  const auto cb = sf.basis(sf.ref(datum, "coalgebra"));
  const auto ab = sf.basis(sf.ref(datum, "algebra"));
  if (ab.size() > 1) {
    out << "values in the basis (";
    for (std::size_t a = 0; a < ab.size(); ++a) out << (a ? ", " : "") << ab[a];
    out << ") of " << sf.ref(datum, "algebra") << "\n";
  }
  for (std::size_t c = 0; c < cb.size(); ++c) {
    for (std::size_t d = 0; d < cb.size(); ++d) {
      out << "theta(" << cb[c] << "@" << cb[d] << ") = " << theta_value(t, c, d, ab.size()) << "\n";
    }
  }
}

/// Names the basis elements behind one row of the integral system.
inline std::string describe_origin(const StructureFile& sf, const std::string& datum, const RowOrigin& o) {
  const auto cb = sf.basis(sf.ref(datum, "coalgebra"));
  const auto ab = sf.basis(sf.ref(datum, "algebra"));
  std::vector<const std::vector<std::string>*> spaces;
  std::vector<std::string> names;
  if (o.family == "twist") {
    spaces = {&cb, &cb, &ab};
    names = {"c", "d", "a"};
  } else if (o.family == "colinear") {
    spaces = {&cb, &cb, &ab, &cb};
    names = {"d", "c", "a", "e"};
  } else if (o.family == "A-linear") {
    spaces = {&ab, &cb, &cb, &ab};
    names = {"a", "d", "c", "z"};
  } else {
    spaces = {&cb, &ab};
    names = {"c", "a"};
  }
  std::string s = o.family + " (";
  for (std::size_t i = 0; i < o.indices.size(); ++i) {
    if (i) s += ", ";
    const bool labelled = i < spaces.size() && o.indices[i] < spaces[i]->size();
    s += (i < names.size() ? names[i] : "i") + "=" +
         (labelled ? (*spaces[i])[o.indices[i]] : std::to_string(o.indices[i]));
  }
  return s + ")";
}

inline void print_infeasible(std::ostream& out, const StructureFile& sf, const std::string& datum,
                             const Infeasible& inf) {
  out << "datum " << datum << ": no normalized integral exists\n";
  out << "witness: a combination of " << inf.provenance.size() << " of " << inf.row_count
      << " constraint rows reduces to 0 = 1 (reduced row " << inf.witness.rref_row << ")\n";
  std::size_t shown = 0;
  for (std::size_t r = 0; r < inf.witness.combination.size(); ++r) {
    const Scalar& y = inf.witness.combination[r];
    if (y.is_zero()) continue;
    const RowOrigin& o = inf.provenance.at(shown++);
    out << "  " << y.to_string() << " * " << describe_origin(sf, datum, o) << "\n";
  }
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace detail

/// Checks one object, or every object in the file when `object` is empty.
inline int cmd_check(const std::string& path, const std::string& object, const CommandOptions& opt,
                     std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const StructureFile sf = StructureFile::load(path, opt.field);
    const std::vector<std::string> names = object.empty() ? sf.names() : std::vector<std::string>{object};
    bool ok = true;
    for (const auto& name : names) {
      const AxiomReport r = detail::check_object(sf, name);
      std::vector<std::string> storage;
      detail::print_report(out, name + " (" + sf.kind(name) + ")", r, opt.verbose,
                           detail::labels_for(sf, name, storage));
      ok = ok && r.passed();
    }
    return ok ? kExitOk : kExitCheckFailed;
  });
}

inline int cmd_find_integral(const std::string& path, const std::string& datum, const CommandOptions& opt,
                             std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    StructureFile sf = StructureFile::load(path, opt.field);
    const DoiDatum dd = sf.datum(datum);
    if (AxiomReport r = detail::check_object(sf, datum); !r.passed()) {
      detail::print_report(out, datum + " (datum)", r, opt.verbose);
      return kExitCheckFailed;
    }
    const IntegralResult res = solve_normalized_integral(dd);
    if (const auto* inf = std::get_if<Infeasible>(&res)) {
      detail::print_infeasible(out, sf, datum, *inf);
      return kExitInfeasible;
    }
    const auto& theta = std::get<IntegralCandidate>(res);
    out << "datum " << datum << ": normalized integral found\n";
    detail::print_theta(out, sf, datum, theta);
    if (!opt.out.empty()) {
      sf.put(datum + "_integral", encode_integral(theta, datum));
      sf.save(opt.out);
    }
    return kExitOk;
  });
}

inline int cmd_certify(const std::string& path, const std::string& datum, const std::vector<std::string>& modules,
                       const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    StructureFile sf = StructureFile::load(path, opt.field);
    const DoiDatum dd = sf.datum(datum);
    std::vector<std::pair<std::string, DoiModule>> tests;
    for (const auto& m : modules) {
      if (sf.ref(m, "datum", {"datum"}) != datum) throw ParseError("module '" + m + "' is not over datum '" + datum + "'");
      tests.emplace_back(m, sf.doi_module(m));
    }
    const SeparabilityResult res = separability_report(dd, tests);
    if (const auto* inf = std::get_if<Infeasible>(&res)) {
      detail::print_infeasible(out, sf, datum, *inf);
      return kExitInfeasible;
    }
    const auto& cert = std::get<SeparabilityCertificate>(res);
    out << "datum " << datum << ": normalized integral found\n";
    Json mods = Json::object();
    for (const auto& cm : cert.modules) {
      detail::print_report(out, "retraction on " + cm.name, cm.report, opt.verbose);
      mods[cm.name] = {{"passed", cm.passed()}, {"violations", cm.report.violations().size()}};
    }
    if (!opt.out.empty()) {
      Json obj = encode_integral(cert.theta, datum);
      obj["kind"] = "separability_certificate";
      obj["modules"] = std::move(mods);
      sf.put(datum + "_certificate", std::move(obj));
      sf.save(opt.out);
    }
    return cert.passed() ? kExitOk : kExitCheckFailed;
  });
}

/// Splits f using g: a section when f g = id, a retraction when g f = id.
/// The integral comes from `integral` if named, otherwise from the solver.
inline int cmd_split(const std::string& path, const std::string& datum, const std::string& f_name,
                     const std::string& g_name, const std::string& integral, const CommandOptions& opt,
                     std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    StructureFile sf = StructureFile::load(path, opt.field);
    const DoiDatum dd = sf.datum(datum);
    const std::string m_name = sf.ref(f_name, "source", {"doi_module"});
    const std::string n_name = sf.ref(f_name, "target", {"doi_module"});
    const DoiModule m = sf.doi_module(m_name), n = sf.doi_module(n_name);
    const Matrix f = sf.linear_map(f_name), g = sf.linear_map(g_name);
    if (f.rows() != n.dim() || f.cols() != m.dim() || g.rows() != m.dim() || g.cols() != n.dim()) {
      throw ParseError("split: " + g_name + " must go from " + n_name + " to " + m_name);
    }
    IntegralResult res = integral.empty() ? solve_normalized_integral(dd) : IntegralResult(sf.integral(integral));
    if (!integral.empty() && sf.ref(integral, "datum") != datum) {
      throw ParseError("integral '" + integral + "' is for another datum");
    }
    if (const auto* inf = std::get_if<Infeasible>(&res)) {
      detail::print_infeasible(out, sf, datum, *inf);
      return kExitInfeasible;
    }
    const IntegralCandidate& theta = std::get<IntegralCandidate>(res);
    const bool epi = compose(f, g) == Matrix::identity(dd.field(), n.dim());
    const Splitting s = epi ? split_epimorphism(f, g, m, n, theta, dd, opt.max_twist_power)
                            : split_monomorphism(f, g, m, n, theta, dd, opt.max_twist_power);
    out << (epi ? "section" : "retraction") << " of " << f_name << " found with twist powers j=" << s.pre_power
        << " k=" << s.post_power << "\n";
    detail::print_report(out, "verification", s.verification, opt.verbose);
    if (!opt.out.empty()) {
      sf.put(g_name + "_split", encode_linear_map(s.map, n_name, m_name));
      sf.save(opt.out);
    }
    return kExitOk;
  });
}

inline int cmd_twist(const std::string& path, const std::string& hopf, const std::string& automorphism,
                     const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    StructureFile sf = StructureFile::load(path, opt.field);
    const HomHopfAlgebra twisted = yau_twist(sf.hopf(hopf), sf.linear_map(automorphism));
    sf.put(hopf + "_twisted", encode_hopf(twisted, sf.basis(hopf)));
    detail::write_or_print(sf, opt, out);
    return kExitOk;
  });
}

/// Emits a built-in structure file; "list" prints the available names.
inline int cmd_examples(const std::string& name, const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (name == "list") {
      for (const auto& n : builtin_example_names()) out << n << "\n";
      return kExitOk;
    }
    detail::write_or_print(builtin_example(name, opt.field.value_or(Field::rationals())), opt, out);
    return kExitOk;
  });
}

}  // namespace homhopf

#endif  // HOMHOPF_COMMANDS_HPP
