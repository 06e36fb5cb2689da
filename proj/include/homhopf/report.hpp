#ifndef HOMHOPF_REPORT_HPP
#define HOMHOPF_REPORT_HPP

#include "homhopf/matrix.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homhopf {

/// One failing instance of an identity: the basis multi-index it was
/// evaluated on and the exact difference LHS - RHS.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  Vector residual;
};

class AxiomReport {
 public:
  bool passed() const noexcept { return violations_.empty(); }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

  void add(Violation v) { violations_.push_back(std::move(v)); }

  void merge(const AxiomReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
  }

  bool has(std::string_view axiom) const {
    for (const auto& v : violations_) {
      if (v.axiom == axiom) return true;
    }
    return false;
  }

  /// Distinct axiom names in first-failure order.
  std::vector<std::string> failed_axioms() const {
    std::vector<std::string> out;
    for (const auto& v : violations_) {
      bool seen = false;
      for (const auto& s : out) seen = seen || s == v.axiom;
      if (!seen) out.push_back(v.axiom);
    }
    return out;
  }

  std::string summary() const {
    if (passed()) return "passed";
    std::ostringstream os;
    os << violations_.size() << " violation(s):";
    for (const auto& a : failed_axioms()) os << " [" << a << "]";
    return os.str();
  }

  friend bool operator==(const AxiomReport& a, const AxiomReport& b) {
    if (a.violations_.size() != b.violations_.size()) return false;
    for (std::size_t i = 0; i < a.violations_.size(); ++i) {
      const auto& x = a.violations_[i];
      const auto& y = b.violations_[i];
      if (x.axiom != y.axiom || x.indices != y.indices || x.residual != y.residual) return false;
    }
    return true;
  }

 private:
  std::vector<Violation> violations_;
};

/// Thrown by constructors that must hand back a verified structure.
class CheckFailure : public std::runtime_error {
 public:
  CheckFailure(const std::string& what, AxiomReport report)
      : std::runtime_error(what + ": " + report.summary()), report_(std::move(report)) {}

  const AxiomReport& report() const noexcept { return report_; }

 private:
  AxiomReport report_;
};

/// Evaluates lhs and rhs on every multi-index of the given ranges and records
/// each nonzero difference.
inline void check_identity(AxiomReport& report, const std::string& axiom, const std::vector<std::size_t>& ranges,
                           const std::function<Vector(const std::vector<std::size_t>&)>& lhs,
                           const std::function<Vector(const std::vector<std::size_t>&)>& rhs) {
  std::size_t total = 1;
  for (auto r : ranges) total *= r;
  std::vector<std::size_t> idx(ranges.size(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t k = ranges.size(); k-- > 0;) {
      idx[k] = rest % ranges[k];
      rest /= ranges[k];
    }
    Vector diff = lhs(idx) - rhs(idx);
    if (!is_zero(diff)) report.add({axiom, idx, std::move(diff)});
  }
}

/// Records the columns where two matrices of equal shape differ.
inline void check_matrix_identity(AxiomReport& report, const std::string& axiom, const Matrix& lhs,
                                  const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw DimensionError(axiom + ": shapes " + lhs.shape() + " and " + rhs.shape() + " differ");
  }
  for (std::size_t c = 0; c < lhs.cols(); ++c) {
    Vector diff = lhs.col(c) - rhs.col(c);
    if (!is_zero(diff)) report.add({axiom, {c}, std::move(diff)});
  }
}

}  // namespace homhopf

#endif  // HOMHOPF_REPORT_HPP
