#include "liedd/verdict.hpp"

#include <algorithm>
#include <optional>

namespace liedd {

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::Conditional: return "Conditional";
  }
  return "?";
}

void ConditionCollector::add(const Scalar& value) {
  if (value.is_zero()) return;
  any_nonzero_ = true;
  if (constant_seen_) return;
  add_numerator(value.numerator());
}

void ConditionCollector::add(const Vector& value) {
  for (const auto& s : value) add(s);
}

void ConditionCollector::add_numerator(const Polynomial& p) {
  if (p.is_constant()) {
    constant_seen_ = true;
    polys_.clear();
    return;
  }
  Polynomial n = poly_normalize(p);
  if (std::find(polys_.begin(), polys_.end(), n) == polys_.end()) polys_.push_back(std::move(n));
}

namespace {

std::optional<VarId> common_variable(const std::vector<Polynomial>& polys) {
  std::optional<VarId> var;
  for (const auto& p : polys) {
    const auto vs = p.variables();
    if (vs.size() != 1) return std::nullopt;
    if (var && *var != vs.front()) return std::nullopt;
    var = vs.front();
  }
  return var;
}

}  // namespace

bool ConditionCollector::unsatisfiable() const {
  if (constant_seen_) return true;
  if (polys_.empty()) return false;
  if (!common_variable(polys_)) return false;
  Polynomial g = polys_.front();
  for (std::size_t i = 1; i < polys_.size(); ++i) g = gcd_univariate(g, polys_[i]);
  return g.is_constant();
}

std::vector<Condition> ConditionCollector::conditions() const {
  std::vector<Condition> out;
  if (constant_seen_ || polys_.empty()) return out;
  if (common_variable(polys_)) {
    Polynomial g = polys_.front();
    for (std::size_t i = 1; i < polys_.size(); ++i) g = gcd_univariate(g, polys_[i]);
    if (g.is_constant()) return out;
    g = poly_normalize(g);
    out.push_back({g, rational_roots(g).roots});
    return out;
  }
  std::vector<Polynomial> sorted = polys_;
  std::sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.to_string() < b.to_string();
  });
  for (auto& p : sorted) {
    Condition c{p, {}};
    if (p.variables().size() == 1) c.roots = rational_roots(p).roots;
    out.push_back(std::move(c));
  }
  return out;
}

Status ConditionCollector::status() const {
  if (!any_nonzero_) return Status::Holds;
  if (unsatisfiable()) return Status::Fails;
  return Status::Conditional;
}

}  // namespace liedd
