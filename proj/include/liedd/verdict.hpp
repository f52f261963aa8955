#pragma once

#include <string>
#include <vector>

#include "liedd/polynomial.hpp"
#include "liedd/scalar.hpp"

namespace liedd {

enum class Status { Holds, Fails, Conditional };

std::string to_string(Status s);

struct Condition {
  Polynomial poly;              // normalized
  std::vector<Rational> roots;  // rational roots when univariate
};

/// Accumulates nonzero evaluations of a parametric check. The check holds at
/// a parameter point iff every collected numerator vanishes there.
class ConditionCollector {
 public:
  void add(const Scalar& value);
  void add(const Vector& value);

  bool any_nonzero() const { return any_nonzero_; }
  /// Some evaluation was a nonzero constant, or the conditions share no zero.
  bool unsatisfiable() const;
  /// Normalized, deduplicated conditions; univariate sets collapse to their gcd.
  std::vector<Condition> conditions() const;
  Status status() const;

 private:
  void add_numerator(const Polynomial& p);

  bool any_nonzero_ = false;
  bool constant_seen_ = false;
  std::vector<Polynomial> polys_;
};

}  // namespace liedd
