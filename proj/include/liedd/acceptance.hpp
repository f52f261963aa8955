#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liedd/catalog.hpp"

namespace liedd {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

struct AcceptanceOptions {
  /// Structure-constant file holding the glambda family; when empty the
  /// family is serialized and re-read in memory.
  std::string table2_file;
  unsigned seed = 20240611;
};

/// Expected marks for the verdict table rows, in row order.
const std::vector<std::pair<std::string, std::array<bool, 4>>>& table1_golden();

/// Parameter-free algebras used by the property suites: fixed entries,
/// parametric families at sample values, filiform f_3..f_9, small abelian.
std::vector<LieAlgebra> property_sample(const Catalog& catalog);

CriterionResult run_criterion(int number, const Catalog& catalog, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const Catalog& catalog, const AcceptanceOptions& options = {});

/// First ad-nilpotent element among basis vectors, then e_i + e_j, e_i - e_j.
std::optional<Vector> find_nilpotent_element(const LieAlgebra& g);

}  // namespace liedd
