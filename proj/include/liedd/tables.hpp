#pragma once

#include <array>
#include <string>
#include <vector>

#include "liedd/catalog.hpp"
#include "liedd/identities.hpp"

namespace liedd {

struct TableRow {
  std::string label;      // e.g. "g5_alpha (alpha != 0, -1)"
  std::string entry;      // catalog name
  std::vector<Assignments> specializations;  // empty: generic; else all must hold
  std::array<bool, 4> marks{};               // identities (1), (2), (3), (4)
  std::array<Status, 4> statuses{};          // per column; specialized rows report Holds or Fails
};

/// Catalog names of the low-dimensional verdict table, in row order.
const std::vector<std::string>& table1_entries();

/// One generic row per entry; entries with special values get a second row
/// that specializes at every listed value and requires each to hold.
std::vector<TableRow> table1(const Catalog& catalog);

/// Marks (1),(2),(3),(4) under their natural quantifiers.
std::array<IdentityReport, 4> natural_reports(const LieAlgebra& g);

}  // namespace liedd
