#include "liedd/tables.hpp"

namespace liedd {

namespace {

constexpr std::array<IdentityId, 4> kColumns{IdentityId::Id1, IdentityId::Id2, IdentityId::Id3, IdentityId::Id4};

std::string join_values(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ", ";
    out += v.get_str();
  }
  return out;
}

}  // namespace

const std::vector<std::string>& table1_entries() {
  static const std::vector<std::string> names{"r2",         "n3",         "r3_lambda", "sl2", "n3_plus_Q",
                                              "n4",         "r2_plus_Q2", "r2_plus_r2", "sl2_plus_Q", "g1",
                                              "g2_alpha",   "g3",         "g4_alpha_beta", "g5_alpha"};
  return names;
}

std::array<IdentityReport, 4> natural_reports(const LieAlgebra& g) {
  std::array<IdentityReport, 4> out;
  for (std::size_t c = 0; c < 4; ++c) out[c] = check_quantified(g, kColumns[c], default_quantifier(kColumns[c]));
  return out;
}

std::vector<TableRow> table1(const Catalog& catalog) {
  std::vector<TableRow> rows;
  for (const auto& name : table1_entries()) {
    const CatalogEntry& entry = catalog.entry(name);
    const LieAlgebra g = catalog.get(name);
    TableRow generic;
    generic.entry = name;
    generic.label = name;
    const auto reports = natural_reports(g);
    for (std::size_t c = 0; c < 4; ++c) {
      generic.statuses[c] = reports[c].status;
      generic.marks[c] = reports[c].status == Status::Holds;
    }
    if (entry.special_values.empty()) {
      rows.push_back(std::move(generic));
      continue;
    }
    // one parameter with special values per split entry
    const auto& [param, values] = *entry.special_values.begin();
    generic.label = name + " (" + param + " != " + join_values(values) + ")";
    rows.push_back(std::move(generic));

    TableRow special;
    special.entry = name;
    special.label = name + " (" + param + " = " + join_values(values) + ")";
    special.marks = {true, true, true, true};
    for (const auto& v : values) {
      const Assignments at{{param, v}};
      special.specializations.push_back(at);
      const auto sr = natural_reports(catalog.get(name, at));
      for (std::size_t c = 0; c < 4; ++c) special.marks[c] = special.marks[c] && sr[c].status == Status::Holds;
    }
    special.statuses = {Status::Holds, Status::Holds, Status::Holds, Status::Holds};
    for (std::size_t c = 0; c < 4; ++c) {
      if (!special.marks[c]) special.statuses[c] = Status::Fails;
    }
    rows.push_back(std::move(special));
  }
  return rows;
}

}  // namespace liedd
