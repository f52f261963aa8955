#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "liedd/lie_algebra.hpp"

namespace liedd {

using Assignments = std::map<std::string, Rational>;

struct CatalogEntry {
  enum class Recipe { ExplicitConstants, MatrixRealization, DerivationsOfBilinear, DirectSum, Filiform, Loaded };

  std::string name;
  std::string summary;
  Recipe recipe = Recipe::ExplicitConstants;
  std::vector<std::string> params;          // scalar parameters of the family
  std::vector<std::string> integer_params;  // size parameters (required)
  /// Values where the verdicts of the family split off from the generic ones.
  std::map<std::string, std::vector<Rational>> special_values;
  /// Named elements, e.g. a highest-root vector, in element syntax.
  std::map<std::string, std::string> elements;
  std::function<LieAlgebra(const Assignments&)> build;
};

std::string to_string(CatalogEntry::Recipe r);

class Catalog {
 public:
  static Catalog builtin();

  /// Throws DuplicateName.
  void add(CatalogEntry entry);
  /// Loads a structure-constant file and adds its entries.
  void merge_file(const std::string& path);

  bool contains(const std::string& name) const;
  /// Throws UnknownName.
  const CatalogEntry& entry(const std::string& name) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }

  /// Materializes an entry; scalar parameters may be assigned partially,
  /// size parameters are required. Throws UnknownName, ExcludedParameterValue,
  /// DenominatorVanishes.
  LieAlgebra get(const std::string& name, const Assignments& assignments = {}) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// JSON structure-constant files: a list of {name, dim, params?, brackets:
/// [{i, j, value: {k: literal}}]} with 1-based indices and i < j.
std::vector<LieAlgebra> parse_catalog_json(const std::string& text);
std::vector<LieAlgebra> load_file(const std::string& path);
std::string save_catalog_json(const std::vector<LieAlgebra>& algebras);

/// Parses "k=v" (v a rational literal).
std::pair<std::string, Rational> parse_assignment(const std::string& text);

// Constructions used by the built-in entries.
LieAlgebra filiform_algebra(std::size_t n);
LieAlgebra abelian_algebra(std::size_t n);
BilinearAlgebra split_octonions();
BilinearAlgebra quaternions();

}  // namespace liedd
