#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "liedd/acceptance.hpp"
#include "liedd/catalog.hpp"
#include "liedd/derivations.hpp"
#include "liedd/identities.hpp"
#include "liedd/tables.hpp"

namespace liedd::report {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

inline constexpr int kSchema = 1;

Json catalog_list(const Catalog& catalog);
Json show(const LieAlgebra& g);
Json invariants(const LieAlgebra& g);
Json derivations(const LieAlgebra& g, const std::optional<Scalar>& t);
Json identity(const LieAlgebra& g, const IdentityReport& r);
Json rmatrix(const LieAlgebra& g, const LinearMap& r, const std::optional<Vector>& z, bool with_double);
Json table1(const std::vector<TableRow>& rows);
Json check_paper(const std::vector<CriterionResult>& results);

/// Inverse of identity() for an algebra with the same parameters.
IdentityReport identity_from_json(const LieAlgebra& g, const Json& j);

/// Square matrix given as a JSON array of rows; entries are numbers or
/// scalar literals. Unknown identifiers are appended to `extend` if given.
LinearMap parse_map(const std::string& text, const LieAlgebra& g, std::vector<std::string>* extend = nullptr);

std::string render(const Json& j, Format f);
Format parse_format(const std::string& text);

}  // namespace liedd::report
