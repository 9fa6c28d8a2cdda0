#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tnn_cells/cells.hpp"
#include "tnn_cells/combinat.hpp"
#include "tnn_cells/matrix.hpp"
#include "tnn_cells/minors.hpp"
#include "tnn_cells/poisson.hpp"
#include "tnn_cells/restoration.hpp"

namespace tnn {

using json = nlohmann::ordered_json;

/// {"m":4,"p":4,"black":[[1,2],[2,1],[2,2]]}
json to_json(const CauchonDiagram& c);
CauchonDiagram diagram_from_json(const json& j);

/// {"m":3,"p":4,"w":[3,1,4,2,7,6,5]}
json to_json(const RestrictedPermutation& w);
RestrictedPermutation perm_from_json(const json& j);

/// {"rows":[1,2],"cols":[1,3]}
json to_json(const MinorId& id);
MinorId minor_from_json(const json& j);

/// Sorted array of minor objects.
json to_json(const MinorFamily& f);
MinorFamily family_from_json(int m, int p, const json& j);

json to_json(const TnnVerdict& v);
json to_json(const CellDescriptor& c);
json to_json(const MatchedPair& pair);
json to_json(const StepBracketReport& r);

/// One-line permutation text `3,1,4,2,7,6,5`.
std::vector<int> parse_one_line(std::string_view text);

/// CSV of `num/den` entries, one matrix row per line; blank lines and lines
/// starting with '#' are skipped.
RationalMatrix parse_matrix_csv(std::string_view text);
std::string matrix_to_csv(const RationalMatrix& m);

/// Symbolic matrix as a JSON array of rows of canonical polynomial strings.
json to_json(const LaurentMatrix& m);

}  // namespace tnn
