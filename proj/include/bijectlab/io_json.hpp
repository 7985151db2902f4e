#pragma once

#include <nlohmann/json_fwd.hpp>
#include <utility>

#include "bijectlab/deals.hpp"
#include "bijectlab/matrices.hpp"
#include "bijectlab/paths.hpp"

namespace bijectlab::io {

// Canonical deal object:
//   {"dealt": [1,2], "hands": {"blue": ["1G"], ...}, "kind": "franel", "n": 2}
// Hands are sorted by (denomination, color R < G < B), dealt ascending, kind
// is the most specific kind the deal satisfies, keys alphabetical.
nlohmann::json deal_to_json(const deals::Deal& deal);

// Returns the deal plus its declared kind. Throws std::invalid_argument on
// malformed tokens, duplicated or missing cards, or denominations outside
// [1..n]; does not check hand-size invariants (validate_deal does).
std::pair<deals::Deal, deals::DealKind> deal_from_json(const nlohmann::json& j);

// {"bottom": "31132", "n": 5, "top": "13132"}
nlohmann::json matrix_to_json(const matrices::TwoRowMatrix& m);
matrices::TwoRowMatrix matrix_from_json(const nlohmann::json& j);

// {"n": 5, "steps": "U2D2F1F5F2"}
nlohmann::json path_to_json(const paths::HannaPath& p);
paths::HannaPath path_from_json(const nlohmann::json& j);

}  // namespace bijectlab::io
