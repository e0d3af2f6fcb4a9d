#pragma once

#include <json.hpp>

#include "uniton/lambdamat.hpp"

namespace uniton {

// {"n": n, "entries": [[{"0": "<rf>", "1": "<rf>"}, ...], ...]}
nlohmann::json lmat_to_json(const LambdaMatrix &m);
// Throws SchemaError on malformed documents.
LambdaMatrix lmat_from_json(const nlohmann::json &doc);

nlohmann::json lpoly_to_json(const LambdaPoly &p);
LambdaPoly lpoly_from_json(const nlohmann::json &doc);

}  // namespace uniton
