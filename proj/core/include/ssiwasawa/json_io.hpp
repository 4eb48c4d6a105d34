#pragma once

#include <nlohmann/json.hpp>

#include "ssiwasawa/growth.hpp"
#include "ssiwasawa/modules.hpp"
#include "ssiwasawa/padic.hpp"
#include "ssiwasawa/series.hpp"

namespace ssiw {

/// Scalars: {"u": "<decimal unit>", "v": <valuation>} is exact; adding
/// "r": k means the unit is only known mod p^k ("r": 0 is O(p^v)); exact zero
/// is {"u": "0", "v": null}. Bare integers and decimal strings are accepted
/// as exact values. Malformed input throws ParseError.
PadicScalar scalar_from_json(const PadicContext& ctx, const nlohmann::json& j);
nlohmann::json scalar_to_json(const PadicScalar& x);

/// Series: {"p", "N", "D", "coeffs": [scalar, ...]} with at most D + 1
/// coefficients, missing ones exact zero. "exact" (optional) marks the
/// series polynomial-exact; it defaults to true when every coefficient is.
IwasawaSeries series_from_json(const nlohmann::json& j);
nlohmann::json series_to_json(const IwasawaSeries& g);

/// Matrix data: {"d", "entries": [[series]], "tY": series}.
PlusMinusLData matrix_from_json(const nlohmann::json& j);

/// Growth parameters; the field names are the GrowthParams member names,
/// "variant" is "as-stated" or "proof-derived" and "hypotheses" an object
/// with boolean "S", "G", "W", "B".
GrowthParams growth_params_from_json(const nlohmann::json& j);
nlohmann::json growth_params_to_json(const GrowthParams& params);

} // namespace ssiw
