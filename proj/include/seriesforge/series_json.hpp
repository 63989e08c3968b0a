#pragma once

#include <json.hpp>

#include "seriesforge/bigint.hpp"
#include "seriesforge/exp_series.hpp"

namespace seriesforge {

/// Integer as a JSON number when it fits the 53-bit safe range, else as a
/// decimal string.
nlohmann::json integer_to_json(const BigInt& value);
BigInt integer_from_json(const nlohmann::json& j);

/// {"order": N, "constant": "c0", "coeffs": ["c1", ..., "cN"]}; each entry is
/// an exact "num/den" string ("n" when the denominator is 1).
nlohmann::json to_json(const ExpSeries<BigRational>& series);
/// Inverse of to_json; "constant" is optional and defaults to 0.
ExpSeries<BigRational> series_from_json(const nlohmann::json& j);

}  // namespace seriesforge
