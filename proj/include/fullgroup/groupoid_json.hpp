#pragma once

#include <json.hpp>

#include "fullgroup/groupoid.hpp"

namespace fullgroup {

/// Serializes a groupoid: unit and arrow lists keyed by label, plus the
/// composition entries between non-unit arrows (unit-law compositions are
/// implied and re-derived on load).
nlohmann::json groupoid_to_json(const FiniteGroupoid& g);

/// Inverse of groupoid_to_json; throws std::invalid_argument on structural
/// problems (unknown ids, duplicates, non-unit ranges...).  The result is
/// *not* guaranteed to satisfy the groupoid axioms -- run validate().
FiniteGroupoid groupoid_from_json(const nlohmann::json& j);

/// Reads and parses a JSON file.  Throws std::invalid_argument on I/O or
/// parse failure.
FiniteGroupoid load_groupoid_file(const std::string& path);

}  // namespace fullgroup
