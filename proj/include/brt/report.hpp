#pragma once

#include <string>

#include <json.hpp>

#include "brt/brauer.hpp"

namespace brt {

inline constexpr const char* kToolName = "brt";
inline constexpr const char* kToolVersion = "0.1.0";

// Human-readable block, one "key: value" line per field.
std::string report_to_text(const RestrictionReport& report);

// Machine-readable mirror of RestrictionReport; image_index is null when
// infinite. Integers that fit in 64 bits are JSON numbers, larger ones are
// decimal strings.
nlohmann::json report_to_json(const RestrictionReport& report);
RestrictionReport report_from_json(const nlohmann::json& j);

// Provenance block: spec string, order, and the canonical class order.
nlohmann::json group_provenance_json(const std::string& spec, const PermGroup& g,
                                     std::uint64_t cap = kDefaultEnumerationCap);

// Line-oriented exact table dump (class header, then one row per
// irreducible) and its structured mirror.
std::string table_to_text(const CharacterTable& table);
nlohmann::json table_to_json(const CharacterTable& table);

nlohmann::json integer_to_json(const Integer& n);
Integer integer_from_json(const nlohmann::json& j);

}  // namespace brt
