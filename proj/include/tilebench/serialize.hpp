#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tilebench/constructions.hpp"
#include "tilebench/extremal.hpp"
#include "tilebench/tiling.hpp"

namespace tilebench {

inline constexpr int kSchemaVersion = 1;

/// {"pattern": name, "vertices": [...]} with vertices in canonical label order.
nlohmann::json to_json(const Embedding& e);
/// {"members": [...], "coverage": n}
nlohmann::json to_json(const Tiling& t);
nlohmann::json to_json(const PairConfig& c);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const FixtureReport& r);
nlohmann::json to_json(const ConstructionSpec& spec, const MatchingVerdict& v);

/// Inverse of to_json(Tiling); throws std::invalid_argument on bad input.
Tiling tiling_from_json(const nlohmann::json& j);

/// Writes `text` to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace tilebench
