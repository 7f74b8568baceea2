#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tabcompare/errors.hpp"
#include "tabcompare/score.hpp"

namespace tabcompare {

using Json = nlohmann::ordered_json;

/// Serializes a score in the canonical interchange format: fixed key order,
/// 2-space indentation, trailing newline. Deterministic.
std::string write_canonical(const Score& score);

/// Parses the canonical interchange format and validates the result.
/// Throws ParseError (line/column for syntax errors, a JSON path otherwise).
Score read_canonical(std::string_view text);

/// True if the first non-whitespace character is '{'.
bool looks_canonical(std::string_view text);

// JSON building blocks shared with the comparison document.
Json to_json(const Note& note);
Json to_json(const Beat& beat);
Json to_json(const Bar& bar);
Json to_json(const Track& track);

/// `path` is used in error messages, e.g. "tracks[0]".
Track track_from_json(const Json& j, const std::string& path);
Bar bar_from_json(const Json& j, int index, const Tuning& tuning, const std::string& path);
Json techniques_to_json(const TechniqueSet& techniques);
TechniqueSet techniques_from_json(const Json& j, const std::string& path);

}  // namespace tabcompare
