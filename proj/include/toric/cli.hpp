/**
 * Command-line front end: faces, classify, ehrhart, cohomology and verify.
 */
#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "toric/polytope.hpp"

namespace toric {

/// Exit codes of the `toric` tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInputError = 2 };

/// Reads {"vertices": [[...], ...]} with an optional "facets" list of
/// {"normal": [...], "offset": a}. Given facets bypass the convex hull and
/// are taken verbatim. Throws ToricError on malformed content.
LatticePolytope polytope_from_json(const nlohmann::json& doc);

/// 64-bit FNV-1a of `text`, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

/// Integers within 2^53 become JSON numbers, larger ones strings.
nlohmann::json integer_to_json(const Integer& v);

/// Runs the tool with the given arguments (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toric
