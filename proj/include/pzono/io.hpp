#pragma once

// JSON exchange formats.
//
//   set:       {"dim": n, "center": [...], "indep_generators": [[n numbers], ...],
//               "dep_generators": [[n numbers], ...], "exponents": [[r ints], ...]}
//   halfspace: {"normal": [...], "offset": x}
//   graph:     {"n": int, "edges": [[i, j], ...]}   (1-based, i < j)
//
// Readers throw RepresentationError naming the offending field (and the line
// for syntax errors). Writers emit canonical form.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pzono/hardness.hpp"
#include "pzono/sets.hpp"

namespace pzono::io {

using json = nlohmann::json;

PolyZonotope parse_polyzonotope(const json& j);
Halfspace parse_halfspace(const json& j);
Graph parse_graph(const json& j);

json to_json(const PolyZonotope& pz);
json to_json(const Halfspace& hs);
json to_json(const Graph& g);

/// Parse text as JSON; syntax errors become RepresentationError with line and column.
json parse_text(const std::string& text, const std::string& source = "<input>");
json read_json_file(const std::filesystem::path& path);

PolyZonotope read_polyzonotope(const std::filesystem::path& path);
Halfspace read_halfspace(const std::filesystem::path& path);
Graph read_graph(const std::filesystem::path& path);

/// Write via a temporary sibling file and rename. Throws std::runtime_error on failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace pzono::io
