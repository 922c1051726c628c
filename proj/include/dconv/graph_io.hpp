#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dconv/graph.hpp"

namespace dconv {

// {"name": "K3", "n": 3, "edges": [[0,1], [0,2], [1,2]]}
// Edges are written u<v in lexicographic order. Members of `extra` are
// appended after "edges" in their own order.
std::string graph_to_json(const Graph& g, const nlohmann::ordered_json& extra = nlohmann::ordered_json::object());

// Accepts the JSON form above (extra members ignored) or a plain edge list:
// first line n, then one "u v" pair per line. Blank lines and lines starting
// with '#' are skipped in the edge list form.
Graph parse_graph(std::string_view text);

Graph load_graph(const std::filesystem::path& file);
void save_text(const std::filesystem::path& file, const std::string& content);

}  // namespace dconv
