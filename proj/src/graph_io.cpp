#include "dconv/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace dconv {

std::string graph_to_json(const Graph& g, const nlohmann::ordered_json& extra) {
  std::string out = "{\"name\": " + nlohmann::json(g.name()).dump() +
                    ", \"n\": " + std::to_string(g.order()) + ", \"edges\": [";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ", ";
    out += "[" + std::to_string(u) + "," + std::to_string(v) + "]";
    first = false;
  }
  out += "]";
  for (const auto& [key, value] : extra.items()) {
    out += ", " + nlohmann::json(key).dump() + ": " + value.dump();
  }
  return out + "}\n";
}

namespace {

Graph parse_json_graph(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  std::vector<Edge> edges;
  for (const auto& pair : doc.at("edges")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw GraphError("edge entry " + pair.dump() + " is not a [u,v] pair");
    }
    edges.emplace_back(pair[0].get<Vertex>(), pair[1].get<Vertex>());
  }
  return Graph::from_edges(doc.at("n").get<std::size_t>(), edges, doc.value("name", ""));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    if (!n) {
      std::size_t count = 0;
      if (!(fields >> count)) throw GraphError("line " + std::to_string(line_no) + ": expected n");
      n = count;
      continue;
    }
    long long u = -1;
    long long v = -1;
    if (!(fields >> u >> v) || u < 0 || v < 0) {
      throw GraphError("line " + std::to_string(line_no) + ": expected a 'u v' pair");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw GraphError("edge list is missing the vertex count");
  return Graph::from_edges(*n, edges);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') return parse_json_graph(text);
  return parse_edge_list(text);
}

Graph load_graph(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  Graph g = parse_graph(buffer.str());
  if (g.name().empty()) g = g.renamed(file.stem().string());
  return g;
}

void save_text(const std::filesystem::path& file, const std::string& content) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

}  // namespace dconv
