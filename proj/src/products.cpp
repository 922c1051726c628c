#include "dconv/products.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "dconv/independence.hpp"

namespace dconv {

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::Cartesian:
      return "cartesian";
    case ProductKind::Strong:
      return "strong";
    case ProductKind::Lexicographic:
      return "lex";
  }
  return "unknown";
}

std::optional<ProductKind> parse_product_kind(std::string_view name) {
  if (name == "cartesian") return ProductKind::Cartesian;
  if (name == "strong") return ProductKind::Strong;
  if (name == "lex" || name == "lexicographic") return ProductKind::Lexicographic;
  return std::nullopt;
}

namespace {

bool joined(const Graph& g, const Graph& h, ProductKind kind, Vertex g1, Vertex h1, Vertex g2,
            Vertex h2) {
  const bool g_edge = g.adjacent(g1, g2);
  const bool h_edge = h.adjacent(h1, h2);
  switch (kind) {
    case ProductKind::Cartesian:
      return (g_edge && h1 == h2) || (g1 == g2 && h_edge);
    case ProductKind::Strong:
      return (g_edge && h1 == h2) || (g1 == g2 && h_edge) || (g_edge && h_edge);
    case ProductKind::Lexicographic:
      return g_edge || (g1 == g2 && h_edge);
  }
  return false;
}

Graph build(const Graph& g, const Graph& h, ProductKind kind) {
  if (g.order() == 0 || h.order() == 0) {
    throw std::invalid_argument("product factors must have at least one vertex");
  }
  const std::size_t nh = h.order();
  const std::size_t n = g.order() * nh;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (joined(g, h, kind, u / nh, u % nh, v / nh, v % nh)) edges.emplace_back(u, v);
    }
  }
  const char* symbol = kind == ProductKind::Cartesian ? " [] "
                       : kind == ProductKind::Strong  ? " [x] "
                                                      : " o ";
  return Graph::from_edges(n, edges, "(" + g.name() + ")" + symbol + "(" + h.name() + ")");
}

}  // namespace

ProductGraph::ProductGraph(Graph g, Graph h, ProductKind kind)
    : g_(std::move(g)), h_(std::move(h)), kind_(kind), graph_(build(g_, h_, kind_)) {}

nlohmann::ordered_json ProductGraph::metadata() const {
  using J = nlohmann::ordered_json;
  return J{{"kind", to_string(kind_)},
           {"factors", J::array({J{{"name", g_.name()}, {"n", g_.order()}},
                                 J{{"name", h_.name()}, {"n", h_.order()}}})},
           {"encoding", "g*" + std::to_string(h_.order()) + "+h"}};
}

ProductGraph product(const Graph& g, const Graph& h, ProductKind kind) {
  return ProductGraph(g, h, kind);
}

VertexSet layer(const ProductGraph& p, Factor fiber, Vertex anchor) {
  const auto& g = p.g_factor();
  const auto& h = p.h_factor();
  VertexSet out(p.graph().order());
  if (fiber == Factor::G) {
    if (anchor >= h.order()) throw std::out_of_range("G-layer anchor outside V(H)");
    for (Vertex x = 0; x < g.order(); ++x) out.insert(p.encode(x, anchor));
  } else {
    if (anchor >= g.order()) throw std::out_of_range("H-layer anchor outside V(G)");
    for (Vertex y = 0; y < h.order(); ++y) out.insert(p.encode(anchor, y));
  }
  return out;
}

VertexSet projection(const ProductGraph& p, Factor onto, const VertexSet& s) {
  VertexSet out(onto == Factor::G ? p.g_factor().order() : p.h_factor().order());
  for (Vertex v : s.members()) {
    auto [x, y] = p.decode(v);
    out.insert(onto == Factor::G ? x : y);
  }
  return out;
}

std::optional<EdgeVertexWitness> edge_vertex_witness(const Graph& h) {
  const auto dist = distance_matrix(h);
  for (auto [u, v] : h.edges()) {
    for (Vertex x = 0; x < h.order(); ++x) {
      if (dist[u][x] >= 2 && dist[v][x] >= 2) return EdgeVertexWitness{{u, v}, x};
    }
  }
  return std::nullopt;
}

VertexSet cartesian_e_witness(const Graph& g, const VertexSet& s1, Vertex pivot_g, const Graph& h,
                              const VertexSet& s2, Vertex pivot_h) {
  if (s1.size() <= 2 || s2.size() <= 2) {
    throw std::invalid_argument("exchange witness needs factor sets of size > 2");
  }
  if (!exchange_witness_for_pivot(g, s1, pivot_g)) {
    throw std::invalid_argument("vertex " + std::to_string(pivot_g) + " is not an exchange pivot of " +
                                s1.to_string() + " in G");
  }
  if (!exchange_witness_for_pivot(h, s2, pivot_h)) {
    throw std::invalid_argument("vertex " + std::to_string(pivot_h) + " is not an exchange pivot of " +
                                s2.to_string() + " in H");
  }
  const std::size_t nh = h.order();
  VertexSet out(g.order() * nh);
  for (Vertex x : s1.members()) {
    if (x == pivot_g) continue;
    for (Vertex y : s2.members()) {
      if (y != pivot_h) out.insert(x * nh + y);
    }
  }
  out.insert(pivot_g * nh + pivot_h);
  return out;
}

VertexSet cartesian_c_witness(const Graph& g, const VertexSet& s1, const Graph& h,
                              const VertexSet& s2) {
  if (s1.size() <= 2 || s2.size() <= 2) {
    throw std::invalid_argument("Caratheodory witness needs factor sets of size > 2");
  }
  if (!is_c_independent(g, s1).independent || !is_c_independent(h, s2).independent) {
    throw std::invalid_argument("Caratheodory witness needs independent factor sets");
  }
  const std::size_t nh = h.order();
  VertexSet out(g.order() * nh);
  for (Vertex x : s1.members()) {
    for (Vertex y : s2.members()) out.insert(x * nh + y);
  }
  return out;
}

}  // namespace dconv
