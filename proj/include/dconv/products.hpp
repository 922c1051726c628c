#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "dconv/graph.hpp"

namespace dconv {

enum class ProductKind { Cartesian, Strong, Lexicographic };

std::string_view to_string(ProductKind kind);
// Accepts "cartesian", "strong", "lex" and "lexicographic".
std::optional<ProductKind> parse_product_kind(std::string_view name);

enum class Factor { G, H };

// G * H over vertex pairs (g,h) encoded as g*|V(H)| + h.
class ProductGraph {
 public:
  ProductGraph(Graph g, Graph h, ProductKind kind);

  const Graph& graph() const { return graph_; }
  const Graph& g_factor() const { return g_; }
  const Graph& h_factor() const { return h_; }
  ProductKind kind() const { return kind_; }
  // Both factors have at least two vertices.
  bool nontrivial() const { return g_.order() >= 2 && h_.order() >= 2; }

  Vertex encode(Vertex g, Vertex h) const { return g * h_.order() + h; }
  std::pair<Vertex, Vertex> decode(Vertex v) const { return {v / h_.order(), v % h_.order()}; }

  // "factors", "kind" and "encoding" members for the product's JSON file.
  nlohmann::ordered_json metadata() const;

 private:
  Graph g_;
  Graph h_;
  ProductKind kind_;
  Graph graph_;
};

// Throws std::invalid_argument when a factor has no vertices.
ProductGraph product(const Graph& g, const Graph& h, ProductKind kind);

// layer(p, Factor::G, h) is the G-layer G^h; layer(p, Factor::H, g) is ^gH.
// Throws std::out_of_range on an anchor outside the other factor.
VertexSet layer(const ProductGraph& p, Factor fiber, Vertex anchor);

// Coordinatewise image of a product vertex set in one factor.
VertexSet projection(const ProductGraph& p, Factor onto, const VertexSet& s);

struct EdgeVertexWitness {
  Edge edge;
  Vertex x;
};

// Lexicographically least (edge, x) with x at distance >= 2 from both ends.
std::optional<EdgeVertexWitness> edge_vertex_witness(const Graph& h);
inline bool has_edge_vertex_property(const Graph& h) { return edge_vertex_witness(h).has_value(); }

// (S1 - {g}) x (S2 - {h}) + {(g,h)} in G [] H, the exchange lower-bound
// construction. Requires |S1|, |S2| > 2 and the pivots to be valid exchange
// pivots of their sets; throws std::invalid_argument otherwise.
VertexSet cartesian_e_witness(const Graph& g, const VertexSet& s1, Vertex pivot_g, const Graph& h,
                              const VertexSet& s2, Vertex pivot_h);

// S1 x S2 in G [] H, the Caratheodory lower-bound construction. Requires
// |S1|, |S2| > 2 and both sets Caratheodory independent.
VertexSet cartesian_c_witness(const Graph& g, const VertexSet& s1, const Graph& h,
                              const VertexSet& s2);

}  // namespace dconv
