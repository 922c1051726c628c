#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dconv/vertex_set.hpp"

namespace dconv {

using Edge = std::pair<Vertex, Vertex>;
using Triangle = std::array<Vertex, 3>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite simple undirected graph on the dense vertex range 0..order()-1.
// Immutable once built; the triangle census is computed at construction
// because every hull step consults it.
class Graph {
 public:
  Graph() = default;

  // Builds the graph with exactly the given edges (duplicates and reversed
  // duplicates collapse). Throws GraphError naming the offending pair on a
  // self-loop or an out-of-range endpoint.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::string name = {});

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& name() const { return name_; }
  Graph renamed(std::string name) const;

  bool adjacent(Vertex u, Vertex v) const { return u < n_ && rows_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
  std::size_t degree(Vertex v) const { return rows_.at(v).size(); }

  // Edges as (u,v) with u<v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  // Triangles sorted ascending within and across triples.
  const std::vector<Triangle>& triangles() const { return triangles_; }
  // Vertices lying on at least one triangle.
  const VertexSet& triangle_vertices() const { return triangle_vertices_; }

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet vertex_set() const { return VertexSet::full(n_); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::string name_;
  std::vector<VertexSet> rows_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  VertexSet triangle_vertices_;
};

inline Graph graph_from_edges(std::size_t n, std::span<const Edge> edges, std::string name = {}) {
  return Graph::from_edges(n, edges, std::move(name));
}

inline const std::vector<Triangle>& triangles(const Graph& g) { return g.triangles(); }

Graph induced_subgraph(const Graph& g, const VertexSet& keep);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

using DistanceMatrix = std::vector<std::vector<std::size_t>>;

// All-pairs hop distances by one breadth-first search per source;
// kUnreachable marks pairs in different components.
DistanceMatrix distance_matrix(const Graph& g);
std::vector<std::size_t> distances_from(const Graph& g, Vertex source);

// Largest finite distance, or kUnreachable when g is disconnected.
std::size_t diameter(const Graph& g);

bool is_connected(const Graph& g);
// K2 counts as 2-connected; otherwise fewer than three vertices never is.
bool is_two_connected(const Graph& g);

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // sorted by member list
  VertexSet cut_vertices;
  // Block-cut tree edges as (block index, cut vertex).
  std::vector<std::pair<std::size_t, Vertex>> tree_edges;
};

// Biconnected components of a connected graph. Throws GraphError when g is
// disconnected.
BlockDecomposition block_decomposition(const Graph& g);

bool is_block_graph(const Graph& g);

// Maximum cardinality search ordering, first visited first.
std::vector<Vertex> maximum_cardinality_search(const Graph& g);
bool is_chordal(const Graph& g);

}  // namespace dconv
