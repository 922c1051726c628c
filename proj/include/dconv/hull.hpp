#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dconv/graph.hpp"

namespace dconv {

// [S]: S together with every vertex forming a triangle with two members of S.
VertexSet delta_interval(const Graph& g, const VertexSet& s);
VertexSet delta_interval(const Graph& g, Vertex u, Vertex v);

// <S>: least fixpoint of delta_interval containing S.
VertexSet delta_hull(const Graph& g, const VertexSet& s);

struct HullTrace {
  // rounds.front() == S, rounds[i+1] == delta_interval(rounds[i]),
  // rounds.back() is the hull.
  std::vector<VertexSet> rounds;
  // Every added vertex maps to the lexicographically least pair of members
  // of the previous round it forms a triangle with.
  std::map<Vertex, std::pair<Vertex, Vertex>> added_by;

  const VertexSet& hull() const { return rounds.back(); }
};

HullTrace delta_hull_traced(const Graph& g, const VertexSet& s);

bool is_delta_convex(const Graph& g, const VertexSet& s);
bool is_hull_set(const Graph& g, const VertexSet& s);

}  // namespace dconv
