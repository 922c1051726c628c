#include "dconv/hull.hpp"

#include <stdexcept>
#include <string>

namespace dconv {

namespace {

void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw std::out_of_range("vertex set over " + std::to_string(s.universe()) +
                            " vertices used with a graph of order " + std::to_string(g.order()));
  }
}

// One interval round driven by the triangle census: a triangle with exactly
// two members of `current` contributes its third vertex.
VertexSet interval_step(const Graph& g, const VertexSet& current) {
  VertexSet next = current;
  for (const auto& t : g.triangles()) {
    const bool a = current.contains(t[0]);
    const bool b = current.contains(t[1]);
    const bool c = current.contains(t[2]);
    if (a + b + c != 2) continue;
    next.insert(!a ? t[0] : (!b ? t[1] : t[2]));
  }
  return next;
}

// Remaining corners of a sorted triangle, ascending.
constexpr std::size_t kOthers[3][2] = {{1, 2}, {0, 2}, {0, 1}};

}  // namespace

VertexSet delta_interval(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  return interval_step(g, s);
}

VertexSet delta_interval(const Graph& g, Vertex u, Vertex v) {
  return delta_interval(g, VertexSet(g.order(), {u, v}));
}

VertexSet delta_hull(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  VertexSet current = s;
  if (current.size() < 2) return current;
  while (true) {
    VertexSet next = interval_step(g, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

HullTrace delta_hull_traced(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  HullTrace trace;
  trace.rounds.push_back(s);
  while (true) {
    const VertexSet& current = trace.rounds.back();
    VertexSet next = current;
    for (const auto& t : g.triangles()) {
      for (std::size_t missing = 0; missing < 3; ++missing) {
        const Vertex w = t[missing];
        const Vertex u = t[kOthers[missing][0]];
        const Vertex v = t[kOthers[missing][1]];
        if (current.contains(w) || !current.contains(u) || !current.contains(v)) continue;
        auto [it, inserted] = trace.added_by.try_emplace(w, u, v);
        if (!inserted && std::make_pair(u, v) < it->second) it->second = {u, v};
        next.insert(w);
      }
    }
    if (next == current) break;
    trace.rounds.push_back(std::move(next));
  }
  return trace;
}

bool is_delta_convex(const Graph& g, const VertexSet& s) { return delta_interval(g, s) == s; }

bool is_hull_set(const Graph& g, const VertexSet& s) {
  return delta_hull(g, s).size() == g.order();
}

}  // namespace dconv
