#include "dconv/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dconv {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::string name) {
  Graph g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.rows_.assign(n, VertexSet(n));
  std::set<Edge> unique;
  for (auto [u, v] : edges) {
    const std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u >= n || v >= n) {
      throw GraphError("edge " + pair + " has an endpoint outside 0.." + std::to_string(n) + ")");
    }
    if (u == v) throw GraphError("edge " + pair + " is a self-loop");
    unique.emplace(std::min(u, v), std::max(u, v));
  }
  g.edges_.assign(unique.begin(), unique.end());
  for (auto [u, v] : g.edges_) {
    g.rows_[u].insert(v);
    g.rows_[v].insert(u);
  }

  g.triangle_vertices_ = VertexSet(n);
  for (auto [u, v] : g.edges_) {
    VertexSet common = g.rows_[u] & g.rows_[v];
    for (Vertex w = common.next(v); w < n; w = common.next(w)) {
      g.triangles_.push_back({u, v, w});
      g.triangle_vertices_.insert(u);
      g.triangle_vertices_.insert(v);
      g.triangle_vertices_.insert(w);
    }
  }
  // Edges are visited in lexicographic order and w ascends, so the list is sorted.
  return g;
}

Graph Graph::renamed(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> old_index = keep.members();
  std::vector<std::size_t> new_index(g.order(), kUnreachable);
  for (std::size_t i = 0; i < old_index.size(); ++i) new_index[old_index[i]] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(new_index[u], new_index[v]);
  }
  return Graph::from_edges(old_index.size(), edges, g.name());
}

std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    const auto& row = g.neighbors(u);
    for (Vertex w = row.first(); w < g.order(); w = row.next(w)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix d;
  d.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(distances_from(g, v));
  return d;
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (auto d : distances_from(g, v)) {
      if (d == kUnreachable) return kUnreachable;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = distances_from(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == kUnreachable; });
}

namespace {

struct BiconnectedSearch {
  const Graph& g;
  std::vector<std::size_t> disc;
  std::vector<std::size_t> low;
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> blocks;

  explicit BiconnectedSearch(const Graph& graph)
      : g(graph), disc(graph.order(), kUnreachable), low(graph.order(), 0) {}

  void pop_block(Edge until) {
    VertexSet block(g.order());
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.insert(e.first);
      block.insert(e.second);
      if (e == until) break;
    }
    blocks.push_back(std::move(block));
  }

  // Iterative Hopcroft-Tarjan from `root`.
  void run(Vertex root) {
    struct Frame {
      Vertex v;
      Vertex parent;
      Vertex next_neighbor;
    };
    std::size_t clock = 0;
    std::vector<Frame> stack;
    disc[root] = low[root] = clock++;
    stack.push_back({root, kUnreachable, g.neighbors(root).first()});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_neighbor < g.order()) {
        Vertex w = f.next_neighbor;
        f.next_neighbor = g.neighbors(f.v).next(w);
        if (disc[w] == kUnreachable) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = clock++;
          stack.push_back({w, f.v, g.neighbors(w).first()});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Frame& up = stack.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (low[done.v] >= disc[up.v]) pop_block({up.v, done.v});
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) {
    throw GraphError("block decomposition requires a connected graph" +
                     (g.name().empty() ? std::string{} : " (" + g.name() + ")"));
  }
  BlockDecomposition out;
  if (g.order() == 0) {
    out.cut_vertices = VertexSet(0);
    return out;
  }
  BiconnectedSearch search(g);
  search.run(0);
  if (g.order() == 1) search.blocks.push_back(VertexSet(1, {0}));
  out.blocks = std::move(search.blocks);
  std::sort(out.blocks.begin(), out.blocks.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.members() < b.members();
  });
  // Cut vertices are exactly the vertices shared by two or more blocks.
  out.cut_vertices = VertexSet(g.order());
  VertexSet seen(g.order());
  for (const auto& block : out.blocks) {
    out.cut_vertices |= (seen & block);
    seen |= block;
  }
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    VertexSet shared = out.blocks[i] & out.cut_vertices;
    for (Vertex c : shared.members()) out.tree_edges.emplace_back(i, c);
  }
  return out;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3) return g.order() == 2 && g.edge_count() == 1;
  if (!is_connected(g)) return false;
  return block_decomposition(g).cut_vertices.empty();
}

bool is_block_graph(const Graph& g) {
  for (const auto& block : block_decomposition(g).blocks) {
    const auto members = block.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!g.adjacent(members[i], members[j])) return false;
      }
    }
  }
  return true;
}

std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited[v] && (pick == n || weight[v] > weight[pick])) pick = v;
    }
    visited[pick] = true;
    order.push_back(pick);
    const auto& row = g.neighbors(pick);
    for (Vertex w = row.first(); w < n; w = row.next(w)) {
      if (!visited[w]) ++weight[w];
    }
  }
  return order;
}

bool is_chordal(const Graph& g) {
  // The reverse of an MCS order is a perfect elimination ordering iff g is
  // chordal. For each vertex, its earlier-visited neighbours must be a clique;
  // checking them against the most recently visited one suffices.
  const auto order = maximum_cardinality_search(g);
  std::vector<std::size_t> position(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    const auto& row = g.neighbors(v);
    Vertex latest = g.order();
    for (Vertex w = row.first(); w < g.order(); w = row.next(w)) {
      if (position[w] < i && (latest == g.order() || position[w] > position[latest])) latest = w;
    }
    if (latest == g.order()) continue;
    for (Vertex w = row.first(); w < g.order(); w = row.next(w)) {
      if (position[w] < i && w != latest && !g.adjacent(latest, w)) return false;
    }
  }
  return true;
}

}  // namespace dconv
