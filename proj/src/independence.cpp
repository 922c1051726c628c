#include "dconv/independence.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "dconv/hull.hpp"

namespace dconv {

std::string_view to_string(IndependenceKind kind) {
  switch (kind) {
    case IndependenceKind::Caratheodory:
      return "caratheodory";
    case IndependenceKind::Exchange:
      return "exchange";
    case IndependenceKind::Helly:
      return "helly";
  }
  return "unknown";
}

namespace {

void require_nonempty(const VertexSet& s, IndependenceKind kind) {
  if (s.empty()) {
    throw std::invalid_argument(std::string(to_string(kind)) +
                                " independence is undefined for the empty set");
  }
}

// unions[i] = union of all hulls except hulls[i].
std::vector<VertexSet> unions_excluding_each(const std::vector<VertexSet>& hulls,
                                             std::size_t universe) {
  const std::size_t m = hulls.size();
  std::vector<VertexSet> suffix(m + 1, VertexSet(universe));
  for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] | hulls[i];
  std::vector<VertexSet> out;
  out.reserve(m);
  VertexSet prefix(universe);
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(prefix | suffix[i + 1]);
    prefix |= hulls[i];
  }
  return out;
}

}  // namespace

std::vector<VertexSet> leave_one_out_hulls(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  for (Vertex a : s.members()) {
    VertexSet rest = s;
    rest.erase(a);
    out.push_back(delta_hull(g, rest));
  }
  return out;
}

IndependenceVerdict is_c_independent(const Graph& g, const VertexSet& s) {
  require_nonempty(s, IndependenceKind::Caratheodory);
  IndependenceVerdict verdict{IndependenceKind::Caratheodory, false, std::nullopt, std::nullopt};
  VertexSet uncovered = delta_hull(g, s);
  for (const auto& h : leave_one_out_hulls(g, s)) uncovered -= h;
  if (!uncovered.empty()) {
    verdict.independent = true;
    verdict.witness = uncovered.first();
  }
  return verdict;
}

IndependenceVerdict is_e_independent(const Graph& g, const VertexSet& s) {
  require_nonempty(s, IndependenceKind::Exchange);
  IndependenceVerdict verdict{IndependenceKind::Exchange, false, std::nullopt, std::nullopt};
  const auto members = s.members();
  if (members.size() == 1) {
    verdict.independent = true;
    verdict.pivot = members.front();
    return verdict;
  }
  const auto hulls = leave_one_out_hulls(g, s);
  const auto others = unions_excluding_each(hulls, g.order());
  for (std::size_t i = 0; i < members.size(); ++i) {
    VertexSet uncovered = hulls[i] - others[i];
    if (!uncovered.empty()) {
      verdict.independent = true;
      verdict.pivot = members[i];
      verdict.witness = uncovered.first();
      return verdict;
    }
  }
  return verdict;
}

IndependenceVerdict is_h_independent(const Graph& g, const VertexSet& s) {
  require_nonempty(s, IndependenceKind::Helly);
  IndependenceVerdict verdict{IndependenceKind::Helly, false, std::nullopt, std::nullopt};
  VertexSet common = VertexSet::full(g.order());
  for (const auto& h : leave_one_out_hulls(g, s)) common &= h;
  verdict.independent = common.empty();
  return verdict;
}

std::optional<Vertex> exchange_witness_for_pivot(const Graph& g, const VertexSet& s, Vertex pivot) {
  if (!s.contains(pivot)) return std::nullopt;
  VertexSet rest = s;
  rest.erase(pivot);
  VertexSet uncovered = delta_hull(g, rest);
  for (Vertex a : rest.members()) {
    VertexSet without = s;
    without.erase(a);
    uncovered -= delta_hull(g, without);
  }
  if (uncovered.empty()) return std::nullopt;
  return uncovered.first();
}

bool recheck_verdict(const Graph& g, const VertexSet& s, const IndependenceVerdict& verdict) {
  if (!verdict.independent) return false;
  switch (verdict.kind) {
    case IndependenceKind::Caratheodory: {
      if (!verdict.witness || !delta_hull(g, s).contains(*verdict.witness)) return false;
      for (Vertex a : s.members()) {
        VertexSet without = s;
        without.erase(a);
        if (delta_hull(g, without).contains(*verdict.witness)) return false;
      }
      return true;
    }
    case IndependenceKind::Exchange: {
      if (!verdict.pivot || !s.contains(*verdict.pivot)) return false;
      if (s.size() == 1) return true;
      if (!verdict.witness) return false;
      VertexSet rest = s;
      rest.erase(*verdict.pivot);
      if (!delta_hull(g, rest).contains(*verdict.witness)) return false;
      for (Vertex a : rest.members()) {
        VertexSet without = s;
        without.erase(a);
        if (delta_hull(g, without).contains(*verdict.witness)) return false;
      }
      return true;
    }
    case IndependenceKind::Helly: {
      VertexSet common = VertexSet::full(g.order());
      for (Vertex a : s.members()) {
        VertexSet without = s;
        without.erase(a);
        common &= delta_hull(g, without);
      }
      return common.empty();
    }
  }
  return false;
}

std::optional<std::pair<Vertex, Vertex>> pair_separation_violation(const Graph& g,
                                                                   const VertexSet& s) {
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      VertexSet rest = s;
      rest.erase(members[i]);
      rest.erase(members[j]);
      const VertexSet pair_hull = delta_hull(g, VertexSet(g.order(), {members[i], members[j]}));
      if (delta_hull(g, rest).intersects(pair_hull)) return std::make_pair(members[i], members[j]);
    }
  }
  return std::nullopt;
}

namespace {

// Depth-first enumeration of fixed-size subsets of `candidates` in
// lexicographic order. `admit` may reject a partial set together with every
// extension of it, so it must only encode monotone (superset-closed)
// dependence conditions. `visit` returns true to stop.
class SubsetWalker {
 public:
  using Admit = std::function<bool(const VertexSet& partial, Vertex added)>;
  using Visit = std::function<bool(const VertexSet& subset)>;

  SubsetWalker(std::size_t universe, std::vector<Vertex> candidates, Admit admit)
      : universe_(universe), candidates_(std::move(candidates)), admit_(std::move(admit)) {}

  // Returns true when `visit` asked to stop.
  bool walk(std::size_t size, const Visit& visit) const {
    VertexSet current(universe_);
    return step(current, 0, size, visit);
  }

 private:
  bool step(VertexSet& current, std::size_t from, std::size_t remaining, const Visit& visit) const {
    if (remaining == 0) return visit(current);
    for (std::size_t i = from; i + remaining <= candidates_.size(); ++i) {
      const Vertex v = candidates_[i];
      if (admit_ && !admit_(current, v)) continue;
      current.insert(v);
      const bool stop = step(current, i + 1, remaining - 1, visit);
      current.erase(v);
      if (stop) return true;
    }
    return false;
  }

  std::size_t universe_;
  std::vector<Vertex> candidates_;
  Admit admit_;
};

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = v;
  return out;
}

// Triangle partners per vertex, for the "no full triangle" filter.
std::vector<std::vector<std::pair<Vertex, Vertex>>> triangle_partners(const Graph& g) {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out(g.order());
  for (const auto& t : g.triangles()) {
    out[t[0]].emplace_back(t[1], t[2]);
    out[t[1]].emplace_back(t[0], t[2]);
    out[t[2]].emplace_back(t[0], t[1]);
  }
  return out;
}

bool closes_triangle(const std::vector<std::pair<Vertex, Vertex>>& partners,
                     const VertexSet& partial) {
  return std::any_of(partners.begin(), partners.end(), [&](const auto& p) {
    return partial.contains(p.first) && partial.contains(p.second);
  });
}

bool has_internal_edge(const Graph& g, const VertexSet& s) {
  for (Vertex v = s.first(); v < s.universe(); v = s.next(v)) {
    if (g.neighbors(v).intersects(s)) return true;
  }
  return false;
}

using Test = IndependenceVerdict (*)(const Graph&, const VertexSet&);

// Runs sizes [first_size, last_size]; remembers the first independent set at
// the largest size that has one.
void search_sizes(const Graph& g, const SubsetWalker& walker, std::size_t first_size,
                  std::size_t last_size, Test test,
                  const std::function<bool(const VertexSet&)>& leaf_filter, bool stop_when_empty,
                  InvariantResult& result) {
  for (std::size_t size = first_size; size <= last_size; ++size) {
    bool found = false;
    walker.walk(size, [&](const VertexSet& subset) {
      if (leaf_filter && !leaf_filter(subset)) return false;
      if (!test(g, subset).independent) return false;
      result.value = size;
      result.extremal_set = subset;
      found = true;
      return true;
    });
    if (!found && stop_when_empty) return;
  }
}

std::size_t cap_size(std::size_t bound, const SearchOptions& options) {
  return options.max_size ? std::min(bound, *options.max_size) : bound;
}

InvariantResult naive_search(const Graph& g, const SearchOptions& options, Test test,
                             bool stop_when_empty) {
  InvariantResult result;
  result.extremal_set = g.empty_set();
  const std::size_t cap = cap_size(g.order(), options);
  result.search_bound_used = cap;
  result.exhaustive = cap >= g.order() || stop_when_empty;
  SubsetWalker walker(g.order(), all_vertices(g), nullptr);
  search_sizes(g, walker, 1, cap, test, nullptr, stop_when_empty, result);
  if (stop_when_empty && cap < g.order() && result.value == cap) result.exhaustive = false;
  return result;
}

void require_vertices(const Graph& g, std::string_view what) {
  if (g.order() == 0) throw std::invalid_argument(std::string(what) + " of the empty graph");
}

}  // namespace

InvariantResult caratheodory_number(const Graph& g, const SearchOptions& options) {
  require_vertices(g, "caratheodory number");
  if (options.naive) return naive_search(g, options, &is_c_independent, false);

  const std::size_t n = g.order();
  const std::size_t bound =
      options.triangle_bound ? std::min(g.triangles().size() + 1, n) : n;
  const std::size_t cap = cap_size(bound, options);

  InvariantResult result;
  result.search_bound_used = cap;
  result.exhaustive = cap >= bound;
  result.extremal_set = g.empty_set();
  if (cap == 0) {
    result.exhaustive = false;
    return result;
  }
  // Singletons are always independent.
  result.value = 1;
  result.extremal_set = VertexSet(n, {0});

  // Independent sets of size >= 2 use only triangle vertices, contain no
  // whole triangle and induce at least one edge.
  const auto partners = triangle_partners(g);
  SubsetWalker walker(g.order(), g.triangle_vertices().members(),
                      [&](const VertexSet& partial, Vertex v) {
                        return !closes_triangle(partners[v], partial);
                      });
  search_sizes(g, walker, 2, cap, &is_c_independent,
               [&](const VertexSet& s) { return has_internal_edge(g, s); }, false, result);
  return result;
}

InvariantResult exchange_number(const Graph& g, const SearchOptions& options) {
  require_vertices(g, "exchange number");
  if (options.naive) return naive_search(g, options, &is_e_independent, false);

  const std::size_t n = g.order();
  const std::size_t bound =
      options.triangle_bound ? std::min(g.triangles().size() + 2, n) : n;
  const std::size_t cap = cap_size(bound, options);

  InvariantResult result;
  result.search_bound_used = cap;
  result.exhaustive = cap >= bound;
  result.extremal_set = g.empty_set();
  if (cap == 0) {
    result.exhaustive = false;
    return result;
  }
  // Every singleton and every pair is exchange independent.
  result.value = std::min<std::size_t>(cap, 2);
  result.extremal_set = result.value == 1 ? VertexSet(n, {0}) : VertexSet(n, {0, 1});

  // From size 3 on: no whole triangle, at most one member off every
  // triangle, at least one induced edge.
  const auto partners = triangle_partners(g);
  const VertexSet& on_triangle = g.triangle_vertices();
  SubsetWalker walker(g.order(), all_vertices(g), [&](const VertexSet& partial, Vertex v) {
    if (!on_triangle.contains(v) && !(partial - on_triangle).empty()) return false;
    return !closes_triangle(partners[v], partial);
  });
  search_sizes(g, walker, 3, cap, &is_e_independent,
               [&](const VertexSet& s) { return has_internal_edge(g, s); }, false, result);
  return result;
}

InvariantResult helly_number(const Graph& g, const SearchOptions& options) {
  require_vertices(g, "helly number");
  if (options.naive) return naive_search(g, options, &is_h_independent, false);
  return naive_search(g, options, &is_h_independent, true);
}

SierksmaOutcome sierksma_check(const InvariantResult& c, const InvariantResult& e,
                               const InvariantResult& h) {
  SierksmaOutcome out;
  out.c = c.value;
  out.e = e.value;
  out.h = h.value;
  out.certified = c.exhaustive && e.exhaustive && h.exhaustive;
  const std::size_t e_minus_one = e.value == 0 ? 0 : e.value - 1;
  out.holds = e_minus_one <= c.value && c.value <= std::max(h.value, e_minus_one);
  return out;
}

SierksmaOutcome sierksma_check(const Graph& g, const SearchOptions& options) {
  return sierksma_check(caratheodory_number(g, options), exchange_number(g, options),
                        helly_number(g, options));
}

}  // namespace dconv
