#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dconv/graph.hpp"

namespace dconv {

enum class IndependenceKind { Caratheodory, Exchange, Helly };

std::string_view to_string(IndependenceKind kind);

// Outcome of one independence test. When independent, the witness fields
// let a caller re-check the claim against freshly computed hulls:
//   Caratheodory: witness is the least p in <S> outside every <S-a>.
//   Exchange:     pivot p and witness p' in <S-p> outside every <S-a>, a != p;
//                 a singleton is independent with pivot set and no witness.
//   Helly:        no witness; independence means the <S-a> share nothing.
struct IndependenceVerdict {
  IndependenceKind kind = IndependenceKind::Caratheodory;
  bool independent = false;
  std::optional<Vertex> pivot;
  std::optional<Vertex> witness;
};

// <S - a> for each member a, in ascending member order.
std::vector<VertexSet> leave_one_out_hulls(const Graph& g, const VertexSet& s);

// All three throw std::invalid_argument on an empty set.
IndependenceVerdict is_c_independent(const Graph& g, const VertexSet& s);
IndependenceVerdict is_e_independent(const Graph& g, const VertexSet& s);
IndependenceVerdict is_h_independent(const Graph& g, const VertexSet& s);

// Least p' certifying `pivot` as an exchange pivot of S, if it is one.
std::optional<Vertex> exchange_witness_for_pivot(const Graph& g, const VertexSet& s, Vertex pivot);

// Re-validates an independent verdict's witness with fresh hull
// computations. Dependent verdicts carry no witness and yield false.
bool recheck_verdict(const Graph& g, const VertexSet& s, const IndependenceVerdict& verdict);

// First pair u<v of S with <S-{u,v}> meeting <u,v>, if any. Used only as a
// diagnostic on Caratheodory-independent sets, never to prune.
std::optional<std::pair<Vertex, Vertex>> pair_separation_violation(const Graph& g,
                                                                   const VertexSet& s);

struct SearchOptions {
  // Largest subset size examined; the result is a lower bound when this
  // truncates the search.
  std::optional<std::size_t> max_size;
  // Test every subset with no vertex filtering and no size bound.
  bool naive = false;
  // Stop Caratheodory sizes at k+1 and exchange sizes at k+2 (k = triangle
  // count). Disable to make the triangle bounds themselves checkable.
  bool triangle_bound = true;
};

struct InvariantResult {
  std::size_t value = 0;
  VertexSet extremal_set;
  bool exhaustive = true;
  std::size_t search_bound_used = 0;
};

// Subsets are enumerated by size, then lexicographically; the reported
// extremal set is the first one of maximum size.
InvariantResult caratheodory_number(const Graph& g, const SearchOptions& options = {});
InvariantResult exchange_number(const Graph& g, const SearchOptions& options = {});
// Helly independence is hereditary, so the search stops at the first size
// with no independent set (unless naive).
InvariantResult helly_number(const Graph& g, const SearchOptions& options = {});

struct SierksmaOutcome {
  std::size_t c = 0;
  std::size_t e = 0;
  std::size_t h = 0;
  // All three values came from exhaustive searches.
  bool certified = false;
  // e - 1 <= c <= max(h, e - 1); meaningful only when certified.
  bool holds = false;
};

SierksmaOutcome sierksma_check(const InvariantResult& c, const InvariantResult& e,
                               const InvariantResult& h);
SierksmaOutcome sierksma_check(const Graph& g, const SearchOptions& options = {});

}  // namespace dconv
