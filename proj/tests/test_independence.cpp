#include <gtest/gtest.h>

#include <random>

#include "dconv/families.hpp"
#include "dconv/hull.hpp"
#include "dconv/independence.hpp"
#include "oracle.hpp"

using namespace dconv;

namespace {

// Graphs with n <= 8 the oracle comparisons run over.
std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(path(n).graph);
  for (std::size_t n = 3; n <= 8; ++n) out.push_back(cycle(n).graph);
  for (std::size_t n = 1; n <= 7; ++n) out.push_back(complete(n).graph);
  out.push_back(complete_bipartite(2, 3).graph);
  out.push_back(complete_bipartite(3, 3).graph);
  out.push_back(gadget_c(3).graph);
  out.push_back(gadget_c(4).graph);
  out.push_back(gadget_e(1).graph);
  out.push_back(gadget_e(2).graph);
  out.push_back(gadget_e(3).graph);
  out.push_back(block_chain({3, 3, 3}).graph);
  out.push_back(block_chain({3, 2, 3}).graph);
  out.push_back(block_tree({{3}, {3}}).graph);
  out.push_back(block_tree({{3}, {3}, {3}}).graph);
  for (std::uint64_t seed = 0; seed < 5; ++seed) out.push_back(two_connected_chordal(6 + seed % 3, seed).graph);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    out.push_back(oracle::random_graph(5 + seed % 4, seed % 2 ? 0.5 : 0.7, 500 + seed));
  }
  return out;
}

}  // namespace

TEST(IsCIndependent, SpecExamples) {
  const Graph k3 = complete(3).graph;
  for (auto [u, v] : k3.edges()) {
    const auto verdict = is_c_independent(k3, VertexSet(3, {u, v}));
    EXPECT_TRUE(verdict.independent);
    EXPECT_EQ(verdict.witness, 3 - u - v);
  }
  // 0, 4, 8 lie on no triangle and are pairwise non-adjacent.
  const Graph g = Graph::from_edges(9, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
  EXPECT_FALSE(is_c_independent(g, VertexSet(9, {0, 4, 8})).independent);

  const Graph gc = gadget_c(4).graph;
  const auto verdict = is_c_independent(gc, VertexSet(7, {0, 1, 2, 3}));
  EXPECT_TRUE(verdict.independent);
  EXPECT_EQ(verdict.witness, gadget::apex(4));

  EXPECT_TRUE(is_c_independent(k3, VertexSet(3, {1})).independent);
  EXPECT_THROW(is_c_independent(k3, k3.empty_set()), std::invalid_argument);
}

TEST(IsEIndependent, SpecExamples) {
  for (const Graph& g : {complete(5).graph, path(4).graph, gadget_c(3).graph}) {
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const auto verdict = is_e_independent(g, VertexSet(g.order(), {u, v}));
        EXPECT_TRUE(verdict.independent);
        EXPECT_EQ(verdict.pivot, u);
        EXPECT_EQ(verdict.witness, v);
      }
    }
  }
  EXPECT_FALSE(is_e_independent(complete(3).graph, VertexSet::full(3)).independent);

  // gadget_e(2): a1,a2,a3 = 0,1,2; b1,b2 = 3,4; a = 5.
  const Graph ge = gadget_e(2).graph;
  const auto verdict = is_e_independent(ge, VertexSet(6, {0, 1, 2, 5}));
  EXPECT_TRUE(verdict.independent);
  EXPECT_EQ(exchange_witness_for_pivot(ge, VertexSet(6, {0, 1, 2, 5}), 5), gadget::e_b(2, 2));
  EXPECT_THROW(is_e_independent(ge, ge.empty_set()), std::invalid_argument);
}

TEST(IsHIndependent, SpecExamples) {
  EXPECT_TRUE(is_h_independent(complete(4).graph, VertexSet(4, {2})).independent);
  EXPECT_FALSE(is_h_independent(complete(3).graph, VertexSet::full(3)).independent);
  EXPECT_TRUE(is_h_independent(path(3).graph, VertexSet(3, {0, 2})).independent);
  EXPECT_THROW(is_h_independent(path(3).graph, VertexSet(3)), std::invalid_argument);
}

TEST(Verdicts, AgreeWithOracleAndRecheck) {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::random_graph(6 + seed % 4, 0.55, seed);
    for (int trial = 0; trial < 25; ++trial) {
      VertexSet s(g.order());
      while (s.empty()) {
        for (Vertex v = 0; v < g.order(); ++v) {
          if (rng() % 3 == 0) s.insert(v);
        }
      }
      const auto m = oracle::to_mask(s);
      const auto c = is_c_independent(g, s);
      const auto e = is_e_independent(g, s);
      const auto h = is_h_independent(g, s);
      EXPECT_EQ(c.independent, oracle::c_independent(g, m));
      EXPECT_EQ(e.independent, oracle::e_independent(g, m));
      EXPECT_EQ(h.independent, oracle::h_independent(g, m));
      EXPECT_EQ(recheck_verdict(g, s, c), c.independent);
      EXPECT_EQ(recheck_verdict(g, s, e), e.independent);
      EXPECT_EQ(recheck_verdict(g, s, h), h.independent);
      if (c.independent) {
        ASSERT_TRUE(c.witness.has_value());
        EXPECT_TRUE(delta_hull(g, s).contains(*c.witness));
      } else {
        EXPECT_FALSE(c.witness.has_value());
      }
      if (e.independent) {
        ASSERT_TRUE(e.pivot.has_value());
        EXPECT_TRUE(s.contains(*e.pivot));
        EXPECT_EQ(exchange_witness_for_pivot(g, s, *e.pivot), e.witness);
      }
    }
  }
}

TEST(Verdicts, TamperedWitnessFailsRecheck) {
  const Graph k3 = complete(3).graph;
  auto verdict = is_c_independent(k3, VertexSet(3, {0, 1}));
  verdict.witness = 0;
  EXPECT_FALSE(recheck_verdict(k3, VertexSet(3, {0, 1}), verdict));
}

TEST(Invariants, SpecExamples) {
  for (const auto& g : {path(6).graph, cycle(7).graph, complete_bipartite(3, 3).graph}) {
    EXPECT_EQ(caratheodory_number(g).value, 1U);
    EXPECT_EQ(exchange_number(g).value, 2U);
  }
  EXPECT_EQ(caratheodory_number(complete(5).graph).value, 2U);
  EXPECT_EQ(exchange_number(complete(5).graph).value, 2U);
  EXPECT_EQ(caratheodory_number(block_chain({3, 3, 3}).graph).value, 4U);
  EXPECT_EQ(exchange_number(gadget_e(2).graph).value, 4U);
  EXPECT_EQ(helly_number(path(1).graph).value, 1U);
  // Leave-one-out hulls of {0,1,2} in P3 are the pairs themselves, which
  // share no vertex, so the whole path is Helly independent.
  EXPECT_EQ(oracle::h_number(path(3).graph), 3U);
  EXPECT_EQ(helly_number(path(3).graph).value, 3U);
  EXPECT_EQ(helly_number(complete(4).graph).value, oracle::h_number(complete(4).graph));
}

TEST(Invariants, SierksmaExamples) {
  for (const auto& g : {complete(4).graph, path(5).graph, gadget_c(4).graph}) {
    const auto outcome = sierksma_check(g);
    EXPECT_TRUE(outcome.certified);
    EXPECT_TRUE(outcome.holds);
  }
  const auto p5 = sierksma_check(path(5).graph);
  EXPECT_EQ(p5.c, 1U);
  EXPECT_EQ(p5.e, 2U);
  const auto gc = sierksma_check(gadget_c(4).graph);
  EXPECT_EQ(gc.c, 4U);
  EXPECT_EQ(gc.e, 4U);
}

TEST(Invariants, CappedSearchIsFlagged) {
  const Graph g = gadget_c(5).graph;
  SearchOptions options;
  options.max_size = 3;
  const auto r = caratheodory_number(g, options);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.value, 3U);
  EXPECT_EQ(r.search_bound_used, 3U);
  EXPECT_FALSE(sierksma_check(g, options).certified);
  options.max_size = 10;
  EXPECT_TRUE(caratheodory_number(g, options).exhaustive);
}

TEST(Invariants, ExtremalSetsAreIndependentAndFirst) {
  for (const Graph& g : small_corpus()) {
    const auto c = caratheodory_number(g);
    const auto e = exchange_number(g);
    const auto h = helly_number(g);
    EXPECT_EQ(c.extremal_set.size(), c.value);
    EXPECT_EQ(e.extremal_set.size(), e.value);
    EXPECT_EQ(h.extremal_set.size(), h.value);
    EXPECT_TRUE(is_c_independent(g, c.extremal_set).independent) << g.name();
    EXPECT_TRUE(is_e_independent(g, e.extremal_set).independent) << g.name();
    EXPECT_TRUE(is_h_independent(g, h.extremal_set).independent) << g.name();
    // Same extremal set from the pruned and naive walks: both follow the
    // size-then-lexicographic order.
    SearchOptions naive;
    naive.naive = true;
    EXPECT_EQ(caratheodory_number(g, naive).extremal_set, c.extremal_set) << g.name();
    EXPECT_EQ(exchange_number(g, naive).extremal_set, e.extremal_set) << g.name();
    EXPECT_EQ(helly_number(g, naive).extremal_set, h.extremal_set) << g.name();
  }
}

TEST(Invariants, PrunedEqualsBruteForceOracle) {
  const auto corpus = small_corpus();
  ASSERT_GE(corpus.size(), 20U);
  for (const Graph& g : corpus) {
    ASSERT_LE(g.order(), 8U);
    const std::size_t k = g.triangles().size();
    const auto c = caratheodory_number(g).value;
    const auto e = exchange_number(g).value;
    EXPECT_EQ(c, oracle::c_number(g)) << g.name();
    EXPECT_EQ(e, oracle::e_number(g)) << g.name();
    EXPECT_EQ(helly_number(g).value, oracle::h_number(g)) << g.name();
    EXPECT_LE(c, k + 1);
    EXPECT_LE(e, k + 2);
    if (g.order() >= 2) {
      EXPECT_GE(e, 2U);
    }
  }
}

TEST(Invariants, UncappedSearchAgreesWithCappedOnes) {
  SearchOptions uncapped;
  uncapped.triangle_bound = false;
  for (const Graph& g : small_corpus()) {
    EXPECT_EQ(caratheodory_number(g, uncapped).value, caratheodory_number(g).value) << g.name();
    EXPECT_EQ(exchange_number(g, uncapped).value, exchange_number(g).value) << g.name();
  }
}

// Three (resp. two disjoint pairs of) members whose leave-one-out hulls
// cover <S> pairwise force exchange dependence.
TEST(Invariants, CoveringConditionsForceExchangeDependence) {
  std::mt19937_64 rng(7);
  std::size_t triples = 0;
  std::size_t quads = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Graph g = oracle::random_graph(6 + seed % 3, 0.6, seed);
    VertexSet s(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      if (rng() % 2) s.insert(v);
    }
    if (s.size() < 3) continue;
    const auto members = s.members();
    const auto loo = leave_one_out_hulls(g, s);
    const VertexSet whole = delta_hull(g, s);
    const auto covers = [&](std::size_t i, std::size_t j) { return (loo[i] | loo[j]) == whole; };
    bool triple = false;
    bool quad = false;
    const std::size_t m = members.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        for (std::size_t l = j + 1; l < m; ++l) {
          triple = triple || (covers(i, j) && covers(i, l) && covers(j, l));
          for (std::size_t x = 0; x < m; ++x) {
            if (x == i || x == j || x == l) continue;
            quad = quad || (covers(i, j) && covers(l, x)) || (covers(i, l) && covers(j, x)) ||
                   (covers(i, x) && covers(j, l));
          }
        }
      }
    }
    if (triple || quad) {
      EXPECT_FALSE(is_e_independent(g, s).independent) << g.name() << " " << s.to_string();
    }
    triples += triple ? 1 : 0;
    quads += quad ? 1 : 0;
  }
  EXPECT_GT(triples, 10U);
  EXPECT_GT(quads, 10U);
}

TEST(PairSeparation, DiagnosticOnly) {
  const Graph gc = gadget_c(4).graph;
  EXPECT_FALSE(pair_separation_violation(gc, VertexSet(7, {0, 1, 2, 3})).has_value());
}
