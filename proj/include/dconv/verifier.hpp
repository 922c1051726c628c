#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dconv/families.hpp"
#include "dconv/independence.hpp"
#include "dconv/products.hpp"

namespace dconv {

enum class CheckStatus { Pass, Fail, Skipped, HypothesisUnmet, Flagged };

std::string_view to_string(CheckStatus status);

// One theorem evaluated on one graph. `flagged` marks a diagnostic that
// found something worth reporting but is not a theorem failure.
struct TheoremCheck {
  std::string theorem_id;
  std::string family;
  std::string graph;
  Json params = Json::object();
  std::string invariant;
  std::string predicted;
  Json observed = Json::object();
  CheckStatus status = CheckStatus::Skipped;
  std::string reason;

  Json to_json() const;
};

// Exhaustive searches run on graphs with at most `max_vertices` vertices,
// or up to four more when the triangle-vertex set (the pruned search space)
// still has at most `max_vertices` members.
struct Budget {
  std::size_t max_vertices = 12;

  bool admits(const Graph& g) const;
};

// Exact invariants of a graph within budget.
struct GraphInvariants {
  InvariantResult c;
  InvariantResult e;
  std::optional<InvariantResult> h;
};

// c and e without the triangle-count size bound (so the bounds are
// checkable) and h; all exhaustive.
GraphInvariants uncapped_invariants(const Graph& g, bool with_helly = true);

std::vector<TheoremCheck> verify_graph_universal(const Graph& g, const Budget& budget = {});
std::vector<TheoremCheck> verify_graph_universal(const FamilyInstance& instance,
                                                 const Budget& budget = {});
std::vector<TheoremCheck> verify_family(const FamilyInstance& instance, const Budget& budget = {});
// Factors are held to `budget`; the full search on the product itself is
// held to `product_budget`.
std::vector<TheoremCheck> verify_products(const FamilyInstance& g, const FamilyInstance& h,
                                          ProductKind kind, const Budget& budget = {},
                                          const Budget& product_budget = {16});

enum class Suite { All, Universal, Blocks, Chordal, Products, Gadgets };

std::string_view to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

struct SuiteConfig {
  Suite suite = Suite::All;
  std::uint64_t seed = 1;
  Budget budget;
  Budget product_budget{16};
  std::size_t jobs = 1;
  // Empty means every theorem id.
  std::set<std::string> enabled_theorems;
  // Empty means every family.
  std::set<Family> families;
  std::size_t random_graphs = 30;
  std::size_t random_min_n = 4;
  std::size_t random_max_n = 10;
  std::size_t chordal_instances = 10;
  std::size_t chordal_min_n = 4;
  std::size_t chordal_max_n = 10;
};

struct SuiteSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t hypothesis_unmet = 0;
  std::size_t flagged = 0;

  std::size_t total() const { return pass + fail + skipped + hypothesis_unmet + flagged; }
  Json to_json() const;
};

// Canonically ordered checks for the configured corpus. The order and
// content depend only on the config, never on `jobs`.
std::vector<TheoremCheck> collect_suite(const SuiteConfig& config);

// Writes one JSON object per check followed by {"summary": ...}.
SuiteSummary write_report(const std::vector<TheoremCheck>& checks, std::ostream& out);

SuiteSummary run_suite(const SuiteConfig& config, std::ostream& out);

}  // namespace dconv
