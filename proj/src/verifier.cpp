#include "dconv/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <ostream>
#include <thread>

#include "dconv/hull.hpp"

namespace dconv {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
    case CheckStatus::HypothesisUnmet:
      return "hypothesis_unmet";
    case CheckStatus::Flagged:
      return "flagged";
  }
  return "unknown";
}

Json TheoremCheck::to_json() const {
  return Json{{"theorem_id", theorem_id}, {"family", family},       {"graph", graph},
              {"params", params},         {"invariant", invariant}, {"predicted", predicted},
              {"observed", observed},     {"status", to_string(status)}, {"reason", reason}};
}

bool Budget::admits(const Graph& g) const {
  if (g.order() == 0 || max_vertices == 0) return false;
  if (g.order() <= max_vertices) return true;
  return g.order() <= max_vertices + 4 && g.triangle_vertices().size() <= max_vertices;
}

Json SuiteSummary::to_json() const {
  return Json{{"pass", pass},
              {"fail", fail},
              {"skipped", skipped},
              {"hypothesis_unmet", hypothesis_unmet},
              {"flagged", flagged},
              {"total", total()}};
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::All:
      return "all";
    case Suite::Universal:
      return "universal";
    case Suite::Blocks:
      return "blocks";
    case Suite::Chordal:
      return "chordal";
    case Suite::Products:
      return "products";
    case Suite::Gadgets:
      return "gadgets";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::All, Suite::Universal, Suite::Blocks, Suite::Chordal, Suite::Products,
                  Suite::Gadgets}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

GraphInvariants uncapped_invariants(const Graph& g, bool with_helly) {
  SearchOptions options;
  options.triangle_bound = false;
  GraphInvariants out{caratheodory_number(g, options), exchange_number(g, options), std::nullopt};
  if (with_helly) out.h = helly_number(g);
  return out;
}

namespace {

Json set_json(const VertexSet& s) { return Json(s.members()); }

TheoremCheck skeleton(const FamilyInstance& inst, std::string theorem_id, std::string invariant) {
  TheoremCheck check;
  check.theorem_id = std::move(theorem_id);
  check.family = std::string(to_string(inst.family));
  check.graph = inst.graph.name();
  check.params = inst.params;
  check.invariant = std::move(invariant);
  return check;
}

std::string over_budget_reason(const Graph& g, const Budget& budget) {
  return "over budget: n=" + std::to_string(g.order()) +
         ", triangle vertices=" + std::to_string(g.triangle_vertices().size()) +
         ", budget=" + std::to_string(budget.max_vertices);
}

TheoremCheck judged(TheoremCheck check, bool ok, std::string fail_reason = {}) {
  check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  if (!ok) check.reason = std::move(fail_reason);
  return check;
}

TheoremCheck skipped(TheoremCheck check, std::string reason) {
  check.status = CheckStatus::Skipped;
  check.reason = std::move(reason);
  return check;
}

TheoremCheck unmet(TheoremCheck check, std::string reason) {
  check.status = CheckStatus::HypothesisUnmet;
  check.reason = std::move(reason);
  return check;
}

std::vector<TheoremCheck> universal_checks(const FamilyInstance& inst, const Budget& budget,
                                           const GraphInvariants* inv) {
  const Graph& g = inst.graph;
  const std::size_t k = g.triangles().size();
  auto sierksma = skeleton(inst, "sierksma", "c,e,h");
  sierksma.predicted = "e-1 <= c <= max(h, e-1)";
  auto cara = skeleton(inst, "cara_triangle_bound", "c");
  cara.predicted = "<= " + std::to_string(k + 1);
  auto exch = skeleton(inst, "exch_triangle_bound", "e");
  exch.predicted = "<= " + std::to_string(k + 2);
  auto separation = skeleton(inst, "cara_pair_separation", "c");
  separation.predicted = "<S-{u,v}> and <u,v> disjoint for all u,v in an extremal C-independent set";

  if (inv == nullptr) {
    const auto reason = over_budget_reason(g, budget);
    return {skipped(sierksma, reason), skipped(cara, reason), skipped(exch, reason),
            skipped(separation, reason)};
  }

  std::vector<TheoremCheck> out;
  const auto outcome = sierksma_check(inv->c, inv->e, *inv->h);
  sierksma.observed = Json{{"c", outcome.c}, {"e", outcome.e}, {"h", outcome.h}};
  if (!outcome.certified) {
    out.push_back(skipped(sierksma, "non-exhaustive invariant search"));
  } else {
    out.push_back(judged(sierksma, outcome.holds, "inequality violated"));
  }

  cara.observed = Json{{"c", inv->c.value}, {"triangles", k}, {"extremal_set", set_json(inv->c.extremal_set)}};
  out.push_back(judged(cara, inv->c.value <= k + 1, "Caratheodory number exceeds k+1"));

  exch.observed = Json{{"e", inv->e.value}, {"triangles", k}, {"extremal_set", set_json(inv->e.extremal_set)}};
  out.push_back(judged(exch, inv->e.value <= k + 2, "exchange number exceeds k+2"));

  separation.observed = Json{{"extremal_set", set_json(inv->c.extremal_set)}};
  if (inv->c.value < 2) {
    separation.status = CheckStatus::Pass;
    separation.reason = "vacuous: c < 2";
  } else if (auto bad = pair_separation_violation(g, inv->c.extremal_set)) {
    separation.status = CheckStatus::Flagged;
    separation.observed["pair"] = Json::array({bad->first, bad->second});
    separation.reason = "diagnostic counterexample (not used for pruning)";
  } else {
    separation.status = CheckStatus::Pass;
  }
  out.push_back(separation);
  return out;
}

// Hull values from the gadget_c proof for S = {a1..an}.
std::vector<std::pair<std::string, VertexSet>> expected_gadget_c_hulls(std::size_t n) {
  using gadget::a;
  const std::size_t order = 2 * n - 1;
  const auto b = [n](std::size_t j) { return gadget::b(n, j); };
  std::vector<std::pair<std::string, VertexSet>> out;
  out.emplace_back("<S>", VertexSet::full(order));
  for (std::size_t i = 1; i <= n; ++i) {
    VertexSet expected(order);
    if (i == 1 || i == 2) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (j != i) expected.insert(a(j));
      }
    } else {
      for (std::size_t j = 1; j < i; ++j) expected.insert(a(j));
      for (std::size_t j = 1; j + 2 <= i; ++j) expected.insert(b(j));
      for (std::size_t j = i + 1; j <= n; ++j) expected.insert(a(j));
    }
    out.emplace_back("<S-a" + std::to_string(i) + ">", std::move(expected));
  }
  return out;
}

std::vector<TheoremCheck> gadget_c_hull_checks(const FamilyInstance& inst) {
  const std::size_t n = inst.params.at("n").get<std::size_t>();
  const Graph& g = inst.graph;
  VertexSet s(g.order());
  for (std::size_t i = 1; i <= n; ++i) s.insert(gadget::a(i));

  auto check = skeleton(inst, "gadget_c_exact", "hulls");
  check.predicted = "proof hull identities for S={a1..an}; b outside every <S-ai>";
  std::vector<std::string> mismatches;
  const auto expected = expected_gadget_c_hulls(n);
  const VertexSet whole = delta_hull(g, s);
  if (whole != expected[0].second) mismatches.push_back("<S> = " + whole.to_string());
  VertexSet covered(g.order());
  for (std::size_t i = 1; i <= n; ++i) {
    VertexSet rest = s;
    rest.erase(gadget::a(i));
    const VertexSet h = delta_hull(g, rest);
    covered |= h;
    if (h != expected[i].second) mismatches.push_back(expected[i].first + " = " + h.to_string());
  }
  if (covered.contains(gadget::apex(n))) mismatches.push_back("b covered");
  check.observed = Json{{"identities", expected.size()}, {"mismatches", mismatches}};
  return {judged(check, mismatches.empty(), "reconstruction discrepancy: hull identities differ")};
}

std::vector<TheoremCheck> gadget_e_pivot_check(const FamilyInstance& inst) {
  const std::size_t k = inst.params.at("k").get<std::size_t>();
  const Graph& g = inst.graph;
  VertexSet s(g.order(), {gadget::pendant(k)});
  for (std::size_t i = 1; i <= k + 1; ++i) s.insert(gadget::a(i));
  auto check = skeleton(inst, "gadget_e_exact", "pivot");
  check.predicted = "S={a,a1..a_(k+1)} has pivot a with witness b_k";
  VertexSet rest = s;
  rest.erase(gadget::pendant(k));
  const Vertex bk = gadget::e_b(k, k);
  bool ok = delta_hull(g, rest).contains(bk);
  for (Vertex x : rest.members()) {
    VertexSet without = s;
    without.erase(x);
    ok = ok && !delta_hull(g, without).contains(bk);
  }
  check.observed = Json{{"set", set_json(s)}, {"pivot", gadget::pendant(k)}, {"witness", bk}};
  return {judged(check, ok, "reconstruction discrepancy: b_k does not certify pivot a")};
}

std::optional<std::string> structural_problem(const FamilyInstance& inst) {
  const Graph& g = inst.graph;
  switch (inst.family) {
    case Family::BlockChain:
    case Family::BlockTree:
      if (!is_connected(g) || !is_block_graph(g)) return "not a connected block graph";
      return std::nullopt;
    case Family::TwoConnectedChordal:
      if (g.order() < 3 || !is_chordal(g) || !is_two_connected(g)) {
        return "not a 2-connected chordal graph on >= 3 vertices";
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::vector<TheoremCheck> family_checks(const FamilyInstance& inst, const Budget& budget,
                                        const GraphInvariants* inv) {
  const Graph& g = inst.graph;
  std::vector<TheoremCheck> out;
  const auto problem = structural_problem(inst);

  for (const auto& [invariant, prediction] : inst.predictions) {
    auto check = skeleton(inst, prediction.theorem, invariant);
    check.predicted = prediction.describe();
    if (inv == nullptr) {
      out.push_back(skipped(check, over_budget_reason(g, budget)));
      continue;
    }
    if (problem) {
      out.push_back(unmet(check, *problem));
      continue;
    }
    const InvariantResult& r = invariant == "c" ? inv->c : inv->e;
    check.observed = Json{{invariant, r.value}, {"extremal_set", set_json(r.extremal_set)}};
    std::string reason = "observed " + std::to_string(r.value) + ", predicted " + prediction.describe();
    if (inst.family == Family::GadgetC || inst.family == Family::GadgetE) {
      reason = "reconstruction discrepancy: " + reason;
    }
    out.push_back(judged(check, prediction.admits(r.value), reason));
  }

  if (inst.family == Family::TwoConnectedChordal) {
    auto check = skeleton(inst, "hull2_chordal", "hull");
    check.predicted = "every adjacent pair is a hull set";
    if (inv == nullptr) {
      out.push_back(skipped(check, over_budget_reason(g, budget)));
    } else if (problem) {
      out.push_back(unmet(check, *problem));
    } else {
      Json failing = Json::array();
      for (auto [u, v] : g.edges()) {
        if (!is_hull_set(g, VertexSet(g.order(), {u, v}))) failing.push_back(Json::array({u, v}));
      }
      check.observed = Json{{"pairs_checked", g.edge_count()}, {"failing_pairs", failing}};
      out.push_back(judged(check, failing.empty(), "adjacent pair that is not a hull set"));
    }
  }
  if (inst.family == Family::GadgetC) {
    if (inv == nullptr) {
      auto check = skeleton(inst, "gadget_c_exact", "hulls");
      out.push_back(skipped(check, over_budget_reason(g, budget)));
    } else {
      auto hulls = gadget_c_hull_checks(inst);
      out.insert(out.end(), hulls.begin(), hulls.end());
    }
  }
  if (inst.family == Family::GadgetE) {
    if (inv == nullptr) {
      auto check = skeleton(inst, "gadget_e_exact", "pivot");
      out.push_back(skipped(check, over_budget_reason(g, budget)));
    } else {
      auto pivot = gadget_e_pivot_check(inst);
      out.insert(out.end(), pivot.begin(), pivot.end());
    }
  }
  return out;
}

std::vector<TheoremCheck> instance_checks(const FamilyInstance& inst, const Budget& budget,
                                          bool family, bool universal) {
  std::optional<GraphInvariants> inv;
  if (budget.admits(inst.graph)) inv = uncapped_invariants(inst.graph, universal);
  const GraphInvariants* p = inv ? &*inv : nullptr;
  std::vector<TheoremCheck> out;
  if (family) out = family_checks(inst, budget, p);
  if (universal) {
    auto u = universal_checks(inst, budget, p);
    out.insert(out.end(), u.begin(), u.end());
  }
  return out;
}

}  // namespace

std::vector<TheoremCheck> verify_graph_universal(const FamilyInstance& instance, const Budget& budget) {
  return instance_checks(instance, budget, false, true);
}

std::vector<TheoremCheck> verify_graph_universal(const Graph& g, const Budget& budget) {
  FamilyInstance inst{g, Family::Random, Json::object(), {}};
  auto checks = verify_graph_universal(inst, budget);
  for (auto& c : checks) c.family = "graph";
  return checks;
}

std::vector<TheoremCheck> verify_family(const FamilyInstance& instance, const Budget& budget) {
  return instance_checks(instance, budget, true, false);
}

namespace {

struct ProductContext {
  const FamilyInstance& g;
  const FamilyInstance& h;
  ProductGraph p;
  Json params;
  std::string family;
};

TheoremCheck product_skeleton(const ProductContext& ctx, std::string id, std::string invariant) {
  TheoremCheck check;
  check.theorem_id = std::move(id);
  check.family = ctx.family;
  check.graph = ctx.p.graph().name();
  check.params = ctx.params;
  check.invariant = std::move(invariant);
  return check;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

std::vector<TheoremCheck> verify_products(const FamilyInstance& g_inst, const FamilyInstance& h_inst,
                                          ProductKind kind, const Budget& budget,
                                          const Budget& product_budget) {
  ProductContext ctx{g_inst, h_inst, product(g_inst.graph, h_inst.graph, kind),
                     Json{{"kind", to_string(kind)},
                          {"g", Json{{"family", to_string(g_inst.family)}, {"params", g_inst.params}}},
                          {"h", Json{{"family", to_string(h_inst.family)}, {"params", h_inst.params}}}},
                     "product:" + std::string(to_string(kind))};
  const Graph& G = g_inst.graph;
  const Graph& H = h_inst.graph;
  const Graph& P = ctx.p.graph();

  std::vector<std::pair<std::string, std::string>> ids;
  switch (kind) {
    case ProductKind::Cartesian:
      ids = {{"cart_e_lb", "e"}, {"cart_c_lb", "c"}, {"cart_pn_e_eq", "e"}, {"cart_pn_c_eq", "c"}};
      break;
    case ProductKind::Strong:
      ids = {{"strong_e3_strict", "e"}, {"strong_e3_weak", "e"}, {"strong_lex_c2", "c"}};
      break;
    case ProductKind::Lexicographic:
      ids = {{"lex_e", "e"}, {"strong_lex_c2", "c"}};
      break;
  }

  std::vector<TheoremCheck> out;
  if (!budget.admits(G) || !budget.admits(H)) {
    const auto reason = "factor " + over_budget_reason(budget.admits(G) ? H : G, budget);
    for (const auto& [id, inv] : ids) out.push_back(skipped(product_skeleton(ctx, id, inv), reason));
    return out;
  }

  const InvariantResult cG = caratheodory_number(G);
  const InvariantResult eG = exchange_number(G);
  const InvariantResult cH = caratheodory_number(H);
  const InvariantResult eH = exchange_number(H);
  const bool product_in_budget = product_budget.admits(P);
  std::optional<InvariantResult> cP;
  std::optional<InvariantResult> eP;
  const auto product_c = [&]() -> const InvariantResult& {
    if (!cP) cP = caratheodory_number(P);
    return *cP;
  };
  const auto product_e = [&]() -> const InvariantResult& {
    if (!eP) eP = exchange_number(P);
    return *eP;
  };

  const bool nontrivial = ctx.p.nontrivial();
  const bool connected = is_connected(G) && is_connected(H);
  std::vector<std::string> base_problems;
  if (!nontrivial) base_problems.push_back("trivial product (a factor has < 2 vertices)");
  if (!connected) base_problems.push_back("a factor is disconnected");

  const Json factor_values = Json{{"c_G", cG.value}, {"e_G", eG.value}, {"c_H", cH.value}, {"e_H", eH.value}};

  for (const auto& [id, invariant] : ids) {
    auto check = product_skeleton(ctx, id, invariant);
    std::vector<std::string> problems = base_problems;
    check.observed = factor_values;

    if (id == "cart_e_lb") {
      if (eG.value <= 2 || eH.value <= 2) problems.push_back("needs e(G), e(H) > 2");
      const std::size_t bound = (eG.value - 1) * (eH.value - 1) + 1;
      check.predicted = ">= " + std::to_string(bound) + " via witness (S1-g)x(S2-h)+(g,h)";
      if (!problems.empty()) {
        out.push_back(unmet(check, join(problems)));
        continue;
      }
      const Vertex pg = *is_e_independent(G, eG.extremal_set).pivot;
      const Vertex ph = *is_e_independent(H, eH.extremal_set).pivot;
      const VertexSet witness = cartesian_e_witness(G, eG.extremal_set, pg, H, eH.extremal_set, ph);
      const auto verdict = is_e_independent(P, witness);
      const bool claimed_pivot = exchange_witness_for_pivot(P, witness, ctx.p.encode(pg, ph)).has_value();
      check.observed["witness"] = set_json(witness);
      check.observed["witness_size"] = witness.size();
      check.observed["independent"] = verdict.independent;
      check.observed["claimed_pivot_valid"] = claimed_pivot;
      bool ok = verdict.independent && witness.size() == bound;
      if (product_in_budget) {
        check.observed["e"] = product_e().value;
        ok = ok && product_e().value >= bound;
      }
      out.push_back(judged(check, ok, "witness is not exchange independent or bound missed"));
    } else if (id == "cart_c_lb") {
      if (cG.value <= 2 || cH.value <= 2) problems.push_back("needs c(G), c(H) > 2");
      const std::size_t bound = cG.value * cH.value;
      check.predicted = ">= " + std::to_string(bound) + " via witness S1xS2";
      if (!problems.empty()) {
        out.push_back(unmet(check, join(problems)));
        continue;
      }
      const VertexSet witness = cartesian_c_witness(G, cG.extremal_set, H, cH.extremal_set);
      const auto verdict = is_c_independent(P, witness);
      check.observed["witness"] = set_json(witness);
      check.observed["witness_size"] = witness.size();
      check.observed["independent"] = verdict.independent;
      bool ok = verdict.independent && witness.size() == bound;
      if (product_in_budget) {
        check.observed["c"] = product_c().value;
        ok = ok && product_c().value >= bound;
      }
      out.push_back(judged(check, ok, "witness is not Caratheodory independent or bound missed"));
    } else if (id == "cart_pn_e_eq" || id == "cart_pn_c_eq") {
      const bool exchange = id == "cart_pn_e_eq";
      if (h_inst.family != Family::Path) problems.push_back("H is not a path");
      const std::size_t factor = exchange ? eG.value : cG.value;
      if (exchange && factor < 3) problems.push_back("needs e(G) >= 3");
      if (!exchange && factor < 4) problems.push_back("needs c(G) >= 4");
      check.predicted = "= " + std::to_string(factor);
      if (!problems.empty()) {
        out.push_back(unmet(check, join(problems)));
        continue;
      }
      if (!product_in_budget) {
        out.push_back(skipped(check, over_budget_reason(P, product_budget)));
        continue;
      }
      const InvariantResult& r = exchange ? product_e() : product_c();
      check.observed[invariant] = r.value;
      check.observed["extremal_set"] = set_json(r.extremal_set);
      out.push_back(judged(check, r.value == factor,
                           "observed " + std::to_string(r.value) + " != " + std::to_string(factor)));
    } else if (id == "strong_e3_strict" || id == "strong_e3_weak") {
      const std::size_t dG = diameter(G);
      const std::size_t dH = diameter(H);
      check.observed["diam_G"] = dG == kUnreachable ? Json("inf") : Json(dG);
      check.observed["diam_H"] = dH == kUnreachable ? Json("inf") : Json(dH);
      check.predicted = "= 3";
      const std::size_t dmax = connected ? std::max(dG, dH) : 0;
      if (id == "strong_e3_strict" && dmax <= 2) problems.push_back("needs a factor of diameter > 2");
      if (id == "strong_e3_weak" && dmax != 2) problems.push_back("needs largest factor diameter = 2");
      if (!problems.empty()) {
        out.push_back(unmet(check, join(problems)));
        continue;
      }
      if (!product_in_budget) {
        out.push_back(skipped(check, over_budget_reason(P, product_budget)));
        continue;
      }
      check.observed["e"] = product_e().value;
      check.observed["extremal_set"] = set_json(product_e().extremal_set);
      out.push_back(judged(check, product_e().value == 3,
                           "observed " + std::to_string(product_e().value) + " != 3"));
    } else if (id == "lex_e") {
      const std::size_t dG = diameter(G);
      const bool evp = has_edge_vertex_property(H);
      const bool three = connected && (dG >= 2 || evp);
      check.observed["diam_G"] = dG == kUnreachable ? Json("inf") : Json(dG);
      check.observed["h_edge_vertex_property"] = evp;
      check.predicted = three ? "= 3" : "= 2";
      if (!problems.empty()) {
        out.push_back(unmet(check, join(problems)));
        continue;
      }
      if (!product_in_budget) {
        out.push_back(skipped(check, over_budget_reason(P, product_budget)));
        continue;
      }
      const std::size_t expected = three ? 3 : 2;
      check.observed["e"] = product_e().value;
      check.observed["extremal_set"] = set_json(product_e().extremal_set);
      out.push_back(judged(check, product_e().value == expected,
                           "observed " + std::to_string(product_e().value)));
    } else if (id == "strong_lex_c2") {
      check.predicted = "= 2";
      if (!problems.empty()) {
        out.push_back(unmet(check, join(problems)));
        continue;
      }
      if (!product_in_budget) {
        out.push_back(skipped(check, over_budget_reason(P, product_budget)));
        continue;
      }
      check.observed["c"] = product_c().value;
      out.push_back(judged(check, product_c().value == 2,
                           "observed " + std::to_string(product_c().value)));
    }
  }
  return out;
}

namespace {

using Task = std::function<std::vector<TheoremCheck>()>;

bool family_enabled(const SuiteConfig& config, Family f) {
  return config.families.empty() || config.families.count(f) > 0;
}

void add_instance(std::vector<Task>& tasks, const SuiteConfig& config, FamilyInstance inst,
                  bool family, bool universal) {
  if (!family_enabled(config, inst.family)) return;
  tasks.push_back([inst = std::move(inst), budget = config.budget, family, universal] {
    return instance_checks(inst, budget, family, universal);
  });
}

void add_product(std::vector<Task>& tasks, const SuiteConfig& config, FamilyInstance g,
                 FamilyInstance h, ProductKind kind) {
  tasks.push_back([g = std::move(g), h = std::move(h), kind, budget = config.budget,
                   product_budget = config.product_budget] {
    return verify_products(g, h, kind, budget, product_budget);
  });
}

bool wants(const SuiteConfig& config, Suite s) {
  return config.suite == Suite::All || config.suite == s;
}

std::vector<Task> build_tasks(const SuiteConfig& config) {
  std::vector<Task> tasks;
  if (wants(config, Suite::Universal)) {
    for (std::size_t n = 2; n <= 8; ++n) add_instance(tasks, config, path(n), true, true);
    for (std::size_t n = 4; n <= 8; ++n) add_instance(tasks, config, cycle(n), true, true);
    add_instance(tasks, config, complete_bipartite(2, 3), true, true);
    add_instance(tasks, config, complete_bipartite(3, 3), true, true);
    for (std::size_t n = 3; n <= 7; ++n) add_instance(tasks, config, complete(n), true, true);
    const std::size_t span = config.random_max_n - config.random_min_n + 1;
    for (std::size_t i = 0; i < config.random_graphs; ++i) {
      const std::size_t n = config.random_min_n + i % span;
      const double p = i % 2 == 0 ? 0.3 : 0.5;
      add_instance(tasks, config, random_graph(n, p, config.seed * 7919 + i), false, true);
    }
  }
  if (wants(config, Suite::Gadgets)) {
    for (std::size_t n = 3; n <= 5; ++n) add_instance(tasks, config, gadget_c(n), true, true);
    for (std::size_t k = 1; k <= 3; ++k) add_instance(tasks, config, gadget_e(k), true, true);
  }
  if (wants(config, Suite::Blocks)) {
    for (const auto& sizes : std::vector<std::vector<std::size_t>>{
             {3}, {4, 3}, {3, 3, 3}, {3, 2, 3, 3}, {2, 3, 2}, {3, 3, 2, 3}}) {
      add_instance(tasks, config, block_chain(sizes), true, true);
    }
    for (const auto& chains : std::vector<std::vector<std::vector<std::size_t>>>{
             {{3}, {3}}, {{3, 3}, {3}}, {{4, 3}, {3, 3}}, {{3}, {3}, {3}}, {{3, 3}, {3}, {3}}}) {
      add_instance(tasks, config, block_tree(chains), true, true);
    }
  }
  if (wants(config, Suite::Chordal)) {
    const std::size_t span = config.chordal_max_n - config.chordal_min_n + 1;
    for (std::size_t i = 0; i < config.chordal_instances; ++i) {
      const std::size_t n = config.chordal_min_n + i % span;
      add_instance(tasks, config, two_connected_chordal(n, config.seed * 1000 + i), true, true);
    }
  }
  if (wants(config, Suite::Products) && config.families.empty()) {
    using K = ProductKind;
    add_product(tasks, config, gadget_c(3), gadget_c(3), K::Cartesian);
    add_product(tasks, config, gadget_c(3), path(2), K::Cartesian);
    add_product(tasks, config, gadget_c(3), path(3), K::Cartesian);
    add_product(tasks, config, block_chain({3, 3, 3}), path(2), K::Cartesian);
    add_product(tasks, config, path(3), path(3), K::Cartesian);
    add_product(tasks, config, path(4), path(2), K::Strong);
    add_product(tasks, config, path(3), path(2), K::Strong);
    add_product(tasks, config, complete(3), complete(3), K::Strong);
    add_product(tasks, config, complete(3), path(4), K::Lexicographic);
    add_product(tasks, config, complete(3), complete(3), K::Lexicographic);
    add_product(tasks, config, path(3), complete(3), K::Lexicographic);
    add_product(tasks, config, path(2), path(3), K::Lexicographic);
  }
  return tasks;
}

}  // namespace

std::vector<TheoremCheck> collect_suite(const SuiteConfig& config) {
  const auto tasks = build_tasks(config);
  std::vector<std::vector<TheoremCheck>> results(tasks.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(config.jobs, tasks.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<TheoremCheck> out;
  for (auto& batch : results) {
    for (auto& check : batch) {
      if (config.enabled_theorems.empty() || config.enabled_theorems.count(check.theorem_id)) {
        out.push_back(std::move(check));
      }
    }
  }
  return out;
}

SuiteSummary write_report(const std::vector<TheoremCheck>& checks, std::ostream& out) {
  SuiteSummary summary;
  for (const auto& check : checks) {
    out << check.to_json().dump() << '\n';
    switch (check.status) {
      case CheckStatus::Pass:
        ++summary.pass;
        break;
      case CheckStatus::Fail:
        ++summary.fail;
        break;
      case CheckStatus::Skipped:
        ++summary.skipped;
        break;
      case CheckStatus::HypothesisUnmet:
        ++summary.hypothesis_unmet;
        break;
      case CheckStatus::Flagged:
        ++summary.flagged;
        break;
    }
  }
  out << Json{{"summary", summary.to_json()}}.dump() << '\n';
  return summary;
}

SuiteSummary run_suite(const SuiteConfig& config, std::ostream& out) {
  return write_report(collect_suite(config), out);
}

}  // namespace dconv
