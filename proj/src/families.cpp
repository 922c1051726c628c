#include "dconv/families.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace dconv {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames{{
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Complete, "complete"},
    {Family::CompleteBipartite, "complete_bipartite"},
    {Family::BlockChain, "block_chain"},
    {Family::BlockTree, "block_tree"},
    {Family::TwoConnectedChordal, "two_connected_chordal"},
    {Family::GadgetC, "gadget_c"},
    {Family::GadgetE, "gadget_e"},
    {Family::Random, "random"},
}};

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
  }
}

void add_triangle(std::vector<Edge>& edges, Vertex x, Vertex y, Vertex z) {
  add_clique(edges, {x, y, z});
}

// Uniform draw in [0, bound) that is identical on every platform.
std::size_t draw_below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void predict_triangle_free(FamilyInstance& inst) {
  inst.predictions["c"] = Prediction::equal(1, "obs_triangle_free");
  if (inst.graph.order() >= 2) inst.predictions["e"] = Prediction::equal(2, "obs_triangle_free");
}

void predict_complete(FamilyInstance& inst) {
  inst.predictions["c"] = Prediction::equal(2, "obs_complete");
  inst.predictions["e"] = Prediction::equal(2, "obs_complete");
}

std::string sizes_label(const std::vector<std::size_t>& sizes) {
  std::string out = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  return out + "]";
}

}  // namespace

std::string_view to_string(Family family) {
  for (auto [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto [f, candidate] : kFamilyNames) {
    if (candidate == name) return f;
  }
  return std::nullopt;
}

Prediction Prediction::equal(std::size_t v, std::string theorem) {
  return {Relation::Equal, {v}, std::move(theorem)};
}

Prediction Prediction::one_of(std::vector<std::size_t> vs, std::string theorem) {
  return {Relation::OneOf, std::move(vs), std::move(theorem)};
}

Prediction Prediction::at_most(std::size_t v, std::string theorem) {
  return {Relation::AtMost, {v}, std::move(theorem)};
}

bool Prediction::admits(std::size_t observed) const {
  switch (relation) {
    case Relation::Equal:
      return observed == values.front();
    case Relation::OneOf:
      return std::find(values.begin(), values.end(), observed) != values.end();
    case Relation::AtMost:
      return observed <= values.front();
  }
  return false;
}

std::string Prediction::describe() const {
  switch (relation) {
    case Relation::Equal:
      return "= " + std::to_string(values.front());
    case Relation::AtMost:
      return "<= " + std::to_string(values.front());
    case Relation::OneOf: {
      std::string out = "in {";
      for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + std::to_string(values[i]);
      }
      return out + "}";
    }
  }
  return {};
}

FamilyInstance path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  FamilyInstance inst{Graph::from_edges(n, edges, "P" + std::to_string(n)), Family::Path,
                      Json{{"n", n}}, {}};
  predict_triangle_free(inst);
  return inst;
}

FamilyInstance cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  FamilyInstance inst{Graph::from_edges(n, edges, "C" + std::to_string(n)), Family::Cycle,
                      Json{{"n", n}}, {}};
  if (n == 3) {
    predict_complete(inst);
  } else {
    predict_triangle_free(inst);
  }
  return inst;
}

FamilyInstance complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  std::vector<Edge> edges;
  add_clique(edges, all);
  FamilyInstance inst{Graph::from_edges(n, edges, "K" + std::to_string(n)), Family::Complete,
                      Json{{"n", n}}, {}};
  if (n > 2) {
    predict_complete(inst);
  } else {
    predict_triangle_free(inst);
  }
  return inst;
}

FamilyInstance complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite sides must be nonempty");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  }
  FamilyInstance inst{
      Graph::from_edges(m + n, edges, "K" + std::to_string(m) + "," + std::to_string(n)),
      Family::CompleteBipartite, Json{{"m", m}, {"n", n}}, {}};
  predict_triangle_free(inst);
  return inst;
}

FamilyInstance block_chain(const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("block chain needs at least one block");
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::optional<Vertex> cut;
  for (std::size_t size : sizes) {
    if (size < 2) throw std::invalid_argument("block order " + std::to_string(size) + " < 2");
    std::vector<Vertex> block;
    if (cut) block.push_back(*cut);
    while (block.size() < size) block.push_back(n++);
    add_clique(edges, block);
    cut = block.back();
  }

  const std::size_t blocks = sizes.size();
  std::size_t run = 0;
  std::size_t longest_run = 0;
  for (std::size_t size : sizes) {
    run = size > 2 ? run + 1 : 0;
    longest_run = std::max(longest_run, run);
  }
  const bool has_k2 = std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 2; });

  FamilyInstance inst{Graph::from_edges(n, edges, "block_chain" + sizes_label(sizes)),
                      Family::BlockChain, Json{{"sizes", sizes}, {"blocks", blocks}}, {}};
  if (has_k2) {
    inst.params["k"] = longest_run;
    inst.predictions["c"] = Prediction::equal(longest_run + 1, "block_c_iii");
    inst.predictions["e"] = Prediction::equal(longest_run + 2, "block_e_iii");
  } else {
    inst.predictions["c"] = Prediction::equal(blocks + 1, "block_c_i");
    inst.predictions["e"] = Prediction::equal(blocks + 1, "block_e_i");
  }
  return inst;
}

FamilyInstance block_tree(const std::vector<std::vector<std::size_t>>& chains) {
  if (chains.size() < 2) throw std::invalid_argument("block tree needs at least two chains");
  std::vector<Edge> edges;
  std::size_t n = 1;
  std::vector<std::size_t> legs;
  std::string label = "block_tree[";
  for (const auto& chain : chains) {
    if (chain.empty()) throw std::invalid_argument("block tree chain is empty");
    Vertex cut = 0;
    for (std::size_t size : chain) {
      if (size < 3) {
        throw std::invalid_argument("block tree block order " + std::to_string(size) + " < 3");
      }
      std::vector<Vertex> block{cut};
      while (block.size() < size) block.push_back(n++);
      add_clique(edges, block);
      cut = block.back();
    }
    legs.push_back(chain.size());
    label += (legs.size() > 1 ? "," : "") + sizes_label(chain);
  }
  label += "]";

  // Two legs through the root form one chain; with three or more, the
  // longest chain runs through the root along the two longest legs.
  std::vector<std::size_t> sorted_legs = legs;
  std::sort(sorted_legs.rbegin(), sorted_legs.rend());
  std::size_t blocks = 0;
  for (auto l : legs) blocks += l;
  const std::size_t longest_chain = sorted_legs[0] + sorted_legs[1];

  FamilyInstance inst{Graph::from_edges(n, edges, label), Family::BlockTree,
                      Json{{"chains", chains},
                           {"blocks", blocks},
                           {"longest_leg", sorted_legs[0]},
                           {"k", longest_chain}}, {}};
  if (chains.size() == 2) {
    inst.predictions["c"] = Prediction::equal(blocks + 1, "block_c_i");
    inst.predictions["e"] = Prediction::equal(blocks + 1, "block_e_i");
  } else {
    inst.predictions["c"] = Prediction::equal(longest_chain + 1, "block_c_ii");
    inst.predictions["e"] = Prediction::equal(longest_chain + 2, "block_e_ii");
  }
  return inst;
}

FamilyInstance two_connected_chordal(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("2-connected chordal graph needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  add_triangle(edges, 0, 1, 2);
  std::vector<std::vector<Vertex>> cliques{{0, 1, 2}};
  for (Vertex v = 3; v < n; ++v) {
    std::vector<Vertex> pool = cliques[draw_below(rng, cliques.size())];
    const std::size_t take = 2 + draw_below(rng, pool.size() - 1);
    // Partial Fisher-Yates picks `take` members.
    for (std::size_t i = 0; i < take; ++i) {
      std::swap(pool[i], pool[i + draw_below(rng, pool.size() - i)]);
    }
    std::vector<Vertex> attach(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));
    std::sort(attach.begin(), attach.end());
    for (Vertex u : attach) edges.emplace_back(u, v);
    attach.push_back(v);
    cliques.push_back(std::move(attach));
  }
  FamilyInstance inst{
      Graph::from_edges(n, edges, "chordal_n" + std::to_string(n) + "_s" + std::to_string(seed)),
      Family::TwoConnectedChordal, Json{{"n", n}, {"seed", seed}}, {}};
  inst.predictions["c"] = Prediction::equal(2, "chordal_c2");
  inst.predictions["e"] = Prediction::one_of({2, 3}, "chordal_e23");
  return inst;
}

FamilyInstance gadget_c(std::size_t n) {
  if (n < 3) throw std::invalid_argument("gadget_c needs n >= 3");
  using gadget::a;
  const auto b = [n](std::size_t j) { return gadget::b(n, j); };
  std::vector<Edge> edges;
  add_triangle(edges, a(1), a(2), b(1));
  for (std::size_t i = 3; i <= n - 1; ++i) add_triangle(edges, b(i - 2), a(i), b(i - 1));
  add_triangle(edges, b(n - 2), a(n), gadget::apex(n));
  FamilyInstance inst{Graph::from_edges(2 * n - 1, edges, "gadget_c" + std::to_string(n)),
                      Family::GadgetC, Json{{"n", n}}, {}};
  inst.predictions["c"] = Prediction::equal(n, "gadget_c_exact");
  inst.predictions["e"] = Prediction::equal(n, "gadget_c_exact");
  return inst;
}

FamilyInstance gadget_e(std::size_t k) {
  if (k < 1) throw std::invalid_argument("gadget_e needs k >= 1");
  using gadget::a;
  const auto b = [k](std::size_t j) { return gadget::e_b(k, j); };
  std::vector<Edge> edges;
  add_triangle(edges, a(1), a(2), b(1));
  for (std::size_t i = 3; i <= k + 1; ++i) add_triangle(edges, b(i - 2), a(i), b(i - 1));
  edges.emplace_back(a(1), gadget::pendant(k));
  FamilyInstance inst{Graph::from_edges(2 * k + 2, edges, "gadget_e" + std::to_string(k)),
                      Family::GadgetE, Json{{"k", k}}, {}};
  inst.predictions["c"] = Prediction::at_most(k + 1, "gadget_e_exact");
  inst.predictions["e"] = Prediction::equal(k + 2, "gadget_e_exact");
  return inst;
}

FamilyInstance random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0,1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (draw_unit(rng) < edge_probability) edges.emplace_back(u, v);
    }
  }
  const auto pct = static_cast<int>(edge_probability * 100.0 + 0.5);
  return {Graph::from_edges(n, edges,
                            "random_n" + std::to_string(n) + "_p" + std::to_string(pct) + "_s" +
                                std::to_string(seed)),
          Family::Random, Json{{"n", n}, {"p", edge_probability}, {"seed", seed}}, {}};
}

FamilyInstance generate(Family family, const Json& params, std::uint64_t seed) {
  const auto size = [&](const char* key) { return params.at(key).get<std::size_t>(); };
  switch (family) {
    case Family::Path:
      return path(size("n"));
    case Family::Cycle:
      return cycle(size("n"));
    case Family::Complete:
      return complete(size("n"));
    case Family::CompleteBipartite:
      return complete_bipartite(size("m"), size("n"));
    case Family::BlockChain:
      return block_chain(params.at("sizes").get<std::vector<std::size_t>>());
    case Family::BlockTree:
      return block_tree(params.at("chains").get<std::vector<std::vector<std::size_t>>>());
    case Family::TwoConnectedChordal:
      return two_connected_chordal(size("n"), params.value("seed", seed));
    case Family::GadgetC:
      return gadget_c(size("n"));
    case Family::GadgetE:
      return gadget_e(size("k"));
    case Family::Random:
      return random_graph(size("n"), params.at("p").get<double>(), params.value("seed", seed));
  }
  throw std::invalid_argument("unknown family");
}

Json metadata_json(const FamilyInstance& instance) {
  Json predictions = Json::object();
  for (const auto& [invariant, p] : instance.predictions) {
    predictions[invariant] = Json{{"relation", p.describe()}, {"theorem", p.theorem}};
  }
  return Json{{"name", instance.graph.name()},
              {"family", to_string(instance.family)},
              {"params", instance.params},
              {"predictions", predictions}};
}

}  // namespace dconv
