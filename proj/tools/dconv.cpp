// dconv: command line front end for the delta-convexity library.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dconv/families.hpp"
#include "dconv/graph_io.hpp"
#include "dconv/hull.hpp"
#include "dconv/independence.hpp"
#include "dconv/products.hpp"
#include "dconv/verifier.hpp"

namespace {

using namespace dconv;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Vertex> parse_index_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad vertex index '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad vertex index '" + item + "'");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::string comma_list(const VertexSet& s) {
  std::string out;
  for (Vertex v : s.members()) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

int run_hull(const std::string& graph_file, const std::string& set_text, bool trace) {
  const Graph g = load_graph(graph_file);
  VertexSet s(g.order());
  for (Vertex v : parse_index_list(set_text)) {
    if (v >= g.order()) throw UsageError("vertex " + std::to_string(v) + " outside the graph");
    s.insert(v);
  }
  if (!trace) {
    std::cout << comma_list(delta_hull(g, s)) << '\n';
    return 0;
  }
  for (const VertexSet& round : delta_hull_traced(g, s).rounds) std::cout << comma_list(round) << '\n';
  return 0;
}

int run_invariant(const std::string& which, const std::string& graph_file, std::optional<std::size_t> max_size,
                  bool naive) {
  const Graph g = load_graph(graph_file);
  SearchOptions options;
  options.max_size = max_size;
  options.naive = naive;
  InvariantResult r;
  if (which == "c") {
    r = caratheodory_number(g, options);
  } else if (which == "e") {
    r = exchange_number(g, options);
  } else {
    r = helly_number(g, options);
  }
  const Json out{{"value", r.value}, {"extremal_set", r.extremal_set.members()}, {"exhaustive", r.exhaustive}};
  std::cout << out.dump() << '\n';
  return 0;
}

std::filesystem::path meta_path(const std::filesystem::path& out) {
  auto meta = out;
  meta.replace_extension(".meta.json");
  return meta;
}

int run_generate(const std::string& family_name, const std::string& params_text, std::uint64_t seed,
                 const std::string& out_file) {
  const auto family = parse_family(family_name);
  if (!family) throw UsageError("unknown family '" + family_name + "'");
  Json params;
  try {
    params = Json::parse(params_text);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("--params is not valid JSON: ") + e.what());
  }
  FamilyInstance inst;
  try {
    inst = generate(*family, params, seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  save_text(out_file, graph_to_json(inst.graph));
  save_text(meta_path(out_file), metadata_json(inst).dump(2) + "\n");
  return 0;
}

int run_product(const std::string& kind_name, const std::string& g_file, const std::string& h_file,
                const std::string& out_file) {
  const auto kind = parse_product_kind(kind_name);
  if (!kind) throw UsageError("unknown product kind '" + kind_name + "'");
  const Graph g = load_graph(g_file);
  const Graph h = load_graph(h_file);
  ProductGraph p = [&] {
    try {
      return product(g, h, *kind);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const Json meta = p.metadata();
  save_text(out_file, graph_to_json(p.graph(), meta));
  return 0;
}

int run_verify(SuiteConfig config, const std::string& report_file) {
  std::ofstream out(report_file, std::ios::binary);
  if (!out) {
    std::cerr << "dconv: cannot open report '" << report_file << "'\n";
    return kUsageError;
  }
  const SuiteSummary summary = run_suite(config, out);
  out.flush();
  if (!out) {
    std::cerr << "dconv: write failed for '" << report_file << "'\n";
    return kUsageError;
  }
  std::cerr << "pass " << summary.pass << ", fail " << summary.fail << ", skipped " << summary.skipped
            << ", hypothesis_unmet " << summary.hypothesis_unmet << ", flagged " << summary.flagged << '\n';
  if (summary.total() > 0 && summary.skipped == summary.total()) {
    std::cerr << "dconv: warning: every check was skipped\n";
  }
  return summary.fail > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta-convexity toolkit"};
  app.require_subcommand(1);

  auto* hull = app.add_subcommand("hull", "Delta-convex hull of a vertex set");
  std::string hull_graph;
  std::string hull_set;
  bool hull_trace = false;
  hull->add_option("--graph", hull_graph, "graph file")->required();
  hull->add_option("--set", hull_set, "comma separated vertex indices")->required();
  hull->add_flag("--trace", hull_trace, "print one interval round per line");

  auto* invariant = app.add_subcommand("invariant", "Caratheodory, exchange or Helly number");
  std::string which;
  std::string inv_graph;
  std::optional<std::size_t> max_size;
  bool naive = false;
  invariant->add_option("--which", which)->required()->check(CLI::IsMember({"c", "e", "h"}));
  invariant->add_option("--graph", inv_graph)->required();
  invariant->add_option("--max-size", max_size, "cap on the subset size searched");
  invariant->add_flag("--naive", naive, "test every subset without pruning");

  auto* gen = app.add_subcommand("generate", "Generate a family member");
  std::string family;
  std::string params = "{}";
  std::uint64_t seed = 1;
  std::string gen_out;
  gen->add_option("family", family)->required();
  gen->add_option("--params", params, "JSON parameter object");
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", gen_out)->required();

  auto* prod = app.add_subcommand("product", "Build a graph product");
  std::string kind;
  std::string g_file;
  std::string h_file;
  std::string prod_out;
  prod->add_option("--kind", kind)->required();
  prod->add_option("left", g_file, "first factor")->required();
  prod->add_option("right", h_file, "second factor")->required();
  prod->add_option("-o,--output", prod_out)->required();

  auto* verify = app.add_subcommand("verify", "Run the theorem verification suite");
  SuiteConfig config;
  std::string suite = "all";
  std::string report;
  std::vector<std::string> only;
  verify->add_option("--suite", suite)->check(
      CLI::IsMember({"all", "universal", "blocks", "chordal", "products", "gadgets"}));
  verify->add_option("--seed", config.seed);
  verify->add_option("--budget", config.budget.max_vertices, "max vertices for exhaustive search");
  verify->add_option("--product-budget", config.product_budget.max_vertices,
                     "max vertices for exhaustive search on a product graph");
  verify->add_option("--report", report)->required();
  verify->add_option("--jobs", config.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--theorem", only, "restrict to these theorem ids");
  std::vector<std::string> family_names;
  verify->add_option("--family", family_names, "restrict to these generator families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*hull) return run_hull(hull_graph, hull_set, hull_trace);
    if (*invariant) return run_invariant(which, inv_graph, max_size, naive);
    if (*gen) return run_generate(family, params, seed, gen_out);
    if (*prod) return run_product(kind, g_file, h_file, prod_out);
    if (*verify) {
      config.suite = *parse_suite(suite);
      config.enabled_theorems.insert(only.begin(), only.end());
      for (const auto& name : family_names) {
        const auto f = parse_family(name);
        if (!f) throw UsageError("unknown family '" + name + "'");
        config.families.insert(*f);
      }
      return run_verify(config, report);
    }
  } catch (const std::exception& e) {
    std::cerr << "dconv: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
