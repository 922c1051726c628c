#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dconv/graph.hpp"

namespace dconv {

using Json = nlohmann::ordered_json;

enum class Family {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  BlockChain,
  BlockTree,
  TwoConnectedChordal,
  GadgetC,
  GadgetE,
  Random,
};

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

// A predicted invariant value and the result that predicts it.
struct Prediction {
  enum class Relation { Equal, OneOf, AtMost };

  Relation relation = Relation::Equal;
  std::vector<std::size_t> values;
  std::string theorem;

  static Prediction equal(std::size_t v, std::string theorem);
  static Prediction one_of(std::vector<std::size_t> vs, std::string theorem);
  static Prediction at_most(std::size_t v, std::string theorem);

  bool admits(std::size_t observed) const;
  // "= 4", "in {2,3}", "<= 3"
  std::string describe() const;
};

struct FamilyInstance {
  Graph graph;
  Family family = Family::Random;
  Json params = Json::object();
  // Keyed by invariant: "c", "e".
  std::map<std::string, Prediction> predictions;
};

// All generators throw std::invalid_argument on bad parameters.
FamilyInstance path(std::size_t n);
FamilyInstance cycle(std::size_t n);
FamilyInstance complete(std::size_t n);
FamilyInstance complete_bipartite(std::size_t m, std::size_t n);

// Complete blocks B1..Bl of the given orders; consecutive blocks share one
// cut vertex (the last vertex of the earlier block).
FamilyInstance block_chain(const std::vector<std::size_t>& sizes);

// Chains of complete blocks (orders >= 3) hanging from a shared root vertex 0.
FamilyInstance block_tree(const std::vector<std::vector<std::size_t>>& chains);

// Starts from a triangle; each new vertex is joined to a random sub-clique
// (>= 2 vertices) of a previously created clique.
FamilyInstance two_connected_chordal(std::size_t n, std::uint64_t seed);

// Triangle chain a1 a2 b1 | b1 a3 b2 | ... | b_{n-2} a_n b with n-1 triangles.
// Indices: a_i -> i-1, b_j -> n-1+j, b -> 2n-2.
FamilyInstance gadget_c(std::size_t n);

// Triangle chain over a1..a_{k+1} with apexes b1..b_k plus a pendant vertex
// a on a1. Indices: a_i -> i-1, b_j -> k+j, a -> 2k+1.
FamilyInstance gadget_e(std::size_t k);

FamilyInstance random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

// Dispatch used by the CLI: parameters as JSON, e.g. {"n": 5} or
// {"chains": [[3,3],[3]]}.
FamilyInstance generate(Family family, const Json& params, std::uint64_t seed);

Json metadata_json(const FamilyInstance& instance);

// Vertex names used in gadget proofs.
namespace gadget {
inline Vertex a(std::size_t i) { return i - 1; }                          // a_i, 1-based
inline Vertex b(std::size_t n, std::size_t j) { return n - 1 + j; }       // b_j in gadget_c(n)
inline Vertex apex(std::size_t n) { return 2 * n - 2; }                   // b in gadget_c(n)
inline Vertex e_b(std::size_t k, std::size_t j) { return k + j; }         // b_j in gadget_e(k)
inline Vertex pendant(std::size_t k) { return 2 * k + 1; }                // a in gadget_e(k)
}  // namespace gadget

}  // namespace dconv
