#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgcx/free_group.hpp"

namespace fgcx {

/// Vertex ids: 2*gen for x+, 2*gen+1 for x-.
using Vertex = std::uint32_t;

constexpr Vertex plus_vertex(std::uint32_t gen) { return 2 * gen; }
constexpr Vertex minus_vertex(std::uint32_t gen) { return 2 * gen + 1; }

/// Unordered pair, stored with first <= second.
struct Edge {
  Vertex first;
  Vertex second;

  static Edge make(Vertex u, Vertex v) { return u <= v ? Edge{u, v} : Edge{v, u}; }
  auto operator<=>(const Edge&) const = default;
};

/// Whitehead multigraph of a cyclic word: 2n vertices, one edge per
/// circularly adjacent pair of letters.
class WhiteheadGraph {
 public:
  WhiteheadGraph(Alphabet alphabet, std::vector<Edge> edges);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t rank() const { return alphabet_.rank(); }
  std::size_t vertex_count() const { return 2 * rank(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t degree(Vertex v) const;
  /// Edges sorted, so equal multisets compare equal.
  std::vector<Edge> edge_multiset() const;

  /// "a1_p" / "a1_m"
  std::string vertex_name(Vertex v) const;

 private:
  Alphabet alphabet_;
  std::vector<Edge> edges_;
};

WhiteheadGraph build_whitehead_graph(const CyclicWord& c, const Alphabet& alphabet);

enum class Connectivity { kEmpty, kDisconnected, kCutVertex, kTwoConnected };

struct ConnectivityStatus {
  Connectivity kind = Connectivity::kEmpty;
  /// Components of the degree-positive subgraph, each sorted, when disconnected.
  std::vector<std::vector<Vertex>> components;
  /// Least cut vertex, when kind == kCutVertex.
  std::optional<Vertex> cut_vertex;
  /// Generators that do not occur in the word.
  std::vector<std::uint32_t> isolated_generators;
};

/// Classifies the subgraph induced by degree-positive vertices. A graph with
/// no edges has status kEmpty; use `classify_or_throw` to treat that as an
/// error.
ConnectivityStatus classify(const WhiteheadGraph& g);
ConnectivityStatus classify_or_throw(const WhiteheadGraph& g);

/// "empty" | "disconnected" | "cut_vertex" | "two_connected"
std::string to_string(Connectivity c);

std::string to_dot(const WhiteheadGraph& g);

/// {"rank": n, "edges": [["a1_p","a2_m"], ...]}
std::string to_edge_list_json(const WhiteheadGraph& g);

}  // namespace fgcx
