#include "fgcx/whitehead_graph.hpp"

#include <algorithm>

#include <json.hpp>

#include "fgcx/errors.hpp"

namespace fgcx {

namespace {

// Vertex on the left/right side of a letter: x = -x+ , x^-1 = +x-.
Vertex left_vertex(Letter x) { return x.positive() ? minus_vertex(x.gen()) : plus_vertex(x.gen()); }
Vertex right_vertex(Letter x) { return x.positive() ? plus_vertex(x.gen()) : minus_vertex(x.gen()); }

using Adjacency = std::vector<std::vector<Vertex>>;

// Simple adjacency (parallel edges collapsed, self-loops dropped).
Adjacency simple_adjacency(const WhiteheadGraph& g) {
  Adjacency adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.first == e.second) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

// Articulation points of the component containing `root`, by iterative
// Hopcroft-Tarjan lowpoints.
std::vector<bool> articulation_points(const Adjacency& adj, Vertex root) {
  const std::size_t n = adj.size();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Vertex> parent(n, static_cast<Vertex>(n));
  std::vector<std::size_t> next(n, 0);
  std::vector<bool> cut(n, false);
  std::size_t root_children = 0;
  int clock = 0;

  std::vector<Vertex> stack{root};
  disc[root] = low[root] = clock++;
  while (!stack.empty()) {
    Vertex u = stack.back();
    if (next[u] < adj[u].size()) {
      Vertex v = adj[u][next[u]++];
      if (disc[v] < 0) {
        parent[v] = u;
        disc[v] = low[v] = clock++;
        if (u == root) ++root_children;
        stack.push_back(v);
      } else if (v != parent[u]) {
        low[u] = std::min(low[u], disc[v]);
      }
      continue;
    }
    stack.pop_back();
    if (u == root) continue;
    Vertex p = parent[u];
    low[p] = std::min(low[p], low[u]);
    if (p != root && low[u] >= disc[p]) cut[p] = true;
  }
  cut[root] = root_children > 1;
  return cut;
}

}  // namespace

WhiteheadGraph::WhiteheadGraph(Alphabet alphabet, std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.second >= vertex_count()) throw InvalidArgument("edge endpoint outside the vertex set");
  }
}

std::size_t WhiteheadGraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (const Edge& e : edges_) d += (e.first == v) + (e.second == v);
  return d;
}

std::vector<Edge> WhiteheadGraph::edge_multiset() const {
  auto out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string WhiteheadGraph::vertex_name(Vertex v) const {
  return alphabet_.name(v / 2) + ((v & 1U) ? "_m" : "_p");
}

WhiteheadGraph build_whitehead_graph(const CyclicWord& c, const Alphabet& alphabet) {
  const auto letters = c.letters();
  if (c.word().min_rank() > alphabet.rank()) throw InvalidArgument("word uses a generator outside the alphabet");
  std::vector<Edge> edges;
  edges.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    Letter x = letters[i];
    Letter y = letters[(i + 1) % letters.size()];
    edges.push_back(Edge::make(right_vertex(x), left_vertex(y)));
  }
  return WhiteheadGraph(alphabet, std::move(edges));
}

ConnectivityStatus classify(const WhiteheadGraph& g) {
  ConnectivityStatus status;
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.first];
    ++deg[e.second];
  }
  for (std::uint32_t gen = 0; gen < g.rank(); ++gen) {
    if (deg[plus_vertex(gen)] == 0 && deg[minus_vertex(gen)] == 0) status.isolated_generators.push_back(gen);
  }
  if (g.edges().empty()) return status;

  const Adjacency adj = simple_adjacency(g);
  std::vector<int> component(n, -1);
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (deg[s] == 0 || component[s] >= 0) continue;
    std::vector<Vertex> members;
    std::vector<Vertex> todo{s};
    component[s] = count;
    while (!todo.empty()) {
      Vertex u = todo.back();
      todo.pop_back();
      members.push_back(u);
      for (Vertex v : adj[u]) {
        if (component[v] < 0) {
          component[v] = count;
          todo.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    status.components.push_back(std::move(members));
    ++count;
  }

  if (count > 1) {
    status.kind = Connectivity::kDisconnected;
    return status;
  }

  const auto& members = status.components.front();
  if (members.size() >= 3) {
    auto cut = articulation_points(adj, members.front());
    for (Vertex v : members) {
      if (cut[v]) {
        status.kind = Connectivity::kCutVertex;
        status.cut_vertex = v;
        status.components.clear();
        return status;
      }
    }
  }
  status.kind = Connectivity::kTwoConnected;
  status.components.clear();
  return status;
}

ConnectivityStatus classify_or_throw(const WhiteheadGraph& g) {
  auto status = classify(g);
  if (status.kind == Connectivity::kEmpty) throw EmptyGraphError("Whitehead graph has no edges");
  return status;
}

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::kEmpty: return "empty";
    case Connectivity::kDisconnected: return "disconnected";
    case Connectivity::kCutVertex: return "cut_vertex";
    case Connectivity::kTwoConnected: return "two_connected";
  }
  return "unknown";
}

std::string to_dot(const WhiteheadGraph& g) {
  std::string out = "graph whitehead {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out += "  " + g.vertex_name(v) + ";\n";
  for (const Edge& e : g.edges()) {
    out += "  " + g.vertex_name(e.first) + " -- " + g.vertex_name(e.second) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_edge_list_json(const WhiteheadGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.vertex_name(e.first), g.vertex_name(e.second)});
  nlohmann::json j{{"rank", g.rank()}, {"edges", std::move(edges)}};
  return j.dump();
}

}  // namespace fgcx
