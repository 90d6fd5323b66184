#include "fgcx/metric_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "fgcx/errors.hpp"

namespace fgcx {

namespace {

void check_k(std::int64_t k) {
  if (k < 1) throw InvalidArgument("k must be >= 1, got " + std::to_string(k));
}

}  // namespace

MetricGraph::MetricGraph(std::vector<std::string> vertex_names, std::vector<MetricEdge> edges)
    : vertex_names_(std::move(vertex_names)), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.from >= vertex_names_.size() || e.to >= vertex_names_.size()) {
      throw InvalidArgument("edge '" + e.label + "' has an endpoint outside the graph");
    }
    if (e.length <= kZero) throw InvalidArgument("edge '" + e.label + "' must have positive length");
  }
}

std::size_t MetricGraph::find_edge(const std::string& label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].label == label) return i;
  }
  throw InvalidArgument("no edge labelled '" + label + "'");
}

Rational MetricGraph::total_length() const {
  Rational sum(0);
  for (const auto& e : edges_) sum += e.length;
  return sum;
}

MetricGraph build_Gk(std::int64_t k) {
  check_k(k);
  const auto n = static_cast<std::size_t>(2 * k);
  const Rational len(1, 12 * k);
  std::vector<std::string> names;
  std::vector<MetricEdge> edges;
  for (std::size_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, i, len, "a" + std::to_string(i + 1)});
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, len, "e" + std::to_string(i + 1)});
  return MetricGraph(std::move(names), std::move(edges));
}

std::optional<std::size_t> as_vertex(const MetricGraph& g, const GraphPoint& p) {
  const auto& e = g.edge(p.edge);
  if (p.offset == kZero) return e.from;
  if (p.offset == e.length) return e.to;
  return std::nullopt;
}

bool same_point(const MetricGraph& g, const GraphPoint& p, const GraphPoint& q) {
  auto u = as_vertex(g, p);
  auto v = as_vertex(g, q);
  if (u || v) return u == v;
  return p.edge == q.edge && p.offset == q.offset;
}

Rational circle_distance(const Rational& a, const Rational& b) {
  Rational d = a - b;
  d -= Rational(floor(d));  // now in [0, 1)
  return std::min(d, kOne - d);
}

PLLoop::PLLoop(const MetricGraph& graph, std::size_t start, std::vector<LoopStep> steps)
    : start_(start), steps_(std::move(steps)) {
  if (start_ >= graph.vertex_count()) throw InvalidArgument("loop start outside the graph");
  if (steps_.empty()) throw InvalidArgument("loop needs at least one step");
  std::size_t at = start_;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const auto& s = steps_[i];
    if (s.edge >= graph.edge_count()) throw InvalidArgument("loop step on a missing edge");
    if (s.dir != 1 && s.dir != -1) throw InvalidArgument("loop step direction must be +1 or -1");
    if (step_start(graph, i) != at) {
      throw InvalidArgument("loop is discontinuous at step " + std::to_string(i));
    }
    at = step_end(graph, i);
  }
  if (at != start_) throw InvalidArgument("loop does not close up");
}

std::size_t PLLoop::step_start(const MetricGraph& g, std::size_t i) const {
  const auto& e = g.edge(steps_[i].edge);
  return steps_[i].dir > 0 ? e.from : e.to;
}

std::size_t PLLoop::step_end(const MetricGraph& g, std::size_t i) const {
  const auto& e = g.edge(steps_[i].edge);
  return steps_[i].dir > 0 ? e.to : e.from;
}

bool PLLoop::isometric(const MetricGraph& g) const {
  const Rational arc(1, static_cast<std::int64_t>(steps_.size()));
  return std::all_of(steps_.begin(), steps_.end(), [&](const LoopStep& s) { return g.edge(s.edge).length == arc; });
}

PLLoop build_fk(const MetricGraph& gk, std::int64_t k) {
  check_k(k);
  const auto n = static_cast<std::size_t>(2 * k);
  if (gk.edge_count() != 2 * n || gk.vertex_count() != n) throw InvalidArgument("graph is not G_k for this k");
  auto loop = [](std::size_t i) { return i; };
  auto arc = [n](std::size_t i) { return n + i; };
  std::vector<LoopStep> steps;
  steps.reserve(6 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    steps.push_back({loop(i), 1});
    steps.push_back({arc(i), 1});
    steps.push_back({loop(next), 1});
    steps.push_back({arc(i), -1});
    steps.push_back({loop(i), 1});
    steps.push_back({arc(i), 1});
  }
  return PLLoop(gk, 0, std::move(steps));
}

GraphPoint evaluate(const MetricGraph& g, const PLLoop& loop, const CirclePoint& theta) {
  if (theta.position < kZero || theta.position >= kOne) throw InvalidArgument("circle position must lie in [0, 1)");
  const auto m = static_cast<std::int64_t>(loop.size());
  const Rational scaled = theta.position * m;
  const std::int64_t i = floor(scaled);
  const Rational t = scaled - i;
  const auto& step = loop.steps()[static_cast<std::size_t>(i)];
  const Rational& len = g.edge(step.edge).length;
  return GraphPoint{step.edge, step.dir > 0 ? len * t : len * (kOne - t)};
}

std::vector<CirclePoint> preimage(const MetricGraph& g, const PLLoop& loop, const GraphPoint& p) {
  const auto& edge = g.edge(p.edge);
  if (p.offset < kZero || p.offset > edge.length) throw InvalidArgument("offset outside the edge");
  const auto m = static_cast<std::int64_t>(loop.size());
  std::vector<CirclePoint> out;
  if (auto v = as_vertex(g, p)) {
    // A vertex is reached only at step boundaries.
    for (std::size_t i = 0; i < loop.size(); ++i) {
      if (loop.step_start(g, i) == *v) out.push_back({Rational(static_cast<std::int64_t>(i), m)});
    }
    return out;
  }
  const Rational u = p.offset / edge.length;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto& s = loop.steps()[i];
    if (s.edge != p.edge) continue;
    const Rational t = s.dir > 0 ? u : kOne - u;
    out.push_back({(Rational(static_cast<std::int64_t>(i)) + t) / m});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational circle_diameter(const std::vector<CirclePoint>& points) {
  Rational best(0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, circle_distance(points[i].position, points[j].position));
    }
  }
  return best;
}

std::vector<std::size_t> edge_cover_counts(const MetricGraph& g, const PLLoop& loop) {
  std::vector<std::size_t> counts(g.edge_count(), 0);
  for (const auto& s : loop.steps()) ++counts[s.edge];
  return counts;
}

bool is_surjective(const MetricGraph& g, const PLLoop& loop) {
  auto counts = edge_cover_counts(g, loop);
  return std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; });
}

bool is_eps_map(const MetricGraph& g, const PLLoop& loop, const Rational& eps) {
  return is_surjective(g, loop) && epsilon(g, loop) < eps;
}

double chord_from_arc(const Rational& d) {
  constexpr double kPi = 3.14159265358979323846;
  return 2.0 * std::sin(kPi * to_double(d));
}

void validate_tree(const MetricGraph& g, const SpanningTree& tree, const Alphabet& alphabet) {
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edge_count();
  if (tree.root >= nv) throw InvalidArgument("tree root outside the graph");
  if (tree.in_tree.size() != ne || tree.label.size() != ne) throw InvalidArgument("tree tables do not match edge count");

  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t tree_edges = 0;
  for (std::size_t e = 0; e < ne; ++e) {
    const auto& edge = g.edge(e);
    if (tree.in_tree[e]) {
      if (tree.label[e]) throw InvalidArgument("tree edge '" + edge.label + "' carries a generator label");
      std::size_t a = find(edge.from);
      std::size_t b = find(edge.to);
      if (a == b) throw InvalidArgument("tree edges contain a cycle at '" + edge.label + "'");
      parent[a] = b;
      ++tree_edges;
    } else {
      if (!tree.label[e]) throw InvalidArgument("non-tree edge '" + edge.label + "' has no generator label");
      const auto& l = *tree.label[e];
      if (l.gen >= alphabet.rank()) throw InvalidArgument("label of '" + edge.label + "' is outside the alphabet");
      if (l.orientation != 1 && l.orientation != -1) throw InvalidArgument("label orientation must be +1 or -1");
    }
  }
  if (tree_edges + 1 != nv) throw InvalidArgument("tree does not span the graph");
}

SpanningTree canonical_tree(const MetricGraph& gk, std::int64_t k) {
  check_k(k);
  const auto n = static_cast<std::size_t>(2 * k);
  if (gk.edge_count() != 2 * n || gk.vertex_count() != n) throw InvalidArgument("graph is not G_k for this k");
  SpanningTree tree{0, std::vector<bool>(2 * n, false), std::vector<std::optional<TreeLabel>>(2 * n)};
  for (std::size_t i = 0; i < n; ++i) tree.label[i] = TreeLabel{static_cast<std::uint32_t>(i), 1};
  for (std::size_t i = 0; i + 1 < n; ++i) tree.in_tree[n + i] = true;
  // e_2k runs y_2k -> y_1, which is gamma's positive (clockwise) direction.
  tree.label[2 * n - 1] = TreeLabel{static_cast<std::uint32_t>(n), 1};
  return tree;
}

Alphabet wk_alphabet(std::int64_t k) {
  check_k(k);
  std::vector<std::string> names;
  for (std::int64_t i = 1; i <= 2 * k; ++i) names.push_back("a" + std::to_string(i));
  names.emplace_back("g");
  return Alphabet(std::move(names));
}

Word trace_word(const MetricGraph& g, const PLLoop& loop, const SpanningTree& tree, const Alphabet& alphabet) {
  validate_tree(g, tree, alphabet);
  if (loop.start_vertex() != tree.root) throw InvalidArgument("loop is not based at the tree root");
  std::vector<Letter> letters;
  for (const auto& s : loop.steps()) {
    if (tree.in_tree[s.edge]) continue;
    const auto& l = *tree.label[s.edge];
    letters.emplace_back(l.gen, l.orientation * s.dir);
  }
  return Word(letters);
}

std::int64_t find_k_for_epsilon(const Rational& eps) {
  if (eps <= kZero) throw InvalidArgument("epsilon must be positive");
  const std::int64_t bound = ceil(kOne / eps) + 1;
  for (std::int64_t k = 1; k <= bound; ++k) {
    if (epsilon_of_fk(k) < eps) return k;
  }
  throw std::logic_error("no k <= " + std::to_string(bound) + " reaches epsilon " + to_string(eps));
}

std::string graph_to_json(const MetricGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex_name(v));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    const Rational in_pi = e.length * std::int64_t{2};
    edges.push_back({{"label", e.label},
                     {"from", g.vertex_name(e.from)},
                     {"to", g.vertex_name(e.to)},
                     {"length", {{"num", in_pi.numerator()}, {"den", in_pi.denominator()}, {"unit", "pi"}}}});
  }
  return nlohmann::json{{"vertices", vertices}, {"edges", edges}}.dump();
}

std::string loop_to_json(const MetricGraph& g, const PLLoop& loop) {
  nlohmann::json schedule = nlohmann::json::array();
  for (const auto& s : loop.steps()) schedule.push_back({{"edge", g.edge(s.edge).label}, {"dir", s.dir}});
  return nlohmann::json{{"start", g.vertex_name(loop.start_vertex())}, {"schedule", schedule}}.dump();
}

}  // namespace fgcx
