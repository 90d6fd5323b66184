#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgcx/free_group.hpp"
#include "fgcx/rational.hpp"

namespace fgcx {

// All lengths and circle positions are exact rationals in units of the full
// circle: 1 == 2*pi. An edge of length pi/(6k) has length 1/(12k).

struct MetricEdge {
  std::size_t from;
  std::size_t to;
  Rational length;
  std::string label;

  bool is_loop() const { return from == to; }
};

class MetricGraph {
 public:
  MetricGraph(std::vector<std::string> vertex_names, std::vector<MetricEdge> edges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  const std::string& vertex_name(std::size_t v) const { return vertex_names_.at(v); }
  const std::vector<MetricEdge>& edges() const { return edges_; }
  const MetricEdge& edge(std::size_t e) const { return edges_.at(e); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Index of the edge with this label; throws InvalidArgument when absent.
  std::size_t find_edge(const std::string& label) const;

  Rational total_length() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<MetricEdge> edges_;
};

/// Vertices y1..y2k; loops a1..a2k at y_i (edge ids 0..2k-1); arcs e1..e2k
/// from y_i to y_{i+1 mod 2k} (edge ids 2k..4k-1). Every edge has length
/// 1/(12k). Clockwise is increasing index.
MetricGraph build_Gk(std::int64_t k);

/// A point at `offset` along `edge`, measured from its `from` endpoint.
struct GraphPoint {
  std::size_t edge;
  Rational offset;
};

/// Vertex id when the point is an edge endpoint.
std::optional<std::size_t> as_vertex(const MetricGraph& g, const GraphPoint& p);

/// Equality of points with endpoints identified with vertices.
bool same_point(const MetricGraph& g, const GraphPoint& p, const GraphPoint& q);

/// Position in [0, 1), a fraction of the full circle.
struct CirclePoint {
  Rational position;

  friend bool operator==(const CirclePoint& a, const CirclePoint& b) { return a.position == b.position; }
  friend bool operator<(const CirclePoint& a, const CirclePoint& b) { return a.position < b.position; }
};

/// Arc-metric distance, in units of 2*pi, so at most 1/2.
Rational circle_distance(const Rational& a, const Rational& b);

struct LoopStep {
  std::size_t edge;
  int dir;  // +1 from -> to, -1 to -> from
};

/// Closed edge loop; step i is parameterized affinely over [i/m, (i+1)/m).
class PLLoop {
 public:
  PLLoop(const MetricGraph& graph, std::size_t start, std::vector<LoopStep> steps);

  std::size_t start_vertex() const { return start_; }
  const std::vector<LoopStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }

  std::size_t step_start(const MetricGraph& g, std::size_t i) const;
  std::size_t step_end(const MetricGraph& g, std::size_t i) const;

  /// Each step's circle arc 1/m equals its edge length.
  bool isometric(const MetricGraph& g) const;

 private:
  std::size_t start_;
  std::vector<LoopStep> steps_;
};

/// Per step (a_i, e_i, a_{i+1}, e_i reversed, a_i, e_i) for i < 2k, then
/// (a_2k, e_2k, a_1, e_2k reversed, a_2k, e_2k); 12k steps from y1.
PLLoop build_fk(const MetricGraph& gk, std::int64_t k);

GraphPoint evaluate(const MetricGraph& g, const PLLoop& loop, const CirclePoint& theta);

/// All circle points mapped to `p`, sorted.
std::vector<CirclePoint> preimage(const MetricGraph& g, const PLLoop& loop, const GraphPoint& p);

/// Arc-metric diameter of a finite set of circle points.
Rational circle_diameter(const std::vector<CirclePoint>& points);

/// Number of steps covering each edge.
std::vector<std::size_t> edge_cover_counts(const MetricGraph& g, const PLLoop& loop);
bool is_surjective(const MetricGraph& g, const PLLoop& loop);

struct EpsilonWitness {
  Rational epsilon;
  GraphPoint point;
};

/// Exact sup over graph points of the preimage diameter, in units of 2*pi.
EpsilonWitness epsilon_with_witness(const MetricGraph& g, const PLLoop& loop);
Rational epsilon(const MetricGraph& g, const PLLoop& loop);

/// epsilon(loop) < eps and every edge is covered.
bool is_eps_map(const MetricGraph& g, const PLLoop& loop, const Rational& eps);

/// Chord length 2 sin(pi d) for an arc distance d in units of 2*pi, in units
/// of the circle radius.
double chord_from_arc(const Rational& d);

struct TreeLabel {
  std::uint32_t gen;
  int orientation;  // sign emitted when the edge is traversed in its own direction
};

/// Spanning tree plus generator labels for the remaining edges.
struct SpanningTree {
  std::size_t root;
  std::vector<bool> in_tree;                   // per edge
  std::vector<std::optional<TreeLabel>> label;  // per edge, set exactly for non-tree edges
};

/// Throws InvalidArgument describing the first problem.
void validate_tree(const MetricGraph& g, const SpanningTree& tree, const Alphabet& alphabet);

/// Tree {e1..e_{2k-1}} rooted at y1; a_i -> generator i-1, e_2k -> generator
/// 2k (gamma), positive from y_2k to y1.
SpanningTree canonical_tree(const MetricGraph& gk, std::int64_t k);

/// Alphabet a1..a2k, g.
Alphabet wk_alphabet(std::int64_t k);

Word trace_word(const MetricGraph& g, const PLLoop& loop, const SpanningTree& tree, const Alphabet& alphabet);

/// epsilon(f_k) in units of 2*pi.
Rational epsilon_of_fk(std::int64_t k);

/// Least k with epsilon(f_k) < eps, scanning k = 1 .. ceil(1/eps) + 1.
std::int64_t find_k_for_epsilon(const Rational& eps);

/// {"vertices": [...], "edges": [{"label","from","to","length":{"num","den","unit":"pi"}}]}
std::string graph_to_json(const MetricGraph& g);
/// {"start": "y1", "schedule": [{"edge":"a1","dir":1}, ...]}
std::string loop_to_json(const MetricGraph& g, const PLLoop& loop);

}  // namespace fgcx
