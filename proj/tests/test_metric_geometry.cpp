#include <doctest.h>

#include <json.hpp>

#include "fgcx/errors.hpp"
#include "fgcx/metric_graph.hpp"
#include "fgcx/pipeline.hpp"
#include "oracles.hpp"

using namespace fgcx;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

std::vector<Rational> positions(const std::vector<CirclePoint>& pts) {
  std::vector<Rational> out;
  for (const auto& p : pts) out.push_back(p.position);
  return out;
}

}  // namespace

TEST_CASE("build_Gk") {
  auto g1 = build_Gk(1);
  CHECK(g1.vertex_count() == 2);
  CHECK(g1.edge_count() == 4);
  for (const auto& e : g1.edges()) CHECK(e.length == R(1, 12));  // pi/6
  CHECK(g1.edge(g1.find_edge("a1")).is_loop());
  CHECK(g1.edge(g1.find_edge("e2")).from == 1);
  CHECK(g1.edge(g1.find_edge("e2")).to == 0);

  auto g2 = build_Gk(2);
  CHECK(g2.vertex_count() == 4);
  CHECK(g2.edge_count() == 8);
  CHECK(g2.total_length() == R(1, 3));  // 2pi/3

  for (std::int64_t k = 1; k <= 50; ++k) {
    auto g = build_Gk(k);
    CHECK(g.total_length() == R(1, 3));
    std::size_t loops = 0;
    Rational gamma(0);
    for (const auto& e : g.edges()) {
      loops += e.is_loop();
      if (!e.is_loop()) gamma += e.length;
    }
    CHECK(loops == static_cast<std::size_t>(2 * k));
    CHECK(gamma == R(1, 6));  // pi/3
  }
  CHECK_THROWS_AS(build_Gk(0), InvalidArgument);
}

TEST_CASE("build_fk schedule") {
  auto g = build_Gk(1);
  auto f = build_fk(g, 1);
  std::vector<std::pair<std::string, int>> expected{{"a1", 1}, {"e1", 1},  {"a2", 1}, {"e1", -1},
                                                    {"a1", 1}, {"e1", 1},  {"a2", 1}, {"e2", 1},
                                                    {"a1", 1}, {"e2", -1}, {"a2", 1}, {"e2", 1}};
  REQUIRE(f.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(g.edge(f.steps()[i].edge).label == expected[i].first);
    CHECK(f.steps()[i].dir == expected[i].second);
  }
  CHECK(f.start_vertex() == 0);

  for (std::int64_t k = 1; k <= 50; ++k) {
    auto gk = build_Gk(k);
    auto fk = build_fk(gk, k);
    CHECK(fk.size() == static_cast<std::size_t>(12 * k));
    CHECK(fk.isometric(gk));
    for (auto c : edge_cover_counts(gk, fk)) CHECK(c == 3);
    CHECK(is_surjective(gk, fk));
    for (const auto& s : fk.steps()) {
      if (gk.edge(s.edge).is_loop()) CHECK(s.dir == 1);
    }
  }
  CHECK_THROWS_AS(build_fk(g, 2), InvalidArgument);
  CHECK_THROWS_AS(PLLoop(g, 0, {{g.find_edge("e1"), 1}}), InvalidArgument);
  CHECK_THROWS_AS(PLLoop(g, 0, {{g.find_edge("e2"), 1}}), InvalidArgument);
}

TEST_CASE("evaluate") {
  auto g = build_Gk(1);
  auto f = build_fk(g, 1);
  const std::size_t a1 = g.find_edge("a1");
  CHECK(as_vertex(g, evaluate(g, f, {R(0)})) == 0U);
  auto mid = evaluate(g, f, {R(1, 24)});
  CHECK(mid.edge == a1);
  CHECK(mid.offset == R(1, 24));
  CHECK(as_vertex(g, evaluate(g, f, {R(1, 12)})) == 0U);
  // Backwards traversal of e1 in step 4.
  auto back = evaluate(g, f, {R(3, 12) + R(1, 48)});
  CHECK(back.edge == g.find_edge("e1"));
  CHECK(back.offset == R(1, 12) - R(1, 48));
  CHECK_THROWS_AS(evaluate(g, f, {R(1)}), InvalidArgument);
}

TEST_CASE("preimage") {
  auto g = build_Gk(1);
  auto f = build_fk(g, 1);
  const std::size_t a1 = g.find_edge("a1");
  CHECK(positions(preimage(g, f, {a1, R(1, 24)})) == std::vector<Rational>{R(1, 24), R(9, 24), R(17, 24)});

  // Vertex y1: every step boundary the loop passes through y1, found here by
  // evaluating all boundaries.
  std::vector<Rational> y1_expected;
  for (std::int64_t i = 0; i < 12; ++i) {
    if (as_vertex(g, evaluate(g, f, {R(i, 12)})) == 0U) y1_expected.push_back(R(i, 12));
  }
  CHECK(positions(preimage(g, f, {a1, R(0)})) == y1_expected);
  CHECK(y1_expected == std::vector<Rational>{R(0), R(1, 12), R(4, 12), R(5, 12), R(8, 12), R(9, 12)});

  // Generic arc point: three preimages inside its own six-step block.
  for (std::int64_t k : {2, 3, 5}) {
    auto gk = build_Gk(k);
    auto fk = build_fk(gk, k);
    for (std::int64_t i = 0; i + 1 < 2 * k; ++i) {
      const std::size_t e = static_cast<std::size_t>(2 * k + i);
      auto pts = preimage(gk, fk, {e, R(1, 12 * k) * R(1, 3)});
      REQUIRE(pts.size() == 3);
      for (const auto& p : pts) {
        CHECK(p.position >= R(6 * i, 12 * k));
        CHECK(p.position < R(6 * i + 6, 12 * k));
      }
    }
  }

  SUBCASE("every preimage maps back to its point") {
    for (std::int64_t k = 1; k <= 4; ++k) {
      auto gk = build_Gk(k);
      auto fk = build_fk(gk, k);
      const Rational len = R(1, 12 * k);
      for (std::size_t e = 0; e < gk.edge_count(); ++e) {
        for (std::int64_t j = 0; j <= 7; ++j) {
          GraphPoint p{e, len * R(j, 7)};
          auto pts = preimage(gk, fk, p);
          CHECK_FALSE(pts.empty());
          for (const auto& t : pts) CHECK(same_point(gk, evaluate(gk, fk, t), p));
        }
      }
    }
  }
}

TEST_CASE("circle distance") {
  CHECK(circle_distance(R(0), R(1, 2)) == R(1, 2));
  CHECK(circle_distance(R(1, 12), R(11, 12)) == R(1, 6));
  CHECK(circle_distance(R(3, 4), R(1, 4)) == R(1, 2));
  CHECK(circle_distance(R(2, 5), R(2, 5)) == R(0));
  CHECK(circle_diameter({{R(1, 24)}, {R(9, 24)}, {R(17, 24)}}) == R(1, 3));
}

TEST_CASE("epsilon of f_k") {
  auto g1 = build_Gk(1);
  auto f1 = build_fk(g1, 1);
  const Rational e1 = epsilon(g1, f1);
  CHECK(e1 >= R(1, 3));
  CHECK(e1 <= R(1, 2));
  CHECK(e1 == R(5, 12));

  Rational prev(1);
  for (std::int64_t k = 1; k <= 50; ++k) {
    const Rational ek = epsilon_of_fk(k);
    CHECK(ek * k <= R(1));
    CHECK(ek <= prev);
    prev = ek;
  }
  CHECK(epsilon_of_fk(2) == R(3, 8));
  CHECK(epsilon_of_fk(10) == R(3, 40));

  SUBCASE("exact value against a sampling oracle") {
    for (std::int64_t k = 1; k <= 10; ++k) {
      auto gk = build_Gk(k);
      auto fk = build_fk(gk, k);
      const double exact = to_double(epsilon(gk, fk));
      const double sampled = oracle::sampled_epsilon(gk, fk, 1000);
      const double slack = 2.0 * to_double(R(1, 12 * k)) / 1000.0;
      CHECK(exact >= sampled - 1e-12);
      CHECK(exact <= sampled + slack + 1e-12);
    }
  }

  SUBCASE("witness point attains the value") {
    for (std::int64_t k = 1; k <= 6; ++k) {
      auto gk = build_Gk(k);
      auto fk = build_fk(gk, k);
      auto w = epsilon_with_witness(gk, fk);
      CHECK(circle_diameter(preimage(gk, fk, w.point)) == w.epsilon);
    }
  }

  SUBCASE("loop traversing an edge in both directions") {
    // x is covered at offset u by t = u and t = 1 - u (in units of the loop).
    MetricGraph g({"v"}, {{0, 0, R(1, 3), "x"}, {0, 0, R(1, 3), "y"}});
    PLLoop loop(g, 0, {{0, 1}, {1, 1}, {0, -1}});
    const double sampled = oracle::sampled_epsilon(g, loop, 3000);
    const double exact = to_double(epsilon(g, loop));
    CHECK(exact >= sampled - 1e-12);
    CHECK(exact <= sampled + 2.0 / 3.0 / 3000.0 + 1e-12);
  }

  SUBCASE("oracle agreement on random closed loops") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      // Single vertex with three loops of equal length; any schedule closes.
      MetricGraph g({"v"}, {{0, 0, R(1, 7), "x"}, {0, 0, R(1, 7), "y"}, {0, 0, R(1, 7), "z"}});
      std::uniform_int_distribution<int> edge(0, 2);
      std::uniform_int_distribution<int> dir(0, 1);
      std::vector<LoopStep> steps(3 + trial % 9);
      for (auto& s : steps) s = {static_cast<std::size_t>(edge(rng)), dir(rng) ? 1 : -1};
      PLLoop loop(g, 0, steps);
      const double exact = to_double(epsilon(g, loop));
      const double sampled = oracle::sampled_epsilon(g, loop, 2000);
      const double slack = 2.0 / static_cast<double>(steps.size()) / 2000.0;
      CHECK(exact >= sampled - 1e-12);
      CHECK(exact <= sampled + slack + 1e-12);
    }
  }
}

TEST_CASE("is_eps_map and find_k_for_epsilon") {
  auto g1 = build_Gk(1);
  auto f1 = build_fk(g1, 1);
  CHECK(is_eps_map(g1, f1, R(1, 2)));
  CHECK_FALSE(is_eps_map(g1, f1, R(1, 10)));
  CHECK_FALSE(is_eps_map(g1, f1, R(5, 12)));

  for (std::int64_t k = 1; k <= 50; ++k) {
    auto gk = build_Gk(k);
    CHECK(is_eps_map(gk, build_fk(gk, k), R(1, k) + R(1, 1000)));
  }

  // A loop that misses an edge is never an eps-map.
  auto partial = PLLoop(g1, 0, {{g1.find_edge("a1"), 1}});
  CHECK_FALSE(is_eps_map(g1, partial, R(1)));

  CHECK(find_k_for_epsilon(R(1)) == 1);
  CHECK(find_k_for_epsilon(R(1, 2)) == 1);
  CHECK(find_k_for_epsilon(R(1, 10)) == 8);
  const std::int64_t k100 = find_k_for_epsilon(R(1, 100));
  CHECK(k100 == 76);
  CHECK(k100 <= 629);
  CHECK(epsilon_of_fk(k100) < R(1, 100));
  CHECK_FALSE(epsilon_of_fk(k100 - 1) < R(1, 100));
  CHECK_THROWS_AS(find_k_for_epsilon(R(0)), InvalidArgument);
}

TEST_CASE("trace_word") {
  auto g1 = build_Gk(1);
  auto f1 = build_fk(g1, 1);
  const Alphabet ab = wk_alphabet(1);
  CHECK(serialize(trace_word(g1, f1, canonical_tree(g1, 1), ab), ab) == "a1 a2 a1 a2 g a1 g^-1 a2 g");

  PLLoop tree_only(g1, 0, {{g1.find_edge("e1"), 1}, {g1.find_edge("e1"), -1}});
  CHECK(trace_word(g1, tree_only, canonical_tree(g1, 1), ab).empty());

  for (std::int64_t k = 1; k <= 25; ++k) {
    auto gk = build_Gk(k);
    CHECK(trace_word(gk, build_fk(gk, k), canonical_tree(gk, k), wk_alphabet(k)) == gen_wk(k));
  }

  // Loop based away from the root.
  PLLoop at_y2(g1, 1, {{g1.find_edge("a2"), 1}});
  CHECK_THROWS_AS(trace_word(g1, at_y2, canonical_tree(g1, 1), ab), InvalidArgument);

  auto cyclic_tree = canonical_tree(g1, 1);
  cyclic_tree.in_tree[g1.find_edge("e2")] = true;
  cyclic_tree.label[g1.find_edge("e2")].reset();
  CHECK_THROWS_AS(trace_word(g1, f1, cyclic_tree, ab), InvalidArgument);

  auto unlabelled = canonical_tree(g1, 1);
  unlabelled.label[g1.find_edge("a1")].reset();
  CHECK_THROWS_AS(trace_word(g1, f1, unlabelled, ab), InvalidArgument);
}

TEST_CASE("graph and loop JSON") {
  auto g = build_Gk(1);
  auto j = nlohmann::json::parse(graph_to_json(g));
  REQUIRE(j["edges"].size() == 4);
  CHECK(j["edges"][0]["label"] == "a1");
  CHECK(j["edges"][0]["length"] == nlohmann::json{{"num", 1}, {"den", 6}, {"unit", "pi"}});
  auto l = nlohmann::json::parse(loop_to_json(g, build_fk(g, 1)));
  CHECK(l["start"] == "y1");
  CHECK(l["schedule"][3] == nlohmann::json{{"edge", "e1"}, {"dir", -1}});
  CHECK(chord_from_arc(R(1, 2)) == doctest::Approx(2.0));
}
