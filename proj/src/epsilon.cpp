#include <algorithm>
#include <array>

#include "fgcx/errors.hpp"
#include "fgcx/metric_graph.hpp"

namespace fgcx {

namespace {

struct Cover {
  std::int64_t step;
  int dir;
};

// Circle position of the cover's preimage at edge parameter u in [0, 1].
Rational position(const Cover& c, const Rational& u, std::int64_t m) {
  const Rational t = c.dir > 0 ? u : kOne - u;
  Rational p = (Rational(c.step) + t) / m;
  if (p >= kOne) p -= kOne;
  return p;
}

Rational diameter_at(const std::vector<Cover>& covers, const Rational& u, std::int64_t m) {
  std::vector<CirclePoint> pts;
  pts.reserve(covers.size());
  for (const auto& c : covers) pts.push_back({position(c, u, m)});
  return circle_diameter(pts);
}

// Parameters in (0, 1) where some pairwise difference crosses a multiple of
// 1/2: the only places the arc distance changes slope.
std::vector<Rational> breakpoints(const std::vector<Cover>& covers, std::int64_t m) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    for (std::size_t j = i + 1; j < covers.size(); ++j) {
      const int slope_sign = covers[i].dir - covers[j].dir;  // in {-2, 0, 2}
      if (slope_sign == 0) continue;
      // diff(u) = base + slope * u
      const Rational base = Rational(covers[i].step + (covers[i].dir > 0 ? 0 : 1) -
                                     covers[j].step - (covers[j].dir > 0 ? 0 : 1), m);
      const Rational slope(slope_sign, m);
      const Rational lo = std::min(base, base + slope);
      const Rational hi = std::max(base, base + slope);
      for (std::int64_t h = ceil(lo * std::int64_t{2}); Rational(h, 2) <= hi; ++h) {
        const Rational u = (Rational(h, 2) - base) / slope;
        if (u > kZero && u < kOne) out.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

EpsilonWitness epsilon_with_witness(const MetricGraph& g, const PLLoop& loop) {
  const auto m = static_cast<std::int64_t>(loop.size());
  EpsilonWitness best{Rational(0), GraphPoint{0, Rational(0)}};

  // Vertex preimages.
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::array<Rational, 2> ends{Rational(0), g.edge(e).length};
    for (const Rational& off : ends) {
      const GraphPoint p{e, off};
      const Rational d = circle_diameter(preimage(g, loop, p));
      if (d > best.epsilon) best = EpsilonWitness{d, p};
    }
  }

  // Interior points: each preimage point moves affinely with the edge
  // parameter, so the sup sits at the edge ends or at a breakpoint.
  std::vector<std::vector<Cover>> covers(g.edge_count());
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto& s = loop.steps()[i];
    covers[s.edge].push_back({static_cast<std::int64_t>(i), s.dir});
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (covers[e].size() < 2) continue;
    std::vector<Rational> params = breakpoints(covers[e], m);
    params.push_back(Rational(0));
    params.push_back(Rational(1));
    for (const Rational& u : params) {
      Rational d = diameter_at(covers[e], u, m);
      if (d > best.epsilon) best = {d, GraphPoint{e, u * g.edge(e).length}};
    }
  }
  return best;
}

Rational epsilon(const MetricGraph& g, const PLLoop& loop) { return epsilon_with_witness(g, loop).epsilon; }

Rational epsilon_of_fk(std::int64_t k) {
  const MetricGraph gk = build_Gk(k);
  return epsilon(gk, build_fk(gk, k));
}

}  // namespace fgcx
