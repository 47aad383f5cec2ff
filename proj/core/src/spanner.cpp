#include <algorithm>
#include <cmath>

#include "rectdt/error.hpp"
#include "rectdt/sampling.hpp"
#include "rectdt/spanner.hpp"

namespace rectdt {

long double bound_formula(long double a) {
  if (!(a >= 1.0L)) throw GeometryError("aspect ratio below 1: canonicalize first");
  return std::sqrt(2.0L) * std::sqrt(1.0L + a * a + a * std::sqrt(a * a + 1.0L));
}

long double bound_formula(const Rational& aspect) {
  if (aspect < Rational(1)) throw GeometryError("aspect ratio below 1: canonicalize first");
  return bound_formula(aspect.to_long_double());
}

DirectionalBound directional_bound(const Point& u, const Point& v, const Rational& aspect) {
  const Rational dx = (u.x - v.x).abs();
  const Rational dy = (u.y - v.y).abs();
  const long double a = aspect.to_long_double();
  const long double x = dx.to_long_double();
  const long double y = dy.to_long_double();
  DirectionalBound out;
  out.first_display = aspect * dx >= dy;
  const long double b = out.first_display ? (a + std::sqrt(a * a + 1.0L)) * x + y
                                          : a * x + (1.0L + std::sqrt(1.0L / (a * a) + 1.0L)) * y;
  out.bound = static_cast<double>(b);
  return out;
}

StretchReport all_pairs_stretch(const Triangulation& t, double tolerance) {
  const ShortestPaths sp(t);
  StretchReport report;
  report.aspect = t.A();
  report.sigma = static_cast<double>(bound_formula(t.A()));
  report.tolerance = tolerance;
  const std::size_t n = t.size();
  report.pairs.reserve(n * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      PairStretch ps;
      ps.u = u;
      ps.v = v;
      ps.graph_distance = sp.distance(u, v);
      ps.euclidean = euclidean(t.point(u), t.point(v));
      ps.ratio = ps.graph_distance / ps.euclidean;
      const DirectionalBound db = directional_bound(t.point(u), t.point(v), t.A());
      ps.first_display = db.first_display;
      ps.directional_bound = db.bound;
      ps.bound_slack = db.bound - ps.graph_distance;
      if (ps.ratio > report.max_ratio) {
        report.max_ratio = ps.ratio;
        report.worst_u = u;
        report.worst_v = v;
      }
      if (ps.ratio > report.sigma + tolerance || ps.bound_slack < -scaled_tolerance(ps.euclidean, tolerance)) {
        report.violations.push_back(ps);
      }
      report.pairs.push_back(ps);
    }
  }
  if (n == 2) {
    report.worst_u = 0;
    report.worst_v = 1;
  }
  return report;
}

double max_stretch(const PointSet& ps, std::span<const Edge> edges) {
  std::vector<double> w;
  w.reserve(edges.size());
  for (const auto& [a, b] : edges) w.push_back(euclidean(ps[a], ps[b]));
  const ShortestPaths sp(ps.size(), edges, w);
  double best = 1.0;
  for (VertexId u = 0; u < ps.size(); ++u) {
    for (VertexId v = u + 1; v < ps.size(); ++v) {
      best = std::max(best, sp.distance(u, v) / euclidean(ps[u], ps[v]));
    }
  }
  return best;
}

SweepResult sweep(std::span<const Rational> aspects, std::size_t n, std::size_t trials, std::uint64_t seed) {
  std::vector<Rational> sorted(aspects.begin(), aspects.end());
  std::sort(sorted.begin(), sorted.end());
  SweepResult result;
  for (const auto& a : sorted) {
    const AspectRatio aspect = AspectRatio::from(a);
    const double sigma = static_cast<double>(bound_formula(aspect.value));
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const std::uint64_t trial_seed = derive_seed(seed, trial);
      const Triangulation t = build_triangulation(generate_points(n, trial_seed), aspect);
      result.rows.push_back({a, trial, n, trial_seed, max_stretch(t.points(), t.edges()), sigma});
    }
  }
  return result;
}

}  // namespace rectdt
