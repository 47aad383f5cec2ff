#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rectdt/delaunay.hpp"

namespace rectdt {

/// Absolute slack allowed on binary64 length comparisons.
inline constexpr double kTolerance = 1e-9;

/// Tolerance for a comparison involving lengths of order `length`.
inline double scaled_tolerance(double length, double tolerance = kTolerance) {
  return tolerance * (length > 1.0 ? length : 1.0);
}

/// All-pairs graph distances d_t with binary64 Euclidean edge weights.
class ShortestPaths {
 public:
  ShortestPaths(std::size_t n, std::span<const Edge> edges, std::span<const double> weights);
  explicit ShortestPaths(const Triangulation& t);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] double distance(VertexId a, VertexId b) const { return dist_[a * n_ + b]; }
  [[nodiscard]] std::span<const double> from(VertexId a) const { return {dist_.data() + a * n_, n_}; }
  /// A shortest path a..b as vertex ids.
  [[nodiscard]] std::vector<VertexId> path(VertexId a, VertexId b) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> dist_;
  std::vector<VertexId> pred_;
};

/// Dijkstra from every vertex. Throws InternalError if the graph is disconnected.
ShortestPaths shortest_path_lengths(const Triangulation& t);

/// sigma(A) = sqrt(2) * sqrt(1 + A^2 + A*sqrt(A^2 + 1)), evaluated in long double.
/// Throws GeometryError for A < 1.
long double bound_formula(const Rational& aspect);
long double bound_formula(long double aspect);

struct DirectionalBound {
  bool first_display = true;  // A*dx >= dy
  double bound = 0.0;
};

/// (A + sqrt(A^2+1)) x + y when A*dx >= dy, else A x + (1 + sqrt(1/A^2+1)) y,
/// with x = |dx|, y = |dy| in the canonical frame.
DirectionalBound directional_bound(const Point& u, const Point& v, const Rational& aspect);

struct PairStretch {
  VertexId u = 0;
  VertexId v = 0;
  double graph_distance = 0.0;
  double euclidean = 0.0;
  double ratio = 0.0;
  bool first_display = true;
  double directional_bound = 0.0;
  double bound_slack = 0.0;  // directional_bound - graph_distance
};

struct StretchReport {
  Rational aspect{1};
  double sigma = 0.0;
  double tolerance = kTolerance;
  std::vector<PairStretch> pairs;
  double max_ratio = 1.0;
  VertexId worst_u = 0;
  VertexId worst_v = 0;
  /// Pairs exceeding sigma or their directional bound beyond tolerance.
  std::vector<PairStretch> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

StretchReport all_pairs_stretch(const Triangulation& t, double tolerance = kTolerance);

/// Maximum d_t/d_2 over all pairs of a plain geometric graph.
double max_stretch(const PointSet& ps, std::span<const Edge> edges);

struct SweepRow {
  Rational aspect{1};
  std::size_t trial = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double max_ratio = 0.0;
  double sigma = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by aspect, then trial
};

/// Random uniform point sets per aspect and trial; rows record the observed maximum stretch.
SweepResult sweep(std::span<const Rational> aspects, std::size_t n, std::size_t trials, std::uint64_t seed);

struct SearchSchedule {
  std::size_t restarts = 8;
  double step_decay = 0.7;
  double initial_step_fraction = 0.125;  // of the bounding-box extent
};

struct SearchResult {
  PointSet best;
  double best_ratio = 1.0;
  StretchReport report;
  std::size_t evaluations = 0;
  SearchSchedule schedule;
};

/// Random restarts plus coordinate hill climbing on the maximum stretch.
/// Deterministic for a fixed seed.
SearchResult worst_case_search(const AspectRatio& aspect, std::size_t n, std::size_t budget, std::uint64_t seed,
                               const SearchSchedule& schedule = {});

}  // namespace rectdt
