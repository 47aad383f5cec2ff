#include <algorithm>
#include <random>

#include "rectdt/sampling.hpp"
#include "rectdt/spanner.hpp"

namespace rectdt {

namespace {

const Rational& grid_unit() {
  static const Rational unit(Rational(1) / Rational(static_cast<long long>(kGridDenominator)));
  return unit;
}

double evaluate(const PointSet& ps, const Rational& aspect) {
  return max_stretch(ps, delaunay_edges(ps, aspect));
}

// Bounding-box extent in grid units.
std::uint64_t extent_units(const PointSet& ps) {
  Rational xmin = ps[0].x, xmax = ps[0].x, ymin = ps[0].y, ymax = ps[0].y;
  for (const auto& p : ps.points) {
    xmin = min(xmin, p.x);
    xmax = max(xmax, p.x);
    ymin = min(ymin, p.y);
    ymax = max(ymax, p.y);
  }
  const Rational extent = max(xmax - xmin, ymax - ymin) / grid_unit();
  return static_cast<std::uint64_t>(extent.to_double());
}

}  // namespace

SearchResult worst_case_search(const AspectRatio& aspect, std::size_t n, std::size_t budget, std::uint64_t seed,
                               const SearchSchedule& schedule) {
  const Rational& A = aspect.value;
  std::mt19937_64 rng(seed);
  SearchResult result;
  result.schedule = schedule;
  budget = std::max<std::size_t>(budget, 1);
  const std::size_t restarts = std::max<std::size_t>(schedule.restarts, 1);
  const Rational upper = Rational(1) - grid_unit();

  for (std::size_t r = 0; r < restarts && result.evaluations < budget; ++r) {
    const std::size_t limit =
        r + 1 == restarts ? budget : std::min(budget, result.evaluations + budget / restarts + 1);
    PointSet current = generate_points(n, derive_seed(seed, r));
    double current_ratio = evaluate(current, A);
    ++result.evaluations;

    auto step = static_cast<std::uint64_t>(static_cast<double>(extent_units(current)) * schedule.initial_step_fraction);
    std::size_t failures = 0;
    while (result.evaluations < limit && step >= 1 && n > 2) {
      const VertexId i = rng() % n;
      const bool move_x = (rng() & 1) != 0;
      const bool up = (rng() & 1) != 0;
      const Rational delta = Rational(static_cast<long long>(step)) * grid_unit();
      Point moved = current[i];
      Rational& coord = move_x ? moved.x : moved.y;
      coord = up ? min(coord + delta, upper) : max(coord - delta, Rational(0));

      bool improved = false;
      if (moved != current[i] && fits_general_position(current, moved, i)) {
        PointSet candidate = current;
        candidate.points[i] = std::move(moved);
        const double ratio = evaluate(candidate, A);
        ++result.evaluations;
        if (ratio > current_ratio) {
          current = std::move(candidate);
          current_ratio = ratio;
          improved = true;
        }
      }
      if (improved) {
        failures = 0;
      } else if (++failures >= 2 * n) {
        step = static_cast<std::uint64_t>(static_cast<double>(step) * schedule.step_decay);
        failures = 0;
      }
    }
    if (r == 0 || current_ratio > result.best_ratio) {
      result.best_ratio = current_ratio;
      result.best = std::move(current);
    }
  }

  if (aspect.transposed) result.best = transpose(result.best);
  result.report = all_pairs_stretch(build_triangulation(result.best, aspect));
  result.best_ratio = result.report.max_ratio;
  return result;
}

}  // namespace rectdt
