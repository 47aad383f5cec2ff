#include "rectdt/sampling.hpp"

#include <random>

#include "rectdt/error.hpp"

namespace rectdt {

namespace {

Rational grid_value(std::uint64_t numerator) {
  mpq_class q(mpz_class(static_cast<unsigned long>(numerator)), mpz_class(static_cast<unsigned long>(kGridDenominator)));
  q.canonicalize();
  return Rational(std::move(q));
}

}  // namespace

std::optional<Distribution> parse_distribution(std::string_view name) {
  if (name == "uniform") return Distribution::Uniform;
  if (name == "clustered") return Distribution::Clustered;
  return std::nullopt;
}

const char* to_string(Distribution d) { return d == Distribution::Uniform ? "uniform" : "clustered"; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool fits_general_position(const PointSet& ps, const Point& p, std::optional<VertexId> skip) {
  for (VertexId i = 0; i < ps.size(); ++i) {
    if (i == skip) continue;
    if (ps[i].x == p.x || ps[i].y == p.y) return false;
  }
  for (VertexId i = 0; i < ps.size(); ++i) {
    if (i == skip) continue;
    for (VertexId j = i + 1; j < ps.size(); ++j) {
      if (j == skip) continue;
      if (orientation(ps[i], ps[j], p) == 0) return false;
    }
  }
  return true;
}

PointSet generate_points(std::size_t n, std::uint64_t seed, Distribution dist) {
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = kGridDenominator - 1;

  // Cluster centres and radii are drawn up front so they do not depend on
  // how many candidates get rejected later.
  struct Cluster {
    std::uint64_t cx, cy, radius;
  };
  std::vector<Cluster> clusters;
  if (dist == Distribution::Clustered) {
    const std::size_t count = 1 + n / 16;
    for (std::size_t c = 0; c < count; ++c) {
      const std::uint64_t radius = (kGridDenominator / 32) + (rng() & (kGridDenominator / 16 - 1));
      const std::uint64_t cx = radius + rng() % (kGridDenominator - 2 * radius);
      const std::uint64_t cy = radius + rng() % (kGridDenominator - 2 * radius);
      clusters.push_back({cx, cy, radius});
    }
  }

  PointSet ps;
  ps.points.reserve(n);
  while (ps.size() < n) {
    std::uint64_t xi = 0;
    std::uint64_t yi = 0;
    if (dist == Distribution::Uniform) {
      xi = rng() & mask;
      yi = rng() & mask;
    } else {
      const Cluster& c = clusters[rng() % clusters.size()];
      xi = c.cx - c.radius + rng() % (2 * c.radius);
      yi = c.cy - c.radius + rng() % (2 * c.radius);
    }
    Point p{grid_value(xi), grid_value(yi)};
    if (fits_general_position(ps, p)) ps.points.push_back(std::move(p));
  }
  return ps;
}

}  // namespace rectdt
