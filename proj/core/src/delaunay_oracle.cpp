// Triple-enumeration oracle for the rectangle Delaunay triangulation. Kept
// independent of the sweep in delaunay.cpp: edges are decided by testing every
// candidate minimal homothet directly, triangles by enumerating all triples.

#include <algorithm>
#include <set>

#include "rectdt/delaunay.hpp"
#include "rectdt/error.hpp"

namespace rectdt {

namespace {

bool edge_by_candidates(const PointSet& ps, const Rational& aspect, VertexId u, VertexId v) {
  const Point& p = ps[u];
  const Point& q = ps[v];
  const Rational dx = (p.x - q.x).abs();
  const Rational dy = (p.y - q.y).abs();
  const Rational xmin = min(p.x, q.x);
  const Rational ymin = min(p.y, q.y);
  const Rational xmax = max(p.x, q.x);
  const Rational ymax = max(p.y, q.y);

  const bool x_fixed = aspect * dx >= dy;
  const Rational scale = x_fixed ? dx : dy / aspect;
  const Rational extent = x_fixed ? aspect * scale : scale;
  const Rational lo = (x_fixed ? ymax : xmax) - extent;
  const Rational hi = x_fixed ? ymin : xmin;

  // The free offsets left unblocked form closed intervals whose lower ends
  // are lo or some point's coordinate, so these candidates are exhaustive.
  std::vector<Rational> candidates{lo, hi};
  for (const auto& r : ps.points) {
    const Rational& c = x_fixed ? r.y : r.x;
    if (lo <= c && c <= hi) candidates.push_back(c);
    const Rational c2 = c - extent;
    if (lo <= c2 && c2 <= hi) candidates.push_back(c2);
  }
  for (const auto& t : candidates) {
    const Box box = x_fixed ? Box{xmin, xmax, t, t + extent} : Box{t, t + extent, ymin, ymax};
    bool empty = true;
    for (VertexId w = 0; w < ps.size() && empty; ++w) {
      if (w != u && w != v && strictly_inside(ps[w], box)) empty = false;
    }
    if (empty) return true;
  }
  return false;
}

}  // namespace

Triangulation build_by_triples(const PointSet& input, const AspectRatio& aspect) {
  const GeneralPositionReport report = validate_general_position(input);
  if (!report.ok()) throw DegenerateInputError("degenerate input: " + report.describe());
  if (input.size() < 2) throw GeometryError("triangulation needs at least two points");
  const PointSet ps = aspect.transposed ? transpose(input) : input;
  const Rational& A = aspect.value;
  const std::size_t n = ps.size();

  std::vector<Triangle> triangles;
  std::map<Triangle, Homothet> circum;
  std::set<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      for (VertexId k = j + 1; k < n; ++k) {
        std::optional<Homothet> chosen;
        for (auto& h : circumhomothets_of_triple(ps, A, i, j, k)) {
          const Box b = h.box();
          bool empty = true;
          for (VertexId m = 0; m < n && empty; ++m) empty = !strictly_inside(ps[m], b);
          if (!empty) continue;
          for (VertexId m = 0; m < n; ++m) {
            if (m != i && m != j && m != k && point_vs_box(ps[m], b).on()) {
              throw DegenerateInputError("degenerate input: four cocircular (co-homothet) points");
            }
          }
          if (!chosen) chosen = std::move(h);
        }
        if (!chosen) continue;
        const Triangle t{i, j, k};
        triangles.push_back(t);
        circum.emplace(t, std::move(*chosen));
        edges.insert({i, j});
        edges.insert({j, k});
        edges.insert({i, k});
      }
    }
  }
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (!edges.contains({i, j}) && edge_by_candidates(ps, A, i, j)) edges.insert({i, j});
    }
  }
  return Triangulation(ps, aspect, std::vector<Edge>(edges.begin(), edges.end()), std::move(triangles),
                       std::move(circum));
}

}  // namespace rectdt
