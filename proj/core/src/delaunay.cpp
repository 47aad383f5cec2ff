#include "rectdt/delaunay.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "rectdt/error.hpp"

namespace rectdt {

Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Triangle make_triangle(VertexId a, VertexId b, VertexId c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

Triangulation::Triangulation(PointSet canonical_points, AspectRatio aspect, std::vector<Edge> edges,
                             std::vector<Triangle> triangles, std::map<Triangle, Homothet> circumhomothets)
    : points_(std::move(canonical_points)),
      aspect_(std::move(aspect)),
      edges_(std::move(edges)),
      triangles_(std::move(triangles)),
      circumhomothets_(std::move(circumhomothets)),
      adjacency_(points_.size()) {
  std::sort(edges_.begin(), edges_.end());
  std::sort(triangles_.begin(), triangles_.end());
  for (const auto& [a, b] : edges_) {
    if (a >= points_.size() || b >= points_.size() || a == b) throw GeometryError("invalid edge ids");
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  for (const auto& t : triangles_) {
    for (int i = 0; i < 3; ++i) edge_triangles_[make_edge(t[i], t[(i + 1) % 3])].push_back(t);
  }
}

PointSet Triangulation::input_points() const { return aspect_.transposed ? transpose(points_) : points_; }

const Homothet& Triangulation::circumhomothet(const Triangle& t) const {
  const auto it = circumhomothets_.find(t);
  if (it == circumhomothets_.end()) throw GeometryError("triangle has no circumhomothet");
  return it->second;
}

bool Triangulation::has_edge(VertexId a, VertexId b) const {
  if (a >= size() || b >= size()) throw GeometryError("invalid vertex id");
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::vector<Triangle> Triangulation::triangles_on_edge(VertexId a, VertexId b) const {
  const auto it = edge_triangles_.find(make_edge(a, b));
  if (it == edge_triangles_.end()) return {};
  return it->second;
}

namespace {

void check_ids(const PointSet& ps, std::initializer_list<VertexId> ids) {
  for (VertexId id : ids) {
    if (id >= ps.size()) throw GeometryError("invalid vertex id " + std::to_string(id));
  }
}

struct Interval {
  Rational lo;  // open interval (lo, hi)
  Rational hi;
};

}  // namespace

// All homothets with both points on the boundary contain one of minimal scale
// s0 = max(|dx|, |dy|/A) that still has both on its boundary, so it suffices to
// slide the minimal homothet along its free axis. Every other point blocks an
// open interval of offsets; the edge exists iff those intervals leave a gap.
std::optional<Homothet> edge_witness(const PointSet& ps, const Rational& aspect, VertexId u, VertexId v) {
  check_ids(ps, {u, v});
  if (u == v) throw GeometryError("degenerate pair");
  const Point& p = ps[u];
  const Point& q = ps[v];
  const Rational s0 = smallest_homothet_scale(p, q, aspect);
  const Box span_box = empty_box(p, q);
  const bool x_fixed = aspect * (p.x - q.x).abs() >= (p.y - q.y).abs();

  // Free coordinate t is the anchor's y (x fixed) or x (y fixed); feasible t in [lo, hi].
  const Rational extent = x_fixed ? aspect * s0 : s0;
  const Rational lo = (x_fixed ? span_box.ymax : span_box.xmax) - extent;
  const Rational& hi = x_fixed ? span_box.ymin : span_box.xmin;

  std::vector<Interval> blocked;
  for (VertexId w = 0; w < ps.size(); ++w) {
    if (w == u || w == v) continue;
    const Point& r = ps[w];
    if (x_fixed) {
      if (span_box.xmin < r.x && r.x < span_box.xmax) blocked.push_back({r.y - extent, r.y});
    } else {
      if (span_box.ymin < r.y && r.y < span_box.ymax) blocked.push_back({r.x - extent, r.x});
    }
  }
  std::sort(blocked.begin(), blocked.end(), [](const Interval& a, const Interval& b) { return a.hi > b.hi; });

  // Sweep downward from hi; prefer the witness whose free-axis anchor is largest.
  Rational t = hi;
  for (const auto& iv : blocked) {
    if (iv.hi <= t) break;
    if (iv.lo < t) t = iv.lo;
    if (t < lo) return std::nullopt;
  }
  if (t < lo) return std::nullopt;

  Point anchor = x_fixed ? Point{span_box.xmin, t} : Point{t, span_box.ymin};
  return Homothet(std::move(anchor), s0, aspect);
}

bool has_edge(const PointSet& ps, const Rational& aspect, VertexId u, VertexId v) {
  return edge_witness(ps, aspect, u, v).has_value();
}

std::vector<Edge> delaunay_edges(const PointSet& ps, const Rational& aspect) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < ps.size(); ++i) {
    for (VertexId j = i + 1; j < ps.size(); ++j) {
      if (has_edge(ps, aspect, i, j)) edges.push_back({i, j});
    }
  }
  return edges;
}

bool is_empty(const PointSet& ps, const Homothet& h) {
  const Box b = h.box();
  return std::none_of(ps.points.begin(), ps.points.end(), [&](const Point& p) { return strictly_inside(p, b); });
}

namespace {

// Solves the 3x3 system M z = r exactly; nullopt when singular.
std::optional<std::array<Rational, 3>> solve3(std::array<std::array<Rational, 4>, 3> m) {
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    for (int row = col; row < 3; ++row) {
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    for (int row = 0; row < 3; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const Rational f = m[row][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return std::array<Rational, 3>{m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

bool on_side_segment(const Point& p, const Box& b, Side side) {
  switch (side) {
    case Side::W: return p.x == b.xmin && b.ymin <= p.y && p.y <= b.ymax;
    case Side::E: return p.x == b.xmax && b.ymin <= p.y && p.y <= b.ymax;
    case Side::S: return p.y == b.ymin && b.xmin <= p.x && p.x <= b.xmax;
    case Side::N: return p.y == b.ymax && b.xmin <= p.x && p.x <= b.xmax;
  }
  return false;
}

bool homothet_less(const Homothet& a, const Homothet& b) {
  if (a.scale != b.scale) return a.scale < b.scale;
  if (a.anchor.x != b.anchor.x) return a.anchor.x < b.anchor.x;
  return a.anchor.y < b.anchor.y;
}

}  // namespace

std::vector<Homothet> circumhomothets_of_triple(const PointSet& ps, const Rational& aspect, VertexId u, VertexId v,
                                                VertexId w) {
  check_ids(ps, {u, v, w});
  if (u == v || v == w || u == w) throw GeometryError("circumhomothet of a repeated vertex");
  const std::array<const Point*, 3> pts{&ps[u], &ps[v], &ps[w]};
  constexpr std::array<Side, 4> kSides{Side::W, Side::N, Side::E, Side::S};

  std::vector<Homothet> out;
  for (int code = 0; code < 64; ++code) {
    const std::array<Side, 3> assign{kSides[code & 3], kSides[(code >> 2) & 3], kSides[(code >> 4) & 3]};
    // Two points on one side give parallel equations: singular, skip.
    if (assign[0] == assign[1] || assign[1] == assign[2] || assign[0] == assign[2]) continue;

    std::array<std::array<Rational, 4>, 3> m;
    for (int i = 0; i < 3; ++i) {
      const Point& p = *pts[i];
      switch (assign[i]) {
        case Side::W: m[i] = {Rational(1), Rational(0), Rational(0), p.x}; break;
        case Side::E: m[i] = {Rational(1), Rational(0), Rational(1), p.x}; break;
        case Side::S: m[i] = {Rational(0), Rational(1), Rational(0), p.y}; break;
        case Side::N: m[i] = {Rational(0), Rational(1), aspect, p.y}; break;
      }
    }
    const auto z = solve3(m);
    if (!z || (*z)[2].sign() <= 0) continue;
    Homothet h(Point{(*z)[0], (*z)[1]}, (*z)[2], aspect);
    const Box b = h.box();
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) ok = on_side_segment(*pts[i], b, assign[i]);
    if (!ok) continue;
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), homothet_less);
  return out;
}

namespace {

// Counter-clockwise angular order of direction vectors.
bool angle_less(const Point& d1, const Point& d2) {
  auto half = [](const Point& d) { return (d.y.sign() > 0 || (d.y.is_zero() && d.x.sign() > 0)) ? 0 : 1; };
  const int h1 = half(d1);
  const int h2 = half(d2);
  if (h1 != h2) return h1 < h2;
  return (d1.x * d2.y - d1.y * d2.x).sign() > 0;
}

struct Face {
  std::vector<VertexId> cycle;
  int area_sign = 0;
};

// Traces the faces of the straight-line embedding; bounded faces come out
// counter-clockwise (positive area), the unbounded face with non-positive area.
std::vector<Face> trace_faces(const PointSet& ps, const std::vector<Edge>& edges) {
  const std::size_t n = ps.size();
  std::vector<std::vector<VertexId>> rot(n);
  for (const auto& [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (VertexId v = 0; v < n; ++v) {
    const Point& o = ps[v];
    std::sort(rot[v].begin(), rot[v].end(), [&](VertexId a, VertexId b) {
      return angle_less(Point{ps[a].x - o.x, ps[a].y - o.y}, Point{ps[b].x - o.x, ps[b].y - o.y});
    });
  }
  auto index_of = [&](VertexId v, VertexId nb) {
    return static_cast<std::size_t>(std::find(rot[v].begin(), rot[v].end(), nb) - rot[v].begin());
  };

  std::vector<std::vector<bool>> used(n);
  for (VertexId v = 0; v < n; ++v) used[v].assign(rot[v].size(), false);

  std::vector<Face> faces;
  for (VertexId start = 0; start < n; ++start) {
    for (std::size_t k = 0; k < rot[start].size(); ++k) {
      if (used[start][k]) continue;
      Face face;
      Rational twice_area(0);
      VertexId a = start;
      std::size_t ai = k;
      while (!used[a][ai]) {
        used[a][ai] = true;
        const VertexId b = rot[a][ai];
        face.cycle.push_back(a);
        twice_area += ps[a].x * ps[b].y - ps[b].x * ps[a].y;
        const std::size_t deg = rot[b].size();
        const std::size_t back = index_of(b, a);
        ai = (back + deg - 1) % deg;
        a = b;
      }
      face.area_sign = twice_area.sign();
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

bool connected(std::size_t n, const std::vector<Edge>& edges) {
  if (n == 0) return true;
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    for (VertexId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
    }
  }
  return count == n;
}

// Looks for four points on the boundary of one empty homothet.
bool has_cohomothet_quadruple(const PointSet& ps, const Rational& aspect) {
  const std::size_t n = ps.size();
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      for (VertexId k = j + 1; k < n; ++k) {
        for (const auto& h : circumhomothets_of_triple(ps, aspect, i, j, k)) {
          if (!is_empty(ps, h)) continue;
          for (VertexId m = 0; m < n; ++m) {
            if (m != i && m != j && m != k && point_vs_homothet(ps[m], h).on()) return true;
          }
        }
      }
    }
  }
  return false;
}

[[noreturn]] void throw_cohomothet() {
  throw DegenerateInputError("degenerate input: four cocircular (co-homothet) points");
}

PointSet canonical_points(const PointSet& ps, const AspectRatio& aspect) {
  const GeneralPositionReport report = validate_general_position(ps);
  if (!report.ok()) throw DegenerateInputError("degenerate input: " + report.describe());
  if (ps.size() < 2) throw GeometryError("triangulation needs at least two points");
  return aspect.transposed ? transpose(ps) : ps;
}

// Picks the smallest empty circumhomothet; four co-homothet points are an error.
std::optional<Homothet> empty_circumhomothet(const PointSet& ps, const Rational& aspect, const Triangle& t) {
  std::optional<Homothet> chosen;
  for (auto& h : circumhomothets_of_triple(ps, aspect, t[0], t[1], t[2])) {
    if (!is_empty(ps, h)) continue;
    for (VertexId m = 0; m < ps.size(); ++m) {
      if (m != t[0] && m != t[1] && m != t[2] && point_vs_homothet(ps[m], h).on()) throw_cohomothet();
    }
    if (!chosen) chosen = std::move(h);
  }
  return chosen;
}

}  // namespace

Triangulation build_triangulation(const PointSet& input, const AspectRatio& aspect) {
  const PointSet ps = canonical_points(input, aspect);
  const Rational& A = aspect.value;
  const std::size_t n = ps.size();

  std::vector<Edge> edges = delaunay_edges(ps, A);
  if (!connected(n, edges)) throw InternalError("rectangle Delaunay graph is disconnected");

  const std::vector<Face> faces = trace_faces(ps, edges);
  std::vector<Triangle> triangles;
  std::map<Triangle, Homothet> circum;
  std::size_t unbounded = 0;
  for (const auto& f : faces) {
    if (f.area_sign <= 0) {
      ++unbounded;
      continue;
    }
    if (f.cycle.size() != 3) {
      if (has_cohomothet_quadruple(ps, A)) throw_cohomothet();
      throw InternalError("bounded face with " + std::to_string(f.cycle.size()) + " sides");
    }
    const Triangle t = make_triangle(f.cycle[0], f.cycle[1], f.cycle[2]);
    auto h = empty_circumhomothet(ps, A, t);
    if (!h) {
      if (has_cohomothet_quadruple(ps, A)) throw_cohomothet();
      throw InternalError("triangular face without an empty circumhomothet");
    }
    triangles.push_back(t);
    circum.emplace(t, std::move(*h));
  }
  if (unbounded != 1 || faces.size() != edges.size() - n + 2) {
    if (has_cohomothet_quadruple(ps, A)) throw_cohomothet();
    throw InternalError("edge set is not a plane graph");
  }
  return Triangulation(ps, aspect, std::move(edges), std::move(triangles), std::move(circum));
}

StructureReport check_structure(const Triangulation& t) {
  StructureReport report;
  const PointSet& ps = t.points();
  const auto& edges = t.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& e = edges[i];
      const auto& f = edges[j];
      if (segments_cross(ps[e[0]], ps[e[1]], ps[f[0]], ps[f[1]])) {
        report.plane = false;
        report.crossings.push_back({e, f});
      }
    }
  }
  report.connected = connected(t.size(), edges);

  if (report.plane && report.connected) {
    for (const auto& f : trace_faces(ps, edges)) {
      if (f.area_sign <= 0) report.outer_face_length += f.cycle.size();
    }
    const std::size_t n = t.size();
    const std::size_t b = report.outer_face_length;
    if (n >= 3) {
      report.counts_match = 3 * n >= 3 + b && t.edges().size() == 3 * n - 3 - b &&
                            2 * n >= 2 + b && t.triangles().size() == 2 * n - 2 - b;
    }
  } else {
    report.counts_match = false;
  }

  for (const auto& tri : t.triangles()) {
    const auto it = t.circumhomothets().find(tri);
    if (it == t.circumhomothets().end() || !is_empty(ps, it->second)) {
      report.circumhomothets_empty = false;
      continue;
    }
    for (VertexId v : tri) {
      if (!point_vs_homothet(ps[v], it->second).on()) report.circumhomothets_empty = false;
    }
  }
  return report;
}

}  // namespace rectdt
