#include "rectdt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rectdt/error.hpp"

namespace rectdt {

AspectRatio AspectRatio::from(const Rational& raw) {
  if (raw.sign() <= 0) throw GeometryError("aspect ratio must be positive, got " + raw.str());
  if (raw < Rational(1)) return AspectRatio{raw.reciprocal(), true};
  return AspectRatio{raw, false};
}

Point transpose(const Point& p) { return Point{p.y, p.x}; }

PointSet transpose(const PointSet& ps) {
  PointSet out;
  out.points.reserve(ps.size());
  for (const auto& p : ps.points) out.points.push_back(transpose(p));
  return out;
}

Box empty_box(const Point& u, const Point& v) {
  return Box{min(u.x, v.x), max(u.x, v.x), min(u.y, v.y), max(u.y, v.y)};
}

Homothet::Homothet(Point a, Rational s, Rational aspect)
    : anchor(std::move(a)), scale(std::move(s)), aspect(std::move(aspect)) {
  if (scale.sign() <= 0) throw GeometryError("homothet scale must be positive");
}

Box Homothet::box() const {
  return Box{anchor.x, anchor.x + scale, anchor.y, anchor.y + aspect * scale};
}

const char* to_string(Side s) {
  switch (s) {
    case Side::W: return "W";
    case Side::N: return "N";
    case Side::E: return "E";
    case Side::S: return "S";
  }
  return "?";
}

std::string to_string(const EdgeClass& ec) { return std::string(to_string(ec.from)) + to_string(ec.to); }

Contact point_vs_box(const Point& p, const Box& b) {
  if (p.x < b.xmin || p.x > b.xmax || p.y < b.ymin || p.y > b.ymax) return {Contact::Kind::Outside, Side::W};
  if (p.x == b.xmin) return {Contact::Kind::On, Side::W};
  if (p.x == b.xmax) return {Contact::Kind::On, Side::E};
  if (p.y == b.ymax) return {Contact::Kind::On, Side::N};
  if (p.y == b.ymin) return {Contact::Kind::On, Side::S};
  return {Contact::Kind::Inside, Side::W};
}

Contact point_vs_homothet(const Point& p, const Homothet& h) { return point_vs_box(p, h.box()); }

bool strictly_inside(const Point& p, const Box& b) {
  return b.xmin < p.x && p.x < b.xmax && b.ymin < p.y && p.y < b.ymax;
}

EdgeClass classify_edge(const Point& p, const Point& q, const Box& b) {
  const Contact cp = point_vs_box(p, b);
  const Contact cq = point_vs_box(q, b);
  if (!cp.on() || !cq.on()) throw GeometryError("not incident");
  return EdgeClass{cp.side, cq.side};
}

EdgeClass classify_edge(const Point& p, const Point& q, const Homothet& h) { return classify_edge(p, q, h.box()); }

SlopeClass slope_class(const Point& p, const Point& q, const Rational& L) {
  if (p.x == q.x) throw GeometryError("vertical edge violates general position");
  const Rational dx = (q.x - p.x).abs();
  const Rational dy = (q.y - p.y).abs();
  return dy <= L * dx ? SlopeClass::Gentle : SlopeClass::Steep;
}

namespace {

// Clockwise arc position measured from the NW corner.
Rational clockwise_position(const Box& b, const Point& p) {
  const Contact c = point_vs_box(p, b);
  if (!c.on()) throw GeometryError("point not on homothet boundary");
  const Rational w = b.width();
  const Rational h = b.height();
  switch (c.side) {
    case Side::N: return p.x - b.xmin;
    case Side::E: return w + (b.ymax - p.y);
    case Side::S: return w + h + (b.xmax - p.x);
    case Side::W: {
      Rational pos = w + w + h + (p.y - b.ymin);
      if (pos == b.perimeter()) return Rational(0);
      return pos;
    }
  }
  return Rational(0);
}

}  // namespace

Rational perimeter_distance_clockwise(const Box& b, const Point& from, const Point& to) {
  const Rational a = clockwise_position(b, from);
  const Rational c = clockwise_position(b, to);
  Rational d = c - a;
  if (d.sign() < 0) d += b.perimeter();
  return d;
}

Rational perimeter_distance_clockwise(const Homothet& h, const Point& from, const Point& to) {
  return perimeter_distance_clockwise(h.box(), from, to);
}

Rational smallest_homothet_scale(const Point& u, const Point& v, const Rational& aspect) {
  if (u == v) throw GeometryError("degenerate pair");
  const Rational dx = (u.x - v.x).abs();
  const Rational dy = (u.y - v.y).abs() / aspect;
  return max(dx, dy);
}

int orientation(const Point& a, const Point& b, const Point& c) {
  const Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross.sign();
}

namespace {

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

}  // namespace

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const bool shares_endpoint = a == c || a == d || b == c || b == d;
  if (shares_endpoint) {
    // Overlap beyond the shared endpoint only happens when collinear.
    if (orientation(a, b, c) != 0 || orientation(a, b, d) != 0) return false;
    const Point& other_cd = (a == c || b == c) ? d : c;
    const Point& other_ab = (a == c || a == d) ? b : a;
    return on_segment(a, b, other_cd) || on_segment(c, d, other_ab);
  }
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return o1 * o2 < 0 && o3 * o4 < 0;
}

double euclidean(const Point& a, const Point& b) {
  const double dx = (a.x - b.x).to_double();
  const double dy = (a.y - b.y).to_double();
  return std::hypot(dx, dy);
}

std::string GeneralPositionReport::describe() const {
  std::ostringstream os;
  for (const auto& [i, j] : shared_x) os << "shared x at indices (" << i << "," << j << "); ";
  for (const auto& [i, j] : shared_y) os << "shared y at indices (" << i << "," << j << "); ";
  for (const auto& [i, j, k] : collinear) os << "collinear triple (" << i << "," << j << "," << k << "); ";
  std::string s = os.str();
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s.empty() ? "ok" : s;
}

namespace {

template <typename Key>
void shared_coordinate_pairs(const PointSet& ps, Key key, std::vector<std::array<VertexId, 2>>& out) {
  std::vector<VertexId> order(ps.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return key(ps[a]) < key(ps[b]); });
  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo + 1;
    while (hi < order.size() && key(ps[order[hi]]) == key(ps[order[lo]])) ++hi;
    for (std::size_t a = lo; a < hi; ++a) {
      for (std::size_t b = a + 1; b < hi; ++b) {
        out.push_back({std::min(order[a], order[b]), std::max(order[a], order[b])});
      }
    }
    lo = hi;
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

GeneralPositionReport validate_general_position(const PointSet& ps) {
  if (ps.empty()) throw GeometryError("point set is empty");
  GeneralPositionReport report;
  shared_coordinate_pairs(ps, [](const Point& p) -> const Rational& { return p.x; }, report.shared_x);
  shared_coordinate_pairs(ps, [](const Point& p) -> const Rational& { return p.y; }, report.shared_y);

  const std::size_t n = ps.size();
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (ps[i] == ps[j]) continue;  // already reported as shared x and y
      const Rational ex = ps[j].x - ps[i].x;
      const Rational ey = ps[j].y - ps[i].y;
      for (VertexId k = j + 1; k < n; ++k) {
        if ((ex * (ps[k].y - ps[i].y) - ey * (ps[k].x - ps[i].x)).is_zero()) report.collinear.push_back({i, j, k});
      }
    }
  }
  return report;
}

}  // namespace rectdt
