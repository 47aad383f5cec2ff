#include "rectdt/chain.hpp"

#include <algorithm>

#include "rectdt/error.hpp"
#include "rectdt/spanner.hpp"

namespace rectdt {

LocalFrame LocalFrame::for_pair(const Point& u, const Point& v, const Rational& aspect, bool allow_swap) {
  LocalFrame f;
  f.origin = u;
  f.sx = v.x < u.x ? -1 : 1;
  f.sy = v.y < u.y ? -1 : 1;
  f.swapped = allow_swap && aspect * (v.x - u.x).abs() < (v.y - u.y).abs();
  f.L = f.swapped ? aspect.reciprocal() : aspect;
  return f;
}

Point LocalFrame::to_local(const Point& p) const {
  Rational x = p.x - origin.x;
  Rational y = p.y - origin.y;
  if (sx < 0) x = -x;
  if (sy < 0) y = -y;
  if (swapped) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

Box LocalFrame::to_local(const Box& b) const {
  const Point a = to_local(Point{b.xmin, b.ymin});
  const Point c = to_local(Point{b.xmax, b.ymax});
  return {min(a.x, c.x), max(a.x, c.x), min(a.y, c.y), max(a.y, c.y)};
}

namespace {

VertexId third_vertex(const Triangle& t, VertexId a, VertexId b) {
  for (VertexId w : t) {
    if (w != a && w != b) return w;
  }
  throw InternalError("triangle without a third vertex");
}

}  // namespace

std::optional<TriangleChain> triangle_chain(const Triangulation& t, VertexId u, VertexId v) {
  if (u >= t.size() || v >= t.size() || u == v) throw GeometryError("invalid vertex pair");
  if (t.has_edge(u, v)) throw GeometryError("adjacent pair has empty chain");

  TriangleChain chain;
  chain.u = u;
  chain.v = v;
  chain.frame = LocalFrame::for_pair(t.point(u), t.point(v), t.A());
  chain.local.reserve(t.size());
  for (const auto& p : t.points().points) chain.local.push_back(chain.frame.to_local(p));
  const Point& U = chain.local[u];
  const Point& V = chain.local[v];
  auto above = [&](VertexId w) { return orientation(U, V, chain.local[w]) > 0; };

  // T_1: the triangle at u whose opposite edge crosses the ray towards v.
  std::optional<Triangle> first;
  for (const auto& tri : t.triangles()) {
    if (std::find(tri.begin(), tri.end(), u) == tri.end()) continue;
    const VertexId a = tri[0] == u ? tri[1] : tri[0];
    const VertexId b = tri[2] == u ? tri[1] : tri[2];
    const Point& pa = chain.local[a];
    const Point& pb = chain.local[b];
    if (orientation(U, V, pa) * orientation(U, V, pb) >= 0) continue;
    // Line uv meets ab at parameter num/den along u->v; it must be positive.
    const Point ab{pb.x - pa.x, pb.y - pa.y};
    const Rational num = pa.x * ab.y - pa.y * ab.x;
    const Rational den = V.x * ab.y - V.y * ab.x;
    if ((num / den).sign() > 0) {
      first = tri;
      break;
    }
  }
  if (!first) return std::nullopt;

  chain.h.push_back(u);
  chain.l.push_back(u);
  chain.triangles.push_back(*first);
  {
    const VertexId a = (*first)[0] == u ? (*first)[1] : (*first)[0];
    const VertexId b = (*first)[2] == u ? (*first)[1] : (*first)[2];
    chain.h.push_back(above(a) ? a : b);
    chain.l.push_back(above(a) ? b : a);
  }
  for (;;) {
    const VertexId hi = chain.h.back();
    const VertexId lo = chain.l.back();
    std::optional<Triangle> next;
    for (const auto& tri : t.triangles_on_edge(hi, lo)) {
      if (tri != chain.triangles.back()) next = tri;
    }
    if (!next) return std::nullopt;
    const VertexId w = third_vertex(*next, hi, lo);
    chain.triangles.push_back(*next);
    if (w == v) {
      chain.h.push_back(v);
      chain.l.push_back(lo);
      break;
    }
    chain.h.push_back(above(w) ? w : hi);
    chain.l.push_back(above(w) ? lo : w);
    if (chain.triangles.size() > t.triangles().size()) throw InternalError("triangle chain does not terminate");
  }

  chain.rects.resize(chain.k() + 1);
  for (std::size_t i = 1; i <= chain.k(); ++i) {
    chain.rects[i] = chain.frame.to_local(t.circumhomothet(chain.triangle(i)).box());
  }
  return chain;
}

PotentialCheck has_potential(const TriangleChain& chain, std::size_t i, const ShortestPaths& dist, double tolerance) {
  if (i < 1 || i > chain.k()) throw GeometryError("chain index out of range");
  const VertexId h = chain.h[i];
  const VertexId l = chain.l[i];
  const Box& r = chain.rects[i];
  PotentialCheck out;
  out.lhs = dist.distance(chain.u, h) + dist.distance(chain.u, l) +
            perimeter_distance_clockwise(r, chain.at(h), chain.at(l)).to_double();
  out.rhs = ((Rational(2) + Rational(2) * chain.frame.L) * chain.x_east(i)).to_double();
  out.holds = out.slack() >= -scaled_tolerance(out.rhs, tolerance);
  return out;
}

std::optional<InductiveInfo> inductive_info(const TriangleChain& chain, std::size_t i) {
  if (i < 1 || i >= chain.k()) throw GeometryError("chain index out of range");
  const Point& ph = chain.at(chain.h[i]);
  const Point& pl = chain.at(chain.l[i]);
  if (slope_class(pl, ph, chain.frame.L) == SlopeClass::Steep) return std::nullopt;
  InductiveInfo info;
  info.high = ph.x > pl.x;
  info.point = info.high ? chain.h[i] : chain.l[i];
  const Contact c = point_vs_box(chain.at(info.point), chain.rects[i]);
  if (!c.on()) throw InternalError("chain vertex off its rectangle");
  info.side = c.side;
  return info;
}

MaximalPath maximal_path(const TriangleChain& chain, std::size_t j, PathSide side) {
  if (j < 1 || j > chain.k()) throw GeometryError("chain index out of range");
  const std::vector<VertexId>& seq = side == PathSide::High ? chain.h : chain.l;
  auto on_east = [&](std::size_t m) {
    return m == 0 || point_vs_box(chain.at(seq[m]), chain.rects[m]).on(Side::E);
  };
  std::size_t i = j;
  while (!on_east(i)) --i;

  MaximalPath path;
  path.first_index = i;
  path.vertices.push_back(seq[i]);
  for (std::size_t m = i; m < j; ++m) {
    if (seq[m + 1] == seq[m]) continue;
    path.vertices.push_back(seq[m + 1]);
    path.edge_rect.push_back(m + 1);
  }
  return path;
}

const char* to_string(Region r) {
  switch (r) {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::C: return "C";
  }
  return "?";
}

Region classify_region(const Point& p, const Point& u, const Point& v, const Rational& aspect) {
  if (!strictly_inside(p, empty_box(u, v))) throw GeometryError("point not inside R(u,v)");
  const Rational dxu = (p.x - u.x).abs();
  const Rational dyu = (p.y - u.y).abs();
  const Rational dxv = (v.x - p.x).abs();
  const Rational dyv = (v.y - p.y).abs();
  if (aspect * (v.x - u.x).abs() >= (v.y - u.y).abs()) {
    if (aspect * dxu < dyu) return Region::A;
    if (aspect * dxv < dyv) return Region::C;
    return Region::B;
  }
  if (aspect * dxv >= dyv) return Region::A;
  if (aspect * dxu >= dyu) return Region::C;
  return Region::B;
}

}  // namespace rectdt
