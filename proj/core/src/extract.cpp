#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "rectdt/error.hpp"
#include "rectdt/proof_path.hpp"

namespace rectdt {

namespace {

double to_d(const Rational& r) { return r.to_double(); }

CertStep make_step(StepKind kind, std::string subcase, VertexId a, VertexId b, double lhs, double rhs) {
  CertStep s;
  s.kind = kind;
  s.subcase = std::move(subcase);
  s.a = a;
  s.b = b;
  s.lhs = lhs;
  s.rhs = rhs;
  s.slack = rhs - lhs;
  return s;
}

void append_tail(std::vector<VertexId>& path, const std::vector<VertexId>& tail) {
  path.insert(path.end(), tail.begin() + 1, tail.end());
}

}  // namespace

ProofExtractor::ProofExtractor(const Triangulation& t, double tolerance) : t_(t), sp_(t), tolerance_(tolerance) {}

double ProofExtractor::walk_length(const std::vector<VertexId>& walk) const {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) len += euclidean(t_.point(walk[i]), t_.point(walk[i + 1]));
  return len;
}

double ProofExtractor::bound(VertexId a, VertexId b) const {
  return a == b ? 0.0 : directional_bound(t_.point(a), t_.point(b), t_.A()).bound;
}

Rational ProofExtractor::key(VertexId a, VertexId b) const {
  return smallest_homothet_scale(t_.point(a), t_.point(b), t_.A());
}

ProofPath ProofExtractor::extract(VertexId u, VertexId v) {
  if (u >= t_.size() || v >= t_.size()) throw GeometryError("invalid vertex id");
  if (u == v) throw GeometryError("degenerate pair");
  const Solved& top = solve(u, v);

  ProofPath out;
  out.path = top.path;
  Certificate& cert = out.certificate;
  cert.u = u;
  cert.v = v;
  cert.path = top.path;
  cert.path_length = walk_length(top.path);
  const DirectionalBound db = directional_bound(t_.point(u), t_.point(v), t_.A());
  cert.bound = db.bound;
  cert.first_display = db.first_display;

  // Each pair's own steps once, depth from the first visit.
  std::set<std::pair<VertexId, VertexId>> seen;
  std::function<void(VertexId, VertexId, std::size_t)> emit = [&](VertexId a, VertexId b, std::size_t depth) {
    if (!seen.insert({a, b}).second) return;
    const Solved& s = memo_.at({a, b});
    for (CertStep step : s.steps) {
      step.depth += depth;
      cert.steps.push_back(std::move(step));
    }
    for (const auto& [c, d] : s.children) emit(c, d, depth + 1);
  };
  emit(u, v, 0);
  return out;
}

const ProofExtractor::Solved& ProofExtractor::solve(VertexId a, VertexId b) {
  if (auto it = memo_.find({a, b}); it != memo_.end()) return it->second;
  Solved out;
  const Point& pa = t_.point(a);
  const Point& pb = t_.point(b);
  if (t_.has_edge(a, b)) {
    CertStep s = make_step(StepKind::BaseEdge, "", a, b, euclidean(pa, pb),
                           to_d((pa.x - pb.x).abs() + (pa.y - pb.y).abs()));
    s.ids = {a, b};
    out.steps.push_back(std::move(s));
    out.path = {a, b};
  } else {
    const Box box = empty_box(pa, pb);
    const bool empty = std::none_of(t_.points().points.begin(), t_.points().points.end(),
                                    [&](const Point& p) { return strictly_inside(p, box); });
    if (empty) {
      case1(a, b, out);
    } else {
      case2(a, b, out);
    }
  }
  return memo_.emplace(std::pair{a, b}, std::move(out)).first->second;
}

void ProofExtractor::direct(VertexId a, VertexId b, const std::string& reason, Solved& out) {
  out.path = sp_.path(a, b);
  CertStep s = make_step(StepKind::DirectMeasure, reason, a, b, walk_length(out.path), bound(a, b));
  s.ids = out.path;
  out.steps.push_back(std::move(s));
  out.children.clear();
  ++fallbacks_[reason];
}

bool ProofExtractor::recurse(VertexId a, VertexId b, const std::string& subcase, std::vector<VertexId> ids,
                             std::vector<std::pair<VertexId, VertexId>> subpairs, Solved& out) {
  const Rational k = key(a, b);
  double lhs = walk_length(ids);
  for (const auto& [c, d] : subpairs) {
    if (!(key(c, d) < k)) return false;
    lhs += bound(c, d);
  }
  CertStep s = make_step(StepKind::Recurse, subcase, a, b, lhs, bound(a, b));
  if (s.slack < -scaled_tolerance(euclidean(t_.point(a), t_.point(b)), tolerance_)) return false;
  s.ids = ids;
  for (const auto& [c, d] : subpairs) s.subpairs.push_back({c, d});
  out.steps.push_back(std::move(s));

  // Compose the walk: prefix, then each sub-pair's path in order.
  std::vector<VertexId> path = subcase == "case2-regionB" ? std::vector<VertexId>{a} : std::move(ids);
  for (const auto& [c, d] : subpairs) {
    const Solved& sub = solve(c, d);
    append_tail(path, sub.path);
    out.children.emplace_back(c, d);
  }
  out.path = std::move(path);
  return true;
}

void ProofExtractor::case1(VertexId a, VertexId b, Solved& out) {
  const Rational& A = t_.A();
  const Point& pa = t_.point(a);
  const Point& pb = t_.point(b);
  const std::optional<TriangleChain> maybe = triangle_chain(t_, a, b);
  const LocalFrame frame = maybe ? maybe->frame : LocalFrame::for_pair(pa, pb, A);
  if (frame.swapped) {
    CertStep s = make_step(StepKind::AxisSwap, "", a, b, to_d(A * (pa.x - pb.x).abs()), to_d((pa.y - pb.y).abs()));
    s.ids = {a, b};
    out.steps.push_back(std::move(s));
  }
  if (!maybe) {
    direct(a, b, "no chain", out);
    return;
  }
  const TriangleChain& ch = *maybe;
  const std::size_t k = ch.k();
  const Rational& L = frame.L;
  const Point& V = ch.at(b);

  auto potential_step = [&](StepKind kind, std::size_t i) {
    const PotentialCheck pc = has_potential(ch, i, sp_, tolerance_);
    CertStep s = make_step(kind, "", a, b, pc.lhs, pc.rhs);
    s.index = i;
    s.ids = {ch.h[i], ch.l[i]};
    s.triangles = {ch.triangle(i)};
    out.steps.push_back(std::move(s));
  };

  potential_step(StepKind::PotentialInit, 1);
  std::optional<InductiveInfo> info;
  std::size_t j0 = 0;
  for (std::size_t i = 1; i < k; ++i) {
    info = inductive_info(ch, i);
    if (info) {
      j0 = i;
      break;
    }
    potential_step(StepKind::PotentialPropagation, i + 1);
  }

  if (!info) {
    if (!point_vs_box(V, ch.rects[k]).on(Side::E)) {
      direct(a, b, "v off the E side of the last rectangle", out);
      return;
    }
    const double dt = sp_.distance(a, b);
    CertStep east = make_step(StepKind::InductiveEast, "", a, b, dt, to_d((Rational(1) + L) * V.x));
    east.index = k;
    east.ids = {b};
    east.triangles = {ch.triangle(k)};
    out.steps.push_back(std::move(east));
    const long double l = L.to_long_double();
    const double rhs = static_cast<double>((l + std::sqrt(l * l + 1.0L)) * V.x.to_long_double() + V.y.to_long_double());
    CertStep first = make_step(StepKind::FirstInductive, "1", a, b, dt, rhs);
    first.index = k;
    first.ids = {b};
    out.steps.push_back(std::move(first));
    out.path = sp_.path(a, b);
    return;
  }

  // First inductive rectangle R_j0 with inductive point c.
  const VertexId c = info->point;
  const bool high = info->high;
  const MaximalPath mp = maximal_path(ch, j0, high ? PathSide::Low : PathSide::High);
  const VertexId s = mp.vertices.front();
  if (mp.first_index >= 1) {
    CertStep east = make_step(StepKind::InductiveEast, "", a, b, sp_.distance(a, s),
                              to_d((Rational(1) + L) * ch.at(s).x));
    east.index = mp.first_index;
    east.ids = {s};
    east.triangles = {ch.triangle(mp.first_index)};
    out.steps.push_back(std::move(east));
  }
  {
    const Point& first = ch.at(mp.vertices.front());
    const Point& last = ch.at(mp.vertices.back());
    const Rational rhs = high ? (last.x - first.x) + (first.y - last.y) : (last.x - first.x) + (last.y - first.y);
    CertStep m = make_step(high ? StepKind::MaximalLowPath : StepKind::MaximalHighPath, "", a, b,
                           walk_length(mp.vertices), to_d(rhs));
    m.index = j0;
    m.ids = mp.vertices;
    for (std::size_t r : mp.edge_rect) m.triangles.push_back(ch.triangle(r));
    out.steps.push_back(std::move(m));
  }

  const Point& pc = ch.at(c);
  std::vector<VertexId> head = mp.vertices;
  head.push_back(c);
  {
    const long double aa = A.to_long_double();
    const long double K = frame.swapped ? 1.0L + std::sqrt(1.0L / (aa * aa) + 1.0L) : aa + std::sqrt(aa * aa + 1.0L);
    Rational term = high ? pc.y - V.y : -pc.y;
    if (frame.swapped) term = A * term;
    const std::string sub = high ? (frame.swapped ? "2b" : "2a") : (frame.swapped ? "2d" : "2c");
    const double lhs = sp_.distance(a, s) + walk_length(head) + to_d(term);
    CertStep f = make_step(StepKind::FirstInductive, sub, a, b, lhs,
                           static_cast<double>(K * pc.x.to_long_double()));
    f.index = j0;
    f.ids = head;
    f.triangles = {ch.triangle(j0)};
    out.steps.push_back(std::move(f));
  }

  std::vector<VertexId> prefix = sp_.path(a, s);
  append_tail(prefix, head);

  // Continue from c, or along the NE/SE chain when c is still too far from v vertically.
  const Rational gap = high ? pc.y - V.y : V.y - pc.y;
  const Rational reach = L * (V.x - pc.x);
  VertexId target = c;
  const bool direct_ok = reach >= gap && gap.sign() >= 0;
  if (!direct_ok && reach.sign() > 0 && reach < gap) {
    auto label = [&](std::size_t m) { return high ? ch.h[m] : (m == k ? b : ch.l[m]); };
    std::size_t j = k;
    for (std::size_t m = j0 + 1; m <= k; ++m) {
      const Point& q = ch.at(label(m));
      const Rational g = high ? q.y - V.y : V.y - q.y;
      if (L * (V.x - q.x) >= g && g.sign() >= 0) {
        j = m;
        break;
      }
    }
    std::vector<VertexId> walk{label(j0)};
    std::vector<Triangle> tris;
    for (std::size_t m = j0; m < j; ++m) {
      if (label(m + 1) == label(m)) continue;
      walk.push_back(label(m + 1));
      tris.push_back(ch.triangle(m + 1));
    }
    const Point& first = ch.at(walk.front());
    const Point& last = ch.at(walk.back());
    const Rational rhs = high ? (last.x - first.x) + (first.y - last.y) : (last.x - first.x) + (last.y - first.y);
    CertStep nc = make_step(high ? StepKind::NEChain : StepKind::SEChain, "", a, b, walk_length(walk), to_d(rhs));
    nc.index = j;
    nc.ids = walk;
    nc.triangles = std::move(tris);
    out.steps.push_back(std::move(nc));
    append_tail(prefix, walk);
    target = walk.back();
  }

  std::vector<std::pair<VertexId, VertexId>> subpairs;
  if (target != b) subpairs.emplace_back(target, b);
  if (!recurse(a, b, "case1", prefix, subpairs, out)) direct(a, b, "case 1 continuation unbounded", out);
}

void ProofExtractor::case2(VertexId a, VertexId b, Solved& out) {
  const Rational& A = t_.A();
  const Point& pa = t_.point(a);
  const Point& pb = t_.point(b);
  const Box box = empty_box(pa, pb);

  std::optional<VertexId> in_b;
  for (VertexId p = 0; p < t_.size() && !in_b; ++p) {
    if (strictly_inside(t_.point(p), box) && classify_region(t_.point(p), pa, pb, A) == Region::B) in_b = p;
  }
  if (in_b && recurse(a, b, "case2-regionB", {*in_b}, {{a, *in_b}, {*in_b, b}}, out)) return;
  if (case2_route(a, b, out)) return;

  // The mirrored route: the same argument from v's corner, walked backwards.
  Solved mirrored;
  if (case2_route(b, a, mirrored)) {
    out.steps = std::move(mirrored.steps);
    out.children = std::move(mirrored.children);
    out.path.assign(mirrored.path.rbegin(), mirrored.path.rend());
    return;
  }
  direct(a, b, "case 2 without a usable corner vertex", out);
}

bool ProofExtractor::case2_route(VertexId a, VertexId b, Solved& out) {
  const Rational& A = t_.A();
  const Point& pa = t_.point(a);
  const Point& pb = t_.point(b);
  const Box box = empty_box(pa, pb);
  auto scale_from_a = [&](const Point& p) { return max((p.x - pa.x).abs(), (p.y - pa.y).abs() / A); };

  // p: the vertex of the region next to a (A when A*dx >= dy, C otherwise) on
  // the boundary of the smallest homothet cornered at a. With A*dx < dy the
  // region-C choice is the one that keeps that homothet inside R(a,b).
  const Region near_a = A * (pa.x - pb.x).abs() >= (pa.y - pb.y).abs() ? Region::A : Region::C;
  std::optional<VertexId> p;
  Rational best;
  for (VertexId w = 0; w < t_.size(); ++w) {
    const Point& q = t_.point(w);
    if (!strictly_inside(q, box) || classify_region(q, pa, pb, A) != near_a) continue;
    const Rational s = scale_from_a(q);
    if (!p || s < best) {
      p = w;
      best = s;
    }
  }
  if (!p) return false;
  if (t_.has_edge(a, *p)) return recurse(a, b, "case2-edge-p", {a, *p}, {{*p, b}}, out);

  // p': first vertex hit when growing a homothet from a's corner towards b.
  const int sx = pb.x > pa.x ? 1 : -1;
  const int sy = pb.y > pa.y ? 1 : -1;
  std::optional<VertexId> p2;
  for (VertexId w = 0; w < t_.size(); ++w) {
    const Point& q = t_.point(w);
    if ((q.x - pa.x).sign() != sx || (q.y - pa.y).sign() != sy) continue;
    const Rational s = scale_from_a(q);
    if (!p2 || s < best) {
      p2 = w;
      best = s;
    }
  }
  if (!p2 || !t_.has_edge(a, *p2)) return false;
  return recurse(a, b, "case2-edge-p'", {a, *p2}, {{*p2, b}}, out);
}

ProofPath extract_proof_path(const Triangulation& t, VertexId u, VertexId v) {
  ProofExtractor extractor(t);
  return extractor.extract(u, v);
}

}  // namespace rectdt
