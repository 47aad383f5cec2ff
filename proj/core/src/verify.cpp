// Certificate checking. Everything here is recomputed from the triangulation
// with its own frame, distance table and bound formulas; nothing is shared
// with the extractor beyond the exact geometric primitives.

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rectdt/certificate.hpp"

namespace rectdt {

namespace {

struct Frame {
  Point origin;
  bool flip_x = false;
  bool flip_y = false;
  bool swap = false;
  Rational L;

  Point map(const Point& p) const {
    Rational x = flip_x ? origin.x - p.x : p.x - origin.x;
    Rational y = flip_y ? origin.y - p.y : p.y - origin.y;
    return swap ? Point{y, x} : Point{x, y};
  }
  Box map(const Box& b) const {
    const Point p = map(Point{b.xmin, b.ymin});
    const Point q = map(Point{b.xmax, b.ymax});
    return {min(p.x, q.x), max(p.x, q.x), min(p.y, q.y), max(p.y, q.y)};
  }
};

Frame frame_of(const Point& a, const Point& b, const Rational& A) {
  Frame f;
  f.origin = a;
  f.flip_x = b.x < a.x;
  f.flip_y = b.y < a.y;
  f.swap = A * (b.x - a.x).abs() < (b.y - a.y).abs();
  f.L = f.swap ? Rational(1) / A : A;
  return f;
}

long double bound_of(const Point& a, const Point& b, const Rational& A) {
  const long double x = (a.x - b.x).abs().to_long_double();
  const long double y = (a.y - b.y).abs().to_long_double();
  const long double k = A.to_long_double();
  if (A * (a.x - b.x).abs() >= (a.y - b.y).abs()) return (k + std::sqrt(k * k + 1.0L)) * x + y;
  return k * x + (1.0L + std::sqrt(1.0L + 1.0L / (k * k))) * y;
}

bool close(double recorded, double recomputed, double tol) {
  return std::abs(recorded - recomputed) <= tol * std::max(1.0, std::abs(recomputed));
}

struct Failure {
  std::string message;
};

}  // namespace

Verifier::Verifier(const Triangulation& t) : tri_(t) {
  // Dense Dijkstra from every source.
  const std::size_t n = t.size();
  dist_.assign(n * n, std::numeric_limits<double>::infinity());
  for (VertexId s = 0; s < n; ++s) {
    double* d = dist_.data() + s * n;
    std::vector<bool> done(n, false);
    d[s] = 0.0;
    for (std::size_t round = 0; round < n; ++round) {
      VertexId best = n;
      for (VertexId v = 0; v < n; ++v) {
        if (!done[v] && (best == n || d[v] < d[best])) best = v;
      }
      if (best == n || d[best] == std::numeric_limits<double>::infinity()) break;
      done[best] = true;
      for (VertexId w : t.neighbors(best)) {
        d[w] = std::min(d[w], d[best] + euclidean(t.point(best), t.point(w)));
      }
    }
  }
}

VerificationResult Verifier::verify(const Certificate& cert, double tol) const {
  const Triangulation& t = tri_;
  const Rational& A = t.A();
  const std::size_t n = t.size();
  auto D = [&](VertexId a, VertexId b) { return dist_[a * n + b]; };
  auto pt = [&](VertexId i) -> const Point& { return t.point(i); };
  auto key = [&](VertexId a, VertexId b) { return smallest_homothet_scale(pt(a), pt(b), A); };

  auto walk = [&](const std::vector<VertexId>& ids) -> double {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
      if (!t.has_edge(ids[i], ids[i + 1])) {
        throw Failure{"path edge absent: (" + std::to_string(ids[i]) + "," + std::to_string(ids[i + 1]) + ")"};
      }
      len += euclidean(pt(ids[i]), pt(ids[i + 1]));
    }
    return len;
  };
  auto need = [](bool cond, const std::string& what) {
    if (!cond) throw Failure{what};
  };
  auto rect = [&](const Triangle& tri, const Frame& f) {
    const auto it = t.circumhomothets().find(tri);
    need(it != t.circumhomothets().end(), "unknown triangle");
    return f.map(it->second.box());
  };
  auto sides_ok = [&](const std::vector<VertexId>& ids, const std::vector<Triangle>& tris, const Frame& f, Side s0,
                      Side s1, bool check) {
    need(tris.size() + 1 == ids.size(), "one triangle per walk edge expected");
    for (std::size_t m = 0; m < tris.size(); ++m) {
      const Box r = rect(tris[m], f);
      const Contact c0 = point_vs_box(f.map(pt(ids[m])), r);
      const Contact c1 = point_vs_box(f.map(pt(ids[m + 1])), r);
      need(c0.on() && c1.on(), "walk edge not on its rectangle");
      if (check) {
        need(c0.on(s0) && c1.on(s1), std::string("edge (") + std::to_string(ids[m]) + "," +
                                         std::to_string(ids[m + 1]) + ") is not " + to_string(s0) + to_string(s1));
      }
    }
  };

  for (std::size_t idx = 0; idx < cert.steps.size(); ++idx) {
    const CertStep& s = cert.steps[idx];
    try {
      need(s.a < n && s.b < n && s.a != s.b, "invalid active pair");
      for (VertexId id : s.ids) need(id < n, "invalid vertex id");
      const Frame f = frame_of(pt(s.a), pt(s.b), A);
      const Point V = f.map(pt(s.b));
      const long double Ll = f.L.to_long_double();
      double lhs = 0.0;
      double rhs = 0.0;
      switch (s.kind) {
        case StepKind::BaseEdge: {
          need(s.ids.size() == 2 && s.ids[0] == s.a && s.ids[1] == s.b, "base edge must name the active pair");
          lhs = walk(s.ids);
          rhs = ((pt(s.a).x - pt(s.b).x).abs() + (pt(s.a).y - pt(s.b).y).abs()).to_double();
          break;
        }
        case StepKind::AxisSwap: {
          need(f.swap, "axis swap on a pair with A*dx >= dy");
          lhs = (A * (pt(s.a).x - pt(s.b).x).abs()).to_double();
          rhs = (pt(s.a).y - pt(s.b).y).abs().to_double();
          break;
        }
        case StepKind::PotentialInit:
        case StepKind::PotentialPropagation: {
          need(s.ids.size() == 2 && s.triangles.size() == 1, "potential needs [h, l] and one triangle");
          const Triangle& tri = s.triangles[0];
          for (VertexId id : s.ids) need(std::find(tri.begin(), tri.end(), id) != tri.end(), "label not in triangle");
          const Box r = rect(tri, f);
          lhs = D(s.a, s.ids[0]) + D(s.a, s.ids[1]) +
                perimeter_distance_clockwise(r, f.map(pt(s.ids[0])), f.map(pt(s.ids[1]))).to_double();
          rhs = ((Rational(2) + Rational(2) * f.L) * r.xmax).to_double();
          break;
        }
        case StepKind::InductiveEast: {
          need(s.ids.size() == 1 && s.triangles.size() == 1, "inductive-east needs one point and one triangle");
          const Point p = f.map(pt(s.ids[0]));
          need(point_vs_box(p, rect(s.triangles[0], f)).on(Side::E), "point not on the E side");
          lhs = D(s.a, s.ids[0]);
          rhs = ((Rational(1) + f.L) * p.x).to_double();
          break;
        }
        case StepKind::MaximalHighPath:
        case StepKind::MaximalLowPath:
        case StepKind::NEChain:
        case StepKind::SEChain: {
          need(!s.ids.empty(), "empty walk");
          const bool high = s.kind == StepKind::MaximalHighPath || s.kind == StepKind::NEChain;
          const bool chain = s.kind == StepKind::NEChain || s.kind == StepKind::SEChain;
          sides_ok(s.ids, s.triangles, f, high ? Side::N : Side::S, Side::E, chain);
          const Point p = f.map(pt(s.ids.front()));
          const Point q = f.map(pt(s.ids.back()));
          lhs = walk(s.ids);
          const bool rising = s.kind == StepKind::MaximalHighPath || s.kind == StepKind::SEChain;
          rhs = ((q.x - p.x) + (rising ? q.y - p.y : p.y - q.y)).to_double();
          break;
        }
        case StepKind::FirstInductive: {
          const long double a = A.to_long_double();
          if (s.subcase == "1") {
            need(s.ids.size() == 1 && s.ids[0] == s.b, "property 1 names v");
            lhs = D(s.a, s.b);
            rhs = static_cast<double>((Ll + std::sqrt(Ll * Ll + 1.0L)) * V.x.to_long_double() +
                                      V.y.to_long_double());
            break;
          }
          need(s.subcase.size() == 2 && s.subcase[0] == '2' && s.subcase[1] >= 'a' && s.subcase[1] <= 'd',
               "unknown first-inductive subcase");
          need(s.ids.size() >= 2, "first-inductive walk too short");
          const bool high = s.subcase == "2a" || s.subcase == "2b";
          const bool swapped = s.subcase == "2b" || s.subcase == "2d";
          need(swapped == f.swap, "subcase does not match the frame");
          const Point c = f.map(pt(s.ids.back()));
          need((orientation(Point{Rational(0), Rational(0)}, V, c) > 0) == high, "inductive point on the wrong side");
          Rational term = high ? c.y - V.y : -c.y;
          if (swapped) term = A * term;
          lhs = D(s.a, s.ids.front()) + walk(s.ids) + term.to_double();
          const long double K = swapped ? 1.0L + std::sqrt(1.0L / (a * a) + 1.0L) : a + std::sqrt(a * a + 1.0L);
          rhs = static_cast<double>(K * c.x.to_long_double());
          break;
        }
        case StepKind::Recurse: {
          need(!s.ids.empty(), "empty walk");
          if (s.subcase != "case2-regionB") need(s.ids.front() == s.a, "walk must start at the active vertex");
          const Rational k = key(s.a, s.b);
          lhs = walk(s.ids);
          for (const auto& [c, d] : s.subpairs) {
            need(c < n && d < n && c != d, "invalid sub-pair");
            need(key(c, d) < k, "recursion key does not decrease");
            lhs += static_cast<double>(bound_of(pt(c), pt(d), A));
          }
          rhs = static_cast<double>(bound_of(pt(s.a), pt(s.b), A));
          break;
        }
        case StepKind::DirectMeasure: {
          need(s.ids.size() >= 2 && s.ids.front() == s.a && s.ids.back() == s.b, "walk must join the active pair");
          lhs = walk(s.ids);
          rhs = static_cast<double>(bound_of(pt(s.a), pt(s.b), A));
          break;
        }
      }
      const double floor = -tol * std::max(1.0, euclidean(pt(s.a), pt(s.b)));
      need(close(s.lhs, lhs, tol), "recorded lhs does not match");
      need(close(s.rhs, rhs, tol), "recorded rhs does not match");
      need(close(s.slack, s.rhs - s.lhs, tol), "recorded slack does not match");
      if (s.kind == StepKind::AxisSwap) {
        need(rhs - lhs > 0.0, "negative slack");
      } else {
        need(rhs - lhs >= floor && s.slack >= floor, "negative slack");
      }
    } catch (const Failure& e) {
      std::ostringstream os;
      os << "step " << idx << " (" << to_string(s.kind) << (s.subcase.empty() ? "" : "(" + s.subcase + ")")
         << "): " << e.message;
      return {false, idx, os.str()};
    } catch (const std::exception& e) {
      return {false, idx, "step " + std::to_string(idx) + " (" + to_string(s.kind) + "): " + e.what()};
    }
  }

  try {
    need(cert.u < n && cert.v < n && cert.u != cert.v, "invalid certified pair");
    need(cert.path.size() >= 2 && cert.path.front() == cert.u && cert.path.back() == cert.v,
         "path does not join u and v");
    const double len = walk(cert.path);
    const double bound = static_cast<double>(bound_of(pt(cert.u), pt(cert.v), A));
    const double scale = std::max(1.0, euclidean(pt(cert.u), pt(cert.v)));
    need(cert.first_display == (A * (pt(cert.u).x - pt(cert.v).x).abs() >= (pt(cert.u).y - pt(cert.v).y).abs()),
         "direction flag mismatch");
    need(close(cert.bound, bound, tol), "claimed bound mismatch");
    need(close(cert.path_length, len, tol), "claimed path length mismatch");
    need(len >= D(cert.u, cert.v) - tol * scale, "path shorter than the graph distance");
    need(len <= bound + tol * scale, "path exceeds the bound");
  } catch (const Failure& e) {
    return {false, std::nullopt, e.message};
  }
  return {true, std::nullopt, "ok"};
}

VerificationResult verify_certificate(const Triangulation& t, const Certificate& cert, double tolerance) {
  return Verifier(t).verify(cert, tolerance);
}

}  // namespace rectdt
