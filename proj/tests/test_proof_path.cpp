#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "rectdt/error.hpp"
#include "rectdt/proof_path.hpp"
#include "support.hpp"

namespace rectdt {
namespace {

using test::pt;
using test::q;

constexpr double kEps = 1e-9;

Triangulation build(const PointSet& ps, const char* aspect) { return build_triangulation(ps, AspectRatio::parse(aspect)); }

bool r_empty(const Triangulation& t, VertexId u, VertexId v) {
  const Box b = empty_box(t.point(u), t.point(v));
  return std::none_of(t.points().points.begin(), t.points().points.end(),
                      [&](const Point& p) { return strictly_inside(p, b); });
}

// Parameter interval of the segment u + s (v - u), 0 <= s <= 1, inside the
// closed triangle, or nullopt when the overlap has no length.
std::optional<std::pair<Rational, Rational>> clip(const Point& u, const Point& v, std::array<Point, 3> tri) {
  if (orientation(tri[0], tri[1], tri[2]) < 0) std::swap(tri[1], tri[2]);
  Rational lo(0), hi(1);
  for (int e = 0; e < 3; ++e) {
    const Point& a = tri[e];
    const Point& b = tri[(e + 1) % 3];
    // cross(b - a, P(s) - a) >= 0 is linear in s: c0 + c1 s >= 0.
    const Rational c0 = (b.x - a.x) * (u.y - a.y) - (b.y - a.y) * (u.x - a.x);
    const Rational c1 = (b.x - a.x) * (v.y - u.y) - (b.y - a.y) * (v.x - u.x);
    if (c1.is_zero()) {
      if (c0.sign() < 0) return std::nullopt;
    } else if (c1.sign() > 0) {
      lo = max(lo, -c0 / c1);
    } else {
      hi = min(hi, -c0 / c1);
    }
  }
  if (!(lo < hi)) return std::nullopt;
  return std::pair{lo, hi};
}

struct Instance {
  Triangulation t;
  std::string aspect;
};

std::vector<Instance> instances() {
  std::vector<Instance> out;
  test::Gen g(60);
  for (const char* a : {"1", "2", "3/2", "1/2"}) {
    for (int trial = 0; trial < 3; ++trial) out.push_back({build(test::random_points(g, 25), a), a});
  }
  return out;
}

const std::vector<Instance>& cached_instances() {
  static const std::vector<Instance> all = instances();
  return all;
}

TEST(TriangleChain, AdjacentPairThrows) {
  const Triangulation t = build(test::k3_set(), "1");
  try {
    triangle_chain(t, 0, 1);
    FAIL() << "expected GeometryError";
  } catch (const GeometryError& e) {
    EXPECT_STREQ(e.what(), "adjacent pair has empty chain");
  }
}

TEST(TriangleChain, NoChainOnPathInstance) {
  const Triangulation t = build(test::path_set(), "1");
  EXPECT_FALSE(triangle_chain(t, 0, 1).has_value());
}

TEST(TriangleChain, FourPointExample) {
  // Convex position: the two diagonals cross, so some pair is non-adjacent.
  const PointSet ps = test::pts({{"0", "0"}, {"4", "1"}, {"2", "3"}, {"1.5", "-1.3"}});
  const Triangulation t = build(ps, "1");
  bool found = false;
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = 0; v < 4; ++v) {
      if (u == v || t.has_edge(u, v)) continue;
      const auto ch = triangle_chain(t, u, v);
      ASSERT_TRUE(ch.has_value());
      EXPECT_GE(ch->k(), 1u);
      for (std::size_t i = 1; i < ch->k(); ++i)
        EXPECT_TRUE(ch->l[i] == ch->l[i + 1] || ch->h[i] == ch->h[i + 1]);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

// Chains agree with brute-force clipping of every triangle against uv.
TEST(TriangleChain, MatchesBruteForceOrder) {
  std::size_t chains = 0;
  for (const auto& [t, aspect] : cached_instances()) {
    for (VertexId u = 0; u < t.size(); ++u) {
      for (VertexId v = 0; v < t.size(); ++v) {
        if (u == v || t.has_edge(u, v)) continue;
        std::vector<std::pair<Rational, Triangle>> hits;
        for (const Triangle& tri : t.triangles()) {
          const auto iv = clip(t.point(u), t.point(v), {t.point(tri[0]), t.point(tri[1]), t.point(tri[2])});
          if (iv) hits.emplace_back(iv->first, tri);
        }
        std::sort(hits.begin(), hits.end());
        const auto ch = triangle_chain(t, u, v);
        if (!ch) continue;
        ++chains;
        std::vector<Triangle> expected;
        for (const auto& h : hits) expected.push_back(h.second);
        EXPECT_EQ(ch->triangles, expected) << aspect << " pair " << u << "," << v;
      }
    }
  }
  EXPECT_GT(chains, 500u);
}

TEST(TriangleChain, LabelsAndSentinels) {
  for (const auto& [t, aspect] : cached_instances()) {
    for (VertexId u = 0; u < t.size(); ++u) {
      for (VertexId v = 0; v < t.size(); ++v) {
        if (u == v || t.has_edge(u, v)) continue;
        const auto ch = triangle_chain(t, u, v);
        if (!ch) continue;
        const std::size_t k = ch->k();
        ASSERT_EQ(ch->h.size(), k + 1);
        EXPECT_EQ(ch->h[0], u);
        EXPECT_EQ(ch->l[0], u);
        EXPECT_EQ(ch->h[k], v);
        EXPECT_EQ(ch->l[k], ch->l[k - 1]);
        const Point U = ch->at(u), V = ch->at(v);
        EXPECT_EQ(U, pt("0", "0"));
        EXPECT_GE(V.x.sign(), 0);
        EXPECT_GE(V.y.sign(), 0);
        EXPECT_GE(ch->frame.L * V.x, V.y);
        for (std::size_t i = 1; i < k; ++i) {
          EXPECT_TRUE(ch->l[i] == ch->l[i + 1] || ch->h[i] == ch->h[i + 1]);
          EXPECT_GT(orientation(U, V, ch->at(ch->h[i])), 0);
          EXPECT_LT(orientation(U, V, ch->at(ch->l[i])), 0);
          // Last segment of T_i is (l_i, h_i): both belong to T_i.
          const Triangle& tri = ch->triangle(i);
          EXPECT_NE(std::find(tri.begin(), tri.end(), ch->h[i]), tri.end());
          EXPECT_NE(std::find(tri.begin(), tri.end(), ch->l[i]), tri.end());
        }
        for (std::size_t i = 1; i <= k; ++i) {
          const Box& R = ch->rects[i];
          EXPECT_EQ(R.height(), ch->frame.L * R.width());
          for (VertexId id : ch->triangle(i)) EXPECT_TRUE(point_vs_box(ch->at(id), R).on());
        }
      }
    }
  }
}

TEST(Potential, FirstRectangleHasPotentialWhenBoxEmpty) {
  for (const auto& [t, aspect] : cached_instances()) {
    const ShortestPaths sp(t);
    for (VertexId u = 0; u < t.size(); ++u) {
      for (VertexId v = 0; v < t.size(); ++v) {
        if (u == v || t.has_edge(u, v) || !r_empty(t, u, v)) continue;
        const auto ch = triangle_chain(t, u, v);
        if (!ch) continue;
        const PotentialCheck pc = has_potential(*ch, 1, sp);
        EXPECT_TRUE(pc.holds) << aspect << " " << u << "," << v;
        // u sits on the W side at x = 0, so the bound is the perimeter of R_1.
        EXPECT_EQ(ch->rects[1].xmin, Rational(0));
        EXPECT_NEAR(pc.rhs, ((Rational(2) + Rational(2) * ch->frame.L) * ch->x_east(1)).to_double(), 1e-12);
        EXPECT_NEAR(pc.rhs, (ch->rects[1].perimeter()).to_double(), 1e-12);
      }
    }
  }
}

TEST(Potential, PropagatesThroughNonInductiveRectangles) {
  std::size_t propagations = 0;
  for (const auto& [t, aspect] : cached_instances()) {
    const ShortestPaths sp(t);
    for (VertexId u = 0; u < t.size(); ++u) {
      for (VertexId v = 0; v < t.size(); ++v) {
        if (u == v || t.has_edge(u, v) || !r_empty(t, u, v)) continue;
        const auto ch = triangle_chain(t, u, v);
        if (!ch) continue;
        for (std::size_t i = 1; i < ch->k(); ++i) {
          if (!has_potential(*ch, i, sp).holds) break;
          if (inductive_info(*ch, i)) break;
          const PotentialCheck next = has_potential(*ch, i + 1, sp);
          EXPECT_GE(next.slack(), -kEps) << aspect << " " << u << "," << v << " i=" << i;
          ++propagations;
        }
      }
    }
  }
  EXPECT_GT(propagations, 100u);
}

TEST(Inductive, GentleLastSegmentsOnly) {
  for (const auto& [t, aspect] : cached_instances()) {
    for (VertexId u = 0; u < t.size(); u += 3) {
      for (VertexId v = 0; v < t.size(); ++v) {
        if (u == v || t.has_edge(u, v)) continue;
        const auto ch = triangle_chain(t, u, v);
        if (!ch) continue;
        for (std::size_t i = 1; i < ch->k(); ++i) {
          const Point& H = ch->at(ch->h[i]);
          const Point& L = ch->at(ch->l[i]);
          const auto info = inductive_info(*ch, i);
          EXPECT_EQ(info.has_value(), slope_class(L, H, ch->frame.L) == SlopeClass::Gentle);
          if (!info) continue;
          const bool h_right = L.x < H.x;
          EXPECT_EQ(info->high, h_right);
          EXPECT_EQ(info->point, h_right ? ch->h[i] : ch->l[i]);
          EXPECT_TRUE(point_vs_box(ch->at(info->point), ch->rects[i]).on(info->side));
        }
      }
    }
  }
}

TEST(Inductive, EastPointsWithPotentialAreClose) {
  std::size_t checked = 0;
  for (const auto& [t, aspect] : cached_instances()) {
    const ShortestPaths sp(t);
    for (VertexId u = 0; u < t.size(); ++u) {
      for (VertexId v = 0; v < t.size(); ++v) {
        if (u == v || t.has_edge(u, v) || !r_empty(t, u, v)) continue;
        const auto ch = triangle_chain(t, u, v);
        if (!ch) continue;
        for (std::size_t i = 1; i < ch->k(); ++i) {
          if (!has_potential(*ch, i, sp).holds) break;
          const auto info = inductive_info(*ch, i);
          if (!info) continue;
          if (info->side == Side::E) {
            const double xc = ch->at(info->point).x.to_double();
            EXPECT_LE(sp.distance(u, info->point), (1 + ch->frame.L.to_double()) * xc + kEps);
            ++checked;
          }
          break;
        }
      }
    }
  }
  EXPECT_GT(checked, 20u);
}

// Within the part of the chain the proof uses (R(u,v) empty, up to the first
// inductive rectangle) maximal paths hug the W-N or W-S corner.
TEST(MaximalPath, WalksAlongNorthWestOrSouthWestCorners) {
  std::size_t long_paths = 0;
  for (const auto& [t, aspect] : cached_instances()) {
    const ShortestPaths sp(t);
    for (VertexId u = 0; u < t.size(); ++u) {
      for (VertexId v = 0; v < t.size(); ++v) {
        if (u == v || t.has_edge(u, v) || !r_empty(t, u, v)) continue;
        const auto ch = triangle_chain(t, u, v);
        if (!ch) continue;
        std::size_t last = 1;
        while (last < ch->k() && !inductive_info(*ch, last)) ++last;
        for (std::size_t j = 1; j <= last; ++j) {
          for (const PathSide side : {PathSide::High, PathSide::Low}) {
            const bool high = side == PathSide::High;
            const MaximalPath mp = maximal_path(*ch, j, side);
            const VertexId end = high ? ch->h[j] : ch->l[j];
            ASSERT_FALSE(mp.vertices.empty());
            EXPECT_EQ(mp.vertices.back(), end);
            EXPECT_EQ(mp.vertices.front(), high ? ch->h[mp.first_index] : ch->l[mp.first_index]);
            ASSERT_EQ(mp.edge_rect.size() + 1, mp.vertices.size());
            if (j < ch->k() && point_vs_box(ch->at(end), ch->rects[j]).on(Side::E)) {
              EXPECT_EQ(mp.vertices.size(), 1u);
            }
            for (std::size_t m = 0; m + 1 < mp.vertices.size(); ++m) {
              const Box& R = ch->rects[mp.edge_rect[m]];
              const EdgeClass ec = classify_edge(ch->at(mp.vertices[m]), ch->at(mp.vertices[m + 1]), R);
              EXPECT_EQ(ec, (EdgeClass{Side::W, high ? Side::N : Side::S}));
            }
            const Point& a = ch->at(mp.vertices.front());
            const Point& b = ch->at(end);
            const double manhattan = (b.x - a.x).to_double() + (high ? b.y - a.y : a.y - b.y).to_double();
            EXPECT_LE(sp.distance(mp.vertices.front(), end), manhattan + kEps);
            if (mp.vertices.size() >= 4) ++long_paths;
          }
        }
      }
    }
  }
  EXPECT_GT(long_paths, 0u);
}

TEST(Regions, Examples) {
  const Point u = pt("0", "0"), v = pt("4", "3");
  EXPECT_EQ(classify_region(pt("1", "2"), u, v, q("1")), Region::A);
  EXPECT_EQ(classify_region(pt("2", "1"), u, v, q("1")), Region::B);
  EXPECT_EQ(classify_region(pt("3.5", "0.5"), u, v, q("1")), Region::C);
  EXPECT_THROW(classify_region(pt("5", "1"), u, v, q("1")), GeometryError);
}

// Region A borders v's corner cone in the steep subcase and u's otherwise, so
// both transposition and swapping the pair exchange A and C away from ties.
TEST(Regions, MirrorSymmetry) {
  test::Gen g(61);
  std::size_t checked = 0;
  auto flip = [](Region r) { return r == Region::B ? Region::B : (r == Region::A ? Region::C : Region::A); };
  for (int i = 0; i < 4000; ++i) {
    const Point u{g.grid(64), g.grid(64)};
    const Point v{g.grid(64), g.grid(64)};
    const Point p{g.grid(64), g.grid(64)};
    if (!strictly_inside(p, empty_box(u, v))) continue;
    auto tie = [](const Point& a, const Point& b) { return (a.x - b.x).abs() == (a.y - b.y).abs(); };
    if (tie(u, v) || tie(u, p) || tie(p, v)) continue;
    const Region r = classify_region(p, u, v, q("1"));
    EXPECT_EQ(classify_region(transpose(p), transpose(u), transpose(v), q("1")), flip(r));
    EXPECT_EQ(classify_region(p, v, u, q("1")), flip(r));
    ++checked;
  }
  EXPECT_GT(checked, 100u);
}

TEST(Extract, AdjacentPairIsBaseEdge) {
  const Triangulation t = build(test::k3_set(), "1");
  const ProofPath pp = extract_proof_path(t, 0, 1);
  EXPECT_EQ(pp.path, (std::vector<VertexId>{0, 1}));
  ASSERT_EQ(pp.certificate.steps.size(), 1u);
  EXPECT_EQ(pp.certificate.steps[0].kind, StepKind::BaseEdge);
  EXPECT_NEAR(pp.certificate.path_length, std::sqrt(10.0), 1e-12);
  EXPECT_LE(pp.certificate.path_length, 4.0);
  EXPECT_TRUE(verify_certificate(t, pp.certificate).ok);
}

TEST(Extract, PathInstance) {
  const Triangulation t = build(test::path_set(), "1");
  const ProofPath pp = extract_proof_path(t, 0, 1);
  EXPECT_EQ(pp.path, (std::vector<VertexId>{0, 2, 1}));
  EXPECT_NEAR(pp.certificate.path_length, 3.16796691176635358226, 1e-12);
  EXPECT_NEAR(pp.certificate.bound, 8.24264068711928514641, 1e-12);
  EXPECT_TRUE(pp.certificate.first_display);
  EXPECT_TRUE(verify_certificate(t, pp.certificate).ok);
}

TEST(Extract, InvalidPairs) {
  const Triangulation t = build(test::k3_set(), "1");
  EXPECT_THROW(extract_proof_path(t, 1, 1), GeometryError);
  EXPECT_THROW(extract_proof_path(t, 0, 9), GeometryError);
}

TEST(Extract, AllPairsVerifyWithinBounds) {
  std::map<StepKind, std::size_t> kinds;
  for (const auto& [t, aspect] : cached_instances()) {
    ProofExtractor ex(t);
    const Verifier verifier(t);
    for (VertexId u = 0; u < t.size(); ++u) {
      for (VertexId v = 0; v < t.size(); ++v) {
        if (u == v) continue;
        const ProofPath pp = ex.extract(u, v);
        const Certificate& c = pp.certificate;
        const VerificationResult vr = verifier.verify(c);
        ASSERT_TRUE(vr.ok) << aspect << " " << u << "," << v << ": " << vr.message;
        EXPECT_EQ(pp.path.front(), u);
        EXPECT_EQ(pp.path.back(), v);
        const double d = ex.distances().distance(u, v);
        EXPECT_GE(c.path_length, d - kEps);
        EXPECT_LE(c.path_length, c.bound + kEps);
        const Rational key = smallest_homothet_scale(t.point(u), t.point(v), t.A());
        for (const CertStep& s : c.steps) {
          ++kinds[s.kind];
          if (s.kind == StepKind::Recurse) {
            const Rational outer = smallest_homothet_scale(t.point(s.a), t.point(s.b), t.A());
            EXPECT_LE(outer, key);
            for (const auto& [x, y] : s.subpairs)
              EXPECT_LT(smallest_homothet_scale(t.point(x), t.point(y), t.A()), outer);
          }
          if (s.kind != StepKind::DirectMeasure) EXPECT_GE(s.slack, -kEps) << to_string(s.kind);
        }
      }
    }
    EXPECT_EQ(ex.fallbacks().count("case 2 without a usable corner vertex"), 0u) << aspect;
  }
  for (const StepKind k : {StepKind::AxisSwap, StepKind::PotentialInit, StepKind::FirstInductive, StepKind::Recurse})
    EXPECT_GT(kinds[k], 0u) << to_string(k);
}

// NE/SE chains emitted by the extractor classify edge by edge in their rectangles.
TEST(Extract, NortheastAndSoutheastChainsClassify) {
  std::size_t chains = 0;
  for (const auto& [t, aspect] : cached_instances()) {
    ProofExtractor ex(t);
    for (VertexId u = 0; u < t.size(); ++u) {
      for (VertexId v = 0; v < t.size(); ++v) {
        if (u == v) continue;
        for (const CertStep& s : ex.extract(u, v).certificate.steps) {
          if (s.kind != StepKind::NEChain && s.kind != StepKind::SEChain) continue;
          const auto ch = triangle_chain(t, s.a, s.b);
          ASSERT_TRUE(ch.has_value());
          const Side end = s.kind == StepKind::NEChain ? Side::N : Side::S;
          ASSERT_EQ(s.triangles.size() + 1, s.ids.size());
          for (std::size_t m = 0; m + 1 < s.ids.size(); ++m) {
            const Box R = ch->frame.to_local(t.circumhomothet(s.triangles[m]).box());
            EXPECT_EQ(classify_edge(ch->at(s.ids[m]), ch->at(s.ids[m + 1]), R), (EdgeClass{end, Side::E}));
          }
          ++chains;
        }
      }
    }
  }
  EXPECT_GT(chains, 0u);
}

TEST(Extract, Deterministic) {
  const Triangulation& t = cached_instances().front().t;
  ProofExtractor a(t), b(t);
  for (VertexId v = 1; v < t.size(); ++v) EXPECT_EQ(a.extract(0, v).certificate, b.extract(0, v).certificate);
  // Memoized and fresh answers agree too.
  ProofExtractor c(t);
  EXPECT_EQ(c.extract(t.size() - 1, 0).certificate, a.extract(t.size() - 1, 0).certificate);
}

class NegativeControls : public ::testing::Test {
 protected:
  void SetUp() override {
    test::Gen g(62);
    t_.emplace(build(test::random_points(g, 30), "2"));
    ProofExtractor ex(*t_);
    for (VertexId v = 1; v < t_->size() && !cert_; ++v) {
      ProofPath pp = ex.extract(0, v);
      if (pp.certificate.steps.size() >= 6) cert_ = pp.certificate;
    }
    ASSERT_TRUE(cert_.has_value());
    ASSERT_TRUE(verify_certificate(*t_, *cert_).ok);
  }

  std::optional<Triangulation> t_;
  std::optional<Certificate> cert_;
};

TEST_F(NegativeControls, CorruptedSlackNamesTheStep) {
  for (std::size_t i = 0; i < cert_->steps.size(); ++i) {
    Certificate bad = *cert_;
    bad.steps[i].slack = -1.0;
    const VerificationResult vr = verify_certificate(*t_, bad);
    EXPECT_FALSE(vr.ok);
    ASSERT_TRUE(vr.failing_step.has_value());
    EXPECT_EQ(*vr.failing_step, i);
  }
}

TEST_F(NegativeControls, CorruptedSidesAreCaught) {
  for (std::size_t i = 0; i < cert_->steps.size(); ++i) {
    Certificate bad = *cert_;
    bad.steps[i].lhs *= 0.5;
    bad.steps[i].slack = bad.steps[i].rhs - bad.steps[i].lhs;
    const VerificationResult vr = verify_certificate(*t_, bad);
    EXPECT_FALSE(vr.ok) << i;
  }
}

TEST_F(NegativeControls, FabricatedBaseEdge) {
  VertexId u = 0, v = 1;
  while (t_->has_edge(u, v)) ++v;
  Certificate fake;
  fake.u = u;
  fake.v = v;
  fake.path = {u, v};
  fake.path_length = euclidean(t_->point(u), t_->point(v));
  const auto db = directional_bound(t_->point(u), t_->point(v), t_->A());
  fake.bound = db.bound;
  fake.first_display = db.first_display;
  CertStep s;
  s.kind = StepKind::BaseEdge;
  s.a = u;
  s.b = v;
  s.ids = {u, v};
  s.lhs = fake.path_length;
  s.rhs = ((t_->point(u).x - t_->point(v).x).abs() + (t_->point(u).y - t_->point(v).y).abs()).to_double();
  s.slack = s.rhs - s.lhs;
  fake.steps = {s};
  const VerificationResult vr = verify_certificate(*t_, fake);
  EXPECT_FALSE(vr.ok);
  EXPECT_NE(vr.message.find("path edge absent"), std::string::npos) << vr.message;
}

TEST_F(NegativeControls, PathAndSummaryTampering) {
  {
    Certificate bad = *cert_;
    bad.path.pop_back();
    EXPECT_FALSE(verify_certificate(*t_, bad).ok);
  }
  {
    Certificate bad = *cert_;
    bad.bound *= 0.5;
    EXPECT_FALSE(verify_certificate(*t_, bad).ok);
  }
  {
    Certificate bad = *cert_;
    bad.first_display = !bad.first_display;
    EXPECT_FALSE(verify_certificate(*t_, bad).ok);
  }
  {
    Certificate bad = *cert_;
    bad.path_length += 0.25;
    EXPECT_FALSE(verify_certificate(*t_, bad).ok);
  }
  {
    Certificate bad = *cert_;
    bad.steps.front().a = bad.steps.front().b;
    EXPECT_FALSE(verify_certificate(*t_, bad).ok);
  }
}

TEST_F(NegativeControls, RecursionMustShrinkTheKey) {
  ProofExtractor ex(*t_);
  for (VertexId u = 0; u < t_->size(); ++u) {
    for (VertexId v = 0; v < t_->size(); ++v) {
      if (u == v) continue;
      Certificate c = ex.extract(u, v).certificate;
      for (CertStep& s : c.steps) {
        if (s.kind != StepKind::Recurse || s.subpairs.empty()) continue;
        s.subpairs.front() = {s.a, s.b};
        const VerificationResult vr = verify_certificate(*t_, c);
        EXPECT_FALSE(vr.ok);
        return;
      }
    }
  }
  GTEST_SKIP() << "no recursive certificate in this instance";
}

}  // namespace
}  // namespace rectdt
