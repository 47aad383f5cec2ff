#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rectdt/rational.hpp"

namespace rectdt {

using VertexId = std::size_t;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Ordered points addressed by dense ids 0..n-1.
struct PointSet {
  std::vector<Point> points;

  [[nodiscard]] std::size_t size() const { return points.size(); }
  [[nodiscard]] bool empty() const { return points.empty(); }
  const Point& operator[](VertexId i) const { return points[i]; }

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// Aspect ratio A >= 1 of the canonical rectangle R (width 1, height A).
/// Inputs below one are inverted and flagged so callers transpose point
/// coordinates before construction.
struct AspectRatio {
  Rational value{1};
  bool transposed = false;

  /// Canonicalizes a positive rational: values < 1 become 1/value with the
  /// transpose flag set.
  static AspectRatio from(const Rational& raw);
  static AspectRatio parse(std::string_view text) { return from(Rational::parse(text)); }

  friend bool operator==(const AspectRatio&, const AspectRatio&) = default;
};

/// Swaps x and y of every point.
PointSet transpose(const PointSet& ps);
Point transpose(const Point& p);

/// Closed axis-aligned box [xmin, xmax] x [ymin, ymax].
struct Box {
  Rational xmin, xmax, ymin, ymax;

  [[nodiscard]] Rational width() const { return xmax - xmin; }
  [[nodiscard]] Rational height() const { return ymax - ymin; }
  [[nodiscard]] Rational perimeter() const { return (width() + height()) * Rational(2); }

  friend bool operator==(const Box&, const Box&) = default;
};

/// The box R(u,v) with u and v in opposite corners.
Box empty_box(const Point& u, const Point& v);

/// Scaled translate of R: [anchor.x, anchor.x + scale] x [anchor.y, anchor.y + A*scale].
struct Homothet {
  Point anchor;
  Rational scale;
  Rational aspect{1};

  Homothet() = default;
  Homothet(Point anchor, Rational scale, Rational aspect);

  [[nodiscard]] Box box() const;
  [[nodiscard]] Rational east() const { return anchor.x + scale; }

  friend bool operator==(const Homothet&, const Homothet&) = default;
};

enum class Side { W, N, E, S };

const char* to_string(Side s);

struct EdgeClass {
  Side from;
  Side to;

  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

std::string to_string(const EdgeClass& ec);

/// Exact point/box relation. Corner contact reports the W or E side.
struct Contact {
  enum class Kind { Inside, On, Outside };
  Kind kind = Kind::Outside;
  Side side = Side::W;  // meaningful only for Kind::On

  [[nodiscard]] bool inside() const { return kind == Kind::Inside; }
  [[nodiscard]] bool on() const { return kind == Kind::On; }
  [[nodiscard]] bool outside() const { return kind == Kind::Outside; }
  [[nodiscard]] bool on(Side s) const { return kind == Kind::On && side == s; }

  friend bool operator==(const Contact&, const Contact&) = default;
};

Contact point_vs_box(const Point& p, const Box& b);
Contact point_vs_homothet(const Point& p, const Homothet& h);

/// True iff p lies strictly inside b.
bool strictly_inside(const Point& p, const Box& b);

/// Sides of H on which p and q lie. Throws GeometryError("not incident").
EdgeClass classify_edge(const Point& p, const Point& q, const Box& b);
EdgeClass classify_edge(const Point& p, const Point& q, const Homothet& h);

enum class SlopeClass { Gentle, Steep };

/// Gentle iff |dy| <= L*|dx| (slope in the closed interval [-L, L]).
SlopeClass slope_class(const Point& p, const Point& q, const Rational& L);

/// Arc length walking clockwise along the boundary from `from` to `to`.
/// The walk runs west to east along N, north to south along E, east to west
/// along S, south to north along W. Returns 0 when from == to.
Rational perimeter_distance_clockwise(const Box& b, const Point& from, const Point& to);
Rational perimeter_distance_clockwise(const Homothet& h, const Point& from, const Point& to);

/// max(|dx|, |dy|/A): scale of the smallest homothet with u and v on its boundary.
Rational smallest_homothet_scale(const Point& u, const Point& v, const Rational& aspect);

/// Sign of the cross product (b - a) x (c - a).
int orientation(const Point& a, const Point& b, const Point& c);

/// True iff the closed segments ab and cd share a point other than a common endpoint.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

double euclidean(const Point& a, const Point& b);

struct GeneralPositionReport {
  std::vector<std::array<VertexId, 2>> shared_x;
  std::vector<std::array<VertexId, 2>> shared_y;
  std::vector<std::array<VertexId, 3>> collinear;

  [[nodiscard]] bool ok() const { return shared_x.empty() && shared_y.empty() && collinear.empty(); }
  [[nodiscard]] std::string describe() const;
};

/// Checks distinct x, distinct y, and no collinear triple. Lists every violation.
GeneralPositionReport validate_general_position(const PointSet& ps);

}  // namespace rectdt
