#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rectdt/delaunay.hpp"

namespace rectdt {

class ShortestPaths;

/// Coordinates relative to an ordered pair (u,v): u at the origin, v in the
/// closed first quadrant. Axes are swapped when A*|dx| < |dy| so that
/// L*X >= Y always holds, with L = A unswapped and L = 1/A swapped.
/// Reflections and the swap map homothets of R to axis-aligned boxes with
/// height/width ratio L.
struct LocalFrame {
  Point origin;
  int sx = 1;
  int sy = 1;
  bool swapped = false;
  Rational L{1};

  /// Frame for (u,v). With allow_swap false the frame only reflects and L = A.
  static LocalFrame for_pair(const Point& u, const Point& v, const Rational& aspect, bool allow_swap = true);

  [[nodiscard]] Point to_local(const Point& p) const;
  [[nodiscard]] Box to_local(const Box& b) const;
};

/// Triangles crossed by segment uv, in order from u. Index 0 and index k are
/// sentinels: h[0] = l[0] = u, h[k] = v, l[k] = l[k-1]. rects[i] is R_i in
/// the local frame (rects[0] unused).
struct TriangleChain {
  VertexId u = 0;
  VertexId v = 0;
  LocalFrame frame;
  std::vector<Triangle> triangles;  // T_1..T_k at positions 0..k-1
  std::vector<VertexId> h;          // size k+1
  std::vector<VertexId> l;          // size k+1
  std::vector<Box> rects;           // size k+1
  std::vector<Point> local;         // every vertex in the local frame

  [[nodiscard]] std::size_t k() const { return triangles.size(); }
  [[nodiscard]] const Triangle& triangle(std::size_t i) const { return triangles[i - 1]; }
  /// E-side coordinate of R_i.
  [[nodiscard]] const Rational& x_east(std::size_t i) const { return rects[i].xmax; }
  [[nodiscard]] const Point& at(VertexId id) const { return local[id]; }
};

/// Builds the chain for the non-adjacent pair (u,v). Returns nullopt when the
/// segment leaves the triangulated region (there is no chain). Throws
/// GeometryError("adjacent pair has empty chain") if (u,v) is an edge.
std::optional<TriangleChain> triangle_chain(const Triangulation& t, VertexId u, VertexId v);

struct PotentialCheck {
  bool holds = false;
  double lhs = 0.0;  // d_t(u,h_i) + d_t(u,l_i) + d_R_i(h_i,l_i)
  double rhs = 0.0;  // (2+2L) x_i
  [[nodiscard]] double slack() const { return rhs - lhs; }
};

/// Potential of R_i, 1 <= i <= k, with distances from `dist`.
PotentialCheck has_potential(const TriangleChain& chain, std::size_t i, const ShortestPaths& dist,
                             double tolerance = 1e-9);

struct InductiveInfo {
  VertexId point = 0;
  bool high = true;  // point is h_i
  Side side = Side::E;
};

/// The inductive point of R_i (1 <= i < k), or nullopt when (l_i,h_i) is steep.
std::optional<InductiveInfo> inductive_info(const TriangleChain& chain, std::size_t i);

enum class PathSide { High, Low };

struct MaximalPath {
  std::size_t first_index = 0;     // i: h_i or l_i starts the path
  std::vector<VertexId> vertices;  // consecutive repeats removed
  std::vector<std::size_t> edge_rect;  // for each edge, the chain index of the rectangle holding it
};

/// Maximal high or low path ending at h_j / l_j (1 <= j <= k).
MaximalPath maximal_path(const TriangleChain& chain, std::size_t j, PathSide side);

enum class Region { A, B, C };

const char* to_string(Region r);

/// Region of p inside R(u,v). The subcase (A*dx >= dy or not) is read off
/// (u,v). Throws GeometryError if p is not strictly inside R(u,v).
Region classify_region(const Point& p, const Point& u, const Point& v, const Rational& aspect);

}  // namespace rectdt
