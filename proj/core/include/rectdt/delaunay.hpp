#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rectdt/geometry.hpp"

namespace rectdt {

using Edge = std::array<VertexId, 2>;      // ascending ids
using Triangle = std::array<VertexId, 3>;  // ascending ids

Edge make_edge(VertexId a, VertexId b);
Triangle make_triangle(VertexId a, VertexId b, VertexId c);

/// Rectangle Delaunay triangulation. Points are stored in the canonical frame
/// (vertical long side); `aspect().transposed` records whether the caller's
/// coordinates were swapped on the way in.
class Triangulation {
 public:
  Triangulation(PointSet canonical_points, AspectRatio aspect, std::vector<Edge> edges,
                std::vector<Triangle> triangles, std::map<Triangle, Homothet> circumhomothets);

  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] const PointSet& points() const { return points_; }
  [[nodiscard]] const Point& point(VertexId i) const { return points_[i]; }
  /// Points in the caller's original frame.
  [[nodiscard]] PointSet input_points() const;
  [[nodiscard]] const AspectRatio& aspect() const { return aspect_; }
  [[nodiscard]] const Rational& A() const { return aspect_.value; }

  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<Triangle>& triangles() const { return triangles_; }
  [[nodiscard]] const std::map<Triangle, Homothet>& circumhomothets() const { return circumhomothets_; }
  [[nodiscard]] const Homothet& circumhomothet(const Triangle& t) const;

  [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  [[nodiscard]] bool has_edge(VertexId a, VertexId b) const;
  /// Triangles incident to edge (a,b): zero, one, or two.
  [[nodiscard]] std::vector<Triangle> triangles_on_edge(VertexId a, VertexId b) const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.points_ == b.points_ && a.aspect_ == b.aspect_ && a.edges_ == b.edges_ &&
           a.triangles_ == b.triangles_ && a.circumhomothets_ == b.circumhomothets_;
  }

 private:
  PointSet points_;
  AspectRatio aspect_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  std::map<Triangle, Homothet> circumhomothets_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::map<Edge, std::vector<Triangle>> edge_triangles_;
};

/// Witness homothet for the Delaunay edge (u,v), or nullopt if no homothet of
/// R with u and v on its boundary has an empty interior. `aspect` is the
/// height/width ratio of R in the frame of `ps`.
std::optional<Homothet> edge_witness(const PointSet& ps, const Rational& aspect, VertexId u, VertexId v);
bool has_edge(const PointSet& ps, const Rational& aspect, VertexId u, VertexId v);

/// Edge set by the pairwise predicate alone, in the frame of `ps`. No
/// validation or face structure; used by the search inner loop.
std::vector<Edge> delaunay_edges(const PointSet& ps, const Rational& aspect);

/// All homothets with ps[u], ps[v], ps[w] on their boundary, sorted by
/// (scale, anchor.x, anchor.y).
std::vector<Homothet> circumhomothets_of_triple(const PointSet& ps, const Rational& aspect, VertexId u, VertexId v,
                                                VertexId w);

/// True iff no point of ps lies strictly inside h.
bool is_empty(const PointSet& ps, const Homothet& h);

/// Builds the triangulation by the pairwise edge predicate and face tracing.
/// Throws DegenerateInputError on validation failures or four co-homothet points.
Triangulation build_triangulation(const PointSet& ps, const AspectRatio& aspect);

/// Independent oracle: triangles from triple enumeration, edges from a
/// brute-force candidate sweep.
Triangulation build_by_triples(const PointSet& ps, const AspectRatio& aspect);

struct StructureReport {
  bool plane = true;
  bool connected = true;
  bool counts_match = true;
  bool circumhomothets_empty = true;
  std::size_t outer_face_length = 0;  // closed boundary walk length of the unbounded face
  std::vector<std::array<Edge, 2>> crossings;

  [[nodiscard]] bool ok() const { return plane && connected && counts_match && circumhomothets_empty; }
};

/// Exact planarity, Euler counts against the outer boundary walk, and
/// emptiness of every circumhomothet.
StructureReport check_structure(const Triangulation& t);

}  // namespace rectdt
