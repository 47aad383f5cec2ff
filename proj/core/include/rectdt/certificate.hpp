#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rectdt/delaunay.hpp"

namespace rectdt {

enum class StepKind {
  BaseEdge,
  AxisSwap,
  PotentialInit,
  PotentialPropagation,
  InductiveEast,
  MaximalHighPath,
  MaximalLowPath,
  FirstInductive,
  NEChain,
  SEChain,
  Recurse,
  DirectMeasure,
};

const char* to_string(StepKind k);
std::optional<StepKind> parse_step_kind(std::string_view name);

/// One checked inequality lhs <= rhs about the active pair (a,b).
///
/// Meaning of `ids` and `triangles` by kind:
///   BaseEdge              ids = [a, b]
///   AxisSwap              ids = [a, b]; lhs = A|dx|, rhs = |dy| (strict)
///   PotentialInit/Prop.   ids = [h_i, l_i], triangles = [T_i]
///   InductiveEast         ids = [p], triangles = [T_i] with p on the E side of R_i
///   Maximal*Path, *Chain  ids = walk, triangles[m] holds edge (ids[m], ids[m+1])
///   FirstInductive "1"    ids = [b]
///   FirstInductive "2x"   ids = [s, ..., c]: walk from the maximal path start s to c
///   Recurse               ids = walk from a (or [p] for case2-regionB), plus
///                         `subpairs` whose bounds complete the inequality
///   DirectMeasure         ids = walk a..b
struct CertStep {
  StepKind kind = StepKind::BaseEdge;
  std::string subcase;
  std::size_t depth = 0;
  VertexId a = 0;
  VertexId b = 0;
  std::size_t index = 0;  // chain index where meaningful
  std::vector<VertexId> ids;
  std::vector<Triangle> triangles;
  std::vector<std::array<VertexId, 2>> subpairs;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;

  friend bool operator==(const CertStep&, const CertStep&) = default;
};

struct Certificate {
  VertexId u = 0;
  VertexId v = 0;
  std::vector<CertStep> steps;
  std::vector<VertexId> path;
  double path_length = 0.0;
  double bound = 0.0;
  bool first_display = true;  // A*dx >= dy

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Human-readable trace, one line per step.
std::string describe(const Certificate& cert);

struct VerificationResult {
  bool ok = true;
  std::optional<std::size_t> failing_step;  // nullopt with !ok means a whole-certificate failure
  std::string message;
};

/// Re-derives every step from the triangulation alone and checks slack,
/// path validity and the final bound. Uses its own shortest-path table.
class Verifier {
 public:
  explicit Verifier(const Triangulation& t);
  [[nodiscard]] VerificationResult verify(const Certificate& cert, double tolerance = 1e-9) const;

 private:
  const Triangulation& tri_;
  std::vector<double> dist_;
};

VerificationResult verify_certificate(const Triangulation& t, const Certificate& cert, double tolerance = 1e-9);

}  // namespace rectdt
