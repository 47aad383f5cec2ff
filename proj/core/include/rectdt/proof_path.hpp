#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rectdt/certificate.hpp"
#include "rectdt/chain.hpp"
#include "rectdt/spanner.hpp"

namespace rectdt {

struct ProofPath {
  std::vector<VertexId> path;
  Certificate certificate;
};

/// Follows the inductive spanning-ratio argument to build a u->v path and a
/// certificate of its length. Results are memoized per ordered pair, so one
/// extractor should serve all queries on a triangulation.
class ProofExtractor {
 public:
  explicit ProofExtractor(const Triangulation& t, double tolerance = kTolerance);

  ProofPath extract(VertexId u, VertexId v);

  [[nodiscard]] const ShortestPaths& distances() const { return sp_; }
  /// Count of DirectMeasure steps by reason, over every pair solved so far.
  [[nodiscard]] const std::map<std::string, std::size_t>& fallbacks() const { return fallbacks_; }

 private:
  struct Solved {
    std::vector<VertexId> path;
    std::vector<CertStep> steps;  // depth relative to this pair
    std::vector<std::pair<VertexId, VertexId>> children;
  };

  const Solved& solve(VertexId a, VertexId b);
  void case1(VertexId a, VertexId b, Solved& out);
  void case2(VertexId a, VertexId b, Solved& out);
  bool case2_route(VertexId a, VertexId b, Solved& out);
  bool recurse(VertexId a, VertexId b, const std::string& subcase, std::vector<VertexId> ids,
               std::vector<std::pair<VertexId, VertexId>> subpairs, Solved& out);
  void direct(VertexId a, VertexId b, const std::string& reason, Solved& out);

  [[nodiscard]] double walk_length(const std::vector<VertexId>& walk) const;
  [[nodiscard]] double bound(VertexId a, VertexId b) const;
  [[nodiscard]] Rational key(VertexId a, VertexId b) const;

  const Triangulation& t_;
  ShortestPaths sp_;
  double tolerance_;
  std::map<std::pair<VertexId, VertexId>, Solved> memo_;
  std::map<std::string, std::size_t> fallbacks_;
};

ProofPath extract_proof_path(const Triangulation& t, VertexId u, VertexId v);

}  // namespace rectdt
