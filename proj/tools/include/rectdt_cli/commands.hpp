#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "rectdt/spanner.hpp"

namespace rectdt::cli {

/// Process exit codes. Anything nonzero is accompanied by one
/// "rectdt <command>: error[<category>]: <message>" line on stderr.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInput = 3,       // unreadable file, malformed JSON or rational
  kDegenerate = 4,  // general-position violation
  kAdjacent = 5,    // certify on an edge of the triangulation
  kRejected = 6,    // certificate or bound check failed
  kInternal = 7,
};

struct RunConfig {
  std::string command;
  std::string points;  // input point file
  std::string tri;     // input triangulation file
  std::string cert;    // input certificate file (certify)
  std::string out;     // output path; empty writes the artifact to stdout
  std::string aspect = "1";  // one rational, or a comma list for sweep
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1;
  std::size_t budget = 1000;
  std::optional<std::pair<VertexId, VertexId>> pair;
  double tolerance = kTolerance;
  std::string distribution = "uniform";
  bool circumhomothets = true;  // export-svg
};

/// "i,j" with non-negative integers.
std::pair<VertexId, VertexId> parse_pair(std::string_view text);

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_export_svg(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command and maps library exceptions to exit codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace rectdt::cli
