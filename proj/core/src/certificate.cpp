#include <array>
#include <sstream>

#include "rectdt/certificate.hpp"

namespace rectdt {

namespace {

constexpr std::array<std::pair<StepKind, const char*>, 12> kKindNames{{
    {StepKind::BaseEdge, "BaseEdge"},
    {StepKind::AxisSwap, "AxisSwap"},
    {StepKind::PotentialInit, "PotentialInit"},
    {StepKind::PotentialPropagation, "PotentialPropagation"},
    {StepKind::InductiveEast, "InductiveEast"},
    {StepKind::MaximalHighPath, "MaximalHighPath"},
    {StepKind::MaximalLowPath, "MaximalLowPath"},
    {StepKind::FirstInductive, "FirstInductive"},
    {StepKind::NEChain, "NEChain"},
    {StepKind::SEChain, "SEChain"},
    {StepKind::Recurse, "Recurse"},
    {StepKind::DirectMeasure, "DirectMeasure"},
}};

}  // namespace

const char* to_string(StepKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<StepKind> parse_step_kind(std::string_view name) {
  for (const auto& [kind, text] : kKindNames) {
    if (name == text) return kind;
  }
  return std::nullopt;
}

std::string describe(const Certificate& cert) {
  std::ostringstream os;
  os.precision(12);
  os << "pair (" << cert.u << "," << cert.v << "): " << (cert.first_display ? "A*dx >= dy" : "A*dx < dy")
     << ", bound " << cert.bound << ", path length " << cert.path_length << "\n";
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertStep& s = cert.steps[i];
    os << "  [" << i << "] " << std::string(2 * s.depth, ' ') << to_string(s.kind);
    if (!s.subcase.empty()) os << "(" << s.subcase << ")";
    os << " pair (" << s.a << "," << s.b << ")";
    if (s.index > 0) os << " i=" << s.index;
    if (!s.ids.empty()) {
      os << " ids";
      for (std::size_t j = 0; j < s.ids.size(); ++j) os << (j == 0 ? " " : "-") << s.ids[j];
    }
    for (const auto& [c, d] : s.subpairs) os << " +bound(" << c << "," << d << ")";
    os << ": " << s.lhs << " <= " << s.rhs << " (slack " << s.slack << ")\n";
  }
  os << "path:";
  for (VertexId v : cert.path) os << " " << v;
  os << "\n";
  return os.str();
}

}  // namespace rectdt
