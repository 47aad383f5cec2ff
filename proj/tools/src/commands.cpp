#include "rectdt_cli/commands.hpp"

#include <charconv>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "rectdt/error.hpp"
#include "rectdt/io.hpp"
#include "rectdt/proof_path.hpp"
#include "rectdt/sampling.hpp"
#include "rectdt/svg.hpp"

namespace rectdt::cli {

namespace {

namespace fs = std::filesystem;

struct CommandError {
  int code;
  std::string category;
  std::string message;
};

[[noreturn]] void fail(int code, std::string category, std::string message) {
  throw CommandError{code, std::move(category), std::move(message)};
}

void require_input(const std::string& path, const char* flag) {
  if (path.empty()) fail(kUsage, "usage", std::string("missing ") + flag);
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) fail(kInput, "file", "no such file: " + path);
}

void require_output(const std::string& path) {
  if (path.empty()) return;
  const fs::path parent = fs::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty() && !fs::is_directory(parent, ec)) fail(kInput, "file", "output directory missing: " + parent.string());
}

std::uint64_t require_seed(const RunConfig& cfg) {
  if (!cfg.seed) fail(kUsage, "usage", "--seed is required for " + cfg.command);
  return *cfg.seed;
}

/// The artifact goes to --out when given, otherwise to stdout.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& content) {
  if (cfg.out.empty()) {
    out << content;
  } else {
    write_text_file(cfg.out, content);
  }
}

Triangulation load_triangulation(const RunConfig& cfg) {
  require_input(cfg.tri, "--tri");
  return triangulation_from_json(read_text_file(cfg.tri));
}

std::vector<Rational> parse_aspect_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    out.push_back(Rational::parse(std::string_view(text).substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int guarded(const RunConfig& cfg, std::ostream& err, const std::function<int()>& body) {
  const std::string who = "rectdt " + (cfg.command.empty() ? std::string("?") : cfg.command);
  auto report = [&](int code, std::string_view category, std::string_view message) {
    err << who << ": error[" << category << "]: " << message << "\n";
    return code;
  };
  try {
    return body();
  } catch (const CommandError& e) {
    return report(e.code, e.category, e.message);
  } catch (const DegenerateInputError& e) {
    return report(kDegenerate, "degenerate", e.what());
  } catch (const ParseError& e) {
    return report(kInput, "parse", e.what());
  } catch (const GeometryError& e) {
    return report(kInput, "geometry", e.what());
  } catch (const InternalError& e) {
    return report(kInternal, "internal", e.what());
  } catch (const Error& e) {
    return report(kInput, "file", e.what());
  } catch (const std::exception& e) {
    return report(kInternal, "internal", e.what());
  }
}

void print_verdict(std::ostream& out, const Certificate& cert) {
  out << std::setprecision(12) << "verified: length " << cert.path_length << " <= bound " << cert.bound << "\n";
}

// The verifier's message already names the failing step.
[[noreturn]] void reject(const VerificationResult& vr) {
  fail(kRejected, "certificate", "certificate rejected: " + vr.message);
}

}  // namespace

std::pair<VertexId, VertexId> parse_pair(std::string_view text) {
  const std::size_t comma = text.find(',');
  auto number = [&](std::string_view s) {
    VertexId v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
      throw ParseError("bad pair \"" + std::string(text) + "\", expected i,j");
    return v;
  };
  if (comma == std::string_view::npos) throw ParseError("bad pair \"" + std::string(text) + "\", expected i,j");
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, err, [&] {
    const std::uint64_t seed = require_seed(cfg);
    if (cfg.n < 2) fail(kUsage, "usage", "--n must be at least 2");
    const auto dist = parse_distribution(cfg.distribution);
    if (!dist) fail(kUsage, "usage", "unknown distribution \"" + cfg.distribution + "\"");
    require_output(cfg.out);
    emit(cfg, out, points_to_json(generate_points(cfg.n, seed, *dist)));
    return int{kOk};
  });
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, err, [&] {
    require_input(cfg.points, "--points");
    require_output(cfg.out);
    const AspectRatio aspect = AspectRatio::parse(cfg.aspect);
    const PointSet ps = points_from_json(read_text_file(cfg.points));
    emit(cfg, out, triangulation_to_json(build_triangulation(ps, aspect)));
    return int{kOk};
  });
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, err, [&] {
    require_output(cfg.out);
    const Triangulation t = load_triangulation(cfg);
    const StretchReport report = all_pairs_stretch(t, cfg.tolerance);
    if (!cfg.out.empty())
      write_text_file(cfg.out, ends_with(cfg.out, ".csv") ? stretch_report_to_csv(report) : stretch_report_to_json(report));

    out << std::setprecision(12);
    out << "points " << t.size() << "  aspect " << report.aspect.str() << "  sigma " << report.sigma << "\n";
    out << "max ratio " << report.max_ratio << " at (" << report.worst_u << "," << report.worst_v << ")\n";
    out << "pairs " << report.pairs.size() << "  violations " << report.violations.size() << "\n";
    if (!report.ok()) {
      const PairStretch& p = report.violations.front();
      std::ostringstream msg;
      msg << std::setprecision(12) << report.violations.size() << " pair(s) exceed the bound, first (" << p.u << ","
          << p.v << ") ratio " << p.ratio << " slack " << p.bound_slack;
      fail(kRejected, "bound", msg.str());
    }
    return int{kOk};
  });
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, err, [&] {
    require_output(cfg.out);
    if (!cfg.cert.empty()) {
      require_input(cfg.cert, "--cert");
      const Triangulation t = load_triangulation(cfg);
      const Certificate cert = certificate_from_json(read_text_file(cfg.cert));
      out << describe(cert);
      const VerificationResult vr = verify_certificate(t, cert, cfg.tolerance);
      if (!vr.ok) reject(vr);
      print_verdict(out, cert);
      return int{kOk};
    }

    if (!cfg.pair) fail(kUsage, "usage", "certify needs --pair i,j or --cert FILE");
    const Triangulation t = load_triangulation(cfg);
    const auto [u, v] = *cfg.pair;
    if (u >= t.size() || v >= t.size() || u == v) {
      fail(kUsage, "usage", "pair " + std::to_string(u) + "," + std::to_string(v) + " is not two distinct vertices of " +
                                std::to_string(t.size()));
    }
    if (t.has_edge(u, v)) fail(kAdjacent, "adjacent", "pair is adjacent (trivial certificate)");

    ProofExtractor extractor(t, cfg.tolerance);
    const ProofPath pp = extractor.extract(u, v);
    if (!cfg.out.empty()) write_text_file(cfg.out, certificate_to_json(pp.certificate));
    out << describe(pp.certificate);
    const VerificationResult vr = verify_certificate(t, pp.certificate, cfg.tolerance);
    if (!vr.ok) reject(vr);
    print_verdict(out, pp.certificate);
    return int{kOk};
  });
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, err, [&] {
    const std::uint64_t seed = require_seed(cfg);
    if (cfg.n < 2) fail(kUsage, "usage", "--n must be at least 2");
    require_output(cfg.out);
    const std::vector<Rational> aspects = parse_aspect_list(cfg.aspect);
    emit(cfg, out, sweep_to_csv(sweep(aspects, cfg.n, cfg.trials, seed)));
    return int{kOk};
  });
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, err, [&] {
    const std::uint64_t seed = require_seed(cfg);
    if (cfg.n < 2) fail(kUsage, "usage", "--n must be at least 2");
    if (cfg.budget < 1) fail(kUsage, "usage", "--budget must be at least 1");
    require_output(cfg.out);
    const AspectRatio aspect = AspectRatio::parse(cfg.aspect);
    const SearchResult result = worst_case_search(aspect, cfg.n, cfg.budget, seed);
    emit(cfg, out, search_result_to_json(result, aspect, cfg.n, cfg.budget, seed));
    if (!cfg.out.empty()) {
      out << std::setprecision(12) << "best ratio " << result.best_ratio << " (sigma " << result.report.sigma << ") after "
          << result.evaluations << " evaluations\n";
    }
    return int{kOk};
  });
}

int cmd_export_svg(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, err, [&] {
    require_output(cfg.out);
    const Triangulation t = load_triangulation(cfg);
    SvgOptions options;
    options.circumhomothets = cfg.circumhomothets;
    emit(cfg, out, render_svg(t, options));
    return int{kOk};
  });
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using Fn = int (*)(const RunConfig&, std::ostream&, std::ostream&);
  static const std::pair<const char*, Fn> table[] = {
      {"generate", cmd_generate}, {"build", cmd_build},   {"analyze", cmd_analyze},       {"certify", cmd_certify},
      {"sweep", cmd_sweep},       {"search", cmd_search}, {"export-svg", cmd_export_svg},
  };
  for (const auto& [name, fn] : table)
    if (cfg.command == name) return fn(cfg, out, err);
  err << "rectdt: error[usage]: unknown command \"" << cfg.command << "\"\n";
  return kUsage;
}

}  // namespace rectdt::cli
