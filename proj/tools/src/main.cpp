#include <iostream>

#include <CLI11.hpp>

#include "rectdt_cli/commands.hpp"

using rectdt::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Rectangle Delaunay triangulations, spanning ratios and certified proof paths"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string pair;

  auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& s) { cfg.seed = s; }, "RNG seed")
        ->required();
  };

  CLI::App* generate = app.add_subcommand("generate", "Random points in general position");
  generate->add_option("--n", cfg.n, "Number of points")->required();
  add_seed(generate);
  generate->add_option("--distribution", cfg.distribution, "uniform or clustered")
      ->check(CLI::IsMember({"uniform", "clustered"}));
  generate->add_option("--out", cfg.out, "Output point file (default stdout)");

  CLI::App* build = app.add_subcommand("build", "Rectangle Delaunay triangulation of a point file");
  build->add_option("--points", cfg.points, "Input point file")->required();
  build->add_option("--aspect", cfg.aspect, "Rectangle aspect ratio height/width, e.g. 3/2")->capture_default_str();
  build->add_option("--out", cfg.out, "Output triangulation file (default stdout)");

  CLI::App* analyze = app.add_subcommand("analyze", "All-pairs spanning ratio report");
  analyze->add_option("--tri", cfg.tri, "Input triangulation file")->required();
  analyze->add_option("--out", cfg.out, "Report file, JSON or .csv");
  analyze->add_option("--tolerance", cfg.tolerance, "Length tolerance")->capture_default_str();

  CLI::App* certify = app.add_subcommand("certify", "Extract and verify a proof path, or verify a certificate file");
  certify->add_option("--tri", cfg.tri, "Input triangulation file")->required();
  auto* pair_opt = certify->add_option("--pair", pair, "Vertex pair i,j");
  auto* cert_opt = certify->add_option("--cert", cfg.cert, "Existing certificate to verify");
  pair_opt->excludes(cert_opt);
  certify->add_option("--out", cfg.out, "Write the extracted certificate here");
  certify->add_option("--tolerance", cfg.tolerance, "Length tolerance")->capture_default_str();

  CLI::App* sweep = app.add_subcommand("sweep", "Observed maximum stretch per aspect ratio and trial, as CSV");
  sweep->add_option("--aspect", cfg.aspect, "Comma-separated aspect ratios")->capture_default_str();
  sweep->add_option("--n", cfg.n, "Points per set")->required();
  sweep->add_option("--trials", cfg.trials, "Sets per aspect ratio")->capture_default_str();
  add_seed(sweep);
  sweep->add_option("--out", cfg.out, "Output CSV (default stdout)");

  CLI::App* search = app.add_subcommand("search", "Hill-climbing search for high-stretch configurations");
  search->add_option("--aspect", cfg.aspect, "Rectangle aspect ratio")->capture_default_str();
  search->add_option("--n", cfg.n, "Number of points")->required();
  search->add_option("--budget", cfg.budget, "Stretch evaluations")->capture_default_str();
  add_seed(search);
  search->add_option("--out", cfg.out, "Output JSON (default stdout)");

  CLI::App* svg = app.add_subcommand("export-svg", "Draw a triangulation as SVG");
  svg->add_option("--tri", cfg.tri, "Input triangulation file")->required();
  svg->add_option("--out", cfg.out, "Output SVG (default stdout)");
  bool no_rects = false;
  svg->add_flag("--no-circumhomothets", no_rects, "Omit the dashed empty rectangles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : rectdt::cli::kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.circumhomothets = !no_rects;
  if (!pair.empty()) {
    try {
      cfg.pair = rectdt::cli::parse_pair(pair);
    } catch (const std::exception& e) {
      std::cerr << "rectdt certify: error[usage]: " << e.what() << "\n";
      return rectdt::cli::kUsage;
    }
  }
  return rectdt::cli::run(cfg, std::cout, std::cerr);
}
