#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rectdt/error.hpp"
#include "rectdt/io.hpp"
#include "rectdt_cli/commands.hpp"
#include "support.hpp"

namespace rectdt::cli {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rectdt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const char* name) const { return (dir_ / name).string(); }

  int run_cmd(RunConfig cfg, const char* command) {
    cfg.command = command;
    out_.str("");
    err_.str("");
    return run(cfg, out_, err_);
  }

  std::string write_points(const char* name, const PointSet& ps) {
    write_text_file(path(name), points_to_json(ps));
    return path(name);
  }

  std::string build_tri(const char* name, const PointSet& ps, const char* aspect = "1") {
    RunConfig cfg;
    cfg.points = write_points("in_points.json", ps);
    cfg.aspect = aspect;
    cfg.out = path(name);
    EXPECT_EQ(run_cmd(cfg, "build"), kOk) << err_.str();
    return cfg.out;
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, GenerateTwoPoints) {
  RunConfig cfg;
  cfg.n = 2;
  cfg.seed = 1;
  cfg.out = path("p.json");
  ASSERT_EQ(run_cmd(cfg, "generate"), kOk) << err_.str();
  const PointSet ps = points_from_json(read_text_file(cfg.out));
  EXPECT_EQ(ps.size(), 2u);
  EXPECT_TRUE(validate_general_position(ps).ok());
}

TEST_F(Cli, GenerateIsByteIdentical) {
  RunConfig cfg;
  cfg.n = 50;
  cfg.seed = 9;
  cfg.distribution = "clustered";
  cfg.out = path("a.json");
  ASSERT_EQ(run_cmd(cfg, "generate"), kOk);
  cfg.out = path("b.json");
  ASSERT_EQ(run_cmd(cfg, "generate"), kOk);
  EXPECT_EQ(read_text_file(path("a.json")), read_text_file(path("b.json")));
}

TEST_F(Cli, GenerateHundredUniformPoints) {
  RunConfig cfg;
  cfg.n = 100;
  cfg.seed = 42;
  ASSERT_EQ(run_cmd(cfg, "generate"), kOk);
  const PointSet ps = points_from_json(out_.str());
  ASSERT_EQ(ps.size(), 100u);
  const GeneralPositionReport r = validate_general_position(ps);
  EXPECT_TRUE(r.shared_x.empty());
  EXPECT_TRUE(r.shared_y.empty());
  EXPECT_TRUE(r.ok());
  for (const Point& p : ps.points) {
    EXPECT_GE(p.x, Rational(0));
    EXPECT_LT(p.x, Rational(1));
    // Denominators divide 2^32.
    EXPECT_EQ((p.x * Rational(static_cast<long long>(1) << 32)).raw().get_den(), 1);
  }
}

TEST_F(Cli, GenerateNeedsSeedAndTwoPoints) {
  RunConfig cfg;
  cfg.n = 5;
  EXPECT_EQ(run_cmd(cfg, "generate"), kUsage);
  EXPECT_NE(err_.str().find("--seed"), std::string::npos);
  cfg.seed = 1;
  cfg.n = 1;
  EXPECT_EQ(run_cmd(cfg, "generate"), kUsage);
  cfg.n = 5;
  cfg.distribution = "gaussian";
  EXPECT_EQ(run_cmd(cfg, "generate"), kUsage);
}

TEST_F(Cli, BuildK3) {
  const std::string tri = build_tri("t.json", test::k3_set());
  const auto j = nlohmann::json::parse(read_text_file(tri));
  EXPECT_EQ(j.at("triangles").size(), 1u);
  EXPECT_EQ(triangulation_from_json(read_text_file(tri)).triangles().size(), 1u);
}

TEST_F(Cli, BuildReportsDegenerateInput) {
  RunConfig cfg;
  cfg.points = write_points("p.json", test::pts({{"0", "0"}, {"1", "1"}, {"2", "2"}}));
  EXPECT_EQ(run_cmd(cfg, "build"), kDegenerate);
  EXPECT_NE(err_.str().find("error[degenerate]: degenerate input"), std::string::npos) << err_.str();

  cfg.points = write_points("q.json", test::pts({{"0", "0.3"}, {"0.4", "1"}, {"1", "0.6"}, {"0.7", "0"}}));
  EXPECT_EQ(run_cmd(cfg, "build"), kDegenerate);
  EXPECT_NE(err_.str().find("four cocircular"), std::string::npos) << err_.str();
}

TEST_F(Cli, FileErrors) {
  RunConfig cfg;
  cfg.points = path("missing.json");
  EXPECT_EQ(run_cmd(cfg, "build"), kInput);
  EXPECT_NE(err_.str().find("no such file"), std::string::npos);

  write_text_file(path("junk.json"), "{not json");
  cfg.points = path("junk.json");
  EXPECT_EQ(run_cmd(cfg, "build"), kInput);
  EXPECT_NE(err_.str().find("error[parse]"), std::string::npos);

  cfg.points = write_points("p.json", test::k3_set());
  cfg.out = path("no/such/dir/t.json");
  EXPECT_EQ(run_cmd(cfg, "build"), kInput);

  EXPECT_EQ(run_cmd(cfg, "frobnicate"), kUsage);
}

TEST_F(Cli, AnalyzePathInstance) {
  RunConfig cfg;
  cfg.tri = build_tri("t.json", test::path_set());
  cfg.out = path("r.json");
  ASSERT_EQ(run_cmd(cfg, "analyze"), kOk) << err_.str();
  EXPECT_NE(out_.str().find("max ratio 1.00179909932 at (0,1)"), std::string::npos) << out_.str();
  const StretchReport r = stretch_report_from_json(read_text_file(cfg.out));
  EXPECT_NEAR(r.max_ratio, 1.00179909932313512252, 1e-12);

  cfg.out = path("r.csv");
  ASSERT_EQ(run_cmd(cfg, "analyze"), kOk);
  EXPECT_EQ(read_text_file(cfg.out).rfind("u,v,", 0), 0u);
}

TEST_F(Cli, CertifyPrintsTraceAndWritesCertificate) {
  test::Gen g(80);
  RunConfig cfg;
  cfg.tri = build_tri("t.json", test::random_points(g, 30), "2");
  const Triangulation t = triangulation_from_json(read_text_file(cfg.tri));
  VertexId v = 1;
  while (t.has_edge(0, v)) ++v;
  cfg.pair = {0, v};
  cfg.out = path("c.json");
  ASSERT_EQ(run_cmd(cfg, "certify"), kOk) << err_.str();
  EXPECT_NE(out_.str().find("verified: length"), std::string::npos);
  EXPECT_NE(out_.str().find("path: 0 "), std::string::npos);
  const Certificate c = certificate_from_json(read_text_file(cfg.out));
  EXPECT_EQ(c.u, 0u);
  EXPECT_EQ(c.v, v);

  // Re-verify the file, then a corrupted copy.
  RunConfig check;
  check.tri = cfg.tri;
  check.cert = cfg.out;
  EXPECT_EQ(run_cmd(check, "certify"), kOk) << err_.str();

  auto j = nlohmann::json::parse(read_text_file(cfg.out));
  const std::size_t bad_step = j["steps"].size() / 2;
  j["steps"][bad_step]["slack"] = -1.0;
  write_text_file(path("bad.json"), j.dump());
  check.cert = path("bad.json");
  EXPECT_EQ(run_cmd(check, "certify"), kRejected);
  EXPECT_NE(err_.str().find("step " + std::to_string(bad_step) + " ("), std::string::npos) << err_.str();
}

TEST_F(Cli, CertifyAdjacentPair) {
  RunConfig cfg;
  cfg.tri = build_tri("t.json", test::k3_set());
  cfg.pair = {0, 1};
  EXPECT_EQ(run_cmd(cfg, "certify"), kAdjacent);
  EXPECT_NE(err_.str().find("pair is adjacent (trivial certificate)"), std::string::npos);
  cfg.pair = {0, 5};
  EXPECT_EQ(run_cmd(cfg, "certify"), kUsage);
  cfg.pair.reset();
  EXPECT_EQ(run_cmd(cfg, "certify"), kUsage);
}

TEST_F(Cli, ParsePair) {
  EXPECT_EQ(parse_pair("3,17"), (std::pair<VertexId, VertexId>{3, 17}));
  for (const char* bad : {"3", "3,", ",4", "a,b", "1,2,3", "-1,2"}) EXPECT_THROW(parse_pair(bad), Error) << bad;
}

TEST_F(Cli, SweepAndSearchAreDeterministic) {
  RunConfig cfg;
  cfg.aspect = "1,3/2,2";
  cfg.n = 12;
  cfg.trials = 2;
  cfg.seed = 4;
  ASSERT_EQ(run_cmd(cfg, "sweep"), kOk) << err_.str();
  const std::string first = out_.str();
  ASSERT_EQ(run_cmd(cfg, "sweep"), kOk);
  EXPECT_EQ(out_.str(), first);
  EXPECT_EQ(sweep_from_csv(first).rows.size(), 6u);

  RunConfig s;
  s.aspect = "1";
  s.n = 6;
  s.budget = 400;
  s.seed = 7;
  s.out = path("s1.json");
  ASSERT_EQ(run_cmd(s, "search"), kOk) << err_.str();
  s.out = path("s2.json");
  ASSERT_EQ(run_cmd(s, "search"), kOk);
  EXPECT_EQ(read_text_file(path("s1.json")), read_text_file(path("s2.json")));
  EXPECT_NE(out_.str().find("best ratio"), std::string::npos);
  EXPECT_EQ(points_from_json(read_text_file(s.out)).size(), 6u);
}

TEST_F(Cli, BuildAnalyzeCertifyOutputsAreByteIdentical) {
  test::Gen g(81);
  const PointSet ps = test::random_points(g, 20);
  const std::string a = build_tri("a.json", ps, "3/2");
  const std::string b = build_tri("b.json", ps, "3/2");
  EXPECT_EQ(read_text_file(a), read_text_file(b));

  RunConfig cfg;
  cfg.tri = a;
  cfg.out = path("ra.json");
  ASSERT_EQ(run_cmd(cfg, "analyze"), kOk);
  cfg.out = path("rb.json");
  ASSERT_EQ(run_cmd(cfg, "analyze"), kOk);
  EXPECT_EQ(read_text_file(path("ra.json")), read_text_file(path("rb.json")));
}

TEST_F(Cli, ExportSvg) {
  RunConfig cfg;
  cfg.tri = build_tri("t.json", test::k3_set());
  cfg.out = path("t.svg");
  ASSERT_EQ(run_cmd(cfg, "export-svg"), kOk) << err_.str();
  const std::string svg = read_text_file(cfg.out);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  cfg.circumhomothets = false;
  cfg.out.clear();
  ASSERT_EQ(run_cmd(cfg, "export-svg"), kOk);
  EXPECT_EQ(out_.str().find("stroke-dasharray"), std::string::npos);
}

}  // namespace
}  // namespace rectdt::cli
