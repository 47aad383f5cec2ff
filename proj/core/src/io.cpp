#include "rectdt/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rectdt/error.hpp"

namespace rectdt {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

// Wraps nlohmann's type and key errors so callers see one error family.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Rational rational_field(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("rational values must be strings or integers");
}

json points_json(const PointSet& ps) {
  json arr = json::array();
  for (const auto& p : ps.points) arr.push_back({{"x", p.x.str()}, {"y", p.y.str()}});
  return arr;
}

PointSet points_of(const json& arr) {
  PointSet ps;
  for (const auto& p : arr) ps.points.push_back({rational_field(p.at("x")), rational_field(p.at("y"))});
  return ps;
}

std::string shortest(double d) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, res.ptr);
}

std::string triangle_key(const Triangle& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

Triangle parse_triangle_key(const std::string& key) {
  Triangle t{};
  std::istringstream is(key);
  char comma1 = 0;
  char comma2 = 0;
  if (!(is >> t[0] >> comma1 >> t[1] >> comma2 >> t[2]) || comma1 != ',' || comma2 != ',') {
    throw ParseError("bad circumhomothet key \"" + key + "\"");
  }
  return t;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      out.emplace_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

template <typename T>
T parse_number(const std::string& s) {
  T value{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw ParseError("bad number \"" + s + "\"");
  return value;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

PointSet points_from_json(std::string_view text) {
  const json j = parse_json(text, "point file");
  return guarded("point file", [&] { return points_of(j.at("points")); });
}

std::string points_to_json(const PointSet& ps) { return json{{"points", points_json(ps)}}.dump(2) + "\n"; }

std::string triangulation_to_json(const Triangulation& t) {
  json circ = json::object();
  for (const auto& [tri, h] : t.circumhomothets()) {
    circ[triangle_key(tri)] = {{"anchor", {h.anchor.x.str(), h.anchor.y.str()}}, {"scale", h.scale.str()}};
  }
  const json j{
      {"aspect", t.A().str()},
      {"transposed", t.aspect().transposed},
      {"points", points_json(t.input_points())},
      {"edges", t.edges()},
      {"triangles", t.triangles()},
      {"circumhomothets", circ},
  };
  return j.dump(2) + "\n";
}

Triangulation triangulation_from_json(std::string_view text) {
  const json j = parse_json(text, "triangulation file");
  return guarded("triangulation file", [&] {
    AspectRatio aspect{rational_field(j.at("aspect")), j.value("transposed", false)};
    if (aspect.value < Rational(1)) throw ParseError("triangulation aspect must be canonical (>= 1)");
    PointSet ps = points_of(j.at("points"));
    if (aspect.transposed) ps = transpose(ps);
    const std::size_t n = ps.size();
    auto edges = j.at("edges").get<std::vector<Edge>>();
    auto triangles = j.at("triangles").get<std::vector<Triangle>>();
    for (const auto& e : edges) {
      if (e[0] >= n || e[1] >= n || e[0] >= e[1]) throw ParseError("bad edge");
    }
    std::map<Triangle, Homothet> circ;
    for (const auto& [key, value] : j.at("circumhomothets").items()) {
      const Triangle tri = parse_triangle_key(key);
      const auto& anchor = value.at("anchor");
      circ.emplace(tri, Homothet(Point{rational_field(anchor.at(0)), rational_field(anchor.at(1))},
                                 rational_field(value.at("scale")), aspect.value));
    }
    for (const auto& tri : triangles) {
      if (tri[2] >= n || !circ.contains(tri)) throw ParseError("triangle without a circumhomothet");
    }
    return Triangulation(std::move(ps), aspect, std::move(edges), std::move(triangles), std::move(circ));
  });
}

std::string certificate_to_json(const Certificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    steps.push_back({
        {"kind", to_string(s.kind)},
        {"subcase", s.subcase},
        {"depth", s.depth},
        {"pair", {s.a, s.b}},
        {"index", s.index},
        {"ids", s.ids},
        {"triangles", s.triangles},
        {"subpairs", s.subpairs},
        {"lhs", s.lhs},
        {"rhs", s.rhs},
        {"slack", s.slack},
    });
  }
  const json j{
      {"u", cert.u},          {"v", cert.v},
      {"bound", cert.bound},  {"first_display", cert.first_display},
      {"path", cert.path},    {"path_length", cert.path_length},
      {"steps", steps},
  };
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  const json j = parse_json(text, "certificate");
  return guarded("certificate", [&] {
    Certificate cert;
    cert.u = j.at("u").get<VertexId>();
    cert.v = j.at("v").get<VertexId>();
    cert.bound = j.at("bound").get<double>();
    cert.first_display = j.at("first_display").get<bool>();
    cert.path = j.at("path").get<std::vector<VertexId>>();
    cert.path_length = j.at("path_length").get<double>();
    for (const auto& s : j.at("steps")) {
      CertStep step;
      const auto kind = parse_step_kind(s.at("kind").get<std::string>());
      if (!kind) throw ParseError("unknown step kind " + s.at("kind").dump());
      step.kind = *kind;
      step.subcase = s.value("subcase", "");
      step.depth = s.value("depth", std::size_t{0});
      const auto pair = s.at("pair").get<std::array<VertexId, 2>>();
      step.a = pair[0];
      step.b = pair[1];
      step.index = s.value("index", std::size_t{0});
      step.ids = s.value("ids", std::vector<VertexId>{});
      step.triangles = s.value("triangles", std::vector<Triangle>{});
      step.subpairs = s.value("subpairs", std::vector<std::array<VertexId, 2>>{});
      step.lhs = s.at("lhs").get<double>();
      step.rhs = s.at("rhs").get<double>();
      step.slack = s.at("slack").get<double>();
      cert.steps.push_back(std::move(step));
    }
    return cert;
  });
}

std::string stretch_report_to_json(const StretchReport& report) {
  auto pair_json = [](const PairStretch& p) {
    return json{{"u", p.u},
                {"v", p.v},
                {"d_t", p.graph_distance},
                {"d_2", p.euclidean},
                {"ratio", p.ratio},
                {"first_display", p.first_display},
                {"directional_bound", p.directional_bound},
                {"bound_slack", p.bound_slack}};
  };
  json pairs = json::array();
  for (const auto& p : report.pairs) pairs.push_back(pair_json(p));
  json violations = json::array();
  for (const auto& p : report.violations) violations.push_back(pair_json(p));
  const json j{
      {"aspect", report.aspect.str()},
      {"sigma", report.sigma},
      {"tolerance", report.tolerance},
      {"max_ratio", report.max_ratio},
      {"worst_pair", {report.worst_u, report.worst_v}},
      {"ok", report.ok()},
      {"violations", violations},
      {"pairs", pairs},
  };
  return j.dump(2) + "\n";
}

StretchReport stretch_report_from_json(std::string_view text) {
  const json j = parse_json(text, "stretch report");
  return guarded("stretch report", [&] {
    auto pair_of = [](const json& p) {
      PairStretch s;
      s.u = p.at("u").get<VertexId>();
      s.v = p.at("v").get<VertexId>();
      s.graph_distance = p.at("d_t").get<double>();
      s.euclidean = p.at("d_2").get<double>();
      s.ratio = p.at("ratio").get<double>();
      s.first_display = p.at("first_display").get<bool>();
      s.directional_bound = p.at("directional_bound").get<double>();
      s.bound_slack = p.at("bound_slack").get<double>();
      return s;
    };
    StretchReport r;
    r.aspect = rational_field(j.at("aspect"));
    r.sigma = j.at("sigma").get<double>();
    r.tolerance = j.at("tolerance").get<double>();
    r.max_ratio = j.at("max_ratio").get<double>();
    const auto worst = j.at("worst_pair").get<std::array<VertexId, 2>>();
    r.worst_u = worst[0];
    r.worst_v = worst[1];
    for (const auto& p : j.at("pairs")) r.pairs.push_back(pair_of(p));
    for (const auto& p : j.at("violations")) r.violations.push_back(pair_of(p));
    return r;
  });
}

std::string stretch_report_to_csv(const StretchReport& report) {
  std::ostringstream os;
  os << "u,v,d_t,d_2,ratio,display,bound,slack\n";
  for (const auto& p : report.pairs) {
    os << p.u << ',' << p.v << ',' << shortest(p.graph_distance) << ',' << shortest(p.euclidean) << ','
       << shortest(p.ratio) << ',' << (p.first_display ? "first" : "second") << ',' << shortest(p.directional_bound)
       << ',' << shortest(p.bound_slack) << '\n';
  }
  return os.str();
}

std::string sweep_to_csv(const SweepResult& sweep) {
  std::ostringstream os;
  os << "aspect,trial,n,seed,max_ratio,sigma\n";
  for (const auto& r : sweep.rows) {
    os << r.aspect.str() << ',' << r.trial << ',' << r.n << ',' << r.seed << ',' << shortest(r.max_ratio) << ','
       << shortest(r.sigma) << '\n';
  }
  return os.str();
}

SweepResult sweep_from_csv(std::string_view text) {
  SweepResult out;
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || line != "aspect,trial,n,seed,max_ratio,sigma") throw ParseError("bad sweep header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 6) throw ParseError("bad sweep row: " + line);
    out.rows.push_back({Rational::parse(f[0]), parse_number<std::size_t>(f[1]), parse_number<std::size_t>(f[2]),
                        parse_number<std::uint64_t>(f[3]), parse_number<double>(f[4]), parse_number<double>(f[5])});
  }
  return out;
}

std::string search_result_to_json(const SearchResult& result, const AspectRatio& aspect, std::size_t n,
                                  std::size_t budget, std::uint64_t seed) {
  const json j{
      {"aspect", aspect.value.str()},
      {"transposed", aspect.transposed},
      {"n", n},
      {"budget", budget},
      {"seed", seed},
      {"schedule",
       {{"restarts", result.schedule.restarts},
        {"step_decay", result.schedule.step_decay},
        {"initial_step_fraction", result.schedule.initial_step_fraction}}},
      {"evaluations", result.evaluations},
      {"best_ratio", result.best_ratio},
      {"sigma", result.report.sigma},
      {"worst_pair", {result.report.worst_u, result.report.worst_v}},
      {"points", points_json(result.best)},
  };
  return j.dump(2) + "\n";
}

}  // namespace rectdt
