#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "bezmerge/bench.hpp"
#include "bezmerge/error.hpp"
#include "bezmerge/io.hpp"
#include "bezmerge/svg.hpp"
#include "doctest.h"

using namespace bezmerge;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

CompositeBezierCurve fixture(const std::string& name) {
  return to_composite(load_curve(std::string(BEZMERGE_DATA_DIR) + "/" + name + ".json"));
}

// Parsed viewBox as {x, y, w, h}.
std::array<double, 4> view_box(const std::string& svg) {
  const std::regex re("viewBox=\"([^ ]+) ([^ ]+) ([^ ]+) ([^\"]+)\"");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, re));
  return {std::stod(m[1]), std::stod(m[2]), std::stod(m[3]), std::stod(m[4])};
}

}  // namespace

TEST_CASE("render_svg: original only") {
  const std::string svg = render_svg({{fixture("ampersand"), std::nullopt}});
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "<polyline") == 1);
  CHECK(count(svg, "stroke=\"blue\"") == 1);
  CHECK(count(svg, "stroke=\"red\"") == 0);
  CHECK(count(svg, "stroke-dasharray") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("render_svg: merged overlay is dashed red and polygons are optional") {
  const CompositeBezierCurve curve = fixture("penguin-left");
  const MergedCurve r = merge(curve, {12, 1, 1});
  const std::string plain = render_svg({{curve, r}});
  CHECK(count(plain, "<polyline") == 2);
  CHECK(count(plain, "stroke=\"red\"") == 1);
  CHECK(count(plain, "stroke-dasharray") == 1);

  const std::string with_polys = render_svg({{curve, r}}, {.control_polygons = true});
  CHECK(count(with_polys, "<polyline") == 2 + 4 + 1);
}

TEST_CASE("render_svg: two overlays share one picture") {
  const CompositeBezierCurve left = fixture("penguin-left");
  const CompositeBezierCurve right = fixture("penguin-right");
  const std::string svg =
      render_svg({{left, merge(left, {12, 1, 1})}, {right, merge(right, {10, 1, 1})}});
  CHECK(count(svg, "stroke=\"blue\"") == 2);
  CHECK(count(svg, "stroke=\"red\"") == 2);
  CHECK(count(svg, "<svg") == 1);
}

TEST_CASE("render_svg: viewBox encloses the curve with a margin and y flipped") {
  // Two linear segments spanning [0, 2] x [0, 1].
  std::vector<BezierSegment> segs;
  segs.emplace_back(std::vector<ControlPoint>{{0.0, 0.0}, {2.0, 0.0}});
  segs.emplace_back(std::vector<ControlPoint>{{2.0, 0.0}, {2.0, 1.0}});
  const CompositeBezierCurve curve(std::move(segs), Partition::uniform(2));
  const std::string svg = render_svg({{curve, std::nullopt}}, {.samples = 65});
  const auto [x, y, w, h] = view_box(svg);
  CHECK(x == doctest::Approx(-0.1));
  CHECK(y == doctest::Approx(-1.05));
  CHECK(w == doctest::Approx(2.2));
  CHECK(h == doctest::Approx(1.1));
  // The top-right corner (2, 1) is drawn at (2, -1).
  CHECK(svg.find("2,-1") != std::string::npos);
  CHECK(svg.find("width=\"600\"") != std::string::npos);
  CHECK(svg.find("height=\"300\"") != std::string::npos);
}

TEST_CASE("render_svg: non-planar curves are rejected") {
  std::vector<BezierSegment> segs;
  segs.emplace_back(std::vector<ControlPoint>{{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}});
  const CompositeBezierCurve curve(std::move(segs), Partition::uniform(1));
  try {
    (void)render_svg({{curve, std::nullopt}});
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kUnsupportedDimension);
  }
}

TEST_CASE("emit_svg writes the rendered text") {
  const auto path = std::filesystem::temp_directory_path() / "bezmerge_test.svg";
  const std::vector<SvgLayer> layers{{fixture("ampersand"), std::nullopt}};
  emit_svg(layers, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == render_svg(layers));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(emit_svg(layers, "/nonexistent/dir/out.svg"), Error);
}

TEST_CASE("fit_log_slope recovers power laws") {
  const std::vector<double> xs{2, 4, 8, 16};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(3.5 * std::pow(x, 1.7));
  CHECK(fit_log_slope(xs, ys) == doctest::Approx(1.7).epsilon(1e-12));
  CHECK(fit_log_slope({1, 10}, {5, 5}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(fit_log_slope({1}, {1}), Error);
  CHECK_THROWS_AS(fit_log_slope({1, 2}, {1}), Error);
}

TEST_CASE("random_cubic_composite: joined cubics, reproducible") {
  const CompositeBezierCurve a = random_cubic_composite(5, 9);
  const CompositeBezierCurve b = random_cubic_composite(5, 9);
  REQUIRE(a.segments().size() == 5);
  CHECK(a.dimension() == 2);
  for (int i = 0; i < 5; ++i) {
    CHECK(a.segment(i).degree() == 3);
    CHECK(a.segment(i).points() == b.segment(i).points());
    if (i > 0) CHECK(a.segment(i).point(0) == a.segment(i - 1).point(3));
  }
  CHECK(random_cubic_composite(5, 10).segment(0).points() != a.segment(0).points());
}

TEST_CASE("bench_scaling: small sweep runs and reports positive timings") {
  BenchConfig config;
  config.s_values = {2, 3};
  config.m_values = {6, 8};
  config.repeats = 3;
  config.min_batch_seconds = 1e-4;
  const BenchResult res = bench_scaling(config);
  REQUIRE(res.s_sweep.size() == 2);
  REQUIRE(res.m_sweep.size() == 2);
  for (const auto& row : res.s_sweep) {
    CHECK(row.m == config.fixed_m);
    CHECK(row.median_seconds > 0.0);
    CHECK(row.median_seconds < 1.0);
  }
  for (const auto& row : res.m_sweep) CHECK(row.s == config.fixed_s);
  CHECK(std::isfinite(res.slope_s));
  CHECK(std::isfinite(res.slope_m));
}
