#include "bezmerge/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "bezmerge/error.hpp"
#include "bezmerge/merge.hpp"

namespace bezmerge {
namespace {

struct Case {
  CompositeBezierCurve curve;
  MergeParams params;
  long batch = 1;
  std::vector<double> samples;
};

double run_batch(const Case& c, long count) {
  using Clock = std::chrono::steady_clock;
  volatile double sink = 0.0;
  const auto start = Clock::now();
  for (long i = 0; i < count; ++i) sink = sink + merge(c.curve, c.params).controls[0][0];
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Cases are timed round-robin so slow stretches on a shared machine hit every
// configuration alike instead of skewing one end of a sweep.
std::vector<double> time_cases(std::vector<Case>& cases, const BenchConfig& config) {
  for (auto& c : cases) {
    while (run_batch(c, c.batch) < config.min_batch_seconds) c.batch *= 2;
  }
  for (int r = 0; r < std::max(config.repeats, 1); ++r) {
    for (auto& c : cases) {
      c.samples.push_back(run_batch(c, c.batch) / static_cast<double>(c.batch));
    }
  }
  std::vector<double> medians;
  for (auto& c : cases) {
    auto& v = c.samples;
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    medians.push_back(v[v.size() / 2]);
  }
  return medians;
}

}  // namespace

CompositeBezierCurve random_cubic_composite(int segments, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<BezierSegment> segs;
  ControlPoint start{coord(rng), coord(rng)};
  for (int i = 0; i < segments; ++i) {
    std::vector<ControlPoint> pts{start};
    for (int j = 0; j < 3; ++j) pts.push_back({coord(rng), coord(rng)});
    start = pts.back();
    segs.emplace_back(std::move(pts));
  }
  return CompositeBezierCurve(std::move(segs), Partition::uniform(segments));
}

double fit_log_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw Error(ErrorKind::kShape, "slope fit needs two or more paired samples");
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = std::log(xs[i]);
    const double y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BenchResult bench_scaling(const BenchConfig& config) {
  std::vector<Case> cases;
  for (int s : config.s_values) {
    cases.push_back({random_cubic_composite(s, config.seed + s), {config.fixed_m, 1, 1}, 1, {}});
  }
  for (int m : config.m_values) {
    cases.push_back({random_cubic_composite(config.fixed_s, config.seed), {m, 1, 1}, 1, {}});
  }
  const std::vector<double> medians = time_cases(cases, config);

  BenchResult result;
  std::vector<double> xs;
  std::vector<double> ys;
  const std::size_t ns = config.s_values.size();
  for (std::size_t i = 0; i < ns; ++i) {
    result.s_sweep.push_back({config.s_values[i], config.fixed_m, medians[i]});
    xs.push_back(config.s_values[i]);
    ys.push_back(medians[i]);
  }
  result.slope_s = fit_log_slope(xs, ys);

  xs.clear();
  ys.clear();
  for (std::size_t i = 0; i < config.m_values.size(); ++i) {
    result.m_sweep.push_back({config.fixed_s, config.m_values[i], medians[ns + i]});
    xs.push_back(config.m_values[i]);
    ys.push_back(medians[ns + i]);
  }
  result.slope_m = fit_log_slope(xs, ys);
  return result;
}

}  // namespace bezmerge
