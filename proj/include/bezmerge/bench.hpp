#pragma once

#include <cstdint>
#include <vector>

#include "bezmerge/curve.hpp"

namespace bezmerge {

struct BenchConfig {
  std::vector<int> s_values{2, 4, 8, 16};
  std::vector<int> m_values{8, 16, 32};
  int fixed_m = 12;  ///< degree used while sweeping s
  int fixed_s = 4;   ///< segment count used while sweeping m
  int repeats = 7;
  double min_batch_seconds = 5e-3;
  std::uint64_t seed = 20160401;
};

struct BenchRow {
  int s = 0;
  int m = 0;
  double median_seconds = 0.0;  ///< per merge call
};

struct BenchResult {
  std::vector<BenchRow> s_sweep;
  std::vector<BenchRow> m_sweep;
  double slope_s = 0.0;  ///< d log(time) / d log(s)
  double slope_m = 0.0;  ///< d log(time) / d log(m)
};

/// Joined planar cubic segments with random control points on a uniform
/// partition.
CompositeBezierCurve random_cubic_composite(int segments, std::uint64_t seed);

/// Least-squares slope of log(ys) against log(xs).
double fit_log_slope(const std::vector<double>& xs, const std::vector<double>& ys);

/// Times merge() (constraint rows, both tables, free block) with k = l = 1.
BenchResult bench_scaling(const BenchConfig& config = {});

}  // namespace bezmerge
