#include "bezmerge/subdivision.hpp"

#include <array>
#include <cmath>
#include <string>

#include "bezmerge/binomial.hpp"
#include "bezmerge/error.hpp"

namespace bezmerge {
namespace {

// Below this the row seed (1 - t_lo)^m has lost all information.
constexpr double kSeedUnderflow = 1e-300;

void fill_direct(DTable& d, int seg, double lo, double hi) {
  const int m = d.m();
  for (int j = 0; j <= m; ++j) {
    for (int h = 0; h <= m; ++h) d(seg, j, h) = d_direct(m, j, h, lo, hi);
  }
}

void fill_column_sweep(DTable& d, int seg, double lo, double hi) {
  const int m = d.m();
  const double width = hi - lo;
  const auto at = [&](int j, int h) {
    return (j < 0 || j > m || h < 0 || h > m) ? 0.0 : d(seg, j, h);
  };
  // Row operator of the identity: width * [(m-j+1) d_(j-1) + (2j-m) d_j - (j+1) d_(j+1)].
  const auto row_term = [&](int j, int h) {
    return width * ((m - j + 1) * at(j - 1, h) + (2 * j - m) * at(j, h) -
                    (j + 1) * at(j + 1, h));
  };

  std::array<double, kMaxDegree + 1> left;
  std::array<double, kMaxDegree + 1> right;
  bernstein_all(m, lo, left);
  bernstein_all(m, hi, right);
  for (int j = 0; j <= m; ++j) {
    d(seg, j, 0) = left[j];
    d(seg, j, m) = right[j];
  }
  const int mid = m / 2;
  // Columns 1..mid from the left.
  for (int h = 0; h < mid; ++h) {
    for (int j = 0; j <= m; ++j) {
      d(seg, j, h + 1) =
          (row_term(j, h) - (2 * h - m) * at(j, h) + h * at(j, h - 1)) / (m - h);
    }
  }
  // Columns m-1 down to mid+1 from the right.
  for (int h = m; h > mid + 1; --h) {
    for (int j = 0; j <= m; ++j) {
      d(seg, j, h - 1) =
          ((m - h) * at(j, h + 1) + (2 * h - m) * at(j, h) - row_term(j, h)) / h;
    }
  }
}

void fill_row_recurrence(DTable& d, int seg, double lo, double hi) {
  const int m = d.m();
  const double width = hi - lo;
  const double seed = std::pow(1.0 - lo, m);
  if (seed < kSeedUnderflow) {
    fill_direct(d, seg, lo, hi);
    return;
  }
  const auto at = [&](int j, int h) {
    return (j < 0 || j > m || h < 0 || h > m) ? 0.0 : d(seg, j, h);
  };
  const double ratio = (1.0 - hi) / (1.0 - lo);
  d(seg, 0, 0) = seed;
  for (int h = 1; h <= m; ++h) d(seg, 0, h) = ratio * d(seg, 0, h - 1);
  for (int j = 0; j < m; ++j) {
    for (int h = 0; h <= m; ++h) {
      const double column = (h * at(j, h - 1) - (2 * h - m) * at(j, h) -
                             (m - h) * at(j, h + 1)) / width;
      d(seg, j + 1, h) =
          (column + (m - j + 1) * at(j - 1, h) + (2 * j - m) * at(j, h)) / (j + 1);
    }
  }
}

}  // namespace

DTable::DTable(int m, Partition partition)
    : m_(m),
      partition_(std::move(partition)),
      coeffs_(static_cast<std::size_t>(partition_.segments()) * (m + 1) * (m + 1), 0.0) {}

DTable d_table(int m, const Partition& partition, DTableScheme scheme) {
  if (m < 1 || m > kMaxDegree) {
    throw Error(ErrorKind::kDegreeBound, "d-table degree " + std::to_string(m) +
                                             " outside [1, " + std::to_string(kMaxDegree) +
                                             "]");
  }
  DTable d(m, partition);
  for (int seg = 0; seg < partition.segments(); ++seg) {
    const double lo = partition.knot(seg);
    const double hi = partition.knot(seg + 1);
    if (scheme == DTableScheme::kColumnSweep) {
      fill_column_sweep(d, seg, lo, hi);
    } else {
      fill_row_recurrence(d, seg, lo, hi);
    }
  }
  return d;
}

double d_direct(int m, int j, int h, double t_lo, double t_hi) {
  double sum = 0.0;
  for (int v = 0; v <= h; ++v) {
    sum += bernstein_eval(m - h, j - v, t_lo) * bernstein_eval(h, v, t_hi);
  }
  return sum;
}

}  // namespace bezmerge
