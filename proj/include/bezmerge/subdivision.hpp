#pragma once

#include <vector>

#include "bezmerge/curve.hpp"

namespace bezmerge {

/// How the per-segment blocks of a DTable are filled. Both run the same
/// three-term identity linking neighbouring d_jh entries and cost O(m^2) per
/// segment; they differ in which index the identity is solved for.
enum class DTableScheme {
  /// Solve for neighbouring columns h, sweeping from h = 0 (seeded with
  /// B^m_j(t_lo)) and from h = m (seeded with B^m_j(t_hi)) to the middle.
  /// Each step multiplies by the segment width, so rounding stays near
  /// machine precision for every partition.
  kColumnSweep,
  /// Solve for row j + 1 from rows j and j - 1, seeded with the geometric
  /// row d_0h. Divides by the segment width at every step, so errors grow
  /// like width^-m; kept for comparison and for wide segments.
  kRowRecurrence,
};

/// d^(i)_jh: coefficients of B^m_j restricted to segment i, expressed in the
/// local Bernstein basis of degree m. Segment indices are 0-based here.
class DTable {
 public:
  DTable(int m, Partition partition);

  int m() const { return m_; }
  int segments() const { return partition_.segments(); }
  const Partition& partition() const { return partition_; }

  double operator()(int seg, int j, int h) const { return coeffs_[index(seg, j, h)]; }
  double& operator()(int seg, int j, int h) { return coeffs_[index(seg, j, h)]; }

 private:
  std::size_t index(int seg, int j, int h) const {
    const std::size_t stride = static_cast<std::size_t>(m_) + 1;
    return (static_cast<std::size_t>(seg) * stride + j) * stride + h;
  }

  int m_;
  Partition partition_;
  std::vector<double> coeffs_;
};

/// Builds every block of the d-table in O(s m^2).
DTable d_table(int m, const Partition& partition,
               DTableScheme scheme = DTableScheme::kColumnSweep);

/// Direct sum sum_v B^(m-h)_(j-v)(t_lo) B^h_v(t_hi). O(m) per entry; used as
/// an oracle and as the fallback for underflowing row seeds.
double d_direct(int m, int j, int h, double t_lo, double t_hi);

}  // namespace bezmerge
