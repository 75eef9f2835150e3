#pragma once

#include <span>
#include <vector>

#include "bezmerge/curve.hpp"
#include "bezmerge/matrix.hpp"
#include "bezmerge/merge.hpp"
#include "bezmerge/subdivision.hpp"

namespace bezmerge {

/// a_ij^(n,m) = <B^n_i, B^m_j> on [0, 1].
struct ACoeffTable {
  int n = 0;
  int m = 0;
  Matrix entries;  ///< (n + 1) x (m + 1)
};

ACoeffTable a_table(int n, int m);

/// Bilinear form sum_j u_j sum_z a_jz v_z = integral of U(t) V(t) over [0, 1]
/// for the Bernstein polynomials with coefficients u and v.
double i_nm(std::span<const double> u, std::span<const double> v, const ACoeffTable& a);

/// The merged curve restricted to each segment, in that segment's local
/// Bernstein basis: values[i][c][z].
struct RhoCoeffs {
  std::vector<std::vector<std::vector<double>>> values;
};

RhoCoeffs rho_coeffs(const MergedCurve& merged, const DTable& d);

/// Negative radicands above this are rounding of an exact fit and clamp to
/// zero; anything lower means the closed form is inconsistent.
inline constexpr double kRadicandFailure = -1e-10;

/// Closed-form L2 distance between the composite curve and the merged curve.
double l2_error(const CompositeBezierCurve& curve, const MergedCurve& merged, const DTable& d);
double l2_error(const CompositeBezierCurve& curve, const MergedCurve& merged);

inline constexpr int kDefaultSamples = 500;

/// Max Euclidean distance over t = 0, 1/N, ..., 1.
double max_error(const CompositeBezierCurve& curve, const MergedCurve& merged,
                 int n_samples = kDefaultSamples);

struct ErrorReport {
  double e2 = 0.0;
  double e_inf = 0.0;
  int samples = 0;
};

ErrorReport evaluate_errors(const CompositeBezierCurve& curve, const MergedCurve& merged,
                            const DTable& d, int n_samples = kDefaultSamples);

/// Arc length of a single segment, 32-point Gauss-Legendre on the hodograph.
double segment_length(const BezierSegment& seg);

/// Knots proportional to cumulative segment arc length. Throws
/// kDegenerateSegment for a segment of zero length.
Partition arc_length_partition(std::span<const BezierSegment> segments);

}  // namespace bezmerge
