#pragma once

#include <span>
#include <string>
#include <vector>

namespace bezmerge {

using ControlPoint = std::vector<double>;

enum class End { kLeft, kRight };

/// A single Bezier segment of degree n with n + 1 control points in R^d.
class BezierSegment {
 public:
  BezierSegment() = default;
  /// Throws kShape if points is empty, dimensions disagree or d == 0, and
  /// kDomain for non-finite coordinates.
  explicit BezierSegment(std::vector<ControlPoint> points);

  int degree() const { return static_cast<int>(points_.size()) - 1; }
  int dimension() const {
    return points_.empty() ? 0 : static_cast<int>(points_.front().size());
  }
  const std::vector<ControlPoint>& points() const { return points_; }
  const ControlPoint& point(int j) const { return points_[j]; }

  /// Coordinate c of every control point.
  std::vector<double> coordinate(int c) const;

 private:
  std::vector<ControlPoint> points_;
};

/// Knots 0 = t_0 < t_1 < ... < t_s = 1.
class Partition {
 public:
  Partition() = default;
  /// Throws kParameter unless knots are strictly increasing from 0 to 1.
  explicit Partition(std::vector<double> knots);

  static Partition uniform(int segments);

  int segments() const { return static_cast<int>(knots_.size()) - 1; }
  const std::vector<double>& knots() const { return knots_; }
  double knot(int i) const { return knots_[i]; }
  /// Width of segment i (0-based): t_{i+1} - t_i.
  double width(int i) const { return knots_[i + 1] - knots_[i]; }

  /// Segment index containing t. Interior knots belong to the right segment,
  /// t = 1 to the last one.
  int locate(double t) const;

 private:
  std::vector<double> knots_;
};

class CompositeBezierCurve {
 public:
  CompositeBezierCurve() = default;
  /// Throws kShape when the segment count does not match the partition or
  /// segments have different dimensions.
  CompositeBezierCurve(std::vector<BezierSegment> segments, Partition partition);

  int segment_count() const { return static_cast<int>(segments_.size()); }
  int dimension() const { return segments_.front().dimension(); }
  int max_degree() const;
  const std::vector<BezierSegment>& segments() const { return segments_; }
  const BezierSegment& segment(int i) const { return segments_[i]; }
  const BezierSegment& first() const { return segments_.front(); }
  const BezierSegment& last() const { return segments_.back(); }
  const Partition& partition() const { return partition_; }

 private:
  std::vector<BezierSegment> segments_;
  Partition partition_;
};

/// B^n_j(u) = binom(n, j) u^j (1 - u)^(n - j); zero for j outside [0, n].
double bernstein_eval(int n, int j, double u);

/// B^n_0(u) .. B^n_n(u) by running products.
std::vector<double> bernstein_all(int n, double u);

/// Same, written to out[0..n]; out must hold n + 1 values.
void bernstein_all(int n, double u, std::span<double> out);

/// De Casteljau evaluation of a scalar Bernstein coefficient vector.
double de_casteljau(std::span<const double> coeffs, double u);

ControlPoint eval_segment(const BezierSegment& seg, double u);

/// Throws kDomain for t outside [0, 1].
ControlPoint eval_composite(const CompositeBezierCurve& curve, double t);

/// Delta^j c_h = sum_v (-1)^(j+v) binom(j, v) c_(h+v). Throws kRange when
/// h + j runs past the end of coeffs.
double forward_difference(std::span<const double> coeffs, int j, int h);

/// Delta^j applied coordinate-wise to control points starting at index h.
ControlPoint forward_difference(const BezierSegment& seg, int j, int h);

/// Derivative of order j at u = 0 or u = 1 in the segment's local parameter.
ControlPoint endpoint_derivative(const BezierSegment& seg, int order, End end);

/// Messages for consecutive segments whose end and start points differ by
/// more than tol. Discontinuous input is legal; this only reports it.
std::vector<std::string> continuity_warnings(const CompositeBezierCurve& curve,
                                             double tol = 1e-9);

}  // namespace bezmerge
