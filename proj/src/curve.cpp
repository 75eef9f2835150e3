#include "bezmerge/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bezmerge/binomial.hpp"
#include "bezmerge/error.hpp"

namespace bezmerge {

BezierSegment::BezierSegment(std::vector<ControlPoint> points)
    : points_(std::move(points)) {
  if (points_.empty()) {
    throw Error(ErrorKind::kShape, "segment needs at least one control point");
  }
  const std::size_t d = points_.front().size();
  if (d == 0) throw Error(ErrorKind::kShape, "control points must have dimension >= 1");
  for (std::size_t j = 0; j < points_.size(); ++j) {
    if (points_[j].size() != d) {
      throw Error(ErrorKind::kShape, "control point " + std::to_string(j) + " has dimension " +
                                         std::to_string(points_[j].size()) + ", expected " +
                                         std::to_string(d));
    }
    for (double x : points_[j]) {
      if (!std::isfinite(x)) {
        throw Error(ErrorKind::kDomain,
                    "control point " + std::to_string(j) + " has a non-finite coordinate");
      }
    }
  }
}

std::vector<double> BezierSegment::coordinate(int c) const {
  std::vector<double> out(points_.size());
  for (std::size_t j = 0; j < points_.size(); ++j) out[j] = points_[j][c];
  return out;
}

Partition::Partition(std::vector<double> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) {
    throw Error(ErrorKind::kParameter, "partition needs at least two knots");
  }
  if (knots_.front() != 0.0 || knots_.back() != 1.0) {
    throw Error(ErrorKind::kParameter, "partition must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i] > knots_[i - 1])) {
      throw Error(ErrorKind::kParameter,
                  "partition knots must be strictly increasing (knot " + std::to_string(i) + ")");
    }
  }
}

Partition Partition::uniform(int segments) {
  if (segments < 1) throw Error(ErrorKind::kParameter, "uniform partition needs s >= 1");
  std::vector<double> knots(segments + 1);
  for (int i = 0; i <= segments; ++i) knots[i] = static_cast<double>(i) / segments;
  knots.back() = 1.0;
  return Partition(std::move(knots));
}

int Partition::locate(double t) const {
  // First knot strictly greater than t; ties at interior knots go right.
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  int i = static_cast<int>(it - knots_.begin()) - 1;
  return std::clamp(i, 0, segments() - 1);
}

CompositeBezierCurve::CompositeBezierCurve(std::vector<BezierSegment> segments,
                                           Partition partition)
    : segments_(std::move(segments)), partition_(std::move(partition)) {
  if (segments_.empty()) throw Error(ErrorKind::kShape, "curve needs at least one segment");
  if (static_cast<int>(segments_.size()) != partition_.segments()) {
    throw Error(ErrorKind::kShape, "curve has " + std::to_string(segments_.size()) +
                                       " segments but partition has " +
                                       std::to_string(partition_.knots().size()) + " knots");
  }
  const int d = segments_.front().dimension();
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (segments_[i].dimension() != d) {
      throw Error(ErrorKind::kShape, "segment " + std::to_string(i) + " has dimension " +
                                         std::to_string(segments_[i].dimension()) +
                                         ", expected " + std::to_string(d));
    }
  }
}

int CompositeBezierCurve::max_degree() const {
  int n = 0;
  for (const auto& seg : segments_) n = std::max(n, seg.degree());
  return n;
}

double bernstein_eval(int n, int j, double u) {
  if (j < 0 || j > n) return 0.0;
  return binomial(n, j) * std::pow(u, j) * std::pow(1.0 - u, n - j);
}

std::vector<double> bernstein_all(int n, double u) {
  std::vector<double> out(n + 1);
  bernstein_all(n, u, out);
  return out;
}

void bernstein_all(int n, double u, std::span<double> out) {
  const auto binom = binomials().row(n);
  const double v = 1.0 - u;
  double pu = 1.0;
  for (int j = 0; j <= n; ++j) {
    out[j] = binom[j] * pu;
    pu *= u;
  }
  double pv = 1.0;
  for (int j = n; j >= 0; --j) {
    out[j] *= pv;
    pv *= v;
  }
}

double de_casteljau(std::span<const double> coeffs, double u) {
  std::vector<double> work(coeffs.begin(), coeffs.end());
  const double v = 1.0 - u;
  for (std::size_t r = 1; r < work.size(); ++r) {
    for (std::size_t j = 0; j + r < work.size(); ++j) {
      work[j] = v * work[j] + u * work[j + 1];
    }
  }
  return work.front();
}

ControlPoint eval_segment(const BezierSegment& seg, double u) {
  std::vector<ControlPoint> work = seg.points();
  const double v = 1.0 - u;
  const int d = seg.dimension();
  for (std::size_t r = 1; r < work.size(); ++r) {
    for (std::size_t j = 0; j + r < work.size(); ++j) {
      for (int c = 0; c < d; ++c) work[j][c] = v * work[j][c] + u * work[j + 1][c];
    }
  }
  return work.front();
}

ControlPoint eval_composite(const CompositeBezierCurve& curve, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorKind::kDomain, "parameter t outside [0, 1]");
  }
  const Partition& part = curve.partition();
  const int i = part.locate(t);
  double u = (t - part.knot(i)) / part.width(i);
  // Exact endpoints so interpolation stays bit-exact at knots.
  if (t == part.knot(i)) u = 0.0;
  if (t == part.knot(i + 1)) u = 1.0;
  return eval_segment(curve.segment(i), u);
}

double forward_difference(std::span<const double> coeffs, int j, int h) {
  if (j < 0 || h < 0 || static_cast<std::size_t>(h + j) >= coeffs.size()) {
    throw Error(ErrorKind::kRange, "forward difference of order " + std::to_string(j) +
                                       " at " + std::to_string(h) + " exceeds " +
                                       std::to_string(coeffs.size()) + " coefficients");
  }
  double sum = 0.0;
  for (int v = 0; v <= j; ++v) {
    const double sign = ((j + v) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binomial(j, v) * coeffs[h + v];
  }
  return sum;
}

ControlPoint forward_difference(const BezierSegment& seg, int j, int h) {
  ControlPoint out(seg.dimension());
  for (int c = 0; c < seg.dimension(); ++c) {
    const auto coords = seg.coordinate(c);
    out[c] = forward_difference(coords, j, h);
  }
  return out;
}

ControlPoint endpoint_derivative(const BezierSegment& seg, int order, End end) {
  const int n = seg.degree();
  if (order < 0 || order > n) {
    throw Error(ErrorKind::kRange, "derivative order " + std::to_string(order) +
                                       " exceeds degree " + std::to_string(n));
  }
  double falling = 1.0;  // n! / (n - order)!
  for (int q = 0; q < order; ++q) falling *= n - q;
  ControlPoint out = forward_difference(seg, order, end == End::kLeft ? 0 : n - order);
  for (double& x : out) x *= falling;
  return out;
}

std::vector<std::string> continuity_warnings(const CompositeBezierCurve& curve, double tol) {
  std::vector<std::string> out;
  for (int i = 0; i + 1 < curve.segment_count(); ++i) {
    const auto& a = curve.segment(i).points().back();
    const auto& b = curve.segment(i + 1).points().front();
    double dist2 = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) dist2 += (a[c] - b[c]) * (a[c] - b[c]);
    if (std::sqrt(dist2) > tol) {
      std::ostringstream msg;
      msg << "segments " << i << " and " << i + 1 << " do not join (gap "
          << std::sqrt(dist2) << ")";
      out.push_back(msg.str());
    }
  }
  return out;
}

}  // namespace bezmerge
