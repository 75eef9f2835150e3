#include "bezmerge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "bezmerge/binomial.hpp"
#include "bezmerge/error.hpp"
#include "bezmerge/quadrature.hpp"

namespace bezmerge {

ACoeffTable a_table(int n, int m) {
  if (n < 0 || m < 0 || n > kMaxDegree || m > kMaxDegree) {
    throw Error(ErrorKind::kDegreeBound, "a-table degrees outside [0, " +
                                             std::to_string(kMaxDegree) + "]");
  }
  const BinomialTable& binom = binomials();
  ACoeffTable a{n, m, Matrix(n + 1, m + 1)};
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= m; ++j) {
      a.entries(i, j) = binom(n, i) * binom(m, j) / binom(n + m, i + j) / (n + m + 1);
    }
  }
  return a;
}

double i_nm(std::span<const double> u, std::span<const double> v, const ACoeffTable& a) {
  if (static_cast<int>(u.size()) != a.n + 1 || static_cast<int>(v.size()) != a.m + 1) {
    throw Error(ErrorKind::kShape, "i_nm: vector lengths " + std::to_string(u.size()) + ", " +
                                       std::to_string(v.size()) + " do not match a-table (" +
                                       std::to_string(a.n) + ", " + std::to_string(a.m) + ")");
  }
  double sum = 0.0;
  for (int j = 0; j <= a.n; ++j) {
    double inner = 0.0;
    for (int z = 0; z <= a.m; ++z) inner += a.entries(j, z) * v[z];
    sum += u[j] * inner;
  }
  return sum;
}

RhoCoeffs rho_coeffs(const MergedCurve& merged, const DTable& d) {
  const int m = merged.degree;
  if (d.m() != m) throw Error(ErrorKind::kShape, "d-table degree does not match merged curve");
  const int dim = static_cast<int>(merged.controls.front().size());
  RhoCoeffs rho;
  rho.values.assign(d.segments(),
                    std::vector<std::vector<double>>(dim, std::vector<double>(m + 1, 0.0)));
  for (int seg = 0; seg < d.segments(); ++seg) {
    for (int c = 0; c < dim; ++c) {
      auto& out = rho.values[seg][c];
      for (int z = 0; z <= m; ++z) {
        double acc = 0.0;
        for (int j = 0; j <= m; ++j) acc += merged.controls[j][c] * d(seg, j, z);
        out[z] = acc;
      }
    }
  }
  return rho;
}

namespace {

// elev(q, z): coefficient of B^n_q in the degree-m basis, m >= n.
Matrix elevation(int n, int m) {
  const BinomialTable& binom = binomials();
  Matrix e(n + 1, m + 1);
  for (int q = 0; q <= n; ++q) {
    for (int z = q; z <= q + m - n; ++z) {
      e(q, z) = binom(n, q) * binom(m - n, z - q) / binom(m, z);
    }
  }
  return e;
}

}  // namespace

double l2_error(const CompositeBezierCurve& curve, const MergedCurve& merged, const DTable& d) {
  const int m = merged.degree;
  if (d.segments() != curve.segment_count()) {
    throw Error(ErrorKind::kShape, "d-table segment count does not match curve");
  }
  if (curve.max_degree() > m) {
    throw Error(ErrorKind::kShape, "merged degree is below a segment degree");
  }
  const RhoCoeffs rho = rho_coeffs(merged, d);
  const ACoeffTable a_mm = a_table(m, m);
  std::map<int, Matrix> elevations;  // n -> elevation(n, m)
  const Partition& part = curve.partition();

  // I_nn(pi, pi) - 2 I_nm(pi, rho) + I_mm(rho, rho) equals I_mm(e, e) with
  // e = elevated pi - rho; the second form has no cancellation near a fit.
  std::vector<double> diff(m + 1);
  double radicand = 0.0;
  for (int seg = 0; seg < curve.segment_count(); ++seg) {
    const BezierSegment& s = curve.segment(seg);
    const int n = s.degree();
    auto it = elevations.find(n);
    if (it == elevations.end()) it = elevations.emplace(n, elevation(n, m)).first;
    const Matrix& elev = it->second;
    double local = 0.0;
    for (int c = 0; c < curve.dimension(); ++c) {
      const auto& r = rho.values[seg][c];
      for (int z = 0; z <= m; ++z) diff[z] = -r[z];
      for (int q = 0; q <= n; ++q) {
        const double p = s.point(q)[c];
        for (int z = q; z <= q + m - n; ++z) diff[z] += p * elev(q, z);
      }
      local += i_nm(diff, diff, a_mm);
    }
    radicand += part.width(seg) * local;
  }
  if (radicand < kRadicandFailure) {
    throw Error(ErrorKind::kInternal,
                "negative squared L2 distance " + std::to_string(radicand));
  }
  return radicand <= 0.0 ? 0.0 : std::sqrt(radicand);
}

double l2_error(const CompositeBezierCurve& curve, const MergedCurve& merged) {
  return l2_error(curve, merged, d_table(merged.degree, curve.partition()));
}

double max_error(const CompositeBezierCurve& curve, const MergedCurve& merged, int n_samples) {
  if (n_samples < 1) throw Error(ErrorKind::kParameter, "max_error needs at least one interval");
  const BezierSegment r = merged.as_segment();
  double worst = 0.0;
  for (int q = 0; q <= n_samples; ++q) {
    const double t = q == n_samples ? 1.0 : static_cast<double>(q) / n_samples;
    const ControlPoint p = eval_composite(curve, t);
    const ControlPoint x = eval_segment(r, t);
    double dist2 = 0.0;
    for (std::size_t c = 0; c < p.size(); ++c) dist2 += (p[c] - x[c]) * (p[c] - x[c]);
    worst = std::max(worst, std::sqrt(dist2));
  }
  return worst;
}

ErrorReport evaluate_errors(const CompositeBezierCurve& curve, const MergedCurve& merged,
                            const DTable& d, int n_samples) {
  return {l2_error(curve, merged, d), max_error(curve, merged, n_samples), n_samples};
}

double segment_length(const BezierSegment& seg) {
  const int n = seg.degree();
  if (n == 0) return 0.0;
  const int dim = seg.dimension();
  // Hodograph control points n (p_(j+1) - p_j).
  std::vector<std::vector<double>> hodo(dim, std::vector<double>(n));
  for (int c = 0; c < dim; ++c) {
    for (int j = 0; j < n; ++j) hodo[c][j] = n * (seg.point(j + 1)[c] - seg.point(j)[c]);
  }
  static const QuadratureRule rule = gauss_legendre(32);
  double length = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    double speed2 = 0.0;
    for (int c = 0; c < dim; ++c) {
      const double v = de_casteljau(hodo[c], rule.nodes[q]);
      speed2 += v * v;
    }
    length += rule.weights[q] * std::sqrt(speed2);
  }
  return length;
}

Partition arc_length_partition(std::span<const BezierSegment> segments) {
  if (segments.empty()) throw Error(ErrorKind::kParameter, "no segments to partition");
  std::vector<double> cumulative(segments.size() + 1, 0.0);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const double len = segment_length(segments[i]);
    if (!(len > 0.0)) {
      throw Error(ErrorKind::kDegenerateSegment,
                  "segment " + std::to_string(i) + " has zero length");
    }
    cumulative[i + 1] = cumulative[i] + len;
  }
  const double total = cumulative.back();
  std::vector<double> knots(cumulative.size());
  for (std::size_t i = 0; i < knots.size(); ++i) knots[i] = cumulative[i] / total;
  knots.front() = 0.0;
  knots.back() = 1.0;
  return Partition(std::move(knots));
}

}  // namespace bezmerge
