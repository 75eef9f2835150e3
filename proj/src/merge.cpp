#include "bezmerge/merge.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "bezmerge/binomial.hpp"
#include "bezmerge/error.hpp"
#include "bezmerge/quadrature.hpp"

namespace bezmerge {

const char* to_string(DerivativeConvention convention) {
  return convention == DerivativeConvention::kLocal ? "local" : "global";
}

DerivativeConvention parse_convention(const std::string& name) {
  if (name == "local") return DerivativeConvention::kLocal;
  if (name == "global") return DerivativeConvention::kGlobal;
  throw Error(ErrorKind::kParameter, "unknown derivative convention '" + name + "'");
}

std::vector<Violation> check_params(const CompositeBezierCurve& curve,
                                    const MergeParams& params) {
  std::vector<Violation> out;
  const auto add = [&](std::string constraint, auto&&... parts) {
    std::ostringstream detail;
    (detail << ... << parts);
    out.push_back({std::move(constraint), detail.str()});
  };
  const int m = params.m;
  const int k = params.k;
  const int l = params.l;
  const int n_first = curve.first().degree();
  const int n_last = curve.last().degree();
  const int n_max = curve.max_degree();

  if (m < 1) add("m >= 1", "m = ", m);
  if (m > kMaxDegree) add("m <= max supported degree", "m = ", m, ", max = ", kMaxDegree);
  if (m < n_max) add("m >= max n_i", "m = ", m, ", max n_i = ", n_max);
  if (k < 0) add("k >= 0", "k = ", k);
  if (l < 0) add("l >= 0", "l = ", l);
  if (k > n_first + 1) add("k <= n_1 + 1", "k = ", k, ", n_1 = ", n_first);
  if (l > n_last + 1) add("l <= n_s + 1", "l = ", l, ", n_s = ", n_last);
  if (k + l > m) add("k + l <= m", "k + l = ", k + l, ", m = ", m);
  return out;
}

void validate(const CompositeBezierCurve& curve, const MergeParams& params) {
  const auto violations = check_params(curve, params);
  if (violations.empty()) return;
  std::string msg = "invalid merge parameters:";
  for (const auto& v : violations) msg += "\n  " + v.constraint + " violated (" + v.detail + ")";
  throw Error(ErrorKind::kValidation, msg);
}

std::vector<ControlPoint> constrained_head(const BezierSegment& first, int m, int k,
                                           double width) {
  const BinomialTable& binom = binomials();
  const int n = first.degree();
  const int dim = first.dimension();
  std::vector<ControlPoint> r;
  r.reserve(k);
  double scale = 1.0;  // width^-j
  for (int j = 0; j < k; ++j) {
    const double factor = binom(n, j) / binom(m, j) * scale;
    ControlPoint rj(dim, 0.0);
    // Delta^j p_0 = sum_i (-1)^(j-i) binom(j, i) p_i
    for (int i = 0; i <= j; ++i) {
      const double w = (((j - i) % 2 == 0) ? factor : -factor) * binom(j, i);
      const ControlPoint& p = first.point(i);
      for (int c = 0; c < dim; ++c) rj[c] += w * p[c];
    }
    for (int c = 0; c < dim; ++c) {
      double acc = rj[c];
      for (int h = 0; h < j; ++h) {
        const double sign = ((j + h) % 2 == 0) ? 1.0 : -1.0;
        acc -= sign * binom(j, h) * r[h][c];
      }
      rj[c] = acc;
    }
    r.push_back(std::move(rj));
    scale /= width;
  }
  return r;
}

std::vector<ControlPoint> constrained_tail(const BezierSegment& last, int m, int l,
                                           double width) {
  const BinomialTable& binom = binomials();
  const int n = last.degree();
  const int dim = last.dimension();
  // back[j] holds r_(m-j).
  std::vector<ControlPoint> back;
  back.reserve(l);
  double scale = 1.0;
  for (int j = 0; j < l; ++j) {
    const double sign_j = (j % 2 == 0) ? 1.0 : -1.0;
    const double factor = sign_j * binom(n, j) / binom(m, j) * scale;
    ControlPoint rj(dim, 0.0);
    // Delta^j p_(n-j) = sum_i (-1)^(j-i) binom(j, i) p_(n-j+i)
    for (int i = 0; i <= j; ++i) {
      const double w = (((j - i) % 2 == 0) ? factor : -factor) * binom(j, i);
      const ControlPoint& p = last.point(n - j + i);
      for (int c = 0; c < dim; ++c) rj[c] += w * p[c];
    }
    for (int c = 0; c < dim; ++c) {
      double acc = rj[c];
      for (int h = 1; h <= j; ++h) {
        const double sign = (h % 2 == 0) ? 1.0 : -1.0;
        acc -= sign * binom(j, h) * back[j - h][c];  // r_(m-j+h)
      }
      rj[c] = acc;
    }
    back.push_back(std::move(rj));
    scale /= width;
  }
  std::reverse(back.begin(), back.end());
  return back;
}

SegmentDualCoeffs segment_dual_coeffs(const BezierSegment& seg, int m) {
  const BinomialTable& binom = binomials();
  const int n = seg.degree();
  const int dim = seg.dimension();
  if (m < n) {
    throw Error(ErrorKind::kParameter, "dual coefficients need m >= segment degree");
  }
  const auto row_n = binom.row(n);
  const auto row_m = binom.row(m);
  const auto row_mn = binom.row(m + n);
  std::array<double, 2 * kMaxDegree + 1> inv_mn;
  for (int i = 0; i <= m + n; ++i) inv_mn[i] = 1.0 / row_mn[i];
  SegmentDualCoeffs out{Matrix(dim, m + 1)};
  std::array<double, kMaxDegree + 1> scaled;  // binom(n, q) p_q[c]
  for (int c = 0; c < dim; ++c) {
    for (int q = 0; q <= n; ++q) scaled[q] = row_n[q] * seg.point(q)[c];
    for (int v = 0; v <= m; ++v) {
      double sum = 0.0;
      for (int q = 0; q <= n; ++q) sum += scaled[q] * inv_mn[q + v];
      out.values(c, v) = row_m[v] / (m + n + 1) * sum;
    }
  }
  return out;
}

DualMidCoeffs dual_mid_coeffs(const std::vector<SegmentDualCoeffs>& hat_p, const DTable& d,
                              const std::vector<ControlPoint>& head,
                              const std::vector<ControlPoint>& tail, int m, int k, int l) {
  if (static_cast<int>(head.size()) != k || static_cast<int>(tail.size()) != l) {
    throw Error(ErrorKind::kShape, "head/tail lengths do not match (k, l)");
  }
  if (d.m() != m || d.segments() != static_cast<int>(hat_p.size())) {
    throw Error(ErrorKind::kShape, "d-table does not match degree or segment count");
  }
  const BinomialTable& binom = binomials();
  const Partition& part = d.partition();
  const int dim = hat_p.front().values.rows();
  const int size = m - k - l + 1;

  DualMidCoeffs out{k, Matrix(dim, size)};
  for (int seg = 0; seg < d.segments(); ++seg) {
    const Matrix& p = hat_p[seg].values;
    const double width = part.width(seg);
    for (int h = k; h <= m - l; ++h) {
      for (int c = 0; c < dim; ++c) {
        double inner = 0.0;
        for (int v = 0; v <= m; ++v) inner += p(c, v) * d(seg, h, v);
        out.values(c, h - k) += width * inner;
      }
    }
  }
  const auto row_m = binom.row(m);
  const auto row_2m = binom.row(2 * m);
  for (int h = k; h <= m - l; ++h) {
    const double scale = row_m[h] / (2 * m + 1);
    for (int v = 0; v < k; ++v) {
      const double w = scale * row_m[v] / row_2m[h + v];
      for (int c = 0; c < dim; ++c) out.values(c, h - k) -= w * head[v][c];
    }
    for (int v = m - l + 1; v <= m; ++v) {
      const double w = scale * row_m[v] / row_2m[h + v];
      const ControlPoint& r = tail[v - (m - l + 1)];
      for (int c = 0; c < dim; ++c) out.values(c, h - k) -= w * r[c];
    }
  }
  return out;
}

namespace {

// Appends sum_h hat_r_h c_hj for j = k .. m - l to out.
void append_mid_controls(const DualMidCoeffs& hat_r, const CTable& c,
                         std::vector<ControlPoint>& out) {
  if (hat_r.k != c.k() || hat_r.values.cols() != c.size()) {
    throw Error(ErrorKind::kShape, "dual coefficients do not match the c-table");
  }
  const int dim = hat_r.values.rows();
  const int size = c.size();
  const Matrix& block = c.block();
  Matrix acc(dim, size);
  for (int col = 0; col < dim; ++col) {
    double* __restrict dst = &acc(col, 0);
    for (int h = 0; h < size; ++h) {
      const double coeff = hat_r.values(col, h);
      const double* __restrict src = block.data().data() + static_cast<std::size_t>(h) * size;
      for (int j = 0; j < size; ++j) dst[j] += coeff * src[j];
    }
  }
  for (int j = 0; j < size; ++j) {
    ControlPoint p(dim);
    for (int col = 0; col < dim; ++col) p[col] = acc(col, j);
    out.push_back(std::move(p));
  }
}

}  // namespace

std::vector<ControlPoint> mid_controls(const DualMidCoeffs& hat_r, const CTable& c) {
  std::vector<ControlPoint> out;
  out.reserve(c.size());
  append_mid_controls(hat_r, c, out);
  return out;
}

namespace {

struct EndWidths {
  double first = 1.0;
  double last = 1.0;
};

EndWidths end_widths(const CompositeBezierCurve& curve, const MergeParams& params) {
  if (params.convention == DerivativeConvention::kLocal) return {};
  const Partition& part = curve.partition();
  return {part.width(0), part.width(part.segments() - 1)};
}

MergedCurve merge_validated(const CompositeBezierCurve& curve, const MergeParams& params,
                            const CTable& c, const DTable& d) {
  const int m = params.m;
  const int k = params.k;
  const int l = params.l;
  const EndWidths widths = end_widths(curve, params);
  auto head = constrained_head(curve.first(), m, k, widths.first);
  auto tail = constrained_tail(curve.last(), m, l, widths.last);

  std::vector<SegmentDualCoeffs> hat_p;
  hat_p.reserve(curve.segment_count());
  for (const auto& seg : curve.segments()) hat_p.push_back(segment_dual_coeffs(seg, m));

  const DualMidCoeffs hat_r = dual_mid_coeffs(hat_p, d, head, tail, m, k, l);

  MergedCurve out;
  out.degree = m;
  out.controls.reserve(m + 1);
  for (auto& p : head) out.controls.push_back(std::move(p));
  append_mid_controls(hat_r, c, out.controls);
  for (auto& p : tail) out.controls.push_back(std::move(p));
  return out;
}

}  // namespace

MergedCurve merge(const CompositeBezierCurve& curve, const MergeParams& params) {
  validate(curve, params);
  const CTable c = c_table(params.m, params.k, params.l);
  const DTable d = d_table(params.m, curve.partition());
  return merge_validated(curve, params, c, d);
}

MergedCurve merge(const CompositeBezierCurve& curve, const MergeParams& params,
                  const CTable& c, const DTable& d) {
  validate(curve, params);
  if (c.m() != params.m || c.k() != params.k || c.l() != params.l) {
    throw Error(ErrorKind::kShape, "c-table does not match (m, k, l)");
  }
  if (d.m() != params.m || d.partition().knots() != curve.partition().knots()) {
    throw Error(ErrorKind::kShape, "d-table does not match degree or partition");
  }
  return merge_validated(curve, params, c, d);
}

MergedCurve merge_oracle(const CompositeBezierCurve& curve, const MergeParams& params) {
  validate(curve, params);
  const int m = params.m;
  const int k = params.k;
  const int l = params.l;
  const int dim = curve.dimension();
  const EndWidths widths = end_widths(curve, params);
  const auto head = constrained_head(curve.first(), m, k, widths.first);
  const auto tail = constrained_tail(curve.last(), m, l, widths.last);

  const int size = m - k - l + 1;
  Matrix rhs(size, dim);
  // W = P - (fixed Bernstein terms) has degree <= max(m, n_i) = m on each piece,
  // so the integrand W * B^m_j has degree <= 2m.
  const QuadratureRule rule = gauss_legendre(gauss_nodes_for_degree(2 * m));
  const Partition& part = curve.partition();
  for (int seg = 0; seg < curve.segment_count(); ++seg) {
    const double lo = part.knot(seg);
    const double width = part.width(seg);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double u = rule.nodes[q];
      const double t = lo + width * u;
      ControlPoint w = eval_segment(curve.segment(seg), u);
      for (int v = 0; v < k; ++v) {
        const double b = bernstein_eval(m, v, t);
        for (int c = 0; c < dim; ++c) w[c] -= head[v][c] * b;
      }
      for (int v = m - l + 1; v <= m; ++v) {
        const double b = bernstein_eval(m, v, t);
        for (int c = 0; c < dim; ++c) w[c] -= tail[v - (m - l + 1)][c] * b;
      }
      const double weight = width * rule.weights[q];
      for (int j = k; j <= m - l; ++j) {
        const double b = bernstein_eval(m, j, t);
        for (int c = 0; c < dim; ++c) rhs(j - k, c) += weight * w[c] * b;
      }
    }
  }
  const Matrix x = solve_partial_pivot(gram_matrix(m, k, l), rhs);

  MergedCurve out;
  out.degree = m;
  out.controls = head;
  for (int j = 0; j < size; ++j) {
    ControlPoint p(dim);
    for (int c = 0; c < dim; ++c) p[c] = x(j, c);
    out.controls.push_back(std::move(p));
  }
  out.controls.insert(out.controls.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace bezmerge
