#pragma once

#include <string>
#include <vector>

#include "bezmerge/curve.hpp"
#include "bezmerge/dual_bernstein.hpp"
#include "bezmerge/matrix.hpp"
#include "bezmerge/subdivision.hpp"

namespace bezmerge {

/// Which parameter the endpoint derivative constraints refer to.
enum class DerivativeConvention {
  /// Derivatives of the first/last segment in their own [0, 1] parameter.
  /// This is what the closed-form head/tail formulas compute as written.
  kLocal,
  /// Derivatives of the composite curve in the global parameter t; the j-th
  /// difference of an end segment is scaled by width^-j.
  kGlobal,
};

const char* to_string(DerivativeConvention convention);
DerivativeConvention parse_convention(const std::string& name);

struct MergeParams {
  int m = 0;  ///< target degree
  int k = 0;  ///< derivatives matched at t = 0 (orders 0..k-1)
  int l = 0;  ///< derivatives matched at t = 1 (orders 0..l-1)
  DerivativeConvention convention = DerivativeConvention::kLocal;
};

struct MergedCurve {
  int degree = 0;
  std::vector<ControlPoint> controls;  ///< r_0 .. r_m

  BezierSegment as_segment() const { return BezierSegment(controls); }
};

/// Dual-basis coefficients of the free middle block: values(c, h - k).
struct DualMidCoeffs {
  int k = 0;
  Matrix values;
};

/// Coefficients of one segment in the degree-m dual basis: values(c, v).
struct SegmentDualCoeffs {
  Matrix values;
};

struct Violation {
  std::string constraint;  ///< e.g. "m >= max n_i"
  std::string detail;      ///< offending values
};

/// Empty when params are admissible for curve.
std::vector<Violation> check_params(const CompositeBezierCurve& curve, const MergeParams& params);

/// Throws kValidation listing every violated inequality.
void validate(const CompositeBezierCurve& curve, const MergeParams& params);

/// r_0 .. r_(k-1). width scales differences for the global convention; pass
/// 1 for the local reading.
std::vector<ControlPoint> constrained_head(const BezierSegment& first, int m, int k,
                                           double width = 1.0);

/// r_(m-l+1) .. r_m in ascending index order.
std::vector<ControlPoint> constrained_tail(const BezierSegment& last, int m, int l,
                                           double width = 1.0);

/// Coefficients of seg in the dual basis of degree m (m >= seg.degree()).
SegmentDualCoeffs segment_dual_coeffs(const BezierSegment& seg, int m);

DualMidCoeffs dual_mid_coeffs(const std::vector<SegmentDualCoeffs>& hat_p, const DTable& d,
                              const std::vector<ControlPoint>& head,
                              const std::vector<ControlPoint>& tail, int m, int k, int l);

/// r_k .. r_(m-l) from the dual coefficients.
std::vector<ControlPoint> mid_controls(const DualMidCoeffs& hat_r, const CTable& c);

/// Least-squares merge of all segments into one degree-m Bezier curve under
/// the endpoint constraints. O(s m^2).
MergedCurve merge(const CompositeBezierCurve& curve, const MergeParams& params);

/// Same as merge but reuses prebuilt tables (they must match params and the
/// curve's partition).
MergedCurve merge(const CompositeBezierCurve& curve, const MergeParams& params,
                  const CTable& c, const DTable& d);

/// Independent reference: same constraint rows, free block from the normal
/// equations with quadrature right-hand sides. Test scale only (m <= 14).
MergedCurve merge_oracle(const CompositeBezierCurve& curve, const MergeParams& params);

}  // namespace bezmerge
