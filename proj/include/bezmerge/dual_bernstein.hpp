#pragma once

#include "bezmerge/matrix.hpp"

namespace bezmerge {

/// Bernstein coefficients c_ij(m, k, l) of the constrained dual Bernstein
/// basis D^(m,k,l)_i = sum_j c_ij B^m_j, for i, j in [k, m - l].
///
/// Indices are the logical ones; entries outside [k, m - l]^2 read as zero.
class CTable {
 public:
  CTable(int m, int k, int l);

  int m() const { return m_; }
  int k() const { return k_; }
  int l() const { return l_; }
  int first() const { return k_; }
  int last() const { return m_ - l_; }
  int size() const { return m_ - k_ - l_ + 1; }

  double operator()(int i, int j) const {
    if (i < k_ || i > m_ - l_ || j < k_ || j > m_ - l_) return 0.0;
    return coeffs_(i - k_, j - k_);
  }

  /// Largest |c_ij|; grows quickly with m and is the conditioning indicator.
  double max_abs() const;

  /// Dense (size x size) block, row/column 0 corresponding to index k.
  const Matrix& block() const { return coeffs_; }

 private:
  friend CTable c_table(int m, int k, int l);
  double& at(int i, int j) { return coeffs_(i - k_, j - k_); }

  int m_;
  int k_;
  int l_;
  Matrix coeffs_;
};

/// Entries of the c-table above this magnitude mean binary64 results carry
/// visible rounding error.
inline constexpr double kCTableWarnMagnitude = 1e12;

/// Throws kParameter unless 0 <= k, 0 <= l, k + l <= m, and kDegreeBound for
/// m above kMaxDegree.
void check_dual_params(int m, int k, int l);

/// Fills the table from the closed-form first row and the three-term
/// recurrence in i, running the upper half of the rows from i = k and the
/// lower half from i = m - l via the reflected (m, l, k) table.
/// O((m - k - l)^2).
CTable c_table(int m, int k, int l);

/// Constrained Bernstein Gram matrix <B^m_j, B^m_h>, j, h in [k, m - l].
/// Row/column 0 corresponds to index k.
Matrix gram_matrix(int m, int k, int l);

/// D^(m,k,l)_i(u). Throws kIndex when i is outside [k, m - l].
double dual_eval(const CTable& table, int i, double u);

}  // namespace bezmerge
