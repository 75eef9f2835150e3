#include "bezmerge/dual_bernstein.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <string>

#include "bezmerge/binomial.hpp"
#include "bezmerge/curve.hpp"
#include "bezmerge/error.hpp"

namespace bezmerge {

CTable::CTable(int m, int k, int l)
    : m_(m), k_(k), l_(l), coeffs_(m - k - l + 1, m - k - l + 1) {}

double CTable::max_abs() const {
  double best = 0.0;
  for (double x : coeffs_.data()) best = std::max(best, std::abs(x));
  return best;
}

void check_dual_params(int m, int k, int l) {
  if (m > kMaxDegree) {
    throw Error(ErrorKind::kDegreeBound, "degree " + std::to_string(m) +
                                             " exceeds supported maximum " +
                                             std::to_string(kMaxDegree));
  }
  if (k < 0 || l < 0 || k + l > m) {
    throw Error(ErrorKind::kParameter, "invalid (m, k, l) = (" + std::to_string(m) + ", " +
                                           std::to_string(k) + ", " + std::to_string(l) +
                                           "): need k, l >= 0 and k + l <= m");
  }
}

namespace {

using Row = std::array<double, kMaxDegree + 3>;  // one zero pad on each side

// Emits the upper triangle (bj >= bi) of rows 0 .. rows-1 (block indices) of
// the (m, k, l) table: the closed-form start row, then the three-term
// recurrence in i. Row bi stops at column col_limit - bi. a_coef and b_coef
// hold A(u) and B(u) for u = k .. m - l.
template <class Put>
void recurrence_rows(int m, int k, int l, int rows, int col_limit, const double* a_coef,
                     const double* b_coef, Put&& put) {
  const BinomialTable& binom = binomials();
  const int last = m - l - k;  // block index of m - l
  Row buf[3] = {};
  double* prev = buf[0].data() + 1;
  double* row = buf[1].data() + 1;
  double* next = buf[2].data() + 1;

  const double lead = (2 * k + 1) / binom(m, k) * binom(m + k - l + 1, 2 * k + 1);
  for (int bj = 0; bj <= std::min(last, col_limit); ++bj) {
    const int j = bj + k;
    const double sign = (bj % 2 == 0) ? 1.0 : -1.0;
    row[bj] = sign * lead / binom(m, j) * binom(m - k - l, bj) * binom(m + k + l + 1, k + j + 1);
    put(0, bj, row[bj]);
  }

  for (int bi = 0; bi + 1 < rows; ++bi) {
    const int i = bi + k;
    assert(a_coef[bi] != 0.0);  // i < m and i >= k keep every factor nonzero
    const double inv_a = 1.0 / a_coef[bi];
    const double b_i = b_coef[bi];
    const int end = std::min(last, col_limit - bi - 1);
    for (int bj = bi + 1; bj <= end; ++bj) {
      const int j = bj + k;
      const double value = 2.0 * (i - j) * (i + j - m) * row[bj] + b_coef[bj] * row[bj - 1] +
                           a_coef[bj] * row[bj + 1] - b_i * prev[bj];
      next[bj] = value * inv_a;
      put(bi + 1, bj, next[bj]);
    }
    double* spare = prev;
    prev = row;
    row = next;
    next = spare;
  }
}

}  // namespace

CTable c_table(int m, int k, int l) {
  check_dual_params(m, k, l);
  CTable table(m, k, l);
  Matrix& c = table.coeffs_;
  const int last = m - l - k;

  // A(u) and B(u) for u in [k, m - l]. The reflected (m, l, k) recurrence
  // uses A'(u) = B(m - u) and B'(u) = A(m - u), i.e. the same arrays reversed.
  std::array<double, kMaxDegree + 1> a_fwd, b_fwd, a_rev, b_rev;
  for (int bu = 0; bu <= last; ++bu) {
    const int u = bu + k;
    a_fwd[bu] = static_cast<double>(u - m) * (u - k + 1) * (u + k + 1) / (u + 1);
    b_fwd[bu] = static_cast<double>(u) * (u - m - l - 1) * (u - m + l - 1) / (u - m - 1);
  }
  for (int bu = 0; bu <= last; ++bu) {
    a_rev[bu] = b_fwd[last - bu];
    b_rev[bu] = a_fwd[last - bu];
  }

  // Rounding grows with every recurrence step, so entries with min(bi, bj)
  // <= last/2 come from the (m, k, l) recurrence and the rest from the
  // (m, l, k) one through c_ij(m, k, l) = c_(m-i, m-j)(m, l, k). Both runs
  // fill the upper triangle and mirror it.
  const int top_rows = last / 2 + 1;
  recurrence_rows(m, k, l, top_rows, 2 * last, a_fwd.data(), b_fwd.data(),
                  [&](int bi, int bj, double v) { c(bi, bj) = c(bj, bi) = v; });
  const int bottom_rows = last + 1 - top_rows;
  if (bottom_rows > 0) {
    // Row bi needs columns up to 2 * bottom_rows - 2 - bi to feed later rows.
    recurrence_rows(m, l, k, bottom_rows, 2 * bottom_rows - 2, a_rev.data(), b_rev.data(),
                    [&](int bi, int bj, double v) {
                      if (bj < bottom_rows) c(last - bi, last - bj) = c(last - bj, last - bi) = v;
                    });
  }
  return table;
}

Matrix gram_matrix(int m, int k, int l) {
  check_dual_params(m, k, l);
  const BinomialTable& binom = binomials();
  const int n = m - k - l + 1;
  Matrix g(n, n);
  for (int j = k; j <= m - l; ++j) {
    for (int h = k; h <= m - l; ++h) {
      g(j - k, h - k) = binom(m, j) * binom(m, h) / binom(2 * m, j + h) / (2 * m + 1);
    }
  }
  return g;
}

double dual_eval(const CTable& table, int i, double u) {
  if (i < table.first() || i > table.last()) {
    throw Error(ErrorKind::kIndex, "dual basis index " + std::to_string(i) + " outside [" +
                                       std::to_string(table.first()) + ", " +
                                       std::to_string(table.last()) + "]");
  }
  double sum = 0.0;
  for (int j = table.first(); j <= table.last(); ++j) {
    sum += table(i, j) * bernstein_eval(table.m(), j, u);
  }
  return sum;
}

}  // namespace bezmerge
