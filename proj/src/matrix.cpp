#include "bezmerge/matrix.hpp"

#include <cmath>
#include <utility>

#include "bezmerge/error.hpp"

namespace bezmerge {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::kShape, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix solve_partial_pivot(Matrix a, Matrix b) {
  const int n = a.rows();
  if (a.cols() != n || b.rows() != n) {
    throw Error(ErrorKind::kShape, "solve_partial_pivot needs square A and matching B");
  }
  const int nrhs = b.cols();
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (a(pivot, col) == 0.0) throw Error(ErrorKind::kInternal, "singular linear system");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      for (int c = 0; c < nrhs; ++c) std::swap(b(col, c), b(pivot, c));
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      for (int c = 0; c < nrhs; ++c) b(r, c) -= f * b(col, c);
    }
  }
  Matrix x(n, nrhs);
  for (int c = 0; c < nrhs; ++c) {
    for (int r = n - 1; r >= 0; --r) {
      double s = b(r, c);
      for (int q = r + 1; q < n; ++q) s -= a(r, q) * x(q, c);
      x(r, c) = s / a(r, r);
    }
  }
  return x;
}

}  // namespace bezmerge
