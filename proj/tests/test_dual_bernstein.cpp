#include <cmath>

#include "bezmerge/dual_bernstein.hpp"
#include "bezmerge/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bezmerge;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternal;
}

}  // namespace

TEST_CASE("c_table: 1x1 table for (2, 1, 1)") {
  const CTable c = c_table(2, 1, 1);
  REQUIRE(c.size() == 1);
  CHECK(c.first() == 1);
  CHECK(c.last() == 1);
  CHECK(c(1, 1) == doctest::Approx(7.5).epsilon(1e-15));
  // Inverse of <B^2_1, B^2_1> = 2/15.
  CHECK(oracle::to_double(oracle::gram_inverse(2, 1, 1)[0][0]) == 7.5);
}

TEST_CASE("c_table: full linear dual basis") {
  const CTable c = c_table(1, 0, 0);
  CHECK(c(0, 0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(c(0, 1) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(c(1, 0) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(c(1, 1) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("c_table: reads outside [k, m - l] give zero") {
  const CTable c = c_table(6, 2, 1);
  CHECK(c(1, 3) == 0.0);
  CHECK(c(3, 6) == 0.0);
  CHECK(c(-1, -1) == 0.0);
  CHECK(c.size() == 4);
  CHECK(c.block().rows() == 4);
}

TEST_CASE("c_table times gram_matrix is the identity for (10, 3, 2)") {
  const CTable c = c_table(10, 3, 2);
  const Matrix prod = c.block() * gram_matrix(10, 3, 2);
  for (int i = 0; i < prod.rows(); ++i) {
    for (int j = 0; j < prod.cols(); ++j) {
      CHECK(std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-8);
    }
  }
}

TEST_CASE("gram_matrix: small cases from direct integration") {
  const Matrix g = gram_matrix(1, 0, 0);
  CHECK(g(0, 0) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(g(0, 1) == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(g(1, 1) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  const Matrix g2 = gram_matrix(2, 1, 1);
  REQUIRE(g2.rows() == 1);
  CHECK(g2(0, 0) == doctest::Approx(2.0 / 15).epsilon(1e-15));
}

TEST_CASE("gram_matrix: unconstrained rows sum to 1 / (m + 1)") {
  for (int m = 0; m <= 20; ++m) {
    const Matrix g = gram_matrix(m, 0, 0);
    for (int j = 0; j <= m; ++j) {
      double sum = 0.0;
      for (int h = 0; h <= m; ++h) sum += g(j, h);
      REQUIRE(sum == doctest::Approx(1.0 / (m + 1)).epsilon(1e-14));
    }
  }
}

TEST_CASE("gram_matrix: entries match exact fractions") {
  for (int m : {3, 9, 14}) {
    const Matrix g = gram_matrix(m, 1, 2);
    for (int j = 0; j < g.rows(); ++j) {
      for (int h = 0; h < g.cols(); ++h) {
        const double exact = oracle::to_double(oracle::gram_entry(m, j + 1, h + 1));
        REQUIRE(g(j, h) == doctest::Approx(exact).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("dual_eval: hand values") {
  const CTable c1 = c_table(1, 0, 0);
  CHECK(dual_eval(c1, 0, 0.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(dual_eval(c1, 0, 1.0) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(dual_eval(c_table(2, 1, 1), 1, 0.5) == doctest::Approx(3.75).epsilon(1e-15));
  CHECK(kind_of([&] { dual_eval(c1, 2, 0.5); }) == ErrorKind::kIndex);
  CHECK(kind_of([&] { dual_eval(c_table(4, 1, 1), 0, 0.5); }) == ErrorKind::kIndex);
}

TEST_CASE("c_table: parameter errors") {
  CHECK(kind_of([] { c_table(33, 0, 0); }) == ErrorKind::kDegreeBound);
  CHECK(kind_of([] { c_table(5, 3, 3); }) == ErrorKind::kParameter);
  CHECK(kind_of([] { c_table(5, -1, 0); }) == ErrorKind::kParameter);
  CHECK(kind_of([] { gram_matrix(5, 0, -2); }) == ErrorKind::kParameter);
}

TEST_CASE("c_table equals the exact Gram inverse for m <= 14") {
  for (int m = 0; m <= 14; ++m) {
    for (int k = 0; k <= m; ++k) {
      for (int l = 0; k + l <= m; ++l) {
        const CTable c = c_table(m, k, l);
        const auto exact = oracle::gram_inverse(m, k, l);
        for (int i = k; i <= m - l; ++i) {
          for (int j = k; j <= m - l; ++j) {
            const double e = oracle::to_double(exact[i - k][j - k]);
            INFO("(m, k, l) = (" << m << ", " << k << ", " << l << "), c_" << i << j);
            REQUIRE(oracle::close(c(i, j), e, 1e-7));
          }
        }
      }
    }
  }
}

TEST_CASE("c_table: symmetric and reflection identity") {
  for (int m = 1; m <= 14; ++m) {
    for (int k = 0; k <= m; ++k) {
      for (int l = 0; k + l <= m; ++l) {
        const CTable c = c_table(m, k, l);
        const CTable r = c_table(m, l, k);
        const double floor = 1e-13 * c.max_abs();
        for (int i = k; i <= m - l; ++i) {
          for (int j = k; j <= m - l; ++j) {
            REQUIRE(oracle::close(c(i, j), c(j, i), 1e-9, floor));
            REQUIRE(oracle::close(c(i, j), r(m - i, m - j), 1e-9, floor));
          }
        }
      }
    }
  }
}

TEST_CASE("dual basis: biorthogonality by quadrature for m <= 14") {
  for (int m = 0; m <= 14; ++m) {
    const int nodes = (2 * m + 2) / 2 + 1;  // ceil((2m + 1) / 2) + 1
    const auto rule = gauss_legendre(nodes);
    for (int k = 0; k <= m; ++k) {
      for (int l = 0; k + l <= m; ++l) {
        const CTable c = c_table(m, k, l);
        for (int i = k; i <= m - l; ++i) {
          for (int j = k; j <= m - l; ++j) {
            double integral = 0.0;
            for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
              integral += rule.weights[q] * dual_eval(c, i, rule.nodes[q]) *
                          bernstein_eval(m, j, rule.nodes[q]);
            }
            INFO("(m, k, l) = (" << m << ", " << k << ", " << l << "), i = " << i
                                 << ", j = " << j);
            REQUIRE(std::abs(integral - (i == j ? 1.0 : 0.0)) <= 1e-8);
          }
        }
      }
    }
  }
}

TEST_CASE("c_table: k + l = m leaves a single coefficient 1 / <B_k, B_k>") {
  for (int m = 1; m <= 20; ++m) {
    for (int k = 0; k <= m; ++k) {
      const CTable c = c_table(m, k, m - k);
      REQUIRE(c.size() == 1);
      const double g = gram_matrix(m, k, m - k)(0, 0);
      REQUIRE(oracle::close(c(k, k), 1.0 / g, 1e-12));
    }
  }
}

TEST_CASE("c_table: magnitude grows with m") {
  double prev = 0.0;
  for (int m = 1; m <= 32; ++m) {
    const double mag = c_table(m, 0, 0).max_abs();
    CHECK(mag > prev);
    prev = mag;
  }
  CHECK(c_table(32, 0, 0).max_abs() > kCTableWarnMagnitude);
  CHECK(c_table(10, 0, 0).max_abs() < kCTableWarnMagnitude);
}
