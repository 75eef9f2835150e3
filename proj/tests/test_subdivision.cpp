#include <cmath>
#include <vector>

#include "bezmerge/binomial.hpp"
#include "bezmerge/dual_bernstein.hpp"
#include "bezmerge/error.hpp"
#include "bezmerge/subdivision.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bezmerge;

namespace {

// max over all entries of |d_table - d_direct|.
double worst_vs_direct(const DTable& d) {
  double worst = 0.0;
  const Partition& part = d.partition();
  for (int i = 0; i < d.segments(); ++i) {
    for (int j = 0; j <= d.m(); ++j) {
      for (int h = 0; h <= d.m(); ++h) {
        const double ref = d_direct(d.m(), j, h, part.knot(i), part.knot(i + 1));
        worst = std::max(worst, std::abs(d(i, j, h) - ref));
      }
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("d_table: the whole interval gives the identity") {
  for (int m : {1, 4, 9, 20}) {
    const DTable d = d_table(m, Partition({0.0, 1.0}));
    for (int j = 0; j <= m; ++j) {
      for (int h = 0; h <= m; ++h) CHECK(d(0, j, h) == doctest::Approx(j == h ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("d_table: boundary columns are Bernstein values at the knots") {
  const DTable d = d_table(3, Partition({0.0, 0.5, 1.0}));
  for (int j = 0; j <= 3; ++j) {
    CHECK(d(0, j, 0) == doctest::Approx(j == 0 ? 1.0 : 0.0).epsilon(1e-15));
    CHECK(d(0, j, 3) == doctest::Approx(bernstein_eval(3, j, 0.5)).epsilon(1e-15));
    CHECK(d(1, j, 0) == doctest::Approx(bernstein_eval(3, j, 0.5)).epsilon(1e-15));
    CHECK(d(1, j, 3) == doctest::Approx(j == 3 ? 1.0 : 0.0).epsilon(1e-15));
  }
  oracle::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = rng.integer(1, 24);
    const Partition part = rng.partition(rng.integer(1, 6));
    const DTable dt = d_table(m, part);
    for (int i = 0; i < part.segments(); ++i) {
      for (int j = 0; j <= m; ++j) {
        REQUIRE(std::abs(dt(i, j, 0) - bernstein_eval(m, j, part.knot(i))) <= 1e-10);
        REQUIRE(std::abs(dt(i, j, m) - bernstein_eval(m, j, part.knot(i + 1))) <= 1e-10);
      }
    }
  }
}

TEST_CASE("d_direct: hand values") {
  CHECK(d_direct(2, 1, 1, 0.0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  for (int m : {1, 5, 12}) {
    for (int j = 0; j <= m; ++j) {
      for (int h = 0; h <= m; ++h) CHECK(d_direct(m, j, h, 0.0, 1.0) == (j == h ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("d_direct equals the biorthogonal projection integral") {
  // d_jh = integral over [0, 1] of B^m_j(u width + t_lo) D^m_h(u).
  oracle::Rng rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = rng.integer(1, 12);
    const double lo = rng.uniform(0.0, 0.8);
    const double hi = rng.uniform(lo + 0.05, 1.0);
    const CTable c = c_table(m, 0, 0);
    for (int j = 0; j <= m; ++j) {
      for (int h = 0; h <= m; ++h) {
        const double integral = oracle::integrate(
            [&](double u) {
              return bernstein_eval(m, j, lo + u * (hi - lo)) * dual_eval(c, h, u);
            },
            0.0, 1.0, 2 * m);
        INFO("m = " << m << ", j = " << j << ", h = " << h);
        REQUIRE(std::abs(d_direct(m, j, h, lo, hi) - integral) <= 1e-9);
      }
    }
  }
}

TEST_CASE("d_table agrees with d_direct on the three-knot example") {
  const DTable d = d_table(10, Partition({0.0, 0.45, 0.76, 1.0}));
  CHECK(worst_vs_direct(d) <= 1e-9);
}

TEST_CASE("d_table agrees with d_direct on random partitions") {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int s = rng.integer(1, 6);
    const int m = rng.integer(1, 14);
    const Partition part = rng.partition(s, 0.01);
    INFO("s = " << s << ", m = " << m);
    REQUIRE(worst_vs_direct(d_table(m, part)) <= 1e-9);
  }
  // Degree bound, including narrow segments.
  for (int trial = 0; trial < 6; ++trial) {
    REQUIRE(worst_vs_direct(d_table(kMaxDegree, rng.partition(6, 0.002))) <= 1e-9);
  }
}

TEST_CASE("d_table: column sums are one and entries are nonnegative") {
  oracle::Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = rng.integer(1, kMaxDegree);
    const Partition part = rng.partition(rng.integer(1, 6), 0.01);
    const DTable d = d_table(m, part);
    for (int i = 0; i < part.segments(); ++i) {
      for (int h = 0; h <= m; ++h) {
        double sum = 0.0;
        for (int j = 0; j <= m; ++j) {
          REQUIRE(d(i, j, h) >= -1e-12);
          sum += d(i, j, h);
        }
        REQUIRE(std::abs(sum - 1.0) <= 1e-10);
      }
    }
  }
}

TEST_CASE("d_table: local expansion reproduces B^m_j on a 33-point grid") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = rng.integer(1, 20);
    const Partition part = rng.partition(rng.integer(1, 6));
    const DTable d = d_table(m, part);
    for (int i = 0; i < part.segments(); ++i) {
      for (int j = 0; j <= m; ++j) {
        for (int q = 0; q <= 32; ++q) {
          const double u = q / 32.0;
          double local = 0.0;
          for (int h = 0; h <= m; ++h) local += d(i, j, h) * bernstein_eval(m, h, u);
          const double global = bernstein_eval(m, j, part.knot(i) + u * part.width(i));
          REQUIRE(std::abs(local - global) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("d_table: a global polynomial re-expressed per segment keeps its values") {
  oracle::Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = rng.integer(1, 16);
    const Partition part = rng.partition(rng.integer(1, 6));
    const DTable d = d_table(m, part);
    std::vector<double> r(m + 1);
    for (auto& x : r) x = rng.uniform(-1.0, 1.0);
    for (int i = 0; i < part.segments(); ++i) {
      std::vector<double> local(m + 1, 0.0);
      for (int h = 0; h <= m; ++h) {
        for (int j = 0; j <= m; ++j) local[h] += r[j] * d(i, j, h);
      }
      for (int q = 0; q <= 16; ++q) {
        const double u = q / 16.0;
        const double t = part.knot(i) + u * part.width(i);
        REQUIRE(std::abs(de_casteljau(local, u) - de_casteljau(r, t)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("d_table: row recurrence matches on wide segments") {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = rng.integer(1, 8);
    const Partition part = rng.partition(rng.integer(1, 3), 0.25);
    const DTable row = d_table(m, part, DTableScheme::kRowRecurrence);
    INFO("m = " << m);
    REQUIRE(worst_vs_direct(row) <= 1e-9);
  }
}

TEST_CASE("d_table: row recurrence falls back to the direct sum when the seed underflows") {
  const double lo = 1.0 - 1e-10;
  const Partition part({0.0, lo, 1.0});
  const DTable row = d_table(kMaxDegree, part, DTableScheme::kRowRecurrence);
  for (int j = 0; j <= kMaxDegree; ++j) {
    for (int h = 0; h <= kMaxDegree; ++h) {
      REQUIRE(row(1, j, h) == d_direct(kMaxDegree, j, h, lo, 1.0));
    }
  }
  CHECK(row(1, kMaxDegree, kMaxDegree) == doctest::Approx(1.0));
}

TEST_CASE("d_table: degree outside [1, bound] is rejected") {
  const Partition part = Partition::uniform(2);
  for (int m : {0, kMaxDegree + 1}) {
    try {
      (void)d_table(m, part);
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kDegreeBound);
    }
  }
}
