#pragma once

#include <span>
#include <vector>

namespace bezmerge {

// Largest target degree accepted by the merge pipeline. Binary64 loses the
// dual Gram inverse well before this; see README for conditioning notes.
inline constexpr int kMaxDegree = 32;

// Every binomial used by the formulas has upper index <= 2m + 1.
inline constexpr int kMaxBinomialN = 2 * kMaxDegree + 1;

/// Pascal triangle of binomial coefficients stored as doubles.
/// Entries are exact for n <= 56.
class BinomialTable {
 public:
  explicit BinomialTable(int max_n);

  int max_n() const { return max_n_; }

  /// binom(n, k); zero when k < 0 or k > n. Throws kDegreeBound for n outside
  /// [0, max_n].
  double operator()(int n, int k) const {
    if (n < 0 || n > max_n_) throw_degree_bound(n);
    if (k < 0 || k > n) return 0.0;
    return entries_[offset(n) + k];
  }

  /// binom(n, 0..n).
  std::span<const double> row(int n) const {
    if (n < 0 || n > max_n_) throw_degree_bound(n);
    return {entries_.data() + offset(n), static_cast<std::size_t>(n) + 1};
  }

 private:
  static std::size_t offset(int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }
  [[noreturn]] void throw_degree_bound(int n) const;

  int max_n_;
  std::vector<double> entries_;  // rows packed back to back
};

/// Process-wide table sized for kMaxBinomialN, built on first use.
const BinomialTable& binomials();

inline double binomial(int n, int k) { return binomials()(n, k); }

}  // namespace bezmerge
