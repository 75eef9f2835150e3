#include "bezmerge/binomial.hpp"

#include <string>

#include "bezmerge/error.hpp"

namespace bezmerge {

BinomialTable::BinomialTable(int max_n) : max_n_(max_n) {
  if (max_n < 0) {
    throw Error(ErrorKind::kDegreeBound, "binomial table size must be >= 0");
  }
  entries_.assign(offset(max_n + 1), 1.0);
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k < n; ++k) {
      entries_[offset(n) + k] = entries_[offset(n - 1) + k - 1] + entries_[offset(n - 1) + k];
    }
  }
}

void BinomialTable::throw_degree_bound(int n) const {
  throw Error(ErrorKind::kDegreeBound, "binomial upper index " + std::to_string(n) +
                                           " outside supported range [0, " +
                                           std::to_string(max_n_) + "]");
}

const BinomialTable& binomials() {
  static const BinomialTable table(kMaxBinomialN);
  return table;
}

}  // namespace bezmerge
