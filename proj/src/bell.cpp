#include "seriesforge/bell.hpp"

namespace seriesforge {

BigInt derangement_count(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  std::vector<BigInt> cycles{BigInt(0)};
  for (unsigned i = 2; i <= n; ++i) cycles.push_back(factorial(i - 1));
  return bell_partial(n, k, CoeffSeq<BigInt>(std::move(cycles)));
}

BigInt assoc_stirling2(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  std::vector<BigInt> blocks(n == 0 ? 1 : n, BigInt(1));
  blocks[0] = BigInt(0);
  return bell_partial(n, k, CoeffSeq<BigInt>(std::move(blocks)));
}

}  // namespace seriesforge
