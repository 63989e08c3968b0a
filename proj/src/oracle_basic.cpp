#include <cstdint>
#include <functional>
#include <algorithm>
#include <numeric>
#include <vector>

#include "seriesforge/oracle.hpp"

namespace seriesforge::oracle {

namespace {

// All alpha = (alpha_1..alpha_len) with sum alpha_i = k and sum i*alpha_i = n.
void visit_alpha(unsigned n, unsigned k, unsigned len, unsigned index, std::vector<unsigned>& alpha,
                 const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (index > len) {
    if (n == 0 && k == 0) visit(alpha);
    return;
  }
  for (unsigned a = 0; a * index <= n && a <= k; ++a) {
    alpha[index - 1] = a;
    visit_alpha(n - a * index, k - a, len, index + 1, alpha, visit);
  }
  alpha[index - 1] = 0;
}

}  // namespace

BigRational bell_partial_by_definition(unsigned n, unsigned k, std::span<const BigRational> x) {
  if (n == 0 && k == 0) return BigRational(1);
  if (k == 0 || k > n) return BigRational(0);
  const unsigned len = n - k + 1;
  if (x.size() < len) throw std::invalid_argument("bell_partial_by_definition: too few values");
  BigRational total(0);
  std::vector<unsigned> alpha(len, 0);
  visit_alpha(n, k, len, 1, alpha, [&](const std::vector<unsigned>& a) {
    BigRational term(factorial(n));
    for (unsigned i = 1; i <= len; ++i) {
      if (a[i - 1] == 0) continue;
      term = term / BigRational(factorial(a[i - 1]));
      BigRational base = x[i - 1] / BigRational(factorial(i));
      for (unsigned e = 0; e < a[i - 1]; ++e) term = term * base;
    }
    total += term;
  });
  return total;
}

BigInt count_set_partitions(unsigned n, unsigned k, unsigned min_block) {
  if (n > 10) throw EnumerationBoundError("count_set_partitions: n > 10");
  if (n == 0) return BigInt(k == 0 ? 1 : 0);
  // Restricted growth strings: block[0] = 0, block[i] <= 1 + max(block[0..i-1]).
  std::vector<unsigned> block(n, 0);
  std::uint64_t count = 0;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned used) {
    if (i == n) {
      if (used != k) return;
      std::vector<unsigned> sizes(used, 0);
      for (unsigned b : block) ++sizes[b];
      if (std::all_of(sizes.begin(), sizes.end(), [&](unsigned s) { return s >= min_block; })) ++count;
      return;
    }
    for (unsigned b = 0; b <= used && b < k; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(1, 1);
  return BigInt(count);
}

BigInt count_permutations_by_cycles(unsigned n, unsigned k, bool fixed_point_free) {
  if (n > 9) throw EnumerationBoundError("count_permutations_by_cycles: n > 9");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t count = 0;
  do {
    std::vector<bool> seen(n, false);
    unsigned cycles = 0;
    bool has_fixed = false;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      if (perm[i] == i) has_fixed = true;
      for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    if (cycles == k && !(fixed_point_free && has_fixed)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return BigInt(count);
}

}  // namespace seriesforge::oracle
