#include <cstdint>
#include <array>
#include <vector>

#include "seriesforge/oracle.hpp"

namespace seriesforge::oracle {

namespace {

std::size_t pair_index(unsigned s, unsigned x, unsigned y) {
  if (x > y) std::swap(x, y);
  // Row-major over pairs (1,2), (1,3), ..., (1,s), (2,3), ...
  std::size_t before = 0;
  for (unsigned i = 1; i < x; ++i) before += s - i;
  return before + (y - x - 1);
}

}  // namespace

UltraMap::UltraMap(unsigned s, std::vector<int> pair_values) : s_(s), values_(std::move(pair_values)) {
  if (values_.size() != static_cast<std::size_t>(s) * (s - (s > 0 ? 1 : 0)) / 2) {
    throw std::invalid_argument("UltraMap: expected C(s,2) pair values");
  }
}

int UltraMap::operator()(unsigned x, unsigned y) const {
  if (x == y || x < 1 || y < 1 || x > s_ || y > s_) {
    throw std::out_of_range("UltraMap: pair must be two distinct points of 1..s");
  }
  return values_[pair_index(s_, x, y)];
}

bool UltraMap::is_symbolic_ultrametric() const {
  const auto& D = *this;
  for (unsigned x = 1; x <= s_; ++x) {
    for (unsigned y = x + 1; y <= s_; ++y) {
      for (unsigned z = y + 1; z <= s_; ++z) {
        const int a = D(x, y), b = D(x, z), c = D(y, z);
        if (a != b && a != c && b != c) return false;
      }
    }
  }
  for (unsigned a = 1; a <= s_; ++a) {
    for (unsigned b = 1; b <= s_; ++b) {
      for (unsigned c = 1; c <= s_; ++c) {
        for (unsigned d = 1; d <= s_; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          const int path = D(a, b);
          const int other = D(b, d);
          if (D(b, c) == path && D(c, d) == path && path != other && D(d, a) == other && D(a, c) == other) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

BigInt enum_ultrametrics(unsigned s, unsigned m) {
  if (s < 1 || s > 5) throw EnumerationBoundError("enum_ultrametrics: s must be in 1..5");
  if (m < 1 || m > 3) throw EnumerationBoundError("enum_ultrametrics: m must be in 1..3");
  const std::size_t pairs = static_cast<std::size_t>(s) * (s - 1) / 2;
  std::vector<int> values(pairs, 1);
  std::uint64_t count = 0;
  while (true) {
    if (UltraMap(s, values).is_symbolic_ultrametric()) ++count;
    // Odometer over {1..m}^pairs.
    std::size_t i = 0;
    while (i < pairs && values[i] == static_cast<int>(m)) values[i++] = 1;
    if (i == pairs) break;
    ++values[i];
  }
  return BigInt(count);
}

}  // namespace seriesforge::oracle
