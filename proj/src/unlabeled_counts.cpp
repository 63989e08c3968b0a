#include "seriesforge/unlabeled_counts.hpp"

#include <stdexcept>
#include <string>

#include "seriesforge/bell.hpp"

namespace seriesforge {

namespace {

void require_positive(unsigned value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

}  // namespace

std::vector<RefinedPoly> refined_polys(unsigned up_to_s) {
  require_positive(up_to_s, "s");
  std::vector<RatPoly> known{RatPoly{}, RatPoly{BigRational(1)}};  // 1-based
  std::vector<RefinedPoly> out{RefinedPoly{1, PolyVar{1}}};
  for (unsigned s = 2; s <= up_to_s; ++s) {
    // v_n = n! sum_{d | n, n/d != s} (1/d) refined_{n/d}(t^d)
    std::vector<RatPoly> v;
    for (unsigned n = 1; n <= s; ++n) {
      RatPoly acc;
      for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0 || n / d == s) continue;
        acc += BigRational(BigInt(1), BigInt(d)) * known[n / d].substitute(d);
      }
      v.push_back(BigRational(factorial(n)) * acc);
    }
    BellTriangle<RatPoly> bell(v, s);
    RatPoly sum;
    for (unsigned j = 1; j <= s; ++j) sum += bell.at(s, j);
    RatPoly next = RatPoly::monomial(BigRational(BigInt(1), factorial(s)), 1) * sum;
    auto integral = to_integer(next);
    if (!integral) {
      throw std::logic_error("refined polynomial for s = " + std::to_string(s) + " is not integral");
    }
    known.push_back(std::move(next));
    out.push_back(RefinedPoly{s, std::move(*integral)});
  }
  return out;
}

BigInt unlabeled_count(unsigned s) { return refined_polys(s).back().poly.eval_at(BigInt(1)); }

PolyVar multipartite_unlabeled_polynomial(unsigned s) { return multipartite_unlabeled_polynomial(refined_polys(s).back()); }

PolyVar multipartite_unlabeled_polynomial(const RefinedPoly& refined) {
  if (refined.leaves == 1) return PolyVar{1};
  const PolyVar q = refined.poly.divide_by_variable();
  return PolyVar::variable() * q.shift(BigInt(-1));
}

BigInt multipartite_unlabeled(unsigned s, unsigned m) {
  require_positive(m, "m");
  return multipartite_unlabeled_polynomial(s).eval_at(BigInt(m));
}

BigInt fully_colored_unlabeled(unsigned s, unsigned m) {
  require_positive(m, "m");
  return fully_colored_unlabeled(refined_polys(s).back(), m);
}

BigInt fully_colored_unlabeled(const RefinedPoly& refined, unsigned m) {
  require_positive(m, "m");
  if (refined.leaves == 1) return BigInt(m);
  const BigInt m1 = BigInt(m) - BigInt(1);
  return BigInt(m) * pow(m1, refined.leaves - 1) * refined.poly.eval_at(m1);
}

}  // namespace seriesforge
