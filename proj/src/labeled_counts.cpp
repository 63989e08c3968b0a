#include "seriesforge/labeled_counts.hpp"

#include <stdexcept>
#include <string>

#include "seriesforge/bell.hpp"

namespace seriesforge {

namespace {

void require_positive(unsigned value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

// Sum over k of (-m)^k * count(s+k-1, k), times (-1)^{s-1}, as a polynomial in m.
template <typename Count>
PolyVar alternating_bell_sum(unsigned s, Count count) {
  std::vector<BigInt> c(s + 1, BigInt(0));
  for (unsigned k = 0; k <= s; ++k) {
    BigInt v = count(s + k - 1, k);
    c[k] = (s - 1 + k) % 2 == 0 ? v : -v;
  }
  return PolyVar(std::move(c));
}

ExpSeries<BigRational> invert_rational(std::vector<BigRational> coeffs) {
  return invert(ExpSeries<BigRational>(std::move(coeffs)));
}

}  // namespace

DegreeSpec::DegreeSpec(std::vector<ColorAssignment> colors) : colors_(std::move(colors)) {
  if (colors_.empty()) throw std::invalid_argument("DegreeSpec needs at least one color");
}

DegreeSpec DegreeSpec::uniform(unsigned m, DegreeKind kind) {
  require_positive(m, "number of colors");
  if (kind == DegreeKind::custom) throw std::invalid_argument("uniform: custom needs explicit values");
  return DegreeSpec(std::vector<ColorAssignment>(m, ColorAssignment{kind, {}}));
}

WeightPoly DegreeSpec::coefficient(unsigned color, std::size_t n) const {
  if (color < 1 || color > colors()) throw std::out_of_range("color " + std::to_string(color) + " out of range");
  if (n == 0) return WeightPoly(0);
  if (n == 1) return WeightPoly(1);
  const auto& a = colors_[color - 1];
  switch (a.kind) {
    case DegreeKind::symbolic: return weight_var(static_cast<int>(color), static_cast<int>(n));
    case DegreeKind::all_ones: return WeightPoly(1);
    case DegreeKind::factorial: return WeightPoly(factorial(static_cast<unsigned>(n - 1)));
    case DegreeKind::custom: return n - 2 < a.values.size() ? WeightPoly(a.values[n - 2]) : WeightPoly(0);
  }
  return WeightPoly(0);
}

ExpSeries<WeightPoly> DegreeSpec::degree_function(unsigned color, std::size_t order) const {
  std::vector<WeightPoly> c{WeightPoly(0)};
  for (std::size_t n = 1; n <= order; ++n) c.push_back(coefficient(color, n));
  return ExpSeries<WeightPoly>(std::move(c));
}

ExpSeries<WeightPoly> p_series(const DegreeSpec& spec, std::size_t order) {
  require_positive(static_cast<unsigned>(order), "order");
  const auto t = ExpSeries<WeightPoly>::identity(order);
  auto z = t;
  for (unsigned c = 1; c <= spec.colors(); ++c) z = z + (invert(spec.degree_function(c, order)) - t);
  return invert(z);
}

ExpSeries<WeightPoly> p_series_by_color_recursion(const DegreeSpec& spec, std::size_t order) {
  require_positive(static_cast<unsigned>(order), "order");
  const unsigned m = spec.colors();
  // total[j] = P_j; rooted[c][j] = P_j restricted to root color c.
  std::vector<WeightPoly> total(order + 1, WeightPoly(0));
  std::vector<std::vector<WeightPoly>> rooted(m + 1, std::vector<WeightPoly>(order + 1, WeightPoly(0)));
  total[1] = WeightPoly(1);
  for (std::size_t s = 2; s <= order; ++s) {
    for (unsigned c = 1; c <= m; ++c) {
      // Children of a color-c root are leaves or trees rooted in another color.
      std::vector<WeightPoly> forest;
      for (std::size_t j = 1; j < s; ++j) forest.push_back(total[j] - rooted[c][j]);
      BellTriangle<WeightPoly> bell(forest, s);
      WeightPoly acc(0);
      for (std::size_t k = 2; k <= s; ++k) {
        const auto& b = bell.at(s, k);
        if (b.is_zero()) continue;
        acc += spec.coefficient(c, k) * b;
      }
      rooted[c][s] = acc;
      total[s] += acc;
    }
  }
  return ExpSeries<WeightPoly>(std::move(total));
}

WeightPoly p_closed_form(const DegreeSpec& spec, std::size_t s) {
  require_positive(static_cast<unsigned>(s), "s");
  // (0, z_2, ..., z_s) with z_j = sum_c [t^j/j!] x_c^{<-1>}.
  std::vector<WeightPoly> z(s, WeightPoly(0));
  for (unsigned c = 1; c <= spec.colors(); ++c) {
    auto inv = bell_inverse_closed(spec.degree_function(c, s).tail());
    for (std::size_t j = 2; j <= s; ++j) z[j - 1] += inv[j];
  }
  BellTriangle<WeightPoly> bell(z, 2 * s - 1);
  WeightPoly out(0);
  for (std::size_t k = 0; k <= s; ++k) {
    const auto& b = bell.at(s + k - 1, k);
    if (k % 2 == 0) out += b;
    else out -= b;
  }
  return out;
}

PolyVar a_polynomial(unsigned s) {
  require_positive(s, "s");
  return alternating_bell_sum(s, [](unsigned n, unsigned k) { return derangement_count(n, k); });
}

BigInt count_ultrametrics(unsigned s, unsigned m) {
  require_positive(m, "m");
  return a_polynomial(s).eval_at(BigInt(m));
}

BigInt count_fully_colored_labeled(unsigned s, unsigned m) {
  require_positive(s, "s");
  require_positive(m, "m");
  if (s == 1) return BigInt(m);
  return pow(BigInt(m) - BigInt(1), s) * count_ultrametrics(s, m);
}

ExpSeries<BigRational> ultrametric_series(unsigned m, std::size_t order) {
  require_positive(m, "m");
  auto log1p = make_named(NamedSeries::log1p, order);
  std::vector<BigRational> c(log1p.coefficients().begin(), log1p.coefficients().end());
  for (std::size_t n = 2; n <= order; ++n) c[n] = BigRational(m) * c[n];
  return invert_rational(std::move(c));
}

bool verify_integral_relation(unsigned m, std::size_t order) {
  require_positive(m, "m");
  std::vector<BigRational> c{BigRational(1)};
  for (unsigned s = 1; s <= order; ++s) c.push_back(BigRational(count_ultrametrics(s, m)));
  const ExpSeries<BigRational> calA(std::move(c));
  const int power = static_cast<int>(m);
  const auto rhs = ExpSeries<BigRational>::one(order) +
                   mul(pow(calA, power), integrate(pow(calA, -power)).truncated(order));
  return compare(calA, rhs) == SeriesMatch::equal;
}

PolyVar g_polynomial(unsigned s) {
  require_positive(s, "s");
  return alternating_bell_sum(s, [](unsigned n, unsigned k) { return assoc_stirling2(n, k); });
}

BigInt count_mobiles(unsigned s, unsigned m) {
  require_positive(m, "m");
  return g_polynomial(s).eval_at(BigInt(m));
}

ExpSeries<BigRational> mobile_series(unsigned m, std::size_t order) {
  require_positive(m, "m");
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<BigRational> c(order + 1, BigRational(0));
  c[1] = BigRational(1);
  for (std::size_t n = 2; n <= order; ++n) c[n] = BigRational(n % 2 == 0 ? -BigInt(m) : BigInt(m));
  return invert_rational(std::move(c));
}

std::vector<PolyVar> chain_increasing_polynomials(unsigned max_s) {
  require_positive(max_s, "s");
  const PolyVar m = PolyVar::variable();
  std::vector<PolyVar> y{PolyVar{1}};
  for (unsigned s = 2; s <= max_s; ++s) {
    // B_{s,2} only reads y_1..y_{s-1}.
    BellTriangle<PolyVar> bell(y, s);
    y.push_back(y.back() + m * bell.at(s, 2));
  }
  return y;
}

PolyVar chain_increasing_polynomial(unsigned s) { return chain_increasing_polynomials(s).back(); }

BigInt chain_increasing_count(unsigned s, unsigned m) { return chain_increasing_polynomial(s).eval_at(BigInt(m)); }

ExpSeries<BigRational> chain_increasing_series(unsigned m, std::size_t order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<BigRational> c{BigRational(0)};
  for (const auto& y : chain_increasing_polynomials(static_cast<unsigned>(order)))
    c.push_back(BigRational(y.eval_at(BigInt(m))));
  return ExpSeries<BigRational>(std::move(c));
}

BigInt count_processes(unsigned s) { return chain_increasing_count(s, 2); }

}  // namespace seriesforge
