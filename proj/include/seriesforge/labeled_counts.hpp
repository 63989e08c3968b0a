#pragma once

#include <cstddef>
#include <vector>

#include "seriesforge/bigint.hpp"
#include "seriesforge/exp_series.hpp"
#include "seriesforge/poly.hpp"
#include "seriesforge/weight_poly.hpp"

namespace seriesforge {

/// How the coefficients x_{c,n} (n >= 2) of a degree function are assigned.
enum class DegreeKind {
  symbolic,   // the indeterminate x_{c,n}
  all_ones,   // 1, giving e^t - 1
  factorial,  // (n-1)!, giving -log(1-t)
  custom,     // explicit integers x_{c,2}, x_{c,3}, ...; zero past the end
};

struct ColorAssignment {
  DegreeKind kind = DegreeKind::symbolic;
  std::vector<BigInt> values;  // custom only, starting at n = 2
};

/// Degree functions x_c(t) = t + sum_{n>=2} x_{c,n} t^n/n! for colors 1..m.
class DegreeSpec {
 public:
  explicit DegreeSpec(std::vector<ColorAssignment> colors);
  /// The same kind for all m colors.
  static DegreeSpec uniform(unsigned m, DegreeKind kind);

  unsigned colors() const { return static_cast<unsigned>(colors_.size()); }
  /// x_{c,n}; 1 when n = 1.
  WeightPoly coefficient(unsigned color, std::size_t n) const;
  ExpSeries<WeightPoly> degree_function(unsigned color, std::size_t order) const;

 private:
  std::vector<ColorAssignment> colors_;
};

/// P(m,t,x) as the inverse of t + sum_c (x_c^{<-1>}(t) - t).
ExpSeries<WeightPoly> p_series(const DegreeSpec& spec, std::size_t order);
/// The same series through the root-color recursion on forests whose roots
/// avoid a given color.
ExpSeries<WeightPoly> p_series_by_color_recursion(const DegreeSpec& spec, std::size_t order);
/// [t^s/s!] P(m,t,x) from the closed Bell-polynomial form.
WeightPoly p_closed_form(const DegreeSpec& spec, std::size_t s);

/// a_s(m), the number of m-partite labeled series-reduced trees with s leaves
/// (equivalently symbolic ultrametrics), as a polynomial in m.
PolyVar a_polynomial(unsigned s);
BigInt count_ultrametrics(unsigned s, unsigned m);
/// Leaves colored too; m when s = 1.
BigInt count_fully_colored_labeled(unsigned s, unsigned m);
/// A(m,t) = (t(1-m) + m log(1+t))^{<-1>} with constant term 0.
ExpSeries<BigRational> ultrametric_series(unsigned m, std::size_t order);
/// Checks 1 + A = 1 + (1 + A)^m * integral of (1 + A)^{-m} through t^order.
bool verify_integral_relation(unsigned m, std::size_t order);

/// g_s(m), labeled m-partite mobiles, as a polynomial in m.
PolyVar g_polynomial(unsigned s);
BigInt count_mobiles(unsigned s, unsigned m);
/// G(m,t) = (t(1-m) - m e^{-t} + m)^{<-1>}.
ExpSeries<BigRational> mobile_series(unsigned m, std::size_t order);

/// y_1(m), ..., y_{max_s}(m) for chain-increasing binary trees.
std::vector<PolyVar> chain_increasing_polynomials(unsigned max_s);
PolyVar chain_increasing_polynomial(unsigned s);
BigInt chain_increasing_count(unsigned s, unsigned m);
/// sum_s y_s(m) t^s/s!; m = 0 is allowed.
ExpSeries<BigRational> chain_increasing_series(unsigned m, std::size_t order);
/// Increasingly labeled processes with s actions, y_s(2).
BigInt count_processes(unsigned s);

}  // namespace seriesforge
