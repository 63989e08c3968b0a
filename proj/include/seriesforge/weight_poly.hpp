#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "seriesforge/bigint.hpp"
#include "seriesforge/ring.hpp"

namespace seriesforge {

/// Index of the indeterminate x_{c,k}: color c >= 1, out-degree k >= 2.
struct ColorDegree {
  int color = 1;
  int degree = 2;

  /// Throws std::invalid_argument when color < 1 or degree < 2.
  static ColorDegree make(int color, int degree);

  friend auto operator<=>(const ColorDegree&, const ColorDegree&) = default;
};

/// Product of x_{c,k}^e, kept sorted by (color, degree) with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<ColorDegree, unsigned>;

  Monomial() = default;
  static Monomial variable(ColorDegree v, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  /// sum of e * (k - 1): the number of leaves beyond one that the vertices add.
  unsigned degree_mass() const;
  /// "x_{1,2}^2*x_{2,2}", or "1" for the empty monomial.
  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Sparse polynomial in the x_{c,k} with integer coefficients; zero
/// coefficients are never stored.
class WeightPoly {
 public:
  WeightPoly() = default;
  WeightPoly(const BigInt& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  WeightPoly(T constant) : WeightPoly(BigInt(constant)) {}  // NOLINT(google-explicit-constructor)

  static WeightPoly variable(ColorDegree v);
  static WeightPoly term(const BigInt& coeff, Monomial monomial);

  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<BigInt> constant_value() const;
  BigInt coefficient(const Monomial& m) const;

  /// Evaluates with x_{c,k} := value(ColorDegree{c,k}).
  BigInt evaluate(const std::function<BigInt(ColorDegree)>& value) const;

  /// Terms in canonical order, e.g. "x_{1,3} + 6*x_{1,2}*x_{2,2}".
  std::string to_string() const;

  WeightPoly& operator+=(const WeightPoly& o);
  WeightPoly& operator-=(const WeightPoly& o);
  friend WeightPoly operator+(WeightPoly a, const WeightPoly& b) { return a += b; }
  friend WeightPoly operator-(WeightPoly a, const WeightPoly& b) { return a -= b; }
  friend WeightPoly operator-(const WeightPoly& a);
  friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b);
  friend bool operator==(const WeightPoly&, const WeightPoly&) = default;

  friend std::ostream& operator<<(std::ostream& os, const WeightPoly& p) { return os << p.to_string(); }

 private:
  void add_term(const Monomial& m, const BigInt& c);
  std::map<Monomial, BigInt> terms_;
};

/// Shorthand for WeightPoly::variable(ColorDegree::make(color, degree)).
WeightPoly weight_var(int color, int degree);

/// [{"coeff": c, "monomial": [[color, degree, exponent], ...]}, ...] with the
/// monomials in canonical order.
nlohmann::json to_json(const WeightPoly& p);
WeightPoly weight_poly_from_json(const nlohmann::json& j);

template <>
struct ring_traits<WeightPoly> {
  static WeightPoly zero() { return {}; }
  static WeightPoly one() { return WeightPoly(BigInt(1)); }
  static WeightPoly from_integer(const BigInt& n) { return WeightPoly(n); }
  static std::optional<WeightPoly> try_inverse(const WeightPoly& a) {
    auto c = a.constant_value();
    if (!c) return std::nullopt;
    if (*c == BigInt(1) || *c == BigInt(-1)) return a;
    return std::nullopt;
  }
};

}  // namespace seriesforge
