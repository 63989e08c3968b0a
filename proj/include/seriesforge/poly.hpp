#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seriesforge/ring.hpp"

namespace seriesforge {

/// Dense univariate polynomial c_0 + c_1 v + ... + c_d v^d. The highest
/// stored coefficient is nonzero; the zero polynomial stores nothing.
template <CommutativeRing C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const C& value) { return Poly(std::vector<C>{value}); }
  static Poly variable() { return Poly(std::vector<C>{ring_zero<C>(), ring_one<C>()}); }
  static Poly monomial(const C& coeff, std::size_t degree) {
    std::vector<C> c(degree + 1, ring_zero<C>());
    c[degree] = coeff;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of v^k; zero beyond the degree.
  C coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : ring_zero<C>(); }
  C operator[](std::size_t k) const { return coefficient(k); }
  std::span<const C> coefficients() const { return c_; }

  /// Horner evaluation.
  C eval_at(const C& point) const {
    C acc = ring_zero<C>();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * point + *it;
    return acc;
  }

  /// p(v) -> p(v^power).
  Poly substitute(unsigned power) const {
    if (power == 0) throw std::invalid_argument("substitute: power must be >= 1");
    if (is_zero()) return {};
    std::vector<C> out(static_cast<std::size_t>(degree()) * power + 1, ring_zero<C>());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k * power] = c_[k];
    return Poly(std::move(out));
  }

  /// p(v) -> p(v + a).
  Poly shift(const C& a) const {
    // Horner in the ring of polynomials: acc = acc * (v + a) + c_k.
    Poly acc;
    const Poly lin{a, ring_one<C>()};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly::constant(*it);
    return acc;
  }

  /// p(v) / v; throws std::domain_error if the constant term is nonzero.
  Poly divide_by_variable() const {
    if (is_zero()) return {};
    if (!seriesforge::is_zero(c_[0])) {
      throw std::domain_error("divide_by_variable: nonzero constant term");
    }
    return Poly(std::vector<C>(c_.begin() + 1, c_.end()));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_zero<C>());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    std::vector<C> out;
    out.reserve(a.c_.size());
    for (const auto& x : a.c_) out.push_back(-x);
    return Poly(std::move(out));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, ring_zero<C>());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (seriesforge::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(const C& s, const Poly& p) { return Poly::constant(s) * p; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form in ascending powers, e.g. "t + 2t^2 + 2t^3".
  std::string to_string(std::string_view var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (seriesforge::is_zero(c_[k])) continue;
      std::ostringstream coeff;
      coeff << c_[k];
      std::string text = coeff.str();
      bool negative = !text.empty() && text.front() == '-';
      if (negative) text.erase(0, 1);
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << text;
        continue;
      }
      if (text != "1") os << text;
      os << var;
      if (k > 1) os << '^' << k;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && seriesforge::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

template <CommutativeRing C>
struct ring_traits<Poly<C>> {
  static Poly<C> zero() { return {}; }
  static Poly<C> one() { return Poly<C>::constant(ring_one<C>()); }
  static Poly<C> from_integer(const BigInt& n) { return Poly<C>::constant(embed<C>(n)); }
  static std::optional<Poly<C>> try_inverse(const Poly<C>& a) {
    if (a.degree() != 0) return std::nullopt;
    auto inv = ring_traits<C>::try_inverse(a.coefficient(0));
    if (!inv) return std::nullopt;
    return Poly<C>::constant(*inv);
  }
};

/// Univariate polynomial with integer coefficients (in m or in t).
using PolyVar = Poly<BigInt>;
/// Univariate polynomial with rational coefficients.
using RatPoly = Poly<BigRational>;

inline RatPoly to_rational(const PolyVar& p) {
  std::vector<BigRational> out(p.coefficients().begin(), p.coefficients().end());
  return RatPoly(std::move(out));
}

/// Returns std::nullopt when some coefficient is not an integer.
inline std::optional<PolyVar> to_integer(const RatPoly& p) {
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (!c.is_integer()) return std::nullopt;
    out.push_back(c.numerator());
  }
  return PolyVar(std::move(out));
}

}  // namespace seriesforge
