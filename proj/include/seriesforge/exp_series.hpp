#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seriesforge/bell.hpp"
#include "seriesforge/bigint.hpp"
#include "seriesforge/ring.hpp"

namespace seriesforge {

/// Truncated exponential generating function sum_{n=0}^{N} c_n t^n / n!.
template <CommutativeRing R>
class ExpSeries {
 public:
  ExpSeries() : c_(1, ring_zero<R>()) {}
  /// The zero series of the given order.
  explicit ExpSeries(std::size_t order) : c_(order + 1, ring_zero<R>()) {}
  /// Coefficients c_0..c_N.
  explicit ExpSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("ExpSeries needs at least the constant term");
  }

  static ExpSeries from_tail(const R& constant, const CoeffSeq<R>& tail) {
    std::vector<R> c{constant};
    c.insert(c.end(), tail.values().begin(), tail.values().end());
    return ExpSeries(std::move(c));
  }
  static ExpSeries constant(const R& value, std::size_t order) {
    ExpSeries s(order);
    s.c_[0] = value;
    return s;
  }
  static ExpSeries one(std::size_t order) { return constant(ring_one<R>(), order); }
  /// The series t.
  static ExpSeries identity(std::size_t order) {
    ExpSeries s(order);
    if (order >= 1) s.c_[1] = ring_one<R>();
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const R& coeff(std::size_t n) const {
    if (n > order()) {
      throw std::out_of_range("ExpSeries coefficient " + std::to_string(n) + " beyond order " +
                              std::to_string(order()));
    }
    return c_[n];
  }
  const R& constant_term() const { return c_[0]; }
  std::span<const R> coefficients() const { return c_; }
  /// (c_1, ..., c_N) as a Bell-group coordinate sequence.
  CoeffSeq<R> tail() const { return CoeffSeq<R>(std::vector<R>(c_.begin() + 1, c_.end())); }

  ExpSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return ExpSeries(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  friend ExpSeries operator+(const ExpSeries& a, const ExpSeries& b) {
    return zip(a, b, [](const R& x, const R& y) { return x + y; });
  }
  friend ExpSeries operator-(const ExpSeries& a, const ExpSeries& b) {
    return zip(a, b, [](const R& x, const R& y) { return x - y; });
  }
  friend ExpSeries operator-(const ExpSeries& a) {
    std::vector<R> out;
    out.reserve(a.c_.size());
    for (const auto& x : a.c_) out.push_back(-x);
    return ExpSeries(std::move(out));
  }
  friend ExpSeries operator*(const R& s, const ExpSeries& a) {
    std::vector<R> out;
    out.reserve(a.c_.size());
    for (const auto& x : a.c_) out.push_back(s * x);
    return ExpSeries(std::move(out));
  }

  /// Same order and identical coefficients.
  friend bool operator==(const ExpSeries&, const ExpSeries&) = default;

 private:
  template <typename Op>
  static ExpSeries zip(const ExpSeries& a, const ExpSeries& b, Op op) {
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(op(a.c_[i], b.c_[i]));
    return ExpSeries(std::move(out));
  }

  std::vector<R> c_;
};

enum class SeriesMatch {
  equal,                  // same order, same coefficients
  overlap_equal_orders_differ,
  different,              // some coefficient in the common window differs
};

/// Compares coefficient-wise up to the smaller order, reporting an order
/// mismatch separately from a coefficient mismatch.
template <CommutativeRing R>
SeriesMatch compare(const ExpSeries<R>& a, const ExpSeries<R>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i) {
    if (!(a.coeff(i) == b.coeff(i))) return SeriesMatch::different;
  }
  return a.order() == b.order() ? SeriesMatch::equal : SeriesMatch::overlap_equal_orders_differ;
}

/// Binomial convolution: (fg)_n = sum_i C(n,i) f_i g_{n-i}.
template <CommutativeRing R>
ExpSeries<R> mul(const ExpSeries<R>& f, const ExpSeries<R>& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<R> out(order + 1, ring_zero<R>());
  for (std::size_t n = 0; n <= order; ++n) {
    R acc = ring_zero<R>();
    for (std::size_t i = 0; i <= n; ++i) {
      if (is_zero(f.coeff(i)) || is_zero(g.coeff(n - i))) continue;
      acc = acc + embed<R>(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i))) * f.coeff(i) *
                      g.coeff(n - i);
    }
    out[n] = std::move(acc);
  }
  return ExpSeries<R>(std::move(out));
}

/// 1/f; throws std::domain_error unless c_0 is a unit.
template <CommutativeRing R>
ExpSeries<R> reciprocal(const ExpSeries<R>& f) {
  auto inv0 = ring_traits<R>::try_inverse(f.constant_term());
  if (!inv0) throw std::domain_error("reciprocal: constant term is not a unit");
  std::vector<R> g{*inv0};
  for (std::size_t n = 1; n <= f.order(); ++n) {
    R acc = ring_zero<R>();
    for (std::size_t i = 1; i <= n; ++i) {
      if (is_zero(f.coeff(i))) continue;
      acc = acc + embed<R>(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i))) * f.coeff(i) *
                      g[n - i];
    }
    g.push_back(-(*inv0 * acc));
  }
  return ExpSeries<R>(std::move(g));
}

/// f^k; negative k goes through the reciprocal.
template <CommutativeRing R>
ExpSeries<R> pow(const ExpSeries<R>& f, int k) {
  ExpSeries<R> base = k < 0 ? reciprocal(f) : f;
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  ExpSeries<R> result = ExpSeries<R>::one(f.order());
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

/// Antiderivative with zero constant term; c_n moves to t^{n+1}/(n+1)!, so the
/// order grows by one.
template <CommutativeRing R>
ExpSeries<R> integrate(const ExpSeries<R>& f) {
  std::vector<R> out{ring_zero<R>()};
  out.insert(out.end(), f.coefficients().begin(), f.coefficients().end());
  return ExpSeries<R>(std::move(out));
}

/// Formal derivative; the order drops by one (order 0 gives the zero series).
template <CommutativeRing R>
ExpSeries<R> derivative(const ExpSeries<R>& f) {
  if (f.order() == 0) return ExpSeries<R>(0);
  return ExpSeries<R>(std::vector<R>(f.coefficients().begin() + 1, f.coefficients().end()));
}

/// f(g(t)). Requires g(0) = 0; the order is min(f.order, g.order).
template <CommutativeRing R>
ExpSeries<R> compose(const ExpSeries<R>& f, const ExpSeries<R>& g) {
  if (!is_zero(g.constant_term())) {
    throw std::domain_error("compose: inner series has a nonzero constant term");
  }
  const std::size_t order = std::min(f.order(), g.order());
  if (order == 0) return ExpSeries<R>::constant(f.constant_term(), 0);
  return ExpSeries<R>::from_tail(f.constant_term(),
                                 bell_product(f.tail().truncated(order), g.tail().truncated(order)));
}

enum class InversionMethod { recursive, closed_form };

/// Compositional inverse. Requires c_0 = 0 and c_1 a unit.
template <CommutativeRing R>
ExpSeries<R> invert(const ExpSeries<R>& f, InversionMethod method = InversionMethod::recursive) {
  if (!is_zero(f.constant_term())) throw std::domain_error("invert: nonzero constant term");
  if (f.order() == 0) throw std::invalid_argument("invert: series of order 0");
  auto tail = f.tail();
  auto inv = method == InversionMethod::recursive ? bell_inverse_recursive(tail) : bell_inverse_closed(tail);
  return ExpSeries<R>::from_tail(ring_zero<R>(), inv);
}

enum class NamedSeries { exp_minus_one, log1p, neg_log_one_minus, one_minus_exp_neg, identity };

/// Accepts the names used on the command line; throws std::invalid_argument otherwise.
NamedSeries parse_named_series(std::string_view name);
std::string_view to_string(NamedSeries name);

/// e^t - 1, log(1+t), -log(1-t), 1 - e^{-t} or t, to the given order.
template <CommutativeRing R = BigRational>
ExpSeries<R> make_named(NamedSeries name, std::size_t order) {
  if (order < 1) throw std::invalid_argument("make_named: order must be >= 1");
  std::vector<R> c(order + 1, ring_zero<R>());
  for (std::size_t n = 1; n <= order; ++n) {
    const bool odd = n % 2 == 1;
    const BigInt fact = factorial(static_cast<unsigned>(n - 1));
    switch (name) {
      case NamedSeries::exp_minus_one: c[n] = ring_one<R>(); break;
      case NamedSeries::log1p: c[n] = embed<R>(odd ? fact : -fact); break;
      case NamedSeries::neg_log_one_minus: c[n] = embed<R>(fact); break;
      case NamedSeries::one_minus_exp_neg: c[n] = embed<R>(BigInt(odd ? 1 : -1)); break;
      case NamedSeries::identity: c[n] = n == 1 ? ring_one<R>() : ring_zero<R>(); break;
    }
  }
  return ExpSeries<R>(std::move(c));
}

}  // namespace seriesforge
