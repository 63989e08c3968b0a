#pragma once

// Partial Bell polynomials and the Bell group: the product of coefficient
// sequences that mirrors composition of exponential generating functions,
// together with two independent routes to the group inverse.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seriesforge/bigint.hpp"
#include "seriesforge/ring.hpp"

namespace seriesforge {

/// Truncated coefficient sequence (v_1, ..., v_N), 1-based. N is the order.
template <CommutativeRing R>
class CoeffSeq {
 public:
  CoeffSeq() = default;
  explicit CoeffSeq(std::vector<R> values) : v_(std::move(values)) {}
  CoeffSeq(std::initializer_list<R> values) : v_(values) {}

  /// The group identity (1, 0, 0, ...).
  static CoeffSeq identity(std::size_t order) {
    std::vector<R> v(order, ring_zero<R>());
    if (order > 0) v[0] = ring_one<R>();
    return CoeffSeq(std::move(v));
  }

  std::size_t order() const { return v_.size(); }

  /// v_n for 1 <= n <= order().
  const R& operator[](std::size_t n) const {
    if (n == 0 || n > v_.size()) {
      throw std::out_of_range("CoeffSeq index " + std::to_string(n) + " outside 1.." +
                              std::to_string(v_.size()));
    }
    return v_[n - 1];
  }

  std::span<const R> values() const { return v_; }

  CoeffSeq truncated(std::size_t order) const {
    return CoeffSeq(std::vector<R>(v_.begin(), v_.begin() + std::min(order, v_.size())));
  }

  friend CoeffSeq operator+(const CoeffSeq& a, const CoeffSeq& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(a.v_[i] + b.v_[i]);
    return CoeffSeq(std::move(out));
  }

  friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;

 private:
  std::vector<R> v_;
};

/// Triangle of partial Bell polynomials B_{n,k}(x) for 0 <= k <= n <= max_n,
/// filled row by row with
///   B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}.
/// Row n depends on x_n only through B_{n,1} = x_n, which lets callers grow
/// the triangle while x_n is still unknown (see replace_last).
template <CommutativeRing R>
class BellTriangle {
 public:
  BellTriangle() : rows_{{ring_one<R>()}} {}

  /// Rows 0..max_n over x_i = values[i-1], with x_i = 0 past the end of values.
  BellTriangle(std::span<const R> values, std::size_t max_n) : BellTriangle() {
    for (std::size_t n = 1; n <= max_n; ++n) {
      push(n <= values.size() ? values[n - 1] : ring_zero<R>());
    }
  }

  std::size_t max_n() const { return rows_.size() - 1; }

  /// Appends x_{max_n+1} and computes its row.
  void push(const R& x_next) {
    x_.push_back(x_next);
    const std::size_t n = x_.size();
    std::vector<R> weights;
    weights.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
      weights.push_back(embed<R>(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(i - 1))));
    }
    std::vector<R> row(n + 1, ring_zero<R>());
    for (std::size_t k = 1; k <= n; ++k) {
      R acc = ring_zero<R>();
      for (std::size_t i = 1; i + k <= n + 1; ++i) {
        const R& xi = x_[i - 1];
        const R& prev = rows_[n - i][k - 1];
        if (is_zero(xi) || is_zero(prev)) continue;
        acc = acc + weights[i - 1] * xi * prev;
      }
      row[k] = std::move(acc);
    }
    rows_.push_back(std::move(row));
  }

  /// Overwrites the most recent x_n; only B_{n,1} in the last row depends on it.
  void replace_last(const R& x_n) {
    if (x_.empty()) throw std::logic_error("BellTriangle::replace_last on empty triangle");
    x_.back() = x_n;
    rows_.back()[1] = x_n;
  }

  /// B_{n,k}; zero when k > n.
  const R& at(std::size_t n, std::size_t k) const {
    if (n > max_n()) {
      throw std::out_of_range("BellTriangle row " + std::to_string(n) + " not computed");
    }
    return k <= n ? rows_[n][k] : zero_;
  }

 private:
  std::vector<R> x_;
  std::vector<std::vector<R>> rows_;
  R zero_ = ring_zero<R>();
};

/// B_{n,k}(x_1, ..., x_{n-k+1}). B_{0,0} = 1, B_{n,0} = 0 for n > 0, and zero for k > n.
template <CommutativeRing R>
R bell_partial(std::size_t n, std::size_t k, const CoeffSeq<R>& x) {
  if (k > n) return ring_zero<R>();
  if (k == 0) return n == 0 ? ring_one<R>() : ring_zero<R>();
  if (x.order() < n - k + 1) {
    throw std::invalid_argument("bell_partial: B_" + std::to_string(n) + "," + std::to_string(k) +
                                " needs " + std::to_string(n - k + 1) + " coefficients, got " +
                                std::to_string(x.order()));
  }
  return BellTriangle<R>(x.values(), n).at(n, k);
}

/// (x o y)_n = sum_{k=1}^n x_k B_{n,k}(y), truncated at min(orders).
template <CommutativeRing R>
CoeffSeq<R> bell_product(const CoeffSeq<R>& x, const CoeffSeq<R>& y) {
  const std::size_t order = std::min(x.order(), y.order());
  BellTriangle<R> table(y.values(), order);
  std::vector<R> out;
  out.reserve(order);
  for (std::size_t n = 1; n <= order; ++n) {
    R acc = ring_zero<R>();
    for (std::size_t k = 1; k <= n; ++k) {
      if (is_zero(x[k])) continue;
      acc = acc + x[k] * table.at(n, k);
    }
    out.push_back(std::move(acc));
  }
  return CoeffSeq<R>(std::move(out));
}

namespace detail {

template <CommutativeRing R>
R leading_inverse(const CoeffSeq<R>& x, const char* who) {
  if (x.order() == 0) throw std::invalid_argument(std::string(who) + ": empty sequence");
  auto inv = ring_traits<R>::try_inverse(x[1]);
  if (!inv) throw std::domain_error(std::string(who) + ": leading coefficient is not a unit");
  return *inv;
}

}  // namespace detail

/// Inverse by recursion on already-computed coordinates:
///   y_1 = 1/x_1,  y_n = -(1/x_1) sum_{k=2}^n x_k B_{n,k}(y).
/// Throws std::domain_error when x_1 is not a unit of the ring.
template <CommutativeRing R>
CoeffSeq<R> bell_inverse_recursive(const CoeffSeq<R>& x) {
  const R inv1 = detail::leading_inverse(x, "bell_inverse_recursive");
  const std::size_t order = x.order();
  std::vector<R> y{inv1};
  BellTriangle<R> table;
  table.push(inv1);
  for (std::size_t n = 2; n <= order; ++n) {
    table.push(ring_zero<R>());
    R acc = ring_zero<R>();
    for (std::size_t k = 2; k <= n; ++k) {
      if (is_zero(x[k])) continue;
      acc = acc + x[k] * table.at(n, k);
    }
    R yn = -(inv1 * acc);
    table.replace_last(yn);
    y.push_back(std::move(yn));
  }
  return CoeffSeq<R>(std::move(y));
}

/// Closed-form inverse:
///   y_1 = 1/x_1,  y_n = sum_{k=1}^{n-1} (-1)^k x_1^{-(n+k)} B_{n+k-1,k}(0, x_2, x_3, ...).
/// Needs x_1 to be a unit; over integer rings that means x_1 = +-1.
template <CommutativeRing R>
CoeffSeq<R> bell_inverse_closed(const CoeffSeq<R>& x) {
  const R inv1 = detail::leading_inverse(x, "bell_inverse_closed");
  const std::size_t order = x.order();
  std::vector<R> shifted(x.values().begin(), x.values().end());
  shifted[0] = ring_zero<R>();
  const std::size_t max_row = order >= 2 ? 2 * order - 2 : 0;
  BellTriangle<R> table(shifted, max_row);

  std::vector<R> inv_pow{ring_one<R>()};
  for (std::size_t p = 1; p <= 2 * order; ++p) inv_pow.push_back(inv_pow.back() * inv1);

  std::vector<R> y{inv1};
  for (std::size_t n = 2; n <= order; ++n) {
    R acc = ring_zero<R>();
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      const R& b = table.at(n + k - 1, k);
      if (is_zero(b)) continue;
      R term = inv_pow[n + k] * b;
      acc = (k % 2 == 1) ? acc - term : acc + term;
    }
    y.push_back(std::move(acc));
  }
  return CoeffSeq<R>(std::move(y));
}

/// !n_k: fixed-point-free permutations of n elements with k cycles,
/// B_{n,k}(0, 1!, 2!, 3!, ...).
BigInt derangement_count(unsigned n, unsigned k);

/// b(n,k): set partitions of n elements into k blocks of size >= 2,
/// B_{n,k}(0, 1, 1, 1, ...).
BigInt assoc_stirling2(unsigned n, unsigned k);

}  // namespace seriesforge
