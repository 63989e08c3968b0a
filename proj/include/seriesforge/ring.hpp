#pragma once

#include <concepts>
#include <optional>

#include "seriesforge/bigint.hpp"

namespace seriesforge {

// Specialize with zero(), one(), from_integer(const BigInt&) and
// try_inverse(const R&), which returns the multiplicative inverse of a unit
// and std::nullopt otherwise.
template <typename R>
struct ring_traits;

/// Exact commutative ring with unit-inversion. Every series and Bell routine
/// is generic over this.
template <typename R>
concept CommutativeRing = std::regular<R> && requires(const R& a, const R& b, const BigInt& n) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { ring_traits<R>::zero() } -> std::same_as<R>;
  { ring_traits<R>::one() } -> std::same_as<R>;
  { ring_traits<R>::from_integer(n) } -> std::same_as<R>;
  { ring_traits<R>::try_inverse(a) } -> std::same_as<std::optional<R>>;
};

template <>
struct ring_traits<BigInt> {
  static BigInt zero() { return BigInt(0); }
  static BigInt one() { return BigInt(1); }
  static BigInt from_integer(const BigInt& n) { return n; }
  static std::optional<BigInt> try_inverse(const BigInt& a) {
    if (a == BigInt(1) || a == BigInt(-1)) return a;
    return std::nullopt;
  }
};

template <>
struct ring_traits<BigRational> {
  static BigRational zero() { return BigRational(0); }
  static BigRational one() { return BigRational(1); }
  static BigRational from_integer(const BigInt& n) { return BigRational(n); }
  static std::optional<BigRational> try_inverse(const BigRational& a) {
    if (a.is_zero()) return std::nullopt;
    return BigRational(1) / a;
  }
};

template <CommutativeRing R>
R ring_zero() { return ring_traits<R>::zero(); }

template <CommutativeRing R>
R ring_one() { return ring_traits<R>::one(); }

template <CommutativeRing R>
R embed(const BigInt& n) { return ring_traits<R>::from_integer(n); }

template <CommutativeRing R>
bool is_zero(const R& a) { return a == ring_traits<R>::zero(); }

template <CommutativeRing R>
R ring_pow(const R& base, unsigned exponent) {
  R result = ring_one<R>();
  R b = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

}  // namespace seriesforge
