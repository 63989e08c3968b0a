#include <random>
#include <vector>

#include "doctest.h"
#include "seriesforge/exp_series.hpp"
#include "seriesforge/poly.hpp"
#include "seriesforge/series_json.hpp"

using namespace seriesforge;

namespace {

using Q = BigRational;
using S = ExpSeries<Q>;

S random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  std::vector<Q> c;
  for (std::size_t i = 0; i <= order; ++i) c.push_back(Q(BigInt(num(rng)), BigInt(den(rng))));
  if (zero_constant) c[0] = Q(0);
  return S(std::move(c));
}

S series_of(std::initializer_list<int> values) {
  std::vector<Q> c;
  for (int v : values) c.push_back(Q(v));
  return S(std::move(c));
}

}  // namespace

TEST_CASE("compose with the identity series") {
  std::mt19937_64 rng(3);
  auto f = random_series(rng, 8, false);
  CHECK(compose(f, S::identity(8)) == f);
  CHECK(compose(S::identity(8), random_series(rng, 8, true)).order() == 8);
}

TEST_CASE("e^t - 1 composed with log(1+t) is t") {
  auto f = make_named(NamedSeries::exp_minus_one, 12);
  auto g = make_named(NamedSeries::log1p, 12);
  CHECK(compose(f, g) == S::identity(12));
  CHECK(compose(g, f) == S::identity(12));
}

TEST_CASE("t^2/2! composed with e^t - 1") {
  auto square_half = series_of({0, 0, 1, 0, 0, 0});
  auto e = make_named(NamedSeries::exp_minus_one, 5);
  auto composed = compose(square_half, e);
  CHECK(composed.coeff(3) == Q(3));
  auto direct = Q(BigInt(1), BigInt(2)) * mul(e, e);
  CHECK(composed == direct);
}

TEST_CASE("compose rejects a nonzero inner constant") {
  auto f = S::identity(4);
  auto g = S::one(4);
  CHECK_THROWS_AS(compose(f, g), std::domain_error);
}

TEST_CASE("compose matches bell_product on the tails") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(rng, 9, false);
    auto g = random_series(rng, 9, true);
    auto h = compose(f, g);
    CHECK(h.constant_term() == f.constant_term());
    CHECK(h.tail() == bell_product(f.tail(), g.tail()));
  }
}

TEST_CASE("invert examples") {
  CHECK(invert(S::identity(6)) == S::identity(6));
  auto inv = invert(make_named(NamedSeries::neg_log_one_minus, 8));
  CHECK(inv == make_named(NamedSeries::one_minus_exp_neg, 8));
  CHECK(invert(make_named(NamedSeries::neg_log_one_minus, 8), InversionMethod::closed_form) == inv);
  CHECK(series_of({0, 1, -1, 1, -1}) == make_named(NamedSeries::one_minus_exp_neg, 4));
}

TEST_CASE("invert over polynomials in m with unit linear coefficient") {
  // t(1-m) + m log(1+t)
  const std::size_t N = 5;
  std::vector<PolyVar> c(N + 1);
  const PolyVar m = PolyVar::variable();
  c[1] = PolyVar::constant(BigInt(1));
  for (std::size_t n = 2; n <= N; ++n) {
    BigInt f = factorial(static_cast<unsigned>(n - 1));
    c[n] = PolyVar::constant(n % 2 == 1 ? f : -f) * m;
  }
  ExpSeries<PolyVar> x(c);
  auto a = invert(x);
  CHECK(a.coeff(1) == PolyVar{1});
  CHECK(a.coeff(2) == m);
  CHECK(a.coeff(3) == PolyVar{0, -2, 3});
  std::vector<BigInt> at_two;
  for (std::size_t n = 1; n <= 4; ++n) at_two.push_back(a.coeff(n).eval_at(BigInt(2)));
  CHECK(at_two == std::vector<BigInt>{1, 2, 8, 52});
  CHECK(invert(x, InversionMethod::closed_form) == a);
}

TEST_CASE("invert rejects bad input") {
  CHECK_THROWS_AS(invert(S::one(4)), std::domain_error);
  CHECK_THROWS_AS(invert(series_of({0, 0, 1})), std::domain_error);
  CHECK_THROWS_AS(invert(S(0)), std::invalid_argument);
}

TEST_CASE("invert is a two-sided inverse") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(rng, 10, true);
    if (f.coeff(1).is_zero()) continue;
    auto g = invert(f);
    CHECK(compose(f, g) == S::identity(10));
    CHECK(compose(g, f) == S::identity(10));
  }
}

TEST_CASE("left distributivity of compose") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(rng, 8, false), g = random_series(rng, 8, false), h = random_series(rng, 8, true);
    CHECK(compose(f + g, h) == compose(f, h) + compose(g, h));
  }
}

TEST_CASE("mul, pow, reciprocal, integrate") {
  std::mt19937_64 rng(4);
  auto f = random_series(rng, 7, false);
  CHECK(mul(f, S::one(7)) == f);
  CHECK(integrate(S::one(5)) == S::identity(6));
  auto e = make_named(NamedSeries::exp_minus_one, 6);
  CHECK(pow(e, 2).coeff(2) == Q(2));
  CHECK(pow(e, 0) == S::one(6));
  CHECK(pow(e, 3) == mul(e, mul(e, e)));

  auto u = S::one(7) + e.truncated(6).truncated(6) - e.truncated(6) + random_series(rng, 7, true);
  CHECK(mul(u.truncated(6), reciprocal(u.truncated(6))) == S::one(6));
  CHECK(pow(u, -2) == pow(reciprocal(u), 2));
  CHECK_THROWS_AS(reciprocal(e), std::domain_error);
  CHECK_THROWS_AS(pow(e, -1), std::domain_error);
}

TEST_CASE("derivative then integrate round-trips") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_series(rng, 9, true);
    CHECK(integrate(derivative(f)) == f);
  }
  CHECK(derivative(make_named(NamedSeries::exp_minus_one, 5)) == S::one(4) + make_named(NamedSeries::exp_minus_one, 4));
}

TEST_CASE("named series") {
  CHECK(make_named(NamedSeries::log1p, 4) == series_of({0, 1, -1, 2, -6}));
  CHECK(make_named(NamedSeries::neg_log_one_minus, 4) == series_of({0, 1, 1, 2, 6}));
  CHECK(make_named(NamedSeries::identity, 5) == S::identity(5));
  CHECK(parse_named_series("log1p") == NamedSeries::log1p);
  for (auto n : {NamedSeries::exp_minus_one, NamedSeries::log1p, NamedSeries::neg_log_one_minus,
                 NamedSeries::one_minus_exp_neg, NamedSeries::identity})
    CHECK(parse_named_series(to_string(n)) == n);
  CHECK_THROWS_AS(parse_named_series("sinh"), std::invalid_argument);
  CHECK_THROWS_AS(make_named(NamedSeries::log1p, 0), std::invalid_argument);
}

TEST_CASE("compare reports order mismatch separately") {
  auto a = make_named(NamedSeries::exp_minus_one, 6);
  CHECK(compare(a, a) == SeriesMatch::equal);
  CHECK(compare(a, a.truncated(4)) == SeriesMatch::overlap_equal_orders_differ);
  CHECK(compare(a, make_named(NamedSeries::log1p, 6)) == SeriesMatch::different);
  CHECK_FALSE(a == a.truncated(4));
}

TEST_CASE("series JSON") {
  auto s = make_named(NamedSeries::log1p, 3);
  auto j = to_json(s);
  CHECK(j.at("order") == 3);
  CHECK(j.at("coeffs") == nlohmann::json::array({"1", "-1", "2"}));
  CHECK(series_from_json(j) == s);
  S half(std::vector<Q>{Q(1), Q(BigInt(1), BigInt(2))});
  CHECK(to_json(half).at("coeffs")[0] == "1/2");
  CHECK(series_from_json(to_json(half)) == half);
  CHECK(integer_to_json(BigInt(52)) == 52);
  CHECK(integer_to_json(BigInt("123456789012345678901")) == "123456789012345678901");
  CHECK(integer_from_json(integer_to_json(BigInt("-98765432109876543210"))) == BigInt("-98765432109876543210"));
}
