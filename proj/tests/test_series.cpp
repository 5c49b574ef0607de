#include "gfano/errors.hpp"
#include "gfano/series.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace gfano;

TEST_CASE("multiplication") {
  CHECK(ints({1, 1, 0}) * ints({1, -1, 0}) == ints({1, 0, -1}));
  CHECK(TruncatedSeries::geometric(10) * ints({1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}) == TruncatedSeries::constant(1, 10));
  const auto f12 = ints({1, 0, 12, 48, 540});
  CHECK((f12 * f12)[2] == 24);
}

TEST_CASE("result order is the smaller one") {
  const auto p = ints({1, 2, 3}) * ints({1, 1, 1, 1, 1});
  CHECK(p.order() == 2);
  CHECK((ints({1, 2}) + ints({0, 0, 5})).order() == 1);
}

TEST_CASE("division") {
  CHECK(divide(TruncatedSeries::constant(1, 8), ints({1, -1, 0, 0, 0, 0, 0, 0, 0})) == TruncatedSeries::geometric(8));
  CHECK(divide(ints({1, 0, -1, 0}), ints({1, 1, 0, 0})) == ints({1, -1, 0, 0}));
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_unit(rng, 12);
    CHECK(divide(a, a) == TruncatedSeries::constant(1, 12));
  }
  CHECK_THROWS_AS(reciprocal(ints({0, 1})), ZeroConstantTerm);
}

TEST_CASE("composition") {
  CHECK(compose(ints({1, 1}), ints({0, 1, -1})) == ints({1, 1, -1}));
  CHECK(compose(TruncatedSeries::geometric(9), TruncatedSeries::identity(9)) == TruncatedSeries::geometric(9));
  CHECK(compose(TruncatedSeries::geometric(6), ints({0, 1, 1, 0, 0, 0, 0}))[2] == 2);
  CHECK_THROWS_AS(compose(ints({1, 1}), ints({1, 1})), NonzeroInnerConstant);
}

TEST_CASE("composition with a higher valuation inner series knows more terms") {
  // outer known through t^3, inner = t^2: result known through t^7.
  const auto r = compose(ints({1, 1, 1, 1}), ints({0, 0, 1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(r.order() == 7);
  CHECK(r == ints({1, 0, 1, 0, 1, 0, 1, 0}));
}

TEST_CASE("reversion") {
  CHECK(reverse(TruncatedSeries::identity(10)) == TruncatedSeries::identity(10));
  const auto r = reverse(ints({0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(r[1] == 1);
  CHECK(r[2] == 1);
  CHECK(r[3] == 2);
  CHECK(r[4] == 5);
  for (unsigned n = 1; n <= 15; ++n) CHECK(r[n] == Rational(oracle::catalan(n - 1)));
  const auto f = ints({0, 1, 3, 7, 0, 0, 0, 0, 0, 0, 0});
  CHECK(compose(f, reverse(f)) == TruncatedSeries::identity(10));
  CHECK_THROWS_AS(reverse(ints({0, 0, 1})), NotInvertible);
  CHECK_THROWS_AS(reverse(ints({1, 1, 1})), NotInvertible);
}

TEST_CASE("reversion against order-by-order substitution") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 15; ++trial) {
    auto v = oracle::random_vec(rng, 12, -6, 6);
    v[0] = 0;
    if (v[1] == 0) v[1] = 1 + trial % 3;
    CHECK(to_vec(reverse(from_vec(v))) == oracle::reverse_by_substitution(v));
  }
}

TEST_CASE("rational powers") {
  const auto h = pow_rational(ints({1, 1, 0, 0}), fraction(1, 2));
  CHECK(h == TruncatedSeries({1, fraction(1, 2), fraction(-1, 8), fraction(1, 16)}));
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_unit(rng, 10);
    CHECK(pow_rational(a, 0) == TruncatedSeries::constant(1, 10));
    CHECK(pow_rational(pow_rational(a, fraction(1, 2)), 2) == a);
    CHECK(pow_rational(a, fraction(1, 3)) * pow_rational(a, fraction(2, 3)) == a);
    CHECK(pow_rational(a, fraction(-3, 4)) * pow_rational(a, fraction(7, 4)) == a);
    CHECK(pow_integer(a, 3) == a * a * a);
    CHECK(pow_integer(a, -2) * a * a == TruncatedSeries::constant(1, 10));
  }
  CHECK_THROWS_AS(pow_rational(ints({2, 1}), fraction(1, 2)), NonUnitConstant);
  CHECK(pow_integer(ints({2, 1, 0}), 2) == ints({4, 4, 1}));
}

TEST_CASE("laplace and shifts") {
  const int k = 10;
  CHECK(laplace(TruncatedSeries::exponential(1, k)) == TruncatedSeries::geometric(k));
  std::mt19937 rng(7);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_unit(rng, k);
    CHECK(inverse_laplace(laplace(a)) == a);
    CHECK(shifted_laplace(a, 0) == laplace(a));
    CHECK(regular_shift(a, 0) == a);
    CHECK(regular_shift(regular_shift(a, 3), -3) == a);
    CHECK(regular_shift(regular_shift(a, fraction(1, 2)), fraction(5, 2)) == regular_shift(a, 3));
    const auto n = normalize(a);
    CHECK(n[1] == 0);
    CHECK(normalize(n) == n);
  }
  Rational pw = 1;
  std::vector<Rational> expected;
  for (int i = 0; i <= k; ++i, pw *= 5) expected.push_back(pw);
  CHECK(shifted_laplace(TruncatedSeries::constant(1, k), 5) == TruncatedSeries(expected));
  const TruncatedSeries g({1, 3, fraction(15, 2)});
  CHECK(laplace(g) == ints({1, 3, 15}));
}

TEST_CASE("normalize printed examples") {
  const auto i15 = ints({1, 3, 15, 105, 855, 7533});
  CHECK(normalize(i15).truncated(4) == ints({1, 0, 6, 24, 162}));
  const auto i12 = ints({1, 4, 28, 256, 2716, 31504});
  CHECK(normalize(i12).truncated(4) == ints({1, 0, 12, 48, 540}));
  CHECK(normalize(ints({0, 5, 1})) == ints({0, 5, 1}));
}

TEST_CASE("ring axioms on random integer series") {
  std::mt19937 rng(99);
  for (int i = 0; i < 25; ++i) {
    const auto a = from_vec(oracle::random_vec(rng, 15, -20, 20));
    const auto b = from_vec(oracle::random_vec(rng, 15, -20, 20));
    const auto c = from_vec(oracle::random_vec(rng, 15, -20, 20));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b - b == a);
    CHECK(to_vec(a * b) == oracle::mul(to_vec(a), to_vec(b)));
  }
}

TEST_CASE("rational coefficients survive the integer fast path") {
  const TruncatedSeries a({1, fraction(1, 3), 2});
  const TruncatedSeries b({1, 1, fraction(-1, 2)});
  CHECK(a * b == TruncatedSeries({1, fraction(4, 3), fraction(11, 6)}));
}

TEST_CASE("dilate") {
  const auto a = ints({1, 2, 3, 4});
  CHECK(dilate(a, 2, 6) == ints({1, 0, 2, 0, 3, 0, 4}));
  CHECK(dilate(a, 3, 7) == ints({1, 0, 0, 2, 0, 0, 3, 0}));
}

TEST_CASE("valuation and accessors") {
  CHECK(ints({0, 0, 3}).valuation() == 2);
  CHECK_FALSE(TruncatedSeries(4).valuation().has_value());
  CHECK(ints({1, 2}).is_integral());
  CHECK_FALSE(TruncatedSeries({1, fraction(1, 2)}).is_integral());
  CHECK(ints({1, 2}).shifted_up(2) == ints({0, 0, 1, 2}));
  CHECK(ints({1, 2}).at(5) == 0);
}
