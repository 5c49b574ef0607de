#include "gfano/errors.hpp"
#include "gfano/eta.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace gfano;

TEST_CASE("pentagonal product matches the naive product to q^500") {
  const auto naive = oracle::naive_euler(500);
  const auto fast = euler_product(500);
  REQUIRE(fast.order() == 500);
  for (int n = 0; n <= 500; ++n) CHECK(fast[n] == Rational(naive[n]));
}

TEST_CASE("eta products against repeated multiplication") {
  const std::vector<std::pair<int, int>> f = {{1, 8}, {2, 8}};
  const auto naive = oracle::naive_eta_body(f, 80);
  const auto fast = eta_product_coefficients({{1, 8}, {2, 8}}, 80);
  for (int n = 0; n <= 80; ++n) CHECK(fast[n] == naive[n]);
  // big exponents push past 128 bits and take the mpz path
  const auto big = eta_product_coefficients({{1, 400}}, 120);
  const auto naive_big = oracle::naive_eta_body({{1, 400}}, 120);
  for (int n = 0; n <= 120; ++n) CHECK(big[n] == naive_big[n]);
}

TEST_CASE("eta and discriminant") {
  CHECK(eta(10).offset() == fraction(1, 24));
  const auto d = discriminant(30);
  CHECK(d.offset() == 1);
  CHECK(d.body()[0] == 1);
  CHECK(d.body()[1] == -24);
  CHECK(d.body()[2] == 252);
  CHECK(d.body()[3] == -1472);
  CHECK(d.body()[4] == 4830);
  CHECK(eta(30).pow(24L) == d);
}

TEST_CASE("named eta products") {
  CHECK(eta_offset(named_eta_product("6+")) == fraction(1, 2));
  CHECK(eta_offset(named_eta_product("10+")) == fraction(3, 4));
  CHECK(eta_offset(named_eta_product("12+")) == fraction(1, 2));
  CHECK(eta_offset(named_eta_product("14+")) == 1);
  CHECK(eta_offset(named_eta_product("15+")) == 1);
  CHECK(sigma1(named_eta_product("6+")) == 12);
  CHECK(sigma1(named_eta_product("12+")) == 12);
  CHECK(sigma1(named_eta_product("14+")) == 24);
  CHECK_THROWS_AS(named_eta_product("7+"), UnknownLabel);
  // eta_{12+} = eta(q^2)^4 eta(q^6)^4 / (eta(q) eta(q^3) eta(q^4) eta(q^12))
  const auto e12 = eta_product(named_eta_product("12+"), 20);
  const auto num = eta_product({{2, 4}, {6, 4}}, 20);
  const auto den = eta_product({{1, 1}, {3, 1}, {4, 1}, {12, 1}}, 20);
  CHECK(e12 == num / den);
}

TEST_CASE("E4 and j") {
  const auto e4 = eisenstein_e4(10);
  CHECK(e4.body()[0] == 1);
  CHECK(e4.body()[1] == 240);
  CHECK(e4.body()[2] == 2160);
  for (long n = 1; n <= 10; ++n) {
    Integer s3 = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) s3 += Integer(d) * d * d;
    }
    CHECK(e4.body()[n] == Rational(240 * s3));
  }
  const auto j = klein_j(6);
  CHECK(j.offset() == -1);
  CHECK(j.body()[0] == 1);
  CHECK(j.body()[1] == 744);
  CHECK(j.body()[2] == 196884);
  CHECK(j.body()[3] == 21493760);
}

TEST_CASE("q-expansion arithmetic") {
  const QExpansion a(-1, ints({1, 0, 5, 0}));
  const QExpansion b(0, ints({-3, 2, 0, 0}));
  const auto s = a + b;
  CHECK(s.offset() == -1);
  CHECK(s.body() == ints({1, -3, 7, 0}));
  // leading cancellation moves the offset up
  const auto d = a - QExpansion(-1, ints({1, 2, 0, 0}));
  CHECK(d.offset() == 0);
  CHECK(d.body()[0] == -2);
  CHECK(a.coefficient(1) == 5);
  CHECK(a.coefficient(-3) == 0);
  CHECK_THROWS(a.coefficient(3));
  CHECK_THROWS_AS(QExpansion(fraction(1, 5), ints({1})), WrongOffset);
  CHECK_THROWS_AS(eta(5) + QExpansion(0, ints({1, 0})), OffsetMismatch);
  const auto r = a * a.reciprocal();
  CHECK(r.offset() == 0);
  CHECK(r.body() == ints({1, 0, 0, 0}));
  const auto e6 = eta_product(named_eta_product("6+"), 12);
  CHECK(e6.pow(fraction(1, 2)).offset() == fraction(1, 4));
  CHECK(e6.pow(fraction(1, 2)).pow(2L) == e6);
  CHECK_THROWS_AS(eta(12).pow(fraction(1, 2)), WrongOffset);
}
