#include "gfano/periods.hpp"

#include "gfano/d3.hpp"
#include "gfano/errors.hpp"

#include <array>
#include <stdexcept>
#include <tuple>

namespace gfano {

namespace {

using enum FamilyKey;

const std::vector<FamilyDescriptor>& registry() {
  static const std::vector<FamilyDescriptor> table{
      {Y48_2, 6, 48, 2, 2, 4, 0, 10, 0, "6A", "6+", named_eta_product("6+"), Rational(1, 2),
       std::nullopt, Y12_2, 4, 10},
      {Y48_3, 6, 48, 3, 2, 6, 0, 14, 0, "6A", "6+", named_eta_product("6+"), Rational(1, 2),
       std::nullopt, Y12_3, 6, 14},
      {Y30, 15, 30, 3, 1, std::nullopt, 3, std::nullopt, 1, "15A", "15+", named_eta_product("15+"), Rational(1),
       "L15", std::nullopt, 3, 4},
      {Y28, 14, 28, 2, 1, std::nullopt, std::nullopt, std::nullopt, 1, "14A", "14+", named_eta_product("14+"),
       Rational(1), "L14", std::nullopt, 0, 1},
      {Y24, 12, 24, 4, 1, 4, 4, 6, 0, "12A", "12+", named_eta_product("12+"), Rational(1, 2), "L12", std::nullopt, 4,
       6},
      {Y20, 10, 20, 2, 1, 2, 2, 4, 0, "10A", "10+", named_eta_product("10+"), Rational(3, 4), "L10", std::nullopt, 2,
       4},
      {Y12_2, 6, 12, 2, 1, 4, 4, 10, 0, "6A", "6+", named_eta_product("6+"), Rational(1, 2), "L6,2", std::nullopt, 4,
       10},
      {Y12_3, 6, 12, 3, 1, 6, 6, 14, 0, "6A", "6+", named_eta_product("6+"), Rational(1, 2), "L6,3", std::nullopt, 6,
       14},
      {X6, 1, 2, 1, 1, 120, 120, 744, 0, "1A", "1^4", {{1, 4}}, Rational(1, 6), std::nullopt, std::nullopt, 120, 744},
  };
  return table;
}

constexpr std::array<std::pair<FamilyKey, std::string_view>, 9> kNames{{
    {Y48_2, "Y48_2"},
    {Y48_3, "Y48_3"},
    {Y30, "Y30"},
    {Y28, "Y28"},
    {Y24, "Y24"},
    {Y20, "Y20"},
    {Y12_2, "Y12_2"},
    {Y12_3, "Y12_3"},
    {X6, "X6"},
}};

using Generator = Integer (*)(unsigned k, const FactorialTable& fact);

Integer bin(unsigned n, unsigned k) { return binomial(n, k); }

// I_{6,2}: C(2k,k) sum_a C(k,a)^3
Integer coeff_6_2(unsigned k, const FactorialTable&) {
  Integer s = 0;
  for (unsigned a = 0; a <= k; ++a) {
    const Integer c = bin(k, a);
    s += c * c * c;
  }
  return bin(2 * k, k) * s;
}

// I_{6,3}: C(2k,k) sum multinomial(k; a,b,c)^2, folded over m = a + b.
Integer coeff_6_3(unsigned k, const FactorialTable&) {
  Integer s = 0;
  for (unsigned m = 0; m <= k; ++m) {
    const Integer c = bin(k, m);
    s += c * c * bin(2 * m, m);
  }
  return bin(2 * k, k) * s;
}

// I_10: sum_a C(k,a)^4
Integer coeff_10(unsigned k, const FactorialTable&) {
  Integer s = 0;
  for (unsigned a = 0; a <= k; ++a) {
    const Integer c = bin(k, a);
    const Integer c2 = c * c;
    s += c2 * c2;
  }
  return s;
}

// I_12: sum multinomial(k; a,b,c,d)^2 = sum_m C(k,m)^2 C(2m,m) C(2(k-m),k-m)
Integer coeff_12(unsigned k, const FactorialTable&) {
  Integer s = 0;
  for (unsigned m = 0; m <= k; ++m) {
    const Integer c = bin(k, m);
    s += c * c * bin(2 * m, m) * bin(2 * (k - m), k - m);
  }
  return s;
}

// I_15: sum_{a+b+c=k} (a+b)!(a+c)!(b+c)!(a+b+c)! / (a! b! c!)^3
Integer coeff_15(unsigned k, const FactorialTable& f) {
  Integer s = 0;
  for (unsigned a = 0; a <= k; ++a) {
    for (unsigned b = 0; a + b <= k; ++b) {
      const unsigned c = k - a - b;
      const Integer den = f[a] * f[b] * f[c];
      Integer num = f[a + b] * f[a + c] * f[b + c] * f[k];
      mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), Integer(den * den * den).get_mpz_t());
      s += num;
    }
  }
  return s;
}

// (6n)! / ((3n)! n!^3)
Integer coeff_sextic(unsigned n, const FactorialTable& f) {
  Integer num = f[6 * n];
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), Integer(f[3 * n] * f[n] * f[n] * f[n]).get_mpz_t());
  return num;
}

// Index-2 families are summed directly from their own formulas rather than
// through the index-1 generators, so the even-substitution check compares
// independent computations.
// sum_{a+b=k} (a+b)! (2a+2b)! / (a!^3 b!^3)
Integer coeff_6_2_even(unsigned k, const FactorialTable& f) {
  Integer s = 0;
  for (unsigned a = 0; a <= k; ++a) {
    const unsigned b = k - a;
    const Integer den = f[a] * f[b];
    Integer num = f[k] * f[2 * k];
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), Integer(den * den * den).get_mpz_t());
    s += num;
  }
  return s;
}

// sum_{a+b+c=k} (2a+2b+2c)! / (a! b! c!)^2
Integer coeff_6_3_even(unsigned k, const FactorialTable& f) {
  Integer s = 0;
  for (unsigned a = 0; a <= k; ++a) {
    for (unsigned b = 0; a + b <= k; ++b) {
      const unsigned c = k - a - b;
      const Integer den = f[a] * f[b] * f[c];
      Integer num = f[2 * k];
      mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), Integer(den * den).get_mpz_t());
      s += num;
    }
  }
  return s;
}

TruncatedSeries generate(Generator gen, int order, int stride, unsigned fact_max) {
  const FactorialTable fact(fact_max);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n * stride <= order; ++n) c[n * stride] = Rational(gen(static_cast<unsigned>(n), fact));
  return TruncatedSeries(std::move(c));
}

}  // namespace

std::string_view to_string(FamilyKey key) {
  for (const auto& [k, name] : kNames) {
    if (k == key) return name;
  }
  throw std::logic_error("unnamed family key");
}

FamilyKey parse_family(std::string_view text) {
  for (const auto& [k, name] : kNames) {
    if (name == text) return k;
  }
  throw UnknownFamily(std::string(text));
}

Rational FamilyDescriptor::constant_for_shift(const Rational& s) const {
  if (table_constant) return *table_constant;
  return s + constant_minus_shift;
}

std::span<const FamilyDescriptor> families() { return registry(); }

const FamilyDescriptor& descriptor(FamilyKey key) {
  for (const auto& d : registry()) {
    if (d.key == key) return d;
  }
  throw UnknownFamily(std::string(to_string(key)));
}

TruncatedSeries iseries(FamilyKey key, int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  const auto k = static_cast<unsigned>(order);
  switch (key) {
    case Y12_2:
      return generate(coeff_6_2, order, 1, 0);
    case Y12_3:
      return generate(coeff_6_3, order, 1, 0);
    case Y20:
      return generate(coeff_10, order, 1, 0);
    case Y24:
      return generate(coeff_12, order, 1, 0);
    case Y30:
      return generate(coeff_15, order, 1, 2 * k);
    case Y28:
      return holomorphic_solution(catalog_operator("L14"), order);
    case X6:
      return generate(coeff_sextic, order, 1, 6 * k);
    case Y48_2:
      return generate(coeff_6_2_even, order, 2, k);
    case Y48_3:
      return generate(coeff_6_3_even, order, 2, k);
  }
  throw UnknownFamily("?");
}

TruncatedSeries gseries(FamilyKey key, int order) {
  const auto& d = descriptor(key);
  if (!d.series_shift) throw FreeShift(std::string(to_string(key)));
  const TruncatedSeries g =
      multiply(TruncatedSeries::exponential(-*d.series_shift, order), inverse_laplace(iseries(key, order)));
  if (order >= 1 && sgn(g[1]) != 0) {
    throw std::logic_error("G-series of " + std::string(to_string(key)) + " has nonzero linear term");
  }
  return g;
}

Rational givental_constant(FamilyKey key) { return gseries(key, 2)[2]; }

std::vector<SeriesComparison> check_even_substitution(int order) {
  std::vector<SeriesComparison> out;
  for (const auto& [even, base, name] : {std::tuple{Y48_2, Y12_2, "I_{6,2;2}(t) = I_{6,2}(t^2)"},
                                         std::tuple{Y48_3, Y12_3, "I_{6,3;2}(t) = I_{6,3}(t^2)"}}) {
    const TruncatedSeries lhs = iseries(even, order);
    const TruncatedSeries rhs = dilate(iseries(base, order / 2), 2, order);
    out.push_back(compare_series(name, lhs, rhs));
  }
  return out;
}

std::vector<SeriesComparison> check_exp_relation(int max_k) {
  std::vector<SeriesComparison> out;
  {
    const TruncatedSeries g3 = gseries(Y48_3, 2 * max_k);
    const TruncatedSeries g2 = gseries(Y48_2, 2 * max_k);
    std::vector<Rational> lhs(static_cast<std::size_t>(max_k) + 1);
    std::vector<Rational> rhs(static_cast<std::size_t>(max_k) + 1);
    const FactorialTable fact(static_cast<unsigned>(max_k));
    for (int k = 0; k <= max_k; ++k) {
      lhs[k] = g3[2 * k];
      for (int j = 0; j <= k; ++j) rhs[k] += g2[2 * j] / Rational(fact[k - j]);
    }
    out.push_back(compare_series("G3(sqrt t) = G2(sqrt t) e^t", TruncatedSeries(std::move(lhs)),
                                 TruncatedSeries(std::move(rhs))));
  }
  {
    const TruncatedSeries i3 = iseries(Y12_3, max_k);
    const TruncatedSeries i2 = iseries(Y12_2, max_k);
    std::vector<Rational> j2(static_cast<std::size_t>(max_k) + 1);
    std::vector<Rational> lhs(static_cast<std::size_t>(max_k) + 1);
    std::vector<Rational> rhs(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) {
      const Rational central(binomial(2 * k, k));
      j2[k] = i2[k] / central;
      lhs[k] = i3[k] / central;
      for (int j = 0; j <= k; ++j) rhs[k] += Rational(binomial(k, j)) * j2[j];
    }
    out.push_back(compare_series("J3 = S_1 J2 with J_k = I_k / C(2k,k)", TruncatedSeries(std::move(lhs)),
                                 TruncatedSeries(std::move(rhs))));
  }
  return out;
}

}  // namespace gfano
