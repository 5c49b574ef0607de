#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gfano {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical reduced fraction string: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);

/// num/den in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational fraction(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Factorials 0!..n! for repeated use inside coefficient generators.
class FactorialTable {
 public:
  explicit FactorialTable(unsigned max_n);
  const Integer& operator[](unsigned n) const { return values_[n]; }
  unsigned max_n() const { return static_cast<unsigned>(values_.size() - 1); }

 private:
  std::vector<Integer> values_;
};

}  // namespace gfano
