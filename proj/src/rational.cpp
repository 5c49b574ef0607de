#include "gfano/rational.hpp"

#include "gfano/errors.hpp"

#include <cctype>

namespace gfano {

std::string to_string(const Rational& x) { return x.get_str(10); }

std::string to_string(const Integer& x) { return x.get_str(10); }

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(std::string(num), 10), d);
  r.canonicalize();
  if (!text.empty() && text.front() == '-') r = -r;
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

FactorialTable::FactorialTable(unsigned max_n) : values_(max_n + 1) {
  values_[0] = 1;
  for (unsigned i = 1; i <= max_n; ++i) values_[i] = values_[i - 1] * i;
}

}  // namespace gfano
