#include "gfano/eta.hpp"

#include "gfano/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace gfano {

namespace {

void check_offset(const Rational& offset) {
  if (mpz_divisible_p(Integer(24).get_mpz_t(), offset.get_den_mpz_t()) == 0) {
    throw WrongOffset("q-expansion offset " + to_string(offset) + " does not have denominator dividing 24");
  }
}

// (exponent, sign) pairs of the pentagonal expansion through q^order,
// sorted by exponent.
std::vector<std::pair<int, int>> pentagonal_terms(int order) {
  std::vector<std::pair<int, int>> terms{{0, 1}};
  for (long k = 1;; ++k) {
    const long e1 = k * (3 * k - 1) / 2;
    const long e2 = k * (3 * k + 1) / 2;
    if (e1 > order) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    terms.emplace_back(static_cast<int>(e1), sign);
    if (e2 <= order) terms.emplace_back(static_cast<int>(e2), sign);
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

struct Int128Ops {
  using value_type = __int128;
  static bool add(value_type& acc, const value_type& x) { return !__builtin_add_overflow(acc, x, &acc); }
  static bool sub(value_type& acc, const value_type& x) { return !__builtin_sub_overflow(acc, x, &acc); }
};

struct MpzOps {
  using value_type = Integer;
  static bool add(value_type& acc, const value_type& x) {
    acc += x;
    return true;
  }
  static bool sub(value_type& acc, const value_type& x) {
    acc -= x;
    return true;
  }
};

// Returns false on overflow of the fixed-width type.
template <class Ops>
bool sparse_eta_product(const EtaExponentMap& exponents, int order, std::vector<typename Ops::value_type>& out) {
  using T = typename Ops::value_type;
  out.assign(static_cast<std::size_t>(order) + 1, T(0));
  out[0] = T(1);
  for (const auto& [length, power] : exponents) {
    if (power == 0 || length > order) continue;
    std::vector<std::pair<int, int>> terms;
    for (const auto& [e, sign] : pentagonal_terms(order / length)) terms.emplace_back(e * length, sign);
    if (power > 0) {
      for (int rep = 0; rep < power; ++rep) {
        // Descending k reads only not-yet-updated lower entries.
        for (int k = order; k >= 1; --k) {
          T acc = out[k];
          for (std::size_t j = 1; j < terms.size() && terms[j].first <= k; ++j) {
            const bool ok = terms[j].second > 0 ? Ops::add(acc, out[k - terms[j].first])
                                                : Ops::sub(acc, out[k - terms[j].first]);
            if (!ok) return false;
          }
          out[k] = acc;
        }
      }
    } else {
      for (int rep = 0; rep < -power; ++rep) {
        for (int k = 1; k <= order; ++k) {
          T acc = out[k];
          for (std::size_t j = 1; j < terms.size() && terms[j].first <= k; ++j) {
            const bool ok = terms[j].second > 0 ? Ops::sub(acc, out[k - terms[j].first])
                                                : Ops::add(acc, out[k - terms[j].first]);
            if (!ok) return false;
          }
          out[k] = acc;
        }
      }
    }
  }
  return true;
}

Integer to_integer(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer lo(static_cast<unsigned long>(u & std::numeric_limits<std::uint64_t>::max()));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

}  // namespace

QExpansion::QExpansion(Rational offset, TruncatedSeries body) : offset_(std::move(offset)), body_(std::move(body)) {
  const auto v = body_.valuation();
  if (v && *v > 0) {
    offset_ += *v;
    std::vector<Rational> c(body_.coefficients().begin() + *v, body_.coefficients().end());
    body_ = TruncatedSeries(std::move(c));
  }
  check_offset(offset_);
}

QExpansion QExpansion::constant(const Rational& c, int order) {
  return QExpansion(0, TruncatedSeries::constant(c, order));
}

Rational QExpansion::coefficient(const Rational& exponent) const {
  const Rational rel = exponent - offset_;
  if (!is_integer(rel)) throw std::invalid_argument("exponent " + to_string(exponent) + " not on this expansion's lattice");
  if (sgn(rel) < 0) return 0;
  if (rel > order()) throw std::out_of_range("coefficient of q^" + to_string(exponent) + " is beyond the truncation");
  return body_[static_cast<int>(rel.get_num().get_si())];
}

QExpansion QExpansion::truncated(int new_order) const { return QExpansion(offset_, body_.truncated(new_order)); }

QExpansion QExpansion::pow(const Rational& e) const {
  if (is_integer(e) && e.get_num().fits_slong_p()) return pow(e.get_num().get_si());
  return QExpansion(offset_ * e, pow_rational(body_, e));
}

QExpansion QExpansion::pow(long e) const { return QExpansion(offset_ * e, pow_integer(body_, e)); }

QExpansion QExpansion::reciprocal() const { return QExpansion(-offset_, gfano::reciprocal(body_)); }

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  return QExpansion(a.offset_ + b.offset_, multiply(a.body_, b.body_));
}

QExpansion operator/(const QExpansion& a, const QExpansion& b) {
  return QExpansion(a.offset_ - b.offset_, divide(a.body_, b.body_));
}

QExpansion operator*(const Rational& c, const QExpansion& a) { return QExpansion(a.offset_, c * a.body_); }

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Rational diff = a.offset_ - b.offset_;
  if (!is_integer(diff)) {
    throw OffsetMismatch("cannot add q-expansions with offsets " + to_string(a.offset_) + " and " +
                         to_string(b.offset_));
  }
  const QExpansion& lo = sgn(diff) <= 0 ? a : b;
  const QExpansion& hi = sgn(diff) <= 0 ? b : a;
  const int shift = static_cast<int>(Rational(abs(diff)).get_num().get_si());
  const Rational top = std::min(a.top_exponent(), b.top_exponent());
  const int n = static_cast<int>(Rational(top - lo.offset_).get_num().get_si());
  if (n < 0) throw OffsetMismatch("q-expansions have no common known range");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    c[k] = lo.body_[k];
    if (k >= shift) c[k] += hi.body_[k - shift];
  }
  return QExpansion(lo.offset_, TruncatedSeries(std::move(c)));
}

QExpansion operator-(const QExpansion& a, const QExpansion& b) { return a + Rational(-1) * b; }

bool operator==(const QExpansion& a, const QExpansion& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.offset_ == b.offset_ && a.body_ == b.body_;
}

TruncatedSeries euler_product(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (const auto& [e, sign] : pentagonal_terms(order)) c[e] = sign;
  return TruncatedSeries(std::move(c));
}

QExpansion eta(int order) { return QExpansion(Rational(1, 24), euler_product(order)); }

std::vector<Integer> eta_product_coefficients(const EtaExponentMap& exponents, int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  std::vector<__int128> fast;
  std::vector<Integer> out;
  if (sparse_eta_product<Int128Ops>(exponents, order, fast)) {
    out.reserve(fast.size());
    for (auto v : fast) out.push_back(to_integer(v));
    return out;
  }
  sparse_eta_product<MpzOps>(exponents, order, out);
  return out;
}

QExpansion eta_product(const EtaExponentMap& exponents, int order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  const auto coeffs = eta_product_coefficients(exponents, order);
  std::vector<Rational> body(coeffs.begin(), coeffs.end());
  return QExpansion(eta_offset(exponents), TruncatedSeries(std::move(body)));
}

const EtaExponentMap& named_eta_product(std::string_view id) {
  static const std::map<std::string_view, EtaExponentMap> table{
      {"6+", {{1, 1}, {2, 1}, {3, 1}, {6, 1}}},
      {"10+", {{1, 1}, {2, 1}, {5, 1}, {10, 1}}},
      {"12+", {{1, -1}, {2, 4}, {3, -1}, {4, -1}, {6, 4}, {12, -1}}},
      {"14+", {{1, 1}, {2, 1}, {7, 1}, {14, 1}}},
      {"15+", {{1, 1}, {3, 1}, {5, 1}, {15, 1}}},
  };
  const auto it = table.find(id);
  if (it == table.end()) throw UnknownLabel(std::string(id));
  return it->second;
}

long sigma1(const EtaExponentMap& exponents) {
  long s = 0;
  for (const auto& [length, power] : exponents) s += static_cast<long>(length) * power;
  return s;
}

Rational eta_offset(const EtaExponentMap& exponents) { return fraction(sigma1(exponents), 24); }

Integer divisor_cube_sum(long n) {
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const Integer a = d;
    s += a * a * a;
    const long e = n / d;
    if (e != d) {
      const Integer b = e;
      s += b * b * b;
    }
  }
  return s;
}

QExpansion eisenstein_e4(int order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int n = 1; n <= order; ++n) c[n] = Rational(240 * divisor_cube_sum(n));
  return QExpansion(0, TruncatedSeries(std::move(c)));
}

QExpansion discriminant(int order) { return eta_product({{1, 24}}, order); }

QExpansion klein_j(int order) { return eisenstein_e4(order).pow(3L) / discriminant(order); }

}  // namespace gfano
