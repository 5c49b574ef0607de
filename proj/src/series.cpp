#include "gfano/series.hpp"

#include "gfano/errors.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gfano {

namespace {

bool all_integral(std::span<const Rational> c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.get_den() == 1; });
}

// Cauchy product of a[0..n] and b[0..n] into n+1 coefficients.
std::vector<Rational> cauchy(std::span<const Rational> a, std::span<const Rational> b, int n) {
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  if (all_integral(a.first(n + 1)) && all_integral(b.first(n + 1))) {
    // Integer accumulation skips a gcd per term.
    Integer acc;
    for (int k = 0; k <= n; ++k) {
      acc = 0;
      for (int i = 0; i <= k; ++i) {
        const auto& x = a[i].get_num();
        if (x == 0) continue;
        mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), b[k - i].get_num().get_mpz_t());
      }
      out[k] = Rational(acc);
    }
    return out;
  }
  Rational term;
  for (int k = 0; k <= n; ++k) {
    Rational& acc = out[k];
    for (int i = 0; i <= k; ++i) {
      if (sgn(a[i]) == 0 || sgn(b[k - i]) == 0) continue;
      term = a[i] * b[k - i];
      acc += term;
    }
  }
  return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Rational> coeffs)
    : TruncatedSeries(std::vector<Rational>(coeffs)) {}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::geometric(int order) {
  return TruncatedSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(1)));
}

TruncatedSeries TruncatedSeries::exponential(const Rational& s, int order) {
  TruncatedSeries e(order);
  e.coeffs_[0] = 1;
  for (int n = 1; n <= order; ++n) e.coeffs_[n] = e.coeffs_[n - 1] * s / n;
  return e;
}

Rational TruncatedSeries::at(int n) const {
  if (n < 0 || n > order()) return 0;
  return coeffs_[n];
}

std::optional<int> TruncatedSeries::valuation() const {
  for (int n = 0; n <= order(); ++n) {
    if (sgn(coeffs_[n]) != 0) return n;
  }
  return std::nullopt;
}

bool TruncatedSeries::is_integral() const { return all_integral(coeffs_); }

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order()) {
    throw std::invalid_argument("cannot truncate to an order beyond what is known");
  }
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::shifted_up(int k) const {
  std::vector<Rational> c(static_cast<std::size_t>(k));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (int i = 0; i <= n; ++i) r.coeffs_[i] = a[i] + b[i];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (int i = 0; i <= n; ++i) r.coeffs_[i] = a[i] - b[i];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return multiply(a, b); }

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int i = 0; i <= n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  return TruncatedSeries(cauchy(a.coefficients(), b.coefficients(), n));
}

TruncatedSeries reciprocal(const TruncatedSeries& b) {
  if (sgn(b[0]) == 0) throw ZeroConstantTerm();
  const int n = b.order();
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  const Rational inv0 = 1 / b[0];
  q[0] = inv0;
  Rational acc;
  for (int k = 1; k <= n; ++k) {
    acc = 0;
    for (int i = 1; i <= k; ++i) {
      if (sgn(b[i]) != 0) acc += b[i] * q[k - i];
    }
    q[k] = -acc * inv0;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (sgn(b[0]) == 0) throw ZeroConstantTerm();
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  const Rational inv0 = 1 / b[0];
  Rational acc;
  for (int k = 0; k <= n; ++k) {
    acc = a[k];
    for (int i = 1; i <= k; ++i) {
      if (sgn(b[i]) != 0) acc -= b[i] * q[k - i];
    }
    q[k] = acc * inv0;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (sgn(inner[0]) != 0) throw NonzeroInnerConstant();
  const auto v = inner.valuation();
  if (!v) {
    // inner vanishes to its order: only outer(0) survives.
    return TruncatedSeries::constant(outer[0], inner.order());
  }
  const int val = *v;
  const int order = std::min(inner.order(), (outer.order() + 1) * val - 1);
  const int top = std::min(outer.order(), order / val);
  // Horner: R_i = outer[i] + inner * R_{i+1}. R_i ends up multiplied by
  // inner^i, so it is only needed through t^(order - i*val).
  TruncatedSeries acc = TruncatedSeries::constant(outer[top], order - top * val);
  for (int i = top - 1; i >= 0; --i) {
    const int need = order - i * val;
    std::vector<Rational> next(static_cast<std::size_t>(need) + 1);
    // inner * acc where inner starts at t^val and acc is known through
    // need - val.
    const auto ic = inner.coefficients();
    const auto rc = acc.coefficients();
    const bool integral = all_integral(ic.first(need + 1)) && all_integral(rc);
    if (integral) {
      Integer s;
      for (int k = val; k <= need; ++k) {
        s = 0;
        for (int j = val; j <= k; ++j) {
          const auto& x = ic[j].get_num();
          if (x == 0) continue;
          mpz_addmul(s.get_mpz_t(), x.get_mpz_t(), rc[k - j].get_num().get_mpz_t());
        }
        next[k] = Rational(s);
      }
    } else {
      for (int k = val; k <= need; ++k) {
        Rational& s = next[k];
        for (int j = val; j <= k; ++j) {
          if (sgn(ic[j]) == 0 || sgn(rc[k - j]) == 0) continue;
          s += ic[j] * rc[k - j];
        }
      }
    }
    next[0] += outer[i];
    acc = TruncatedSeries(std::move(next));
  }
  return acc;
}

TruncatedSeries reverse(const TruncatedSeries& f) {
  if (f.order() < 1 || sgn(f[0]) != 0 || sgn(f[1]) == 0) throw NotInvertible();
  const int n = f.order();
  // f = t * h with h(0) = f1; r_k = (1/k) [z^(k-1)] (1/h)^k.
  std::vector<Rational> h(f.coefficients().begin() + 1, f.coefficients().end());
  const TruncatedSeries g = reciprocal(TruncatedSeries(std::move(h)));
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
  TruncatedSeries power = g;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) power = multiply(power, g);
    r[k] = power[k - 1] / k;
  }
  return TruncatedSeries(std::move(r));
}

namespace {

// b = a^e from a b' = e a' b, with b(0) supplied by the caller.
TruncatedSeries power_recurrence(const TruncatedSeries& a, const Rational& e, const Rational& b0) {
  const int n = a.order();
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = b0;
  const Rational inv_a0 = 1 / a[0];
  const Rational e1 = e + 1;
  Rational acc, w;
  for (int m = 1; m <= n; ++m) {
    acc = 0;
    for (int k = 1; k <= m; ++k) {
      if (sgn(a[k]) == 0) continue;
      w = e1 * k - m;
      acc += w * a[k] * b[m - k];
    }
    b[m] = acc * inv_a0 / m;
  }
  return TruncatedSeries(std::move(b));
}

}  // namespace

TruncatedSeries pow_rational(const TruncatedSeries& a, const Rational& e) {
  if (a[0] != 1) throw NonUnitConstant();
  return power_recurrence(a, e, Rational(1));
}

TruncatedSeries pow_integer(const TruncatedSeries& a, long e) {
  if (sgn(a[0]) == 0) {
    if (e < 0) throw ZeroConstantTerm();
    TruncatedSeries result = TruncatedSeries::constant(1, a.order());
    TruncatedSeries base = a;
    for (long k = e; k > 0; k >>= 1) {
      if (k & 1) result = multiply(result, base);
      if (k > 1) base = multiply(base, base);
    }
    return result;
  }
  Rational b0 = 1;
  Rational base = e < 0 ? Rational(1 / a[0]) : a[0];
  for (long k = e < 0 ? -e : e; k > 0; --k) b0 *= base;
  return power_recurrence(a, Rational(e), b0);
}

TruncatedSeries dilate(const TruncatedSeries& a, int factor, int target_order) {
  if (factor < 1) throw std::invalid_argument("dilation factor must be positive");
  if (a.order() < target_order / factor) {
    throw std::invalid_argument("series too short for the requested dilation");
  }
  std::vector<Rational> c(static_cast<std::size_t>(target_order) + 1);
  for (int m = 0; m * factor <= target_order; ++m) c[m * factor] = a[m];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries laplace(const TruncatedSeries& a) {
  std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
  Integer f = 1;
  for (int n = 1; n <= a.order(); ++n) {
    f *= n;
    c[n] *= f;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries inverse_laplace(const TruncatedSeries& a) {
  std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
  Integer f = 1;
  for (int n = 1; n <= a.order(); ++n) {
    f *= n;
    c[n] /= f;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries shifted_laplace(const TruncatedSeries& a, const Rational& shift) {
  return laplace(multiply(TruncatedSeries::exponential(shift, a.order()), a));
}

TruncatedSeries regular_shift(const TruncatedSeries& a, const Rational& shift) {
  if (sgn(shift) == 0) return a;
  return shifted_laplace(inverse_laplace(a), shift);
}

TruncatedSeries normalize(const TruncatedSeries& a) {
  if (sgn(a[0]) == 0 || a.order() < 1) return a;
  return regular_shift(a, -a[1] / a[0]);
}

}  // namespace gfano
