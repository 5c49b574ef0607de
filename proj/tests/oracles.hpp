#pragma once

// Slow, independent reference computations. Nothing here calls into the
// library's series code; they work on plain coefficient vectors.

#include <gmpxx.h>

#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Vec = std::vector<Q>;

inline Z fact(unsigned n) {
  Z r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Q frac(const Z& num, const Z& den) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

inline Vec mul(const Vec& a, const Vec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Vec c(n, Q(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// prod_{n>=1} (1 - q^n) by multiplying out one factor at a time.
inline std::vector<Z> naive_euler(int order) {
  std::vector<Z> c(static_cast<std::size_t>(order) + 1, Z(0));
  c[0] = 1;
  for (int n = 1; n <= order; ++n) {
    for (int k = order; k >= n; --k) c[k] -= c[k - n];
  }
  return c;
}

// prod (1 - q^(i n))^a for a >= 0, by repeated multiplication.
inline std::vector<Z> naive_eta_body(const std::vector<std::pair<int, int>>& factors, int order) {
  std::vector<Z> c(static_cast<std::size_t>(order) + 1, Z(0));
  c[0] = 1;
  for (auto [i, a] : factors) {
    for (int rep = 0; rep < a; ++rep) {
      for (int n = 1; i * n <= order; ++n) {
        for (int k = order; k >= i * n; --k) c[k] -= c[k - i * n];
      }
    }
  }
  return c;
}

// Visits every tuple of `parts` nonnegative integers summing to k.
inline void compositions(int k, int parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> x(parts, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parts - 1) {
      x[i] = left;
      visit(x);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      x[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, k);
}

// Term-by-term multi-sums, coefficient of t^k for k <= order.
inline Vec brute_i15(int order) {
  Vec c(order + 1, Q(0));
  for (int k = 0; k <= order; ++k) {
    compositions(k, 3, [&](const std::vector<int>& x) {
      const unsigned a = x[0], b = x[1], d = x[2];
      Z num = fact(a + b) * fact(a + d) * fact(b + d) * fact(a + b + d);
      Z den = fact(a) * fact(b) * fact(d);
      den = den * den * den;
      c[k] += frac(num, den);
    });
  }
  return c;
}

inline Vec brute_i12(int order) {
  Vec c(order + 1, Q(0));
  for (int k = 0; k <= order; ++k) {
    compositions(k, 4, [&](const std::vector<int>& x) {
      Z den = 1;
      for (int v : x) den *= fact(v) * fact(v);
      c[k] += frac(fact(k) * fact(k), den);
    });
  }
  return c;
}

inline Vec brute_i10(int order) {
  Vec c(order + 1, Q(0));
  for (int k = 0; k <= order; ++k) {
    compositions(k, 2, [&](const std::vector<int>& x) {
      Z f = fact(x[0]) * fact(x[1]);
      Z k4 = fact(k);
      k4 = k4 * k4 * k4 * k4;
      c[k] += frac(k4, f * f * f * f);
    });
  }
  return c;
}

inline Vec brute_i62(int order) {
  Vec c(order + 1, Q(0));
  for (int k = 0; k <= order; ++k) {
    compositions(k, 2, [&](const std::vector<int>& x) {
      Z f = fact(x[0]) * fact(x[1]);
      c[k] += frac(fact(k) * fact(2 * k), f * f * f);
    });
  }
  return c;
}

inline Vec brute_i63(int order) {
  Vec c(order + 1, Q(0));
  for (int k = 0; k <= order; ++k) {
    compositions(k, 3, [&](const std::vector<int>& x) {
      Z f = fact(x[0]) * fact(x[1]) * fact(x[2]);
      c[k] += frac(fact(2 * k), f * f);
    });
  }
  return c;
}

// Compositional inverse of f (f0 = 0, f1 != 0) solved one coefficient at a
// time: choose g_n so that f(g(t)) has no t^n term beyond t itself.
inline Vec reverse_by_substitution(const Vec& f) {
  const std::size_t n = f.size();
  Vec g(n, Q(0));
  g[1] = 1 / f[1];
  auto substitute = [&](const Vec& inner) {
    Vec out(n, Q(0));
    Vec pw(n, Q(0));
    pw[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
      pw = mul(pw, inner);
      for (std::size_t i = 0; i < n; ++i) out[i] += f[k] * pw[i];
    }
    return out;
  };
  for (std::size_t m = 2; m < n; ++m) {
    const Vec fg = substitute(g);
    g[m] -= fg[m] / f[1];
  }
  return g;
}

inline Z catalan(unsigned n) {
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), 2 * n, n);
  return r / (n + 1);
}

inline Vec random_vec(std::mt19937& rng, int order, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Vec v(order + 1);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace oracle
