#pragma once

#include "gfano/series.hpp"
#include "oracles.hpp"

#include <vector>

inline gfano::TruncatedSeries from_vec(const oracle::Vec& v) { return gfano::TruncatedSeries(v); }

inline oracle::Vec to_vec(const gfano::TruncatedSeries& s) {
  return oracle::Vec(s.coefficients().begin(), s.coefficients().end());
}

inline gfano::TruncatedSeries ints(std::vector<long> v) {
  std::vector<gfano::Rational> c;
  for (long x : v) c.emplace_back(x);
  return gfano::TruncatedSeries(std::move(c));
}

// Random series with a(0) = 1.
inline gfano::TruncatedSeries random_unit(std::mt19937& rng, int order) {
  auto v = oracle::random_vec(rng, order, -9, 9);
  v[0] = 1;
  return from_vec(v);
}
