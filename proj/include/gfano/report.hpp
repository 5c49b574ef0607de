#pragma once

#include "gfano/series.hpp"

#include <optional>
#include <string>

namespace gfano {

/// First index where two exactly-compared sequences differ.
struct Mismatch {
  int index = 0;
  Rational left;
  Rational right;
};

/// Coefficient-wise comparison through min(order(a), order(b)).
std::optional<Mismatch> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

struct SeriesComparison {
  std::string name;
  int checked_through = 0;
  std::optional<Mismatch> mismatch;

  bool holds() const { return !mismatch.has_value(); }
};

SeriesComparison compare_series(std::string name, const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace gfano
