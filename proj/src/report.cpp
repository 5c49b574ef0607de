#include "gfano/report.hpp"

#include <algorithm>

namespace gfano {

std::optional<Mismatch> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k) {
    if (a[k] != b[k]) return Mismatch{k, a[k], b[k]};
  }
  return std::nullopt;
}

SeriesComparison compare_series(std::string name, const TruncatedSeries& a, const TruncatedSeries& b) {
  return {std::move(name), std::min(a.order(), b.order()), first_mismatch(a, b)};
}

}  // namespace gfano
