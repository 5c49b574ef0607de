#pragma once

#include "gfano/series.hpp"

#include <span>
#include <string_view>

namespace gfano {

/// Normalized third-order operator in D = t d/dt:
///
///   D^3 - t b1 D(D+1)(2D+1) - t^2 (D+1)(b2 D(D+2) + 4 b3)
///       - t^3 b4 (D+1)(D+2)(2D+3) - t^4 b5 (D+1)(D+2)(D+3)
struct D3Operator {
  Rational b1, b2, b3, b4, b5;

  friend bool operator==(const D3Operator&, const D3Operator&) = default;
};

/// The same parameter space in the original (a01, a02, a03, a11, a12) basis.
struct D3ABasis {
  Rational a01, a02, a03, a11, a12;

  friend bool operator==(const D3ABasis&, const D3ABasis&) = default;
};

D3Operator from_a_basis(const D3ABasis& a);
D3ABasis to_a_basis(const D3Operator& op);

/// L f, known through the same order as f.
TruncatedSeries apply(const D3Operator& op, const TruncatedSeries& f);

/// The analytic solution with f(0) = 1, from the coefficient recursion
///   n^3 c_n = b1 n(n-1)(2n-1) c_{n-1} + (n-1)(b2 n(n-2) + 4 b3) c_{n-2}
///           + b4 (n-1)(n-2)(2n-3) c_{n-3} + b5 (n-1)(n-2)(n-3) c_{n-4}.
TruncatedSeries holomorphic_solution(const D3Operator& op, int order);

struct D3CatalogEntry {
  std::string_view key;  // "L6,2", "L6,3", "L10", "L12", "L14", "L15"
  D3Operator op;
};

std::span<const D3CatalogEntry> d3_catalog();
/// Throws UnknownLabel for keys outside the catalog.
const D3Operator& catalog_operator(std::string_view key);

}  // namespace gfano
