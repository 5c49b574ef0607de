#include "gfano/d3.hpp"

#include "gfano/errors.hpp"

#include <string>
#include <vector>

namespace gfano {

namespace {

const std::vector<D3CatalogEntry>& catalog() {
  static const std::vector<D3CatalogEntry> entries{
      {"L6,2", {6, 368, 88, 1056, 3584}}, {"L6,3", {8, 360, 108, 864, 2160}}, {"L10", {2, 112, 28, 184, 336}},
      {"L12", {2, 80, 24, 96, 0}},        {"L14", {1, 59, 16, 68, 80}},       {"L15", {1, 43, 12, 78, 216}},
  };
  return entries;
}

// Weights of c_{n-1} .. c_{n-4} in coefficient n of the non-D^3 part.
struct ShiftWeights {
  Rational w1, w2, w3, w4;
};

ShiftWeights shift_weights(const D3Operator& op, long n) {
  return {op.b1 * ((n - 1) * n * (2 * n - 1)), Rational((n - 1)) * (op.b2 * (n * (n - 2)) + 4 * op.b3),
          op.b4 * ((n - 1) * (n - 2) * (2 * n - 3)), op.b5 * ((n - 1) * (n - 2) * (n - 3))};
}

}  // namespace

D3Operator from_a_basis(const D3ABasis& a) {
  return {a.a11, a.a12 + 2 * a.a01 - a.a11 * a.a11, a.a01, a.a02 - a.a01 * a.a11, a.a03 - a.a01 * a.a01};
}

D3ABasis to_a_basis(const D3Operator& op) {
  return {op.b3, op.b4 + op.b1 * op.b3, op.b5 + op.b3 * op.b3, op.b1, op.b2 - 2 * op.b3 + op.b1 * op.b1};
}

TruncatedSeries apply(const D3Operator& op, const TruncatedSeries& f) {
  const int order = f.order();
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  for (long n = 0; n <= order; ++n) {
    const auto w = shift_weights(op, n);
    Rational v = Rational(n * n * n) * f[n];
    if (n >= 1) v -= w.w1 * f[n - 1];
    if (n >= 2) v -= w.w2 * f[n - 2];
    if (n >= 3) v -= w.w3 * f[n - 3];
    if (n >= 4) v -= w.w4 * f[n - 4];
    out[n] = v;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries holomorphic_solution(const D3Operator& op, int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (long n = 1; n <= order; ++n) {
    const auto w = shift_weights(op, n);
    Rational v = w.w1 * c[n - 1];
    if (n >= 2) v += w.w2 * c[n - 2];
    if (n >= 3) v += w.w3 * c[n - 3];
    if (n >= 4) v += w.w4 * c[n - 4];
    c[n] = v / (n * n * n);
  }
  return TruncatedSeries(std::move(c));
}

std::span<const D3CatalogEntry> d3_catalog() { return catalog(); }

const D3Operator& catalog_operator(std::string_view key) {
  for (const auto& e : catalog()) {
    if (e.key == key) return e.op;
  }
  throw UnknownLabel(std::string(key));
}

}  // namespace gfano
