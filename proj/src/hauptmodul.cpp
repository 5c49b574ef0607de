#include "gfano/hauptmodul.hpp"

#include "gfano/d3.hpp"
#include "gfano/errors.hpp"

#include <array>
#include <map>
#include <mutex>

namespace gfano {

namespace {

constexpr std::array<std::string_view, 6> kLabels{"1A", "6A", "10A", "12A", "14A", "15A"};

// A + f + B/f with f = eta-quotient of offset -1.
QExpansion fricke_sum(const Rational& a, const EtaExponentMap& f_map, const Rational& b, int order) {
  const QExpansion f = eta_product(f_map, order);
  return QExpansion::constant(a, order) + f + b * f.reciprocal();
}

// T_{6A,10} solved from the F_{6,2} identity; cached per order.
QExpansion canonical_6a(int order) {
  static std::mutex mutex;
  static std::map<int, QExpansion> cache;
  std::lock_guard lock(mutex);
  for (const auto& [k, h] : cache) {
    if (k >= order) return h.truncated(order);
  }
  const TruncatedSeries f = holomorphic_solution(catalog_operator("L6,2"), order);
  QExpansion h = solve_hauptmodul_from_identity(f, 4, 10, eta_product(named_eta_product("6+"), order),
                                                Rational(1, 2), order);
  cache.emplace(order, h);
  return h;
}

}  // namespace

std::span<const std::string_view> hauptmodul_labels() { return kLabels; }

QExpansion hauptmodul_from_eta_quotient(std::string_view label, int order) {
  if (order < 2) throw std::invalid_argument("Hauptmodul order must be at least 2");
  if (label == "1A") return klein_j(order);
  if (label == "10A") return fricke_sum(8, {{1, 4}, {5, 4}, {2, -4}, {10, -4}}, 16, order);
  if (label == "12A") return eta_product({{2, 12}, {6, 12}, {1, -6}, {3, -6}, {4, -6}, {12, -6}}, order);
  if (label == "14A") return fricke_sum(4, {{1, 3}, {7, 3}, {2, -3}, {14, -3}}, 8, order);
  if (label == "15A") return fricke_sum(3, {{1, 2}, {5, 2}, {3, -2}, {15, -2}}, 9, order);
  throw UnknownLabel(std::string(label));
}

QExpansion hauptmodul(const HauptmodulId& id, int order) {
  if (id.label == "6A") {
    if (order < 2) throw std::invalid_argument("Hauptmodul order must be at least 2");
    return renormalize_constant(canonical_6a(order), id.constant);
  }
  return renormalize_constant(hauptmodul_from_eta_quotient(id.label, order), id.constant);
}

QExpansion renormalize_constant(const QExpansion& h, const Rational& c) {
  if (h.offset() != -1) throw WrongOffset("Hauptmodul must have offset -1, got " + to_string(h.offset()));
  if (h.order() < 1) throw WrongOffset("Hauptmodul body too short to hold a constant term");
  std::vector<Rational> body(h.body().coefficients().begin(), h.body().coefficients().end());
  body[1] = c;
  return QExpansion(-1, TruncatedSeries(std::move(body)));
}

TruncatedSeries inverse_hauptmodul(const QExpansion& h) {
  if (h.offset() != -1) throw WrongOffset("Hauptmodul must have offset -1, got " + to_string(h.offset()));
  return reciprocal(h.body()).shifted_up(1);
}

TruncatedSeries mirror_map(const QExpansion& h) { return reverse(inverse_hauptmodul(h)); }

IdentitySides evaluate_identity(const TruncatedSeries& iseries, const QExpansion& h, const QExpansion& eta_form,
                                const Rational& exponent, int order) {
  const TruncatedSeries t = inverse_hauptmodul(h.truncated(order)).truncated(order);
  TruncatedSeries lhs = compose(iseries.truncated(order), t);
  const QExpansion rhs = eta_form.truncated(order) * h.truncated(order).pow(exponent);
  if (rhs.offset() != 0) {
    throw WrongOffset("right-hand side has offset " + to_string(rhs.offset()) + ", expected 0");
  }
  return {std::move(lhs), rhs.body()};
}

QExpansion solve_hauptmodul_from_identity(const TruncatedSeries& normalized_solution, const Rational& s,
                                          const Rational& c, const QExpansion& eta_form, const Rational& exponent,
                                          int order) {
  if (order < 2) throw std::invalid_argument("Hauptmodul order must be at least 2");
  if (sgn(exponent) == 0) throw InconsistentIdentity(2, "zero pivot: exponent is 0");
  const TruncatedSeries series = regular_shift(normalized_solution, s - normalized_solution[1]);
  std::vector<Rational> body(static_cast<std::size_t>(order) + 1);
  body[0] = 1;
  body[1] = c;
  auto sides_at = [&](int m) {
    std::vector<Rational> prefix(body.begin(), body.begin() + m + 1);
    return evaluate_identity(series, QExpansion(-1, TruncatedSeries(std::move(prefix))), eta_form, exponent, m);
  };
  {
    const auto sides = sides_at(1);
    for (int k = 0; k <= 1; ++k) {
      if (sides.lhs[k] != sides.rhs[k]) {
        throw InconsistentIdentity(k, "lhs " + to_string(sides.lhs[k]) + " vs rhs " + to_string(sides.rhs[k]));
      }
    }
  }
  for (int m = 2; m <= order; ++m) {
    const auto sides = sides_at(m);
    body[m] = (sides.lhs[m] - sides.rhs[m]) / exponent;
  }
  QExpansion h(-1, TruncatedSeries(body));
  const auto check = evaluate_identity(series, h, eta_form, exponent, order);
  for (int k = 0; k <= order; ++k) {
    if (check.lhs[k] != check.rhs[k]) {
      throw InconsistentIdentity(k, "pivot did not eliminate the residual");
    }
  }
  return h;
}

}  // namespace gfano
