#pragma once

#include "gfano/series.hpp"

#include <map>
#include <string_view>
#include <vector>

namespace gfano {

/// q^offset * body(q), where offset has denominator dividing 24 and the
/// body has nonzero constant term (the offset absorbs the valuation).
/// The only exception is the zero expansion, whose body is identically 0.
class QExpansion {
 public:
  QExpansion(Rational offset, TruncatedSeries body);

  static QExpansion constant(const Rational& c, int order);

  const Rational& offset() const { return offset_; }
  const TruncatedSeries& body() const { return body_; }
  int order() const { return body_.order(); }
  /// Largest exponent whose coefficient is known.
  Rational top_exponent() const { return offset_ + order(); }
  bool is_zero() const { return !body_.valuation().has_value(); }

  /// Coefficient of q^exponent; zero below the offset. Throws if the
  /// exponent is beyond what is known or not offset + integer.
  Rational coefficient(const Rational& exponent) const;

  QExpansion truncated(int order) const;
  QExpansion pow(const Rational& e) const;
  QExpansion pow(long e) const;
  QExpansion reciprocal() const;

  friend QExpansion operator*(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator/(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator*(const Rational& c, const QExpansion& a);
  /// Defined when offsets differ by an integer. Leading zeros produced by
  /// cancellation are absorbed into the offset.
  friend QExpansion operator+(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator-(const QExpansion& a, const QExpansion& b);
  friend bool operator==(const QExpansion& a, const QExpansion& b);

 private:
  Rational offset_;
  TruncatedSeries body_;
};

/// Cycle length i -> exponent a_i of eta(q^i). Negative exponents give quotients.
using EtaExponentMap = std::map<int, int>;

/// Body coefficients of prod (1 - q^n) through q^order, by the pentagonal
/// number theorem.
TruncatedSeries euler_product(int order);

/// eta(q) = q^(1/24) prod (1 - q^n).
QExpansion eta(int order);

/// prod eta(q^i)^a_i with body known through q^order.
QExpansion eta_product(const EtaExponentMap& exponents, int order);

/// Integer body coefficients 0..order of an eta-product. Exact; runs in
/// O(order^1.5) per factor using sparse pentagonal updates.
std::vector<Integer> eta_product_coefficients(const EtaExponentMap& exponents, int order);

/// The eta-products eta_{n+} for id in {"6+", "10+", "12+", "14+", "15+"}.
/// Throws UnknownLabel otherwise.
const EtaExponentMap& named_eta_product(std::string_view id);

/// sum i * a_i, i.e. 24 times the valuation of the eta-product.
long sigma1(const EtaExponentMap& exponents);
Rational eta_offset(const EtaExponentMap& exponents);

/// sum over d | n of d^3.
Integer divisor_cube_sum(long n);

QExpansion eisenstein_e4(int order);
/// eta^24.
QExpansion discriminant(int order);
/// E4^3 / Delta = 1/q + 744 + 196884 q + ...
QExpansion klein_j(int order);

}  // namespace gfano
