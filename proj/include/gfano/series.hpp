#pragma once

#include "gfano/rational.hpp"

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace gfano {

/// A power series in one variable known exactly through t^order.
///
/// Coefficients are stored densely, index 0..order. Binary operations
/// produce a result whose order is the minimum of the operand orders;
/// composition and reversion adjust for valuation. Comparison is
/// coefficient-wise up to the smaller of the two orders.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(int order);
  /// Order is coeffs.size() - 1; coeffs must be non-empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  TruncatedSeries(std::initializer_list<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, int order);
  /// The series t.
  static TruncatedSeries identity(int order);
  /// 1 + t + t^2 + ...
  static TruncatedSeries geometric(int order);
  /// exp(s t).
  static TruncatedSeries exponential(const Rational& s, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  /// Coefficient n, or zero past the end. Only meaningful for n <= order().
  Rational at(int n) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Index of the first nonzero coefficient, nullopt if all are zero.
  std::optional<int> valuation() const;
  bool is_integral() const;

  TruncatedSeries truncated(int order) const;
  /// t^k * this, keeping absolute knowledge (order grows by k).
  TruncatedSeries shifted_up(int k) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Throws ZeroConstantTerm when b(0) = 0.
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries reciprocal(const TruncatedSeries& b);

/// outer(inner(t)). Throws NonzeroInnerConstant when inner(0) != 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse via Lagrange inversion. Throws NotInvertible
/// unless the valuation is exactly 1.
TruncatedSeries reverse(const TruncatedSeries& f);

/// a^e for a(0) = 1 and any rational e. Throws NonUnitConstant otherwise.
TruncatedSeries pow_rational(const TruncatedSeries& a, const Rational& e);
/// a^e for integer e (negative allowed), any nonzero constant term.
TruncatedSeries pow_integer(const TruncatedSeries& a, long e);

/// a(t^factor), known through t^target_order. Requires
/// order(a) >= target_order / factor.
TruncatedSeries dilate(const TruncatedSeries& a, int factor, int target_order);

/// Coefficient n multiplied by n!.
TruncatedSeries laplace(const TruncatedSeries& a);
/// Coefficient n divided by n!.
TruncatedSeries inverse_laplace(const TruncatedSeries& a);
/// laplace(exp(s t) * a).
TruncatedSeries shifted_laplace(const TruncatedSeries& a, const Rational& shift);
/// shifted_laplace(inverse_laplace(a), s). Adds s * a(0) to the linear coefficient.
TruncatedSeries regular_shift(const TruncatedSeries& a, const Rational& shift);
/// regular_shift that zeroes the linear coefficient.
TruncatedSeries normalize(const TruncatedSeries& a);

}  // namespace gfano
