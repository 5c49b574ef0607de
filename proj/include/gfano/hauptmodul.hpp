#pragma once

#include "gfano/eta.hpp"

#include <string>
#include <string_view>

namespace gfano {

struct HauptmodulId {
  std::string label;  // 1A, 6A, 10A, 12A, 14A, 15A
  Rational constant;
};

/// Labels with an implemented route.
std::span<const std::string_view> hauptmodul_labels();

/// 1/q + c + O(q) with body known through q^(order-1).
/// 1A is Klein's j; 10A, 12A, 14A, 15A come from eta-quotients; 6A is
/// solved from the D3 solution F_{6,2} with (s, c) = (4, 10).
/// Throws UnknownLabel.
QExpansion hauptmodul(const HauptmodulId& id, int order);

/// The eta-quotient expression for 10A/12A/14A/15A (or j for 1A) with its
/// natural constant term (4, 6, 1, 1, 744).
QExpansion hauptmodul_from_eta_quotient(std::string_view label, int order);

/// Replaces the q^0 coefficient. Throws WrongOffset unless the offset is -1.
QExpansion renormalize_constant(const QExpansion& h, const Rational& c);

/// 1/H as a series in q: q / body(q), valuation 1, known through q^order(h).
TruncatedSeries inverse_hauptmodul(const QExpansion& h);

/// q(t): compositional inverse of t = 1/H(q).
TruncatedSeries mirror_map(const QExpansion& h);

/// Both sides of I(1/H) = eta * H^exponent as offset-0 series in q, known
/// through q^order.
struct IdentitySides {
  TruncatedSeries lhs;
  TruncatedSeries rhs;
};

IdentitySides evaluate_identity(const TruncatedSeries& iseries, const QExpansion& h, const QExpansion& eta_form,
                                const Rational& exponent, int order);

/// Solves for H = 1/q + c + sum h_k q^k such that
/// regular_shift(F, s - F_1)(1/H) = eta_form * H^exponent, one q-order at a
/// time (h_k enters linearly at q^(k+1) with coefficient `exponent`).
/// Throws InconsistentIdentity when q^1 forbids the given (s, c).
QExpansion solve_hauptmodul_from_identity(const TruncatedSeries& normalized_solution, const Rational& s,
                                          const Rational& c, const QExpansion& eta_form, const Rational& exponent,
                                          int order);

}  // namespace gfano
