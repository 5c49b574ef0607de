#pragma once

#include "gfano/eta.hpp"
#include "gfano/report.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gfano {

enum class FamilyKey { Y48_2, Y48_3, Y30, Y28, Y24, Y20, Y12_2, Y12_3, X6 };

std::string_view to_string(FamilyKey key);
/// Throws UnknownFamily.
FamilyKey parse_family(std::string_view text);

struct FamilyDescriptor {
  FamilyKey key;
  int half_degree;  // N; for the index-2 families the index-1 pattern they reduce to
  int degree;
  int rho;
  int index;
  /// Shift in the modularity table; nullopt when any shift works.
  std::optional<int> table_shift;
  /// Shift s with I = L_s G for the closed-form I-series; nullopt if none is canonical.
  std::optional<int> series_shift;
  /// Fixed constant term of the Hauptmodul, or nullopt when c = s + constant_minus_shift.
  std::optional<int> table_constant;
  int constant_minus_shift;
  std::string_view hauptmodul;  // Monster class label
  std::string_view eta_id;      // "6+", ..., or "1^4" for the sextic double solid
  EtaExponentMap eta;
  Rational exponent;  // sigma1 / 24
  std::optional<std::string_view> d3_key;
  /// Index-1 family whose identity this one reduces to via t -> t^2.
  std::optional<FamilyKey> reduces_to;
  /// (s, c) used when verifying without overrides.
  int default_shift;
  int default_constant;

  /// c for a given s under the table rule.
  Rational constant_for_shift(const Rational& s) const;
};

std::span<const FamilyDescriptor> families();
const FamilyDescriptor& descriptor(FamilyKey key);

/// Closed-form I-series through t^order.
TruncatedSeries iseries(FamilyKey key, int order);

/// G = exp(-s t) * inverse_laplace(I) with the canonical series shift.
/// Throws FreeShift when the family has none.
TruncatedSeries gseries(FamilyKey key, int order);

/// t^2 coefficient of the G-series.
Rational givental_constant(FamilyKey key);

/// I_{6,2;2}(t) = I_{6,2}(t^2) and I_{6,3;2}(t) = I_{6,3}(t^2).
std::vector<SeriesComparison> check_even_substitution(int order);

/// G-series relation between the two index-2 families in x = t^2, checked
/// through x^max_k. Returns the literal relation
///   g3_{2k} = sum_j g2_{2j} / (k-j)!
/// and the binomial-transform form J3_k = sum_j C(k,j) J2_j with
/// J_k = I_k / C(2k,k), which is the form the printed series satisfy.
std::vector<SeriesComparison> check_exp_relation(int max_k);

}  // namespace gfano
