#pragma once

#include "gfano/periods.hpp"
#include "gfano/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gfano {

/// Outcome of one exact identity check. PASS means every coefficient
/// through `order` agrees.
struct IdentityReport {
  std::string identity;  // "eta-product", "kachru-vafa" or "delta"
  std::string family;
  std::string hauptmodul;
  Rational s;
  Rational c;
  int order = 0;
  bool pass = false;
  std::optional<Mismatch> first_mismatch;
  /// Index-1 family used for an index-2 check, with the t -> t^2 comparison.
  std::optional<std::string> reduced_to;
  std::optional<SeriesComparison> reduction;
};

/// I_s(1/H_{g,c}) = eta_{n+} * H_{g,c}^(sigma1/24), through q^order.
/// Index-2 families are checked through their index-1 reduction plus the
/// even-substitution comparison; both must hold.
IdentityReport verify_identity(FamilyKey key, const Rational& s, const Rational& c, int order);

/// Same check for an arbitrary I-series, taken to be built with the
/// family's series shift (used to probe perturbed series).
IdentityReport verify_identity_for_series(const FamilyDescriptor& family, const TruncatedSeries& series,
                                          const Rational& s, const Rational& c, int order);

/// verify_identity with c = s + 1 for every integer s in [s_first, s_last].
/// Only families whose shift is free (Y28, Y30) are accepted.
std::vector<IdentityReport> sweep_free_shift(FamilyKey key, long s_first, long s_last, int order);

/// (sum (6n)!/((3n)! n!^3) j^-n)^2 = E4, checked in squared form.
IdentityReport verify_kachru_vafa(int order);

/// j^-1 (sum (6n)!/((3n)! n!^3) j^-n)^6 = Delta.
IdentityReport verify_delta(int order);

/// The six index-1 rows at their default (s, c), the two index-2
/// reductions, and the two j-identities; computed concurrently and sorted.
std::vector<IdentityReport> verify_all(int order);

}  // namespace gfano
