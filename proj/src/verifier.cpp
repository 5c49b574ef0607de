#include "gfano/verifier.hpp"

#include "gfano/errors.hpp"
#include "gfano/hauptmodul.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <tuple>

namespace gfano {

namespace {

IdentityReport make_report(std::string identity, std::string family, std::string label, const Rational& s,
                           const Rational& c, int order, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.family = std::move(family);
  r.hauptmodul = std::move(label);
  r.s = s;
  r.c = c;
  r.order = order;
  r.first_mismatch = first_mismatch(lhs, rhs);
  r.pass = !r.first_mismatch.has_value();
  return r;
}

// I-series of X6 evaluated at t = 1/j.
TruncatedSeries sextic_period_at_inverse_j(int order) {
  const TruncatedSeries t = inverse_hauptmodul(klein_j(order)).truncated(order);
  return compose(iseries(FamilyKey::X6, order), t);
}

}  // namespace

IdentityReport verify_identity_for_series(const FamilyDescriptor& family, const TruncatedSeries& series,
                                          const Rational& s, const Rational& c, int order) {
  if (order < 2) throw std::invalid_argument("verification order must be at least 2");
  if (family.reduces_to) {
    throw std::invalid_argument("index-2 families are verified through their index-1 reduction");
  }
  const Rational built_with = family.series_shift.value_or(0);
  const TruncatedSeries shifted = regular_shift(series.truncated(order), s - built_with);
  const QExpansion h = hauptmodul({std::string(family.hauptmodul), c}, order);
  const QExpansion eta_form = eta_product(family.eta, order);
  const auto sides = evaluate_identity(shifted, h, eta_form, family.exponent, order);
  return make_report("eta-product", std::string(to_string(family.key)), std::string(family.hauptmodul), s, c, order,
                     sides.lhs, sides.rhs);
}

IdentityReport verify_identity(FamilyKey key, const Rational& s, const Rational& c, int order) {
  const auto& d = descriptor(key);
  if (d.reduces_to) {
    IdentityReport r = verify_identity(*d.reduces_to, s, c, order);
    const TruncatedSeries even = iseries(key, 2 * order);
    const TruncatedSeries base = dilate(iseries(*d.reduces_to, order), 2, 2 * order);
    r.reduced_to = std::string(to_string(*d.reduces_to));
    r.reduction = compare_series("t -> t^2 reduction", even, base);
    r.family = std::string(to_string(key));
    if (!r.reduction->holds()) {
      r.pass = false;
      if (!r.first_mismatch) r.first_mismatch = r.reduction->mismatch;
    }
    return r;
  }
  return verify_identity_for_series(d, iseries(key, order), s, c, order);
}

std::vector<IdentityReport> sweep_free_shift(FamilyKey key, long s_first, long s_last, int order) {
  const auto& d = descriptor(key);
  if (d.table_shift || d.reduces_to) {
    throw std::invalid_argument("family " + std::string(to_string(key)) + " has a fixed shift; nothing to sweep");
  }
  std::vector<IdentityReport> out;
  for (long s = s_first; s <= s_last; ++s) out.push_back(verify_identity(key, s, d.constant_for_shift(s), order));
  return out;
}

IdentityReport verify_kachru_vafa(int order) {
  if (order < 2) throw std::invalid_argument("verification order must be at least 2");
  const TruncatedSeries lhs = sextic_period_at_inverse_j(order);
  return make_report("kachru-vafa", "X6", "1A", 120, 744, order, multiply(lhs, lhs),
                     eisenstein_e4(order).body());
}

IdentityReport verify_delta(int order) {
  if (order < 2) throw std::invalid_argument("verification order must be at least 2");
  const QExpansion period(0, sextic_period_at_inverse_j(order));
  const QExpansion lhs = klein_j(order).reciprocal() * period.pow(6L);
  const QExpansion rhs = discriminant(order);
  IdentityReport r = make_report("delta", "X6", "1A", 120, 744, order, lhs.body(), rhs.body());
  if (lhs.offset() != rhs.offset()) {
    r.pass = false;
    r.first_mismatch = Mismatch{-1, lhs.offset(), rhs.offset()};
  }
  return r;
}

std::vector<IdentityReport> verify_all(int order) {
  std::vector<std::future<IdentityReport>> jobs;
  for (const auto& d : families()) {
    if (d.key == FamilyKey::X6) continue;
    jobs.push_back(std::async(std::launch::async, [&d, order] {
      return verify_identity(d.key, d.default_shift, d.default_constant, order);
    }));
  }
  jobs.push_back(std::async(std::launch::async, [order] { return verify_kachru_vafa(order); }));
  jobs.push_back(std::async(std::launch::async, [order] { return verify_delta(order); }));
  std::vector<IdentityReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::sort(out.begin(), out.end(), [](const IdentityReport& a, const IdentityReport& b) {
    return std::tie(a.identity, a.family) < std::tie(b.identity, b.family);
  });
  return out;
}

}  // namespace gfano
