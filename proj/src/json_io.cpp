#include "gfano/json_io.hpp"

#include "gfano/errors.hpp"

namespace gfano {

namespace {

Json rational_list(std::span<const Rational> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

std::vector<Rational> parse_list(const Json& arr) {
  if (!arr.is_array()) throw ParseError("expected an array of fraction strings");
  std::vector<Rational> out;
  for (const auto& v : arr) {
    if (v.is_string()) {
      out.push_back(parse_rational(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      out.emplace_back(v.get<long>());
    } else {
      throw ParseError("coefficient must be a fraction string");
    }
  }
  return out;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json("FREE"); }

}  // namespace

Json series_to_json(const TruncatedSeries& s) { return {{"order", s.order()}, {"coeffs", rational_list(s.coefficients())}}; }

TruncatedSeries series_from_json(const Json& j) {
  auto coeffs = parse_list(j.at("coeffs"));
  const int order = j.at("order").get<int>();
  if (static_cast<int>(coeffs.size()) != order + 1) throw ParseError("coefficient count does not match order");
  return TruncatedSeries(std::move(coeffs));
}

Json qexpansion_to_json(const QExpansion& q, std::string_view label) {
  Json j = series_to_json(q.body());
  j["offset"] = to_string(q.offset());
  if (!label.empty()) j["label"] = std::string(label);
  return j;
}

QExpansion qexpansion_from_json(const Json& j) {
  return QExpansion(parse_rational(j.at("offset").get<std::string>()), series_from_json(j));
}

Json operator_to_json(const D3Operator& op) {
  const std::array<Rational, 5> b{op.b1, op.b2, op.b3, op.b4, op.b5};
  return {{"b", rational_list(b)}};
}

D3Operator operator_from_json(const Json& j) {
  const auto b = parse_list(j.at("b"));
  if (b.size() != 5) throw ParseError("a D3 operator has exactly five parameters");
  return {b[0], b[1], b[2], b[3], b[4]};
}

Json mismatch_to_json(const Mismatch& m) {
  return {{"index", m.index}, {"lhs", to_string(m.left)}, {"rhs", to_string(m.right)}};
}

Json comparison_to_json(const SeriesComparison& c) {
  Json j{{"name", c.name}, {"checked_through", c.checked_through}, {"holds", c.holds()}};
  j["first_mismatch"] = c.mismatch ? mismatch_to_json(*c.mismatch) : Json(nullptr);
  return j;
}

Json report_to_json(const IdentityReport& r) {
  Json j{{"schema", kReportSchema},
         {"identity", r.identity},
         {"family", r.family},
         {"hauptmodul", r.hauptmodul},
         {"s", to_string(r.s)},
         {"c", to_string(r.c)},
         {"order", r.order},
         {"status", r.pass ? "PASS" : "FAIL"}};
  j["first_mismatch"] = r.first_mismatch ? mismatch_to_json(*r.first_mismatch) : Json(nullptr);
  if (r.reduced_to) j["reduced_to"] = *r.reduced_to;
  if (r.reduction) j["reduction"] = comparison_to_json(*r.reduction);
  return j;
}

Json descriptor_to_json(const FamilyDescriptor& d) {
  Json eta = Json::object();
  for (const auto& [length, power] : d.eta) eta[std::to_string(length)] = power;
  Json j{{"key", std::string(to_string(d.key))},
         {"N", d.half_degree},
         {"degree", d.degree},
         {"rho", d.rho},
         {"index", d.index},
         {"s", optional_int(d.table_shift)},
         {"series_shift", d.series_shift ? Json(*d.series_shift) : Json(nullptr)},
         {"g", std::string(d.hauptmodul)},
         {"eta_id", std::string(d.eta_id)},
         {"eta", eta},
         {"exponent", to_string(d.exponent)},
         {"default_s", d.default_shift},
         {"default_c", d.default_constant}};
  j["c"] = d.table_constant ? Json(std::to_string(*d.table_constant))
                            : Json("s+" + std::to_string(d.constant_minus_shift));
  j["d3"] = d.d3_key ? Json(std::string(*d.d3_key)) : Json(nullptr);
  j["reduces_to"] = d.reduces_to ? Json(std::string(to_string(*d.reduces_to))) : Json(nullptr);
  return j;
}

Json shape_entry_to_json(const ShapeTableEntry& e) {
  return {{"shape", e.shape.to_string()},
          {"order", e.shape.order()},
          {"level", e.shape.level()},
          {"weight", to_string(e.shape.weight())},
          {"fixed_points", e.shape.fixed_points()},
          {"printed_order", e.order},
          {"printed_level", e.level},
          {"printed_weight", to_string(e.weight)}};
}

Json correspondence_to_json(const CorrespondenceRow& r) {
  Json j{{"N", r.row.n},
         {"epsilon", to_string(r.epsilon)},
         {"iota", to_string(r.iota)},
         {"printed_epsilon", to_string(r.row.printed_epsilon)},
         {"printed_iota", to_string(r.row.printed_iota) + (r.row.iota_starred ? "*" : "")},
         {"s", optional_int(r.row.s)},
         {"g", std::string(r.row.g)},
         {"rho", r.row.rho},
         {"rational_type", r.rational_type}};
  j["c"] = r.row.c ? Json(std::to_string(*r.row.c)) : Json("s+" + std::to_string(r.row.c_minus_s));
  j["family"] = r.row.family ? Json(std::string(to_string(*r.row.family))) : Json(nullptr);
  j["m23_shape"] = r.m23_shape ? Json(r.m23_shape->to_string()) : Json(nullptr);
  return j;
}

Json hecke_to_json(const HeckeReport& r) {
  return {{"shape", r.shape},
          {"weight", to_string(r.weight)},
          {"level", r.level},
          {"bound", r.bound},
          {"prime_bound", r.prime_bound},
          {"multiplicativity_checks", r.multiplicativity_checks},
          {"prime_power_checks", r.prime_power_checks},
          {"prime_power_checked", r.prime_power_checked},
          {"note", r.note},
          {"violations", r.violations},
          {"holds", r.holds()}};
}

Json frobenius_mukai_to_json(const FrobeniusMukaiReport& r) {
  auto entry = [](const FrobeniusMukaiEntry& e) {
    return Json{{"shape", e.shape.to_string()},
                {"order", e.order},
                {"fixed_points", e.fixed_points},
                {"epsilon", to_string(e.epsilon)},
                {"cycle_count", e.cycle_count},
                {"iota", to_string(e.iota)},
                {"iota_printed", e.iota_printed},
                {"fixed_points_match", e.fixed_points_match()},
                {"cycle_count_match", e.cycle_count_match()}};
  };
  Json m23 = Json::array();
  for (const auto& e : r.m23) m23.push_back(entry(e));
  Json flagged = Json::array();
  for (const auto& e : r.flagged) flagged.push_back(entry(e));
  return {{"m23", m23}, {"flagged", flagged}, {"holds", r.holds()}};
}

}  // namespace gfano
