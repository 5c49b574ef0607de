#pragma once

#include "gfano/d3.hpp"
#include "gfano/eta.hpp"
#include "gfano/mathieu.hpp"
#include "gfano/periods.hpp"
#include "gfano/verifier.hpp"

#include <json.hpp>

namespace gfano {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "gfano-report/1";

/// {"order": K, "coeffs": ["p/q", ...]}
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

/// {"offset": "p/q", "order": K, "coeffs": [...]}; label added when given.
Json qexpansion_to_json(const QExpansion& q, std::string_view label = {});
QExpansion qexpansion_from_json(const Json& j);

/// {"b": ["b1", ..., "b5"]}
Json operator_to_json(const D3Operator& op);
D3Operator operator_from_json(const Json& j);

Json mismatch_to_json(const Mismatch& m);
Json comparison_to_json(const SeriesComparison& c);
Json report_to_json(const IdentityReport& r);
Json descriptor_to_json(const FamilyDescriptor& d);
Json shape_entry_to_json(const ShapeTableEntry& e);
Json correspondence_to_json(const CorrespondenceRow& r);
Json hecke_to_json(const HeckeReport& r);
Json frobenius_mukai_to_json(const FrobeniusMukaiReport& r);

}  // namespace gfano
