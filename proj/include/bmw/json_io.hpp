#pragma once

#include "bmw/permgroup.hpp"
#include "bmw/radu.hpp"
#include "bmw/randmodel.hpp"
#include "bmw/structure.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bmw {

using Json = nlohmann::ordered_json;

inline constexpr const char* kTupleSchema = "bmw.tuple.v1";
inline constexpr const char* kStructureSetSchema = "bmw.structure-set.v1";
inline constexpr const char* kReportSchema = "bmw.report.v1";
inline constexpr const char* kEstimateSchema = "bmw.estimate.v1";
inline constexpr const char* kCensusSchema = "bmw.census.v1";
inline constexpr const char* kRaduSchema = "bmw.radu-verification.v1";

Json to_json(const InvolutionTuple& t);
/// Accepts {"m","n","involutions":[[...],...]} with 1-based images; the
/// schema field is optional on input. Throws FormatError.
InvolutionTuple tuple_from_json(const Json& j);

Json to_json(const StructureSet& s);
Json to_json(const StructureSet& s, const std::vector<TaggedSquare>& families);
/// Throws FormatError for malformed documents; exact-cover failures
/// propagate from validate().
StructureSet structure_set_from_json(const Json& j);

Json to_json(const GroupClassification& c);
Json to_json(const CertificateReport& r);
Json to_json(const McEstimate& e);
Json to_json(const RaduVerification& v);

}  // namespace bmw
