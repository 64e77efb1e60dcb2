#pragma once

#include <nlohmann/json.hpp>

#include "jlf/error.hpp"
#include "jlf/filtration.hpp"
#include "jlf/support.hpp"
#include "jlf/transfer.hpp"
#include "jlf/triples.hpp"

namespace jlf {

// Machine-readable report documents. Rationals are always strings; every
// document carries "degree_d" and "cuspidals" so it re-parses on its own.

nlohmann::json labels_to_json(const LabelTable& labels);
LabelTable labels_from_json(const nlohmann::json& doc);

nlohmann::json factors_to_json(const Support& support);

/// Same shape as the input problem document.
nlohmann::json support_to_json(const Support& support);
Support support_from_json(const nlohmann::json& doc);

nlohmann::json point_to_json(const ExponentPoint& point);
ExponentPoint point_from_json(const nlohmann::json& doc);

/// Array of block records {label, length, center}.
nlohmann::json triple_to_json(const Triple& triple);
Triple triple_from_json(const nlohmann::json& blocks, Side side, const LabelTable& labels);

nlohmann::json orbits_to_json(const std::vector<TripleOrbit>& orbits);

nlohmann::json transfer_to_json(const TransferredSupport& transfer);

nlohmann::json report_to_json(const FiltrationReport& report, const LabelTable& labels);
FiltrationReport report_from_json(const nlohmann::json& doc);

nlohmann::json correspondence_to_json(const CorrespondenceReport& report, const Support& inner);
CorrespondenceReport correspondence_from_json(const nlohmann::json& doc);

nlohmann::json error_to_json(const Error& error);

}  // namespace jlf
