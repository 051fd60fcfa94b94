#pragma once

#include <string>

#include <json.hpp>

#include "grasspack/bounds.hpp"
#include "grasspack/certify.hpp"
#include "grasspack/metrics.hpp"
#include "grasspack/optimize.hpp"

namespace grasspack::io {

// Frame file layout:
//   { "field": "R" | "C", "d": int, "c": int, "n": int,
//     "bases": [ n matrices, each d rows of c entries ] }
// Real entries are numbers; complex entries are [re, im] pairs. Doubles are
// written in shortest round-trip form, so write-then-read is bit-exact.

nlohmann::json frame_to_json(const FusionFrame& f);

/// Throws InvalidInput with a message naming the offending field, e.g.
/// "basis 2: columns not orthonormal ...". Basis numbers are 1-based.
FusionFrame frame_from_json(const nlohmann::json& j, double tol = kDefaultTolerance);

FusionFrame read_frame_file(const std::string& path, double tol = kDefaultTolerance);
void write_frame_file(const std::string& path, const FusionFrame& f);

nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json bound_report_to_json(const BoundReport& report);
nlohmann::json pack_summary_to_json(const PackResult& result, Criterion criterion);

}  // namespace grasspack::io
