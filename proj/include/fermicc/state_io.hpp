// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file state_io.hpp
 * @brief JSON state files and machine-readable reports.
 *
 * State schema:
 *   { "fermions": n, "modes": N,
 *     "amplitudes": [ { "indices": [i, j, k], "re": x, "im": y }, ... ] }
 * Indices are strictly increasing 1-based mode labels; duplicate tuples are
 * rejected; unspecified amplitudes are zero.
 */

#pragma once

#include <string>

#include <json.hpp>

#include "fermicc/cluster.hpp"
#include "fermicc/four_eight.hpp"
#include "fermicc/multilinear.hpp"
#include "fermicc/seven_mode.hpp"
#include "fermicc/six_mode.hpp"

namespace fermicc {

inline constexpr std::string_view library_version = "0.1.0";

/// Malformed input (schema violations, bad numbers, duplicate tuples).
class state_format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AntisymTensor state_from_json(const nlohmann::json& j);
AntisymTensor read_state_file(const std::string& path);
nlohmann::json state_to_json(const AntisymTensor& t);

nlohmann::json report_json(const SixClassReport& r);
nlohmann::json report_json(const SevenClassReport& r);
nlohmann::json report_json(const MembershipReport& r, double tol);

/// One-row CSV alternatives (header line + data line).
std::string report_csv(const SixClassReport& r);
std::string report_csv(const SevenClassReport& r);

nlohmann::json ci_to_json(const SixModeCI& ci);
nlohmann::json ci_to_json(const SevenModeCI& ci);
nlohmann::json cc_to_json(const SixModeCC& cc);
nlohmann::json cc_to_json(const SevenModeCC& cc);

/// Inverse of the convert output: reads a document carrying "to" (ci | cc),
/// "coordinates", and optionally "reference_amplitude", and rebuilds the
/// amplitude tensor (rescaled back by the reference amplitude). The mode
/// count is inferred from the coordinate blocks present.
AntisymTensor state_from_coordinates_json(const nlohmann::json& doc);

}  // namespace fermicc
