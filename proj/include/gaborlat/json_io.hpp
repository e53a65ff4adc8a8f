#pragma once

/**
 * @file json_io.hpp
 * @brief JSON schemas for every value that crosses the CLI boundary.
 *
 * All parsers throw InputError on malformed documents. Serializers emit
 * canonical forms (sorted residues, sorted entries); dump_json_17 prints
 * every floating-point number with 17 significant digits so reports are
 * diff-stable.
 */

#include <string>

// Vendored single-header nlohmann/json.
#include "json.hpp"

#include "gaborlat/admissibility.hpp"
#include "gaborlat/frame_analysis.hpp"
#include "gaborlat/geometry.hpp"
#include "gaborlat/sequence.hpp"
#include "gaborlat/synthesis.hpp"

namespace gaborlat {

nlohmann::json to_json(const PeriodicSet& S);
PeriodicSet periodic_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SparseSequence& f);
SparseSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json windows_to_json(const WindowFamily& g);
WindowFamily windows_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AdmissibilityReport& report);
AdmissibilityReport admissibility_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FrameReport& report);
FrameReport frame_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SynthesisPlan& plan);

/// Serializes with floats rendered as %.17g.
std::string dump_json_17(const nlohmann::json& j, int indent = 2);

/// File helpers used by the CLI; read errors surface as InputError.
nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gaborlat
