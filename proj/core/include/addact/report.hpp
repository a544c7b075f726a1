#pragma once

#include "addact/json_io.hpp"

namespace addact {

// Full analysis of a pair as an ordered JSON document with stable key
// order; the CLI and the tests both read reports from here so text and
// JSON output can never drift apart.
nlohmann::ordered_json analysis_report(const HPair& p, const DecideOptions& opts = {});

// Human-readable rendering of a report (or any of its sub-documents).
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace addact
