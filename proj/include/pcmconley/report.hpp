#pragma once

#include "pcmconley/pipeline.hpp"

#include "json.hpp"

#include <string>

namespace pcmconley {

// Deterministic analysis reports: rationals as "p/q" strings, fixed key
// order, no timestamps or environment data. schema_version 1.
nlohmann::ordered_json report_json(const PipelineResult& r);
nlohmann::ordered_json report_json(const WazewskiCheck& c);

std::string report_text(const PipelineResult& r);
std::string report_text(const WazewskiCheck& c);

}  // namespace pcmconley
