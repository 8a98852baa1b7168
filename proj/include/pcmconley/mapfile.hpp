#pragma once

#include "pcmconley/pcmap.hpp"

#include "json.hpp"

#include <string>

namespace pcmconley {

// Map description format:
//   {"space": {"lo": "-1", "hi": "2"},
//    "pieces": [{"lo": "-1", "hi": "-1/3", "lo_closed": true,
//                "hi_closed": false, "a": "1", "b": "1/3"}, ...],
//    "name": "optional"}
// Rationals are "p/q" strings; plain JSON integers are accepted too.
// lo_closed defaults to true, hi_closed to false.
PCMap mapfile_from_json(const nlohmann::json& j);
PCMap parse_mapfile(const std::string& text);
PCMap load_mapfile(const std::string& path);

nlohmann::ordered_json mapfile_json(const PCMap& f);

}  // namespace pcmconley
