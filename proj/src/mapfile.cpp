#include "pcmconley/mapfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pcmconley {

namespace {

Rational rational_field(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key)) throw std::invalid_argument("mapfile: missing field '" + key + "'");
    const auto& v = j.at(key);
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw std::invalid_argument("mapfile: field '" + key + "' must be a \"p/q\" string or integer");
}

bool bool_field(const nlohmann::json& j, const std::string& key, bool fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_boolean())
        throw std::invalid_argument("mapfile: field '" + key + "' must be a boolean");
    return j.at(key).get<bool>();
}

}  // namespace

PCMap mapfile_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("mapfile: top level must be an object");
    if (!j.contains("space") || !j.at("space").is_object())
        throw std::invalid_argument("mapfile: missing 'space' object");
    if (!j.contains("pieces") || !j.at("pieces").is_array() || j.at("pieces").empty())
        throw std::invalid_argument("mapfile: 'pieces' must be a nonempty array");

    PCMap f;
    f.space = Interval(rational_field(j.at("space"), "lo"), rational_field(j.at("space"), "hi"));
    if (j.contains("name")) {
        if (!j.at("name").is_string())
            throw std::invalid_argument("mapfile: 'name' must be a string");
        f.name = j.at("name").get<std::string>();
    }
    for (const auto& pj : j.at("pieces")) {
        if (!pj.is_object()) throw std::invalid_argument("mapfile: each piece must be an object");
        Piece p;
        p.domain = Interval(rational_field(pj, "lo"), rational_field(pj, "hi"));
        p.lo_closed = bool_field(pj, "lo_closed", true);
        p.hi_closed = bool_field(pj, "hi_closed", false);
        p.a = rational_field(pj, "a");
        p.b = rational_field(pj, "b");
        f.pieces.push_back(std::move(p));
    }
    return f;
}

PCMap parse_mapfile(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("mapfile: invalid JSON: ") + e.what());
    }
    return mapfile_from_json(j);
}

PCMap load_mapfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("mapfile: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_mapfile(buf.str());
}

nlohmann::ordered_json mapfile_json(const PCMap& f) {
    nlohmann::ordered_json j;
    if (!f.name.empty()) j["name"] = f.name;
    j["space"] = {{"lo", f.space.lo.str()}, {"hi", f.space.hi.str()}};
    j["pieces"] = nlohmann::ordered_json::array();
    for (const Piece& p : f.pieces) {
        nlohmann::ordered_json pj;
        pj["lo"] = p.domain.lo.str();
        pj["hi"] = p.domain.hi.str();
        pj["lo_closed"] = p.lo_closed;
        pj["hi_closed"] = p.hi_closed;
        pj["a"] = p.a.str();
        pj["b"] = p.b.str();
        j["pieces"].push_back(std::move(pj));
    }
    return j;
}

}  // namespace pcmconley
