#pragma once

// Scheme definition files:
//
//   {"name": "triangular-12h", "base_unit_minutes": 1, "cycle_minutes": 720,
//    "rows": [{"lamps": 1}, {"lamps": 2}, {"lamps": 3}, {"lamps": 4}, {"lamps": 5}]}
//
// Unit values are always derived from the lamp counts, so a file cannot
// describe a recurrence breach. base_unit_minutes defaults to 1.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lampclock/codec.hpp"

namespace lampclock {

namespace detail {

inline count_t positive_field(const nlohmann::json& obj, const char* key, std::string_view where) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw invalid_scheme(std::string(where) + ": '" + key + "' must be a positive integer");
    return v.get<count_t>();
}

} // namespace detail

// Parses a scheme without validating it, so callers can report every
// violation (validate()) rather than the first.
inline RowScheme parse_scheme_json_unchecked(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_scheme(std::string("scheme file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw invalid_scheme("scheme file must hold a JSON object");

    for (const auto& [key, _] : doc.items())
        if (key != "name" && key != "base_unit_minutes" && key != "cycle_minutes" && key != "rows")
            throw invalid_scheme("scheme file: unknown key '" + key + "'");

    try {
        RowScheme scheme;
        if (!doc.at("name").is_string() || doc.at("name").get<std::string>().empty())
            throw invalid_scheme("scheme file: 'name' must be a non-empty string");
        scheme.name = doc.at("name").get<std::string>();
        scheme.base_unit_minutes =
            doc.contains("base_unit_minutes") ? detail::positive_field(doc, "base_unit_minutes", "scheme file") : 1;
        scheme.cycle_minutes = detail::positive_field(doc, "cycle_minutes", "scheme file");

        const auto& rows = doc.at("rows");
        if (!rows.is_array() || rows.empty()) throw invalid_scheme("scheme file: 'rows' must be a non-empty array");
        std::vector<count_t> lamps;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const auto& row = rows[k];
            const std::string where = "scheme file rows[" + std::to_string(k) + "]";
            if (!row.is_object() || row.size() != 1 || !row.contains("lamps"))
                throw invalid_scheme(where + ": expected {\"lamps\": <int>}");
            lamps.push_back(detail::positive_field(row, "lamps", where));
        }
        auto units = derive_units(lamps, 1);
        for (std::size_t k = 0; k < lamps.size(); ++k) scheme.rows.push_back({lamps[k], units[k]});
        return scheme;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_scheme(std::string("scheme file: ") + e.what());
    }
}

inline RowScheme parse_scheme_json(std::string_view text) {
    auto scheme = parse_scheme_json_unchecked(text);
    require_valid(scheme);
    return scheme;
}

inline std::string scheme_to_json(const RowScheme& scheme) {
    nlohmann::ordered_json doc;
    doc["name"] = scheme.name;
    doc["base_unit_minutes"] = scheme.base_unit_minutes;
    doc["cycle_minutes"] = scheme.cycle_minutes;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : scheme.rows) doc["rows"].push_back({{"lamps", r.lamp_count}});
    return doc.dump(2);
}

inline std::string read_scheme_file_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_scheme("cannot open scheme file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline RowScheme load_scheme_file(const std::filesystem::path& path) {
    return parse_scheme_json(read_scheme_file_text(path));
}

} // namespace lampclock
