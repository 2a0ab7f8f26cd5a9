#pragma once

// Flat report records and their JSON, CSV and text renderings.

#include "montesinos/surface.hpp"

#include <json.hpp>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace montesinos {

/// Everything a report prints, in plain values.
struct ReportRecord {
    std::string knot;
    std::string type;
    std::string slope;
    std::string twist;
    std::string slope_raw;
    std::string u;
    std::int64_t sheets = 1;
    std::optional<std::int64_t> euler;
    std::int64_t boundary_components = 1;
    std::string essential;
    bool seifert = false;
    std::vector<std::string> paths;
    std::optional<std::string> note;

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

inline ReportRecord to_record(const SurfaceReport& r) {
    ReportRecord rec;
    rec.knot = r.system.knot.str();
    rec.type = to_string(r.system.system_type);
    rec.slope = r.slope.str();
    rec.twist = r.twist.str();
    rec.slope_raw = r.slope_raw();
    rec.u = r.system.common_u.str();
    rec.sheets = to_int64(r.sheets);
    if (r.euler) rec.euler = to_int64(*r.euler);
    rec.boundary_components = to_int64(r.boundary_components);
    rec.essential = to_string(r.essential);
    rec.seifert = r.seifert;
    for (const auto& p : r.system.paths) rec.paths.push_back(p.str());
    return rec;
}

inline nlohmann::ordered_json to_json(const ReportRecord& r) {
    nlohmann::ordered_json j;
    j["slope"] = r.slope;
    j["twist"] = r.twist;
    j["sheets"] = r.sheets;
    j["euler"] = r.euler ? nlohmann::ordered_json(*r.euler) : nlohmann::ordered_json(nullptr);
    j["boundary_components"] = r.boundary_components;
    j["essential"] = r.essential;
    j["type"] = r.type;
    j["seifert"] = r.seifert;
    j["slope_raw"] = r.slope_raw;
    j["u"] = r.u;
    j["knot"] = r.knot;
    j["paths"] = r.paths;
    if (r.note) j["note"] = *r.note;
    return j;
}

inline ReportRecord record_from_json(const nlohmann::ordered_json& j) {
    ReportRecord r;
    r.slope = j.at("slope").get<std::string>();
    r.twist = j.at("twist").get<std::string>();
    r.sheets = j.at("sheets").get<std::int64_t>();
    if (!j.at("euler").is_null()) r.euler = j.at("euler").get<std::int64_t>();
    r.boundary_components = j.at("boundary_components").get<std::int64_t>();
    r.essential = j.at("essential").get<std::string>();
    r.type = j.at("type").get<std::string>();
    r.seifert = j.at("seifert").get<bool>();
    r.slope_raw = j.at("slope_raw").get<std::string>();
    r.u = j.at("u").get<std::string>();
    r.knot = j.at("knot").get<std::string>();
    r.paths = j.at("paths").get<std::vector<std::string>>();
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    return r;
}

inline nlohmann::ordered_json to_json(const EdgepathSystem& sys) {
    nlohmann::ordered_json j;
    j["knot"] = sys.knot.str();
    j["type"] = to_string(sys.system_type);
    j["u"] = sys.common_u.str();
    std::vector<std::string> paths;
    for (const auto& p : sys.paths) paths.push_back(p.str());
    j["paths"] = paths;
    return j;
}

inline const char* csv_header() {
    return "knot,type,slope,twist,sheets,euler,boundary_components,essential,seifert";
}

inline std::string to_csv_row(const ReportRecord& r) {
    std::ostringstream os;
    os << '"' << r.knot << "\"," << r.type << ',' << r.slope << ',' << r.twist << ',' << r.sheets << ','
       << (r.euler ? std::to_string(*r.euler) : std::string{}) << ',' << r.boundary_components << ','
       << r.essential << ',' << (r.seifert ? "true" : "false");
    return os.str();
}

inline std::string to_text_table(const std::vector<ReportRecord>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"type", "slope", "twist", "sheets", "euler", "bdry", "essential", "seifert", "paths"});
    for (const auto& r : rows) {
        std::string paths;
        for (const auto& p : r.paths) paths += (paths.empty() ? "" : " | ") + p;
        cells.push_back({r.type, r.slope, r.twist, std::to_string(r.sheets), r.euler ? std::to_string(*r.euler) : "-",
                         std::to_string(r.boundary_components), r.essential, r.seifert ? "yes" : "", paths});
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i + 1 < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i + 1 < row.size())
                os << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
            else
                os << row[i];
        }
        os << '\n';
    }
    return os.str();
}

/// Display-only decimal with 12 significant digits.
inline std::string to_decimal(const Fraction& f) {
    if (f.is_infinite()) return "inf";
    using Dec = boost::multiprecision::cpp_dec_float_50;
    Dec x(f.num());
    x /= Dec(f.den());
    return x.str(12);
}

}  // namespace montesinos
