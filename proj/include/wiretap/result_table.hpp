#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace wiretap {

/// FNV-1a digest of a configuration string, embedded in every output file so
/// figures can be traced back to the exact run that produced them.
inline std::string config_digest(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) h = (h ^ c) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Shortest decimal form that round-trips the double exactly; keeps output
/// files byte-stable across runs.
inline std::string format_double(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Rectangular numeric result set with run metadata.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::string tool_version;
    std::uint64_t seed = 0;
    std::string digest;

    void check_rectangular() const {
        for (const auto& r : rows)
            if (r.size() != columns.size())
                throw std::invalid_argument("ResultTable: ragged row");
    }
};

/// CSV form: '#' metadata lines, a header row, one data row per record,
/// '.' decimal separator, newline terminated.
inline void emit_csv(const ResultTable& t, std::ostream& os) {
    t.check_rectangular();
    os << "# tool_version=" << t.tool_version << "\n";
    os << "# seed=" << t.seed << "\n";
    os << "# config_digest=" << t.digest << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_double(row[i]);
        os << "\n";
    }
}

inline nlohmann::ordered_json to_json(const ResultTable& t) {
    t.check_rectangular();
    nlohmann::ordered_json j;
    j["metadata"] = {{"tool_version", t.tool_version},
                     {"seed", t.seed},
                     {"config_digest", t.digest}};
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    return j;
}

inline void emit_json(const ResultTable& t, std::ostream& os) {
    os << to_json(t).dump(2) << "\n";
}

inline ResultTable table_from_json(const nlohmann::json& j) {
    ResultTable t;
    t.tool_version = j.at("metadata").at("tool_version").get<std::string>();
    t.seed = j.at("metadata").at("seed").get<std::uint64_t>();
    t.digest = j.at("metadata").at("config_digest").get<std::string>();
    t.columns = j.at("columns").get<std::vector<std::string>>();
    t.rows = j.at("rows").get<std::vector<std::vector<double>>>();
    t.check_rectangular();
    return t;
}

}  // namespace wiretap
