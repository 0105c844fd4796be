#include "landenkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "landenkit/errors.hpp"

namespace landenkit::report {

Format format_from_string(std::string_view name) {
    if (name == "table") return Format::Table;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw ParamError("unknown output format '" + std::string(name) + "'");
}

std::string number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_number(double v) { return std::isfinite(v) ? number(v) : "null"; }

std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string to_csv(const verify::SweepReport& report) {
    std::string out = "r,lhs,rhs,margin,verdict\n";
    for (const auto& rec : report.records) {
        out += number(rec.r) + ',' + number(rec.lhs) + ',' + number(rec.rhs) + ',' +
               number(rec.margin) + ',' + std::string(verify::to_string(rec.verdict)) + '\n';
    }
    return out;
}

std::string to_json(const verify::SweepReport& report) {
    std::ostringstream os;
    os << "{\n  \"theorem_id\": " << json_string(report.theorem_id) << ",\n  \"params\": {";
    for (std::size_t i = 0; i < report.params.size(); ++i) {
        os << (i ? ", " : "") << json_string(report.params[i].name) << ": "
           << json_number(report.params[i].value);
    }
    os << "},\n  \"grid\": {\"start\": " << json_number(report.grid.start)
       << ", \"end\": " << json_number(report.grid.end)
       << ", \"step\": " << json_number(report.grid.step) << "},\n  \"records\": [";
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& rec = report.records[i];
        os << (i ? "," : "") << "\n    {\"r\": " << json_number(rec.r)
           << ", \"lhs\": " << json_number(rec.lhs) << ", \"rhs\": " << json_number(rec.rhs)
           << ", \"margin\": " << json_number(rec.margin)
           << ", \"verdict\": " << json_string(verify::to_string(rec.verdict)) << '}';
    }
    os << (report.records.empty() ? "" : "\n  ") << "],\n  \"min_margin\": "
       << json_number(report.min_margin) << ",\n  \"n_violations\": " << report.n_violations
       << "\n}\n";
    return os.str();
}

std::string to_table(const verify::SweepReport& report) {
    std::ostringstream os;
    os << "theorem " << report.theorem_id;
    for (const auto& p : report.params) os << "  " << p.name << '=' << number(p.value);
    os << '\n';
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %-20s %-20s %-20s %s\n", "r", "lhs", "rhs", "margin",
                  "verdict");
    os << line;
    for (const auto& rec : report.records) {
        std::snprintf(line, sizeof line, "%-8.6g %-20.13g %-20.13g %-20.6e %s\n", rec.r, rec.lhs,
                      rec.rhs, rec.margin, std::string(verify::to_string(rec.verdict)).c_str());
        os << line;
    }
    os << "min_margin " << number(report.min_margin) << "  violations " << report.n_violations
       << " of " << report.records.size() << '\n';
    return os.str();
}

std::string render(const verify::SweepReport& report, Format format) {
    switch (format) {
        case Format::Csv: return to_csv(report);
        case Format::Json: return to_json(report);
        case Format::Table: break;
    }
    return to_table(report);
}

std::string render(std::string_view identity, const std::vector<landen::IdentityResidual>& rows,
                   Format format) {
    double worst = 0.0;
    for (const auto& row : rows) worst = std::max(worst, row.rel_residual);

    std::ostringstream os;
    if (format == Format::Csv) {
        os << "r,lhs,rhs,rel_residual\n";
        for (const auto& row : rows) {
            os << number(row.r) << ',' << number(row.lhs) << ',' << number(row.rhs) << ','
               << number(row.rel_residual) << '\n';
        }
    } else if (format == Format::Json) {
        os << "{\n  \"identity\": " << json_string(identity) << ",\n  \"records\": [";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            os << (i ? "," : "") << "\n    {\"r\": " << json_number(rows[i].r)
               << ", \"lhs\": " << json_number(rows[i].lhs)
               << ", \"rhs\": " << json_number(rows[i].rhs)
               << ", \"rel_residual\": " << json_number(rows[i].rel_residual) << '}';
        }
        os << "\n  ],\n  \"max_rel_residual\": " << json_number(worst) << "\n}\n";
    } else {
        os << "identity " << identity << '\n';
        char line[128];
        std::snprintf(line, sizeof line, "%-8s %-22s %-22s %s\n", "r", "lhs", "rhs",
                      "rel_residual");
        os << line;
        for (const auto& row : rows) {
            std::snprintf(line, sizeof line, "%-8.6g %-22.15g %-22.15g %.3e\n", row.r, row.lhs,
                          row.rhs, row.rel_residual);
            os << line;
        }
        os << "max_rel_residual " << number(worst) << '\n';
    }
    return os.str();
}

}  // namespace landenkit::report
