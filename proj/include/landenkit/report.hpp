#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "landenkit/landen.hpp"
#include "landenkit/verify.hpp"

namespace landenkit::report {

enum class Format { Table, Csv, Json };

Format format_from_string(std::string_view name);

/// "%.17g" formatting; non-finite values become `null` in JSON and
/// `nan`/`inf` in CSV.
std::string number(double v);
std::string json_number(double v);
std::string json_string(std::string_view s);
/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

/// Header is exactly "r,lhs,rhs,margin,verdict".
std::string to_csv(const verify::SweepReport& report);
/// {theorem_id, params, grid:{start,end,step}, records:[{r,lhs,rhs,margin,verdict}],
///  min_margin, n_violations}
std::string to_json(const verify::SweepReport& report);
std::string to_table(const verify::SweepReport& report);
std::string render(const verify::SweepReport& report, Format format);

std::string render(std::string_view identity, const std::vector<landen::IdentityResidual>& rows,
                   Format format);

}  // namespace landenkit::report
