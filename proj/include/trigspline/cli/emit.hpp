#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "trigspline/analysis.hpp"

namespace trigspline::cli {

/// Header plus rows, all rows as wide as the header.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Shortest decimal text that parses back to the same double; "nan" for NaN.
[[nodiscard]] std::string format_number(double value);

/// RFC-4180 style: ',' separated, '\n' line endings, fields quoted when needed.
[[nodiscard]] std::string to_csv(const CsvTable& table);

/// Columns alpha,value,valid plus reference when the curve has one.
[[nodiscard]] CsvTable curve_table(const SweepCurve& curve);
/// Columns t,value.
[[nodiscard]] CsvTable sampled_table(std::span<const double> t, std::span<const double> values);

[[nodiscard]] nlohmann::json spec_to_json(const SplineSpec& spec);
[[nodiscard]] SplineSpec spec_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json curve_to_json(const SweepCurve& curve);
[[nodiscard]] SweepCurve curve_from_json(const nlohmann::json& j);

/// Writes through a temporary file in the same directory and renames it into
/// place. Throws std::runtime_error when the path is not writable.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace trigspline::cli
