#include "trigspline/cli/emit.hpp"

#include <unistd.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "trigspline/error.hpp"

namespace trigspline::cli {

using nlohmann::json;

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

double number_or_nan(const json& j) { return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>(); }

}  // namespace

std::string to_csv(const CsvTable& table) {
    std::string out;
    auto line = [&](const std::vector<std::string>& fields) {
        if (fields.size() != table.header.size()) {
            throw std::logic_error("CSV row width differs from header");
        }
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) out += ',';
            out += csv_field(fields[i]);
        }
        out += '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
    return out;
}

CsvTable curve_table(const SweepCurve& curve) {
    CsvTable t;
    t.header = {"alpha", "value", "valid"};
    if (curve.reference) t.header.emplace_back("reference");
    for (std::size_t i = 0; i < curve.alphas.size(); ++i) {
        std::vector<std::string> row{format_number(curve.alphas[i]), format_number(curve.values[i]),
                                     curve.valid[i] ? "1" : "0"};
        if (curve.reference) row.push_back(format_number(*curve.reference));
        t.rows.push_back(std::move(row));
    }
    return t;
}

CsvTable sampled_table(std::span<const double> t, std::span<const double> values) {
    CsvTable table;
    table.header = {"t", "value"};
    for (std::size_t i = 0; i < t.size(); ++i) table.rows.push_back({format_number(t[i]), format_number(values[i])});
    return table;
}

json spec_to_json(const SplineSpec& spec) {
    return json{{"I1", spec.I1},
                {"I2", spec.I2},
                {"gamma", {spec.gamma.g1, spec.gamma.g2, spec.gamma.g3}},
                {"factor", std::string(to_string(spec.factor.kind))},
                {"alpha", spec.factor.alpha},
                {"r", spec.factor.r},
                {"N", spec.N},
                {"truncation",
                 {{"mode", std::string(to_string(spec.truncation.mode))},
                  {"tail_tol", spec.truncation.tail_tol},
                  {"m_max", spec.truncation.m_max},
                  {"fixed_terms", spec.truncation.fixed_terms}}}};
}

SplineSpec spec_from_json(const json& j) {
    SplineSpec spec;
    spec.I1 = j.at("I1").get<int>();
    spec.I2 = j.at("I2").get<int>();
    const auto g = j.at("gamma").get<std::vector<double>>();
    if (g.size() != 3) throw SplineError(ErrorKind::InvalidSpec, "gamma needs three components");
    spec.gamma = {g[0], g[1], g[2]};
    spec.factor.kind = parse_factor_kind(j.at("factor").get<std::string>());
    spec.factor.alpha = j.at("alpha").get<double>();
    spec.factor.r = j.at("r").get<int>();
    spec.N = j.at("N").get<int>();
    const json& t = j.at("truncation");
    spec.truncation.mode = parse_truncation_mode(t.at("mode").get<std::string>());
    spec.truncation.tail_tol = t.at("tail_tol").get<double>();
    spec.truncation.m_max = t.at("m_max").get<long long>();
    spec.truncation.fixed_terms = t.at("fixed_terms").get<long long>();
    return spec;
}

json curve_to_json(const SweepCurve& curve) {
    json values = json::array();
    for (double v : curve.values) values.push_back(std::isnan(v) ? json(nullptr) : json(v));
    json minima = json::array();
    for (const auto& m : curve.minima) minima.push_back({{"alpha", m.alpha}, {"value", m.value}, {"index", m.index}});
    std::vector<int> valid;
    for (bool v : curve.valid) valid.push_back(v ? 1 : 0);
    return json{{"functional", std::string(to_string(curve.functional))},
                {"spec", spec_to_json(curve.spec)},
                {"alpha", curve.alphas},
                {"value", values},
                {"valid", valid},
                {"notes", curve.notes},
                {"minima", minima},
                {"reference", curve.reference ? json(*curve.reference) : json(nullptr)},
                {"max_tail_bound", curve.max_tail_bound},
                {"all_converged", curve.all_converged}};
}

SweepCurve curve_from_json(const json& j) {
    SweepCurve c;
    c.functional = parse_sweep_functional(j.at("functional").get<std::string>());
    c.spec = spec_from_json(j.at("spec"));
    c.alphas = j.at("alpha").get<std::vector<double>>();
    for (const auto& v : j.at("value")) c.values.push_back(number_or_nan(v));
    for (const auto& v : j.at("valid")) c.valid.push_back(v.get<int>() != 0);
    c.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto& m : j.at("minima")) {
        c.minima.push_back({m.at("alpha").get<double>(), m.at("value").get<double>(), m.at("index").get<std::size_t>()});
    }
    if (!j.at("reference").is_null()) c.reference = j.at("reference").get<double>();
    c.max_tail_bound = j.at("max_tail_bound").get<double>();
    c.all_converged = j.at("all_converged").get<bool>();
    return c;
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ignore;
            fs::remove(tmp, ignore);
            throw std::runtime_error("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ignore;
        fs::remove(tmp, ignore);
        throw std::runtime_error("cannot move output into '" + path + "': " + ec.message());
    }
}

}  // namespace trigspline::cli
