#include "trigspline/cli/run.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "trigspline/analysis.hpp"
#include "trigspline/cli/emit.hpp"
#include "trigspline/error.hpp"
#include "trigspline/functionals.hpp"
#include "trigspline/spline.hpp"

namespace trigspline::cli {

using nlohmann::json;

namespace {

// What a command produced: the CSV view, an optional richer JSON body, and
// numeric warnings collected on the way.
struct Result {
    CsvTable table;
    json body;
    std::vector<std::string> warnings;
    double tail_bound = 0.0;
};

void note_tail(Result& res, const SeriesTail& tail, const std::string& what) {
    res.tail_bound = std::max(res.tail_bound, tail.tail_bound);
    if (!tail.converged) {
        std::ostringstream msg;
        msg << what << ": truncation not converged after " << tail.m_terms << " m-blocks (tail bound "
            << format_number(tail.tail_bound) << ")";
        res.warnings.push_back(msg.str());
    }
}

std::vector<std::string> value_row(std::string_view name, std::string_view method, const FunctionalValue& v) {
    return {std::string(name), std::string(method), format_number(v.value), format_number(v.error_estimate)};
}

CsvTable functional_header() { return {{"functional", "method", "value", "error_estimate"}, {}}; }

std::vector<double> uniform_points(int samples) {
    std::vector<double> t(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) t[s] = 2.0 * std::numbers::pi * s / samples;
    return t;
}

void require_positive_samples(int samples) {
    if (samples < 1) throw SplineError(ErrorKind::InvalidResolution, "--samples must be positive");
}

Result sampled(const HarmonicSeries& series, int samples, const std::string& what) {
    require_positive_samples(samples);
    Result res;
    const auto t = uniform_points(samples);
    const auto v = sample_uniform(series, static_cast<std::size_t>(samples));
    res.table = sampled_table(t, v);
    res.body = {{"t", t}, {"value", v}};
    note_tail(res, series.tail(), what);
    return res;
}

Result cmd_eval(const RunConfig& cfg) {
    const SplineSpec spec = cfg.spline_spec();
    return sampled(harmonic_series(spec, cfg.k, cfg.q), cfg.samples_or(default_norm_samples), "eval");
}

Result cmd_interp(const RunConfig& cfg) {
    const SplineSpec spec = cfg.spline_spec();
    return sampled(interpolant_series(spec, cfg.values, cfg.q), cfg.samples_or(default_norm_samples), "interp");
}

Result cmd_norm(const RunConfig& cfg) {
    const SplineSpec spec = cfg.spline_spec();
    const HarmonicSeries series = harmonic_series(spec, cfg.k, cfg.q);
    Result res;
    note_tail(res, series.tail(), "norm");
    const NormPair exact = norm_parseval(series);
    const FunctionalValue quad = norm_quadrature(series, cfg.samples_or(default_norm_samples));
    FunctionalValue quad_squared = quad;
    quad_squared.kind = FunctionalKind::NormL2Squared;
    quad_squared.value = quad.value * quad.value;
    quad_squared.error_estimate = 2.0 * quad.value * quad.error_estimate;
    res.table = functional_header();
    res.table.rows.push_back(value_row("norm2", "parseval", exact.squared));
    res.table.rows.push_back(value_row("norm", "parseval", exact.norm));
    res.table.rows.push_back(value_row("norm2", "quadrature", quad_squared));
    res.table.rows.push_back(value_row("norm", "quadrature", quad));
    return res;
}

Result cmd_variation(const RunConfig& cfg) {
    const SplineSpec spec = cfg.spline_spec();
    const int samples = cfg.samples_or(default_variation_samples);
    Result res;
    res.table = functional_header();
    if (spec.factor.r >= 2) {
        const HarmonicSeries derivative = harmonic_series(spec, cfg.k, 1);
        note_tail(res, derivative.tail(), "variation");
        res.table.rows.push_back(value_row("variation", "derivative", total_variation_derivative(derivative, samples)));
    }
    const HarmonicSeries series = harmonic_series(spec, cfg.k, 0);
    note_tail(res, series.tail(), "variation");
    res.table.rows.push_back(value_row("variation", "partition", total_variation_partition(series, samples)));
    return res;
}

Result cmd_arclength(const RunConfig& cfg) {
    const SplineSpec spec = cfg.spline_spec();
    if (spec.factor.r < 2) {
        throw SplineError(ErrorKind::UnsupportedForDegree, "arc length needs a differentiable spline (r >= 2)");
    }
    const HarmonicSeries derivative = harmonic_series(spec, cfg.k, 1);
    Result res;
    note_tail(res, derivative.tail(), "arclength");
    res.table = functional_header();
    res.table.rows.push_back(
        value_row("arclength", "quadrature", arc_length(derivative, cfg.samples_or(default_variation_samples))));
    return res;
}

int seminorm_order(const RunConfig& cfg) { return cfg.order > 0 ? cfg.order : (cfg.r + 1) / 2; }

Result cmd_seminorm(const RunConfig& cfg) {
    const SplineSpec spec = cfg.spline_spec();
    const int order = seminorm_order(cfg);
    const HarmonicSeries derivative = harmonic_series(spec, cfg.k, order);
    Result res;
    note_tail(res, derivative.tail(), "seminorm");
    res.table = functional_header();
    FunctionalValue v = norm_parseval(derivative).norm;
    v.kind = FunctionalKind::SemiNorm;
    v.order = order;
    res.table.rows.push_back(value_row("seminorm" + std::to_string(order), "parseval", v));
    return res;
}

TruncationPolicy table_truncation(const RunConfig& cfg) {
    if (cfg.truncation.empty()) return TruncationPolicy::fixed(cfg.terms);
    return cfg.spline_spec().truncation;
}

Result cmd_table(const RunConfig& cfg) {
    const SplineSpec spec = cfg.spline_spec();
    const auto degrees = default_table_degrees();
    const NormTable table =
        reproduce_norm_table(spec.gamma, spec.N, degrees, table_truncation(cfg), spec.factor.kind, spec.factor.alpha);
    Result res;
    res.table.header = {"I1", "I2"};
    for (int r : degrees) res.table.header.push_back("r=" + std::to_string(r));
    for (std::size_t g = 0; g < table.grids.size(); ++g) {
        std::vector<std::string> row{std::to_string(table.grids[g].first), std::to_string(table.grids[g].second)};
        for (double v : table.cells[g]) row.push_back(format_number(v));
        res.table.rows.push_back(std::move(row));
    }
    return res;
}

Result cmd_sweep(const RunConfig& cfg) {
    SplineSpec spec = cfg.spline_spec();
    const SweepFunctional functional = parse_sweep_functional(cfg.functional);
    if (functional == SweepFunctional::SemiNorm && spec.factor.kind != FactorKind::SincPower) {
        throw SplineError(ErrorKind::InvalidSpec,
                          "a semi-norm sweep needs the sinc factor; the power factor does not depend on alpha");
    }
    SweepOptions options;
    options.samples = cfg.samples_or(default_variation_samples);
    options.seminorm_order = cfg.order;
    const auto alphas = alpha_grid(cfg.alpha_steps, cfg.alpha_min, cfg.alpha_max);
    const SweepCurve curve = sweep_alpha(spec, alphas, functional, options);
    Result res;
    res.table = curve_table(curve);
    res.body = curve_to_json(curve);
    res.tail_bound = curve.max_tail_bound;
    if (!curve.all_converged) res.warnings.push_back("sweep: truncation not converged for some alpha");
    for (std::size_t i = 0; i < curve.valid.size(); ++i) {
        if (!curve.valid[i]) res.warnings.push_back("sweep: alpha=" + format_number(curve.alphas[i]) + " invalid");
    }
    for (const auto& n : curve.notes) res.warnings.push_back("sweep: " + n);
    return res;
}

Result cmd_coincide(const RunConfig& cfg) {
    const SplineSpec spec = cfg.spline_spec();
    DegreeParity parity = spec.factor.r % 2 != 0 ? DegreeParity::Odd : DegreeParity::Even;
    if (cfg.parity == "odd") {
        parity = DegreeParity::Odd;
    } else if (cfg.parity == "even") {
        parity = DegreeParity::Even;
    } else if (!cfg.parity.empty()) {
        throw SplineError(ErrorKind::InvalidSpec, "--parity must be odd or even");
    }
    std::vector<int> multipliers = cfg.multipliers;
    if (multipliers.empty()) multipliers = {1, 2, 3};
    const CoincidenceReport report =
        coincidence_check(spec, parity, multipliers, cfg.samples_or(512));
    Result res;
    res.table.header = {"kind", "alpha1", "alpha2", "deviation", "verdict", "note"};
    auto verdict = [](bool same) { return std::string(same ? "coincide" : "differ"); };
    for (const auto& p : report.pairs) {
        res.table.rows.push_back({"pairwise", format_number(p.alpha1), format_number(p.alpha2),
                                  format_number(p.deviation), verdict(p.coincide), ""});
    }
    for (const auto& p : report.versus_polynomial) {
        res.table.rows.push_back({"polynomial", format_number(p.alpha1), format_number(p.alpha2),
                                  format_number(p.deviation), verdict(p.coincide), ""});
    }
    for (const auto& why : report.rejected) res.table.rows.push_back({"rejected", "nan", "nan", "nan", "skipped", why});
    return res;
}

Result cmd_limit(const RunConfig& cfg) {
    const SplineSpec spec = cfg.spline_spec();
    const LimitReport rep = limit_check(spec.gamma, spec.N, spec.factor.kind, spec.I1, spec.I2, table_truncation(cfg));
    Result res;
    res.table.header = {"quantity", "r", "value"};
    auto scan = [&](const char* name, const DegreeScan& s) {
        for (std::size_t i = 0; i < s.degrees.size(); ++i) {
            res.table.rows.push_back({name, std::to_string(s.degrees[i]), format_number(s.values[i])});
        }
        std::string trend = s.increasing ? "increasing" : s.decreasing ? "decreasing" : "mixed";
        res.table.rows.push_back({std::string(name) + "_trend:" + trend, "", ""});
    };
    scan("odd", rep.odd);
    scan("even", rep.even);
    res.table.rows.push_back({"limit", "50", format_number(rep.value)});
    res.table.rows.push_back({"exact", "", format_number(rep.exact)});
    res.table.rows.push_back({"deviation", "", format_number(rep.deviation)});
    return res;
}

Result dispatch(const RunConfig& cfg) {
    const std::string& c = cfg.command;
    if (c == "eval") return cmd_eval(cfg);
    if (c == "interp") return cmd_interp(cfg);
    if (c == "norm") return cmd_norm(cfg);
    if (c == "variation") return cmd_variation(cfg);
    if (c == "arclength") return cmd_arclength(cfg);
    if (c == "seminorm") return cmd_seminorm(cfg);
    if (c == "table") return cmd_table(cfg);
    if (c == "sweep") return cmd_sweep(cfg);
    if (c == "coincide") return cmd_coincide(cfg);
    if (c == "limit") return cmd_limit(cfg);
    throw SplineError(ErrorKind::InvalidSpec, "unknown command '" + c + "'");
}

json table_json(const CsvTable& table) {
    json rows = json::array();
    for (const auto& r : table.rows) {
        json row = json::object();
        for (std::size_t i = 0; i < r.size(); ++i) {
            const std::string& field = r[i];
            double number = 0.0;
            std::istringstream in(field);
            if (!field.empty() && field != "nan" && (in >> number) && in.eof()) {
                row[table.header[i]] = number;
            } else if (field == "nan") {
                row[table.header[i]] = nullptr;
            } else {
                row[table.header[i]] = field;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render(const RunConfig& cfg, const Result& res) {
    if (cfg.format == "csv") return to_csv(res.table);
    json spec_echo;
    try {
        spec_echo = spec_to_json(cfg.spline_spec());
    } catch (const SplineError&) {
        spec_echo = nullptr;
    }
    json doc = {{"metadata",
                 {{"tool", tool_name},
                  {"version", tool_version},
                  {"command", cfg.command},
                  {"spec", spec_echo},
                  {"tail_bound", res.tail_bound},
                  {"warnings", res.warnings}}}};
    doc["columns"] = res.table.header;
    doc["rows"] = table_json(res.table);
    if (!res.body.is_null()) doc["data"] = res.body;
    return doc.dump(2) + "\n";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Result res;
    try {
        res = dispatch(config);
    } catch (const SplineError& e) {
        err << tool_name << ": " << e.what() << "\n";
        return is_numeric(e.kind()) ? exit_numeric : exit_usage;
    }
    for (const auto& w : res.warnings) err << tool_name << ": warning: " << w << "\n";
    if (config.strict && !res.warnings.empty()) {
        err << tool_name << ": strict mode: " << res.warnings.size() << " numeric warning(s)\n";
        return exit_numeric;
    }
    const std::string text = render(config, res);
    if (config.out.empty()) {
        out << text;
        out.flush();
        return out ? exit_ok : exit_numeric;
    }
    try {
        write_atomic(config.out, text);
    } catch (const std::exception& e) {
        err << tool_name << ": " << e.what() << "\n";
        return exit_numeric;
    }
    return exit_ok;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_args(argc, argv);
    } catch (const UsageMessage& m) {
        (m.success() ? out : err) << m.what();
        return m.success() ? exit_ok : exit_usage;
    } catch (const SplineError& e) {
        err << tool_name << ": " << e.what() << "\n";
        return exit_usage;
    }
    return run(config, out, err);
}

}  // namespace trigspline::cli
