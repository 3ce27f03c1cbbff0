#include "trigspline/cli/config.hpp"

#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "trigspline/error.hpp"

namespace trigspline::cli {

using nlohmann::json;

SplineSpec RunConfig::spline_spec() const {
    SplineSpec spec;
    spec.I1 = I1;
    spec.I2 = I2;
    spec.gamma = gamma;
    spec.N = N;
    spec.factor.kind = parse_factor_kind(factor);
    spec.factor.r = r;
    spec.factor.alpha = alpha.value_or(std::numbers::pi / N);
    spec.truncation.tail_tol = tail_tol;
    spec.truncation.m_max = m_max;
    spec.truncation.mode = truncation.empty() ? TruncationMode::Adaptive : parse_truncation_mode(truncation);
    spec.truncation.fixed_terms = terms;
    spec.validate();
    return spec;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw SplineError(ErrorKind::InvalidSpec, "malformed number '" + item + "' in list '" + text + "'");
        }
    }
    return out;
}

namespace {

GammaVector gamma_from_list(const std::vector<double>& v) {
    if (v.size() != 3) throw SplineError(ErrorKind::InvalidSpec, "gamma needs exactly three components");
    return {v[0], v[1], v[2]};
}

std::vector<double> json_numbers(const json& j) {
    if (j.is_string()) return parse_number_list(j.get<std::string>());
    return j.get<std::vector<double>>();
}

// A flag bound to a RunConfig field, with the matching JSON config key.
struct Binding {
    std::string key;
    CLI::Option* option;
    std::function<void(const json&)> from_json;
};

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
    RunConfig cfg;
    CLI::App app{"Fundamental trigonometric splines: norms, variation, semi-norms and parameter sweeps",
                 tool_name};
    app.set_version_flag("--version", tool_version);
    std::vector<Binding> bindings;

    auto bind = [&](const std::string& flag, auto& field, const std::string& help) {
        using T = std::decay_t<decltype(field)>;
        CLI::Option* opt = app.add_option(flag, field, help);
        bindings.push_back({flag.substr(2), opt, [&field](const json& j) { field = j.get<T>(); }});
        return opt;
    };

    app.add_option("command", cfg.command, "eval | interp | norm | variation | arclength | seminorm | table | "
                                           "sweep | coincide | limit")
        ->check(CLI::IsMember({"eval", "interp", "norm", "variation", "arclength", "seminorm", "table", "sweep",
                               "coincide", "limit"}));
    std::string config_path;
    app.add_option("--config", config_path, "JSON file with default values; flags override it");

    bind("--I1", cfg.I1, "stitching grid indicator (0|1)");
    bind("--I2", cfg.I2, "interpolation grid indicator (0|1)");
    std::string gamma_text;
    CLI::Option* gamma_opt = app.add_option("--gamma", gamma_text, "g1,g2,g3 (default 1,1,1)");
    bind("--factor", cfg.factor, "sinc | power");
    double alpha = 0.0;
    CLI::Option* alpha_opt = app.add_option("--alpha", alpha, "factor parameter (default pi/N)");
    bind("--r", cfg.r, "degree parameter r");
    bind("--N", cfg.N, "odd node count");
    bind("--k", cfg.k, "node index of the fundamental spline (1..N)");
    bind("--q", cfg.q, "derivative order");
    bind("--order", cfg.order, "semi-norm order (default (r+1)/2)");
    int samples = 0;
    CLI::Option* samples_opt = app.add_option("--samples", samples, "sample / quadrature points");
    bind("--tail-tol", cfg.tail_tol, "target bound on the omitted series tail");
    bind("--m-max", cfg.m_max, "cap on m-blocks");
    bind("--truncation", cfg.truncation, "adaptive | zeta | fixed");
    bind("--terms", cfg.terms, "m-blocks kept by --truncation fixed");
    bind("--alpha-min", cfg.alpha_min, "sweep lower alpha");
    bind("--alpha-max", cfg.alpha_max, "sweep upper alpha");
    bind("--alpha-steps", cfg.alpha_steps, "sweep sample count");
    bind("--functional", cfg.functional, "norm2 | norm | seminorm | variation | arclength");
    std::string values_text;
    CLI::Option* values_opt = app.add_option("--values", values_text, "interp: comma-separated f(t_k)");
    std::string mult_text;
    CLI::Option* mult_opt = app.add_option("--multipliers", mult_text, "coincide: comma-separated p, alpha = p pi/N");
    bind("--parity", cfg.parity, "coincide: odd | even");
    bind("--out", cfg.out, "output path (default stdout)");
    bind("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    CLI::Option* strict_opt = app.add_flag("--strict", cfg.strict, "numeric warnings become exit code 3");

    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        throw UsageMessage(app.help(), true);
    } catch (const CLI::CallForVersion&) {
        throw UsageMessage(std::string(tool_name) + " " + tool_version + "\n", true);
    } catch (const CLI::ParseError& e) {
        throw UsageMessage(std::string(e.what()) + "\n" + app.help(), false);
    }

    auto to_ints = [](const std::vector<double>& v) {
        std::vector<int> out;
        for (double x : v) out.push_back(static_cast<int>(x));
        return out;
    };
    if (gamma_opt->count() > 0) cfg.gamma = gamma_from_list(parse_number_list(gamma_text));
    if (alpha_opt->count() > 0) cfg.alpha = alpha;
    if (samples_opt->count() > 0) cfg.samples = samples;
    if (values_opt->count() > 0) cfg.values = parse_number_list(values_text);
    if (mult_opt->count() > 0) cfg.multipliers = to_ints(parse_number_list(mult_text));

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw SplineError(ErrorKind::InvalidSpec, "cannot read config file '" + config_path + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw SplineError(ErrorKind::InvalidSpec, std::string("config file is not valid JSON: ") + e.what());
        }
        try {
            for (const auto& b : bindings) {
                if (b.option->count() == 0 && j.contains(b.key)) b.from_json(j.at(b.key));
            }
            if (cfg.command.empty() && j.contains("command")) cfg.command = j.at("command").get<std::string>();
            if (gamma_opt->count() == 0 && j.contains("gamma")) cfg.gamma = gamma_from_list(json_numbers(j.at("gamma")));
            if (alpha_opt->count() == 0 && j.contains("alpha")) cfg.alpha = j.at("alpha").get<double>();
            if (samples_opt->count() == 0 && j.contains("samples")) cfg.samples = j.at("samples").get<int>();
            if (values_opt->count() == 0 && j.contains("values")) cfg.values = json_numbers(j.at("values"));
            if (mult_opt->count() == 0 && j.contains("multipliers")) cfg.multipliers = to_ints(json_numbers(j.at("multipliers")));
            if (strict_opt->count() == 0 && j.contains("strict")) cfg.strict = j.at("strict").get<bool>();
        } catch (const json::exception& e) {
            throw SplineError(ErrorKind::InvalidSpec, std::string("bad value in config file: ") + e.what());
        }
    }
    if (cfg.command.empty()) throw SplineError(ErrorKind::InvalidSpec, "no command given");
    return cfg;
}

}  // namespace trigspline::cli
