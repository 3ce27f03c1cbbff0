#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigspline/spline_spec.hpp"

namespace trigspline::cli {

inline constexpr const char* tool_name = "trigspline";
inline constexpr const char* tool_version = "1.0.0";

/// Every command-line setting. Flag names follow the spline parameters
/// (--I1 --I2 --gamma --alpha --r --N --k --q).
struct RunConfig {
    std::string command;  ///< eval interp norm variation arclength seminorm table sweep coincide limit

    int I1 = 0;
    int I2 = 0;
    GammaVector gamma{};
    std::string factor = "sinc";
    std::optional<double> alpha;  ///< defaults to pi / N
    int r = 3;
    int N = 7;
    int k = 1;
    int q = 0;
    int order = 0;  ///< semi-norm order; 0 selects (r + 1) / 2

    std::optional<int> samples;  ///< 4096, or 16384 for variation and arc length
    double tail_tol = 1e-8;
    long long m_max = 1'000'000;
    std::string truncation;        ///< adaptive | zeta | fixed; empty picks the command default
    long long terms = 20;         ///< m-blocks for --truncation fixed
    double alpha_min = 0.01;
    double alpha_max = 1.5707963267948966 - 0.01;
    int alpha_steps = 200;
    std::string functional = "norm2";
    std::vector<double> values;     ///< interp: samples f(t_k)
    std::vector<int> multipliers;   ///< coincide: p with alpha = p pi / N
    std::string parity;             ///< coincide: odd | even, defaults from r

    std::string out;                ///< empty writes to stdout
    std::string format = "csv";
    bool strict = false;

    /// Spline parameters as a validated spec (throws SplineError).
    [[nodiscard]] SplineSpec spline_spec() const;
    [[nodiscard]] int samples_or(int fallback) const { return samples.value_or(fallback); }
};

/// Help / version requests (success) and malformed command lines (failure),
/// with the text to print.
class UsageMessage : public std::runtime_error {
public:
    UsageMessage(const std::string& text, bool success) : std::runtime_error(text), success_(success) {}
    [[nodiscard]] bool success() const noexcept { return success_; }

private:
    bool success_;
};

/// Parses argv (argv[0] skipped). A --config JSON file supplies values for any
/// flag not given on the command line. Throws UsageMessage or SplineError.
[[nodiscard]] RunConfig parse_args(int argc, const char* const* argv);

/// "a,b,c" -> numbers; throws SplineError(InvalidSpec) on malformed input.
[[nodiscard]] std::vector<double> parse_number_list(const std::string& text);

}  // namespace trigspline::cli
