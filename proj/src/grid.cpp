#include "trigspline/grid.hpp"

#include <numbers>
#include <string>

#include "trigspline/error.hpp"

namespace trigspline {

void GridSpec::validate() const {
    if (N < 3 || N % 2 == 0) {
        throw SplineError(ErrorKind::InvalidGrid,
                          "node count must be odd and >= 3, got " + std::to_string(N));
    }
    if (indicator != 0 && indicator != 1) {
        throw SplineError(ErrorKind::InvalidGrid,
                          "grid indicator must be 0 or 1, got " + std::to_string(indicator));
    }
}

double GridSpec::node(int k) const {
    if (k < 1 || k > N) {
        throw SplineError(ErrorKind::InvalidGrid,
                          "node index " + std::to_string(k) + " outside 1.." + std::to_string(N));
    }
    if (indicator == 0) return two_pi * (k - 1) / N;
    return std::numbers::pi * (2 * k - 1) / N;
}

double GridSpec::node_phase(long long n, int k) const {
    // indicator 0: n * 2pi (k-1) / N;  indicator 1: n * pi (2k-1) / N
    if (indicator == 0) {
        const long long num = (n % N) * (k - 1) % N;
        return two_pi * static_cast<double>(num) / N;
    }
    const long long period = 2LL * N;
    const long long num = (n % period) * (2 * k - 1) % period;
    return std::numbers::pi * static_cast<double>(num) / N;
}

std::vector<double> grid_nodes(const GridSpec& grid) {
    grid.validate();
    std::vector<double> nodes(static_cast<std::size_t>(grid.N));
    for (int k = 1; k <= grid.N; ++k) nodes[static_cast<std::size_t>(k - 1)] = grid.node(k);
    return nodes;
}

}  // namespace trigspline
