#include "spherelab/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spherelab {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, double step, double ftol, int max_iterations) {
    const std::size_t n = start.size();
    std::vector<std::vector<double>> simplex(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    auto point = [n](const std::vector<double>& base, const std::vector<double>& toward, double t) {
        std::vector<double> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = base[i] + t * (toward[i] - base[i]);
        return p;
    };

    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];
        if (std::abs(values[worst] - values[best]) <= ftol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == worst) continue;
            for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i] / static_cast<double>(n);
        }
        auto reflected = point(centroid, simplex[worst], -1.0);
        const double fr = f(reflected);
        if (fr < values[best]) {
            auto expanded = point(centroid, simplex[worst], -2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                values[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = fr;
            }
            continue;
        }
        if (fr < values[second]) {
            simplex[worst] = std::move(reflected);
            values[worst] = fr;
            continue;
        }
        auto contracted = fr < values[worst] ? point(centroid, reflected, 0.5) : point(centroid, simplex[worst], 0.5);
        const double fc = f(contracted);
        if (fc < std::min(fr, values[worst])) {
            simplex[worst] = std::move(contracted);
            values[worst] = fc;
            continue;
        }
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == best) continue;
            simplex[k] = point(simplex[best], simplex[k], 0.5);
            values[k] = f(simplex[k]);
        }
    }
    const auto it = std::min_element(values.begin(), values.end());
    const auto idx = static_cast<std::size_t>(it - values.begin());
    return {simplex[idx], *it, iter};
}

}  // namespace spherelab
