#pragma once

#include <functional>
#include <vector>

namespace spherelab {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
};

/// Minimizes `f` from `start` with an axis-aligned initial simplex of edge
/// `step`. Stops when the simplex value spread falls below `ftol`.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, double step, double ftol = 1e-15,
                             int max_iterations = 5000);

}  // namespace spherelab
