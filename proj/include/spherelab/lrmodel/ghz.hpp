#pragma once

#include <array>

#include "spherelab/ga3.hpp"
#include "spherelab/lrmodel/report.hpp"
#include "spherelab/sphere7.hpp"

namespace spherelab::lrmodel {

enum class GhzMode {
    postulated_z,  // deviation vector replaced by ê3·Πn_z + ê7·f
    table,    // (N1·N2)(N3·N4) − (N1×N2)·(N3×N4) with the configured cross product
};

std::string to_string(GhzMode mode);

struct GhzOptions {
    GhzMode mode = GhzMode::postulated_z;
    const sphere7::CrossTable* table = &sphere7::CrossTable::cyclic();
    /// Coefficient f of ê7 in the postulated deviation vector.
    double z_e7 = 0.0;
    /// Tolerance of the algebraic rows.
    double tolerance = 1e-12;
};

struct GhzResult {
    double value = 0.0;
    ComparisonReport report;
};

/// Evaluated values of the four-particle pipeline.
struct Ghz4Terms {
    double postulated_z = 0.0;
    double table_cross = 0.0;     // via (N1×N2)·(N3×N4)
    double table_lagrange = 0.0;  // via the definitional deviation vector
    double oracle = 0.0;          // closed-form QM expectation
};

Ghz4Terms ghz4_terms(const std::array<ga3::UnitVec3, 4>& n, const GhzOptions& options = {});
GhzResult ghz4_model(const std::array<ga3::UnitVec3, 4>& n, const GhzOptions& options = {});

struct Ghz3Terms {
    double postulated_z = 0.0;
    double table_cross = 0.0;
    double table_lagrange = 0.0;
    double oracle = 0.0;
};

Ghz3Terms ghz3_terms(const std::array<ga3::UnitVec3, 3>& n, double alpha, double delta,
                     const GhzOptions& options = {});
GhzResult ghz3_model(const std::array<ga3::UnitVec3, 3>& n, double alpha, double delta,
                     const GhzOptions& options = {});

}  // namespace spherelab::lrmodel
