#pragma once

// Hardy-state points on S³ and the constraint system fixing their angles.
//
// Geometry: a = b = ẑ, a′ = b′ at polar angle 2θ in the x–z plane, so
// a·b = a′·b′ = 1 and a′·b = a·b′ = cos 2θ.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spherelab/errors.hpp"
#include "spherelab/ga3.hpp"
#include "spherelab/lrmodel/decomposition.hpp"
#include "spherelab/qmref.hpp"

namespace spherelab::lrmodel {

inline constexpr std::size_t kHardyUnknowns = 7;
inline constexpr std::size_t kHardyEquations = 13;
inline constexpr double kHardyTolerance = 1e-10;

struct HardyAngles {
    double theta = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double eta = 0.0;
    double rho = 0.0;
    double nu = 0.0;
    double residual_norm = 0.0;

    /// (α, β, γ, δ, η, ρ, ν).
    std::array<double, kHardyUnknowns> unknowns() const;
    /// Builds angles from unknowns and fills residual_norm.
    static HardyAngles from_unknowns(double theta, const std::array<double, kHardyUnknowns>& x);
};

enum class ResidualForm {
    product,  // cross-multiplied, pole-free
    ratio,    // cotangent and quotient equations as written
};

/// Raised by the ratio form when a denominator is below 1e-12 in magnitude.
class ResidualUndefined : public DomainError {
public:
    ResidualUndefined(std::size_t equation, const std::string& what) : DomainError(what), equation_(equation) {}
    std::size_t equation() const { return equation_; }

private:
    std::size_t equation_;
};

/// Descriptive label of each residual, in residual order.
const std::array<std::string, kHardyEquations>& hardy_residual_labels();

/// LHS − RHS of the thirteen scalar constraints.
std::array<double, kHardyEquations> hardy_residuals(const HardyAngles& angles,
                                                    ResidualForm form = ResidualForm::product);

/// Euclidean norm of the product-form residuals.
double hardy_residual_norm(const HardyAngles& angles);

class SolverFailure : public std::runtime_error {
public:
    SolverFailure(const std::string& what, HardyAngles best) : std::runtime_error(what), best_(best) {}
    const HardyAngles& best() const { return best_; }

private:
    HardyAngles best_;
};

struct SolverOptions {
    int starts = 32;
    int max_iterations = 300;
};

/// Damped Gauss–Newton least squares over the thirteen residuals from
/// quasi-random starts in (0, π)⁷ plus `init`. Among equal residual norms the
/// result closest to `init`, then the smallest angle vector, wins. Angles are
/// wrapped to [0, 2π). The returned residual_norm may exceed the tolerance.
HardyAngles solve_hardy(double theta, const std::optional<HardyAngles>& init = std::nullopt,
                        const SolverOptions& options = {});

/// Minimum over sign branches of |sin(α+η) − cosθ/√(1+cos²θ)| once α+β and
/// η−β are fixed by their cosine constraints. Zero is necessary for the
/// system to be solvable; a positive value certifies infeasibility.
double hardy_consistency_gap(double theta);

/// Which point represents outcome − along b.
enum class BMinusVariant {
    printed,    // sin η − B_b cos η
    symmetric,  // cos η − B_b sin η
};

/// Direction of a, a′ (site 1) or b, b′ (site 2) for the given θ.
ga3::UnitVec3 hardy_direction(double theta, bool primed);

/// The tilted S³ point for one outcome at one site.
ga3::Multivector3 hardy_point(const HardyAngles& angles, const qmref::HardyOutcome& outcome, bool second_site,
                              Handedness lambda, BMinusVariant variant = BMinusVariant::printed);

struct HardyJoint {
    double value = 0.0;                // orientation-free scalar part
    DecompositionResult decomposition;  // full split of the product, for audit
};

HardyJoint hardy_joint(const HardyAngles& angles, const qmref::HardyPair& pair,
                       BMinusVariant variant = BMinusVariant::printed, Handedness lambda = Handedness::right);

struct HardyScanRow {
    HardyAngles angles;
    bool solved = false;  // residual_norm < kHardyTolerance
    /// Indices of residuals above the tolerance, largest first.
    std::vector<std::size_t> failing;
    double consistency_gap = 0.0;
    /// hardy_joint and the QM amplitude for the four headline pairs.
    std::array<double, 4> headline_model{};
    std::array<double, 4> headline_oracle{};
};

/// Serial scan with continuation from the previous grid point.
std::vector<HardyScanRow> scan_hardy(const std::vector<double>& thetas, const SolverOptions& options = {},
                                     BMinusVariant variant = BMinusVariant::printed);

}  // namespace spherelab::lrmodel
