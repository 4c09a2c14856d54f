#include "spherelab/lrmodel/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "hardy_residuals.hpp"

namespace spherelab::lrmodel {

std::array<double, kHardyUnknowns> HardyAngles::unknowns() const {
    return {alpha, beta, gamma, delta, eta, rho, nu};
}

HardyAngles HardyAngles::from_unknowns(double theta, const std::array<double, kHardyUnknowns>& x) {
    HardyAngles h{theta, x[0], x[1], x[2], x[3], x[4], x[5], x[6], 0.0};
    h.residual_norm = hardy_residual_norm(h);
    return h;
}

const std::array<std::string, kHardyEquations>& hardy_residual_labels() {
    static const std::array<std::string, kHardyEquations> labels{
        "cot(gamma)cot(beta) = cos(2theta)",
        "cot(alpha)cot(delta) = cos(2theta)",
        "cos(alpha+beta) = -sin(theta)/r",
        "cos(rho+nu)+cos(gamma+delta) = -sin(theta)/r",
        "cos(gamma+delta) = sin(theta)cos^2(theta)/r",
        "rho-nu-eta quotient = cos(2theta)",
        "gamma-delta-eta quotient = cos(2theta)",
        "alpha-nu-rho-beta quotient = cos(2theta)",
        "rho-nu-eta quotient = cos(2theta), repeated",
        "cos(gamma-nu) = cos^3(theta)/r",
        "cos(rho-delta) = cos^3(theta)/r",
        "sin(alpha+eta) = cos(theta)/r",
        "cos(eta-beta) = cos(theta)/r",
    };
    return labels;
}

namespace {

constexpr double kPole = 1e-12;

double quotient(std::size_t eq, double num, double den) {
    if (std::abs(den) < kPole) {
        throw ResidualUndefined(eq, "residual '" + hardy_residual_labels()[eq] + "' has a vanishing denominator");
    }
    return num / den;
}

}  // namespace

std::array<double, kHardyEquations> hardy_residuals(const HardyAngles& h, ResidualForm form) {
    auto res = detail::product_residuals<double>(h.theta, h.unknowns());
    if (form == ResidualForm::product) return res;

    const double s = std::sin(h.theta);
    const double k = 1.0 - 2.0 * s * s;
    using std::cos;
    using std::sin;
    auto cot = [](std::size_t eq, double x) { return quotient(eq, std::cos(x), std::sin(x)); };
    res[0] = cot(0, h.gamma) * cot(0, h.beta) - k;
    res[1] = cot(1, h.alpha) * cot(1, h.delta) - k;
    const double rne = quotient(5, cos(h.rho) * sin(h.eta) - cos(h.nu) * cos(h.eta),
                                cos(h.eta) * sin(h.rho) - sin(h.nu) * sin(h.eta)) -
                       k;
    res[5] = rne;
    res[6] = quotient(6, cos(h.gamma) * sin(h.eta) - cos(h.delta) * cos(h.eta),
                      sin(h.delta) * sin(h.eta) - sin(h.gamma) * cos(h.eta)) -
             k;
    res[7] = quotient(7, cos(h.alpha) * cos(h.nu) - cos(h.rho) * cos(h.beta),
                      sin(h.rho) * sin(h.beta) - sin(h.alpha) * sin(h.nu)) -
             k;
    res[8] = rne;
    return res;
}

double hardy_residual_norm(const HardyAngles& angles) {
    const auto r = hardy_residuals(angles);
    return std::sqrt(std::inner_product(r.begin(), r.end(), r.begin(), 0.0));
}

double hardy_consistency_gap(double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double r = std::sqrt(1.0 + c * c);
    const double target = c / r;
    double gap = std::numeric_limits<double>::infinity();
    for (int su : {-1, 1}) {
        for (int sw : {-1, 1}) {
            // sin(u + w) with cos u = −s/r, cos w = c/r.
            const double value = su * (std::numbers::sqrt2 * c / r) * (c / r) + (-s / r) * (sw / r);
            gap = std::min(gap, std::abs(value - target));
        }
    }
    return gap;
}

ga3::UnitVec3 hardy_direction(double theta, bool primed) {
    return primed ? ga3::UnitVec3::from_spherical(2.0 * theta, 0.0) : ga3::UnitVec3(ga3::Vec3{0.0, 0.0, 1.0});
}

ga3::Multivector3 hardy_point(const HardyAngles& h, const qmref::HardyOutcome& o, bool second_site,
                              Handedness lambda, BMinusVariant variant) {
    const auto n = hardy_direction(h.theta, o.primed);
    const bool plus = o.sign > 0;
    if (!second_site) {
        if (o.primed) return plus ? ga3::tilted_point(h.gamma, n, lambda, +1) : ga3::tilted_point(h.rho, n, lambda, -1);
        return plus ? ga3::tilted_point(h.alpha, n, lambda, +1) : ga3::tilted_point(h.eta, n, lambda, -1);
    }
    if (o.primed) return plus ? ga3::tilted_point(h.delta, n, lambda, +1) : ga3::tilted_point(h.nu, n, lambda, -1);
    if (plus) return ga3::tilted_point(h.beta, n, lambda, +1);
    if (variant == BMinusVariant::printed) return ga3::tilted_point(std::numbers::pi / 2 - h.eta, n, lambda, -1);
    return ga3::tilted_point(h.eta, n, lambda, -1);
}

HardyJoint hardy_joint(const HardyAngles& angles, const qmref::HardyPair& pair, BMinusVariant variant,
                       Handedness lambda) {
    const auto p = hardy_point(angles, pair.first, false, lambda, variant);
    const auto q = hardy_point(angles, pair.second, true, lambda, variant);
    const auto product = ga3::geometric_product(p, q, lambda);
    return {product.scalar_part(), decompose(product, lambda)};
}

std::vector<HardyScanRow> scan_hardy(const std::vector<double>& thetas, const SolverOptions& options,
                                     BMinusVariant variant) {
    std::vector<HardyScanRow> rows;
    std::optional<HardyAngles> previous;
    for (double theta : thetas) {
        HardyScanRow row;
        try {
            row.angles = solve_hardy(theta, previous, options);
        } catch (const SolverFailure& e) {
            row.angles = e.best();
        }
        row.solved = row.angles.residual_norm < kHardyTolerance;
        const auto r = hardy_residuals(row.angles);
        for (std::size_t i = 0; i < kHardyEquations; ++i) {
            if (!(std::abs(r[i]) <= kHardyTolerance)) row.failing.push_back(i);
        }
        std::stable_sort(row.failing.begin(), row.failing.end(),
                         [&r](std::size_t x, std::size_t y) { return std::abs(r[x]) > std::abs(r[y]); });
        row.consistency_gap = hardy_consistency_gap(theta);
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& pair = qmref::hardy_pairs()[i];
            row.headline_model[i] = hardy_joint(row.angles, pair, variant).value;
            row.headline_oracle[i] = qmref::hardy_amplitude(theta, pair);
        }
        if (std::isfinite(row.angles.residual_norm)) previous = row.angles;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace spherelab::lrmodel
