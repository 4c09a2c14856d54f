#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "hardy_residuals.hpp"
#include "spherelab/lrmodel/hardy.hpp"

namespace spherelab::lrmodel {

namespace {

using Params = std::array<double, kHardyUnknowns>;
using Jacobian = Eigen::Matrix<double, static_cast<int>(kHardyEquations), static_cast<int>(kHardyUnknowns)>;
using Residual = Eigen::Matrix<double, static_cast<int>(kHardyEquations), 1>;
using Step = Eigen::Matrix<double, static_cast<int>(kHardyUnknowns), 1>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTieTolerance = 1e-12;

double cost(double theta, const Params& x) {
    const auto r = detail::product_residuals<double>(theta, x);
    double s = 0.0;
    for (double v : r) s += v * v;
    return s;
}

void evaluate(double theta, const Params& x, Residual& r, Jacobian& J) {
    std::array<detail::Dual, kHardyUnknowns> dx;
    for (std::size_t i = 0; i < kHardyUnknowns; ++i) dx[i] = detail::Dual::variable(x[i], i);
    const auto res = detail::product_residuals<detail::Dual>(theta, dx);
    for (std::size_t e = 0; e < kHardyEquations; ++e) {
        r(static_cast<int>(e)) = res[e].v;
        for (std::size_t i = 0; i < kHardyUnknowns; ++i) J(static_cast<int>(e), static_cast<int>(i)) = res[e].d[i];
    }
}

Params levenberg_marquardt(double theta, Params x, int max_iterations) {
    Residual r;
    Jacobian J;
    double mu = 1e-3;
    double f = cost(theta, x);
    for (int iter = 0; iter < max_iterations && f > 1e-32; ++iter) {
        evaluate(theta, x, r, J);
        const Eigen::Matrix<double, 7, 7> A = J.transpose() * J;
        const Step g = J.transpose() * r;
        bool accepted = false;
        while (mu < 1e12) {
            Eigen::Matrix<double, 7, 7> damped = A;
            for (int i = 0; i < 7; ++i) damped(i, i) += mu * std::max(A(i, i), 1e-12);
            const Step delta = damped.ldlt().solve(-g);
            Params trial = x;
            for (std::size_t i = 0; i < kHardyUnknowns; ++i) trial[i] += delta(static_cast<int>(i));
            const double ft = cost(theta, trial);
            if (std::isfinite(ft) && ft < f) {
                const double step = delta.norm();
                x = trial;
                f = ft;
                mu = std::max(mu / 3.0, 1e-15);
                accepted = true;
                if (step < 1e-15) return x;
                break;
            }
            mu *= 4.0;
        }
        if (!accepted) break;
    }
    return x;
}

double radical_inverse(unsigned index, unsigned base) {
    double result = 0.0;
    double scale = 1.0 / base;
    while (index > 0) {
        result += scale * (index % base);
        index /= base;
        scale /= base;
    }
    return result;
}

Params halton_start(unsigned index) {
    static constexpr std::array<unsigned, kHardyUnknowns> kBases{2, 3, 5, 7, 11, 13, 17};
    Params x;
    for (std::size_t i = 0; i < kHardyUnknowns; ++i) x[i] = std::numbers::pi * radical_inverse(index, kBases[i]);
    return x;
}

Params wrap(Params x) {
    for (double& v : x) {
        v = std::fmod(v, kTwoPi);
        if (v < 0) v += kTwoPi;
        if (v >= kTwoPi) v = 0.0;
    }
    return x;
}

double circular_distance(const Params& x, const Params& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < kHardyUnknowns; ++i) {
        double d = std::fmod(std::abs(x[i] - y[i]), kTwoPi);
        d = std::min(d, kTwoPi - d);
        s += d * d;
    }
    return std::sqrt(s);
}

double vector_norm(const Params& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

}  // namespace

HardyAngles solve_hardy(double theta, const std::optional<HardyAngles>& init, const SolverOptions& options) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2 + 1e-12)) {
        throw DomainError("hardy theta must lie in [0, pi/2]");
    }
    std::vector<Params> starts;
    if (init) starts.push_back(init->unknowns());
    for (int i = 1; i <= options.starts; ++i) starts.push_back(halton_start(static_cast<unsigned>(i)));

    std::vector<HardyAngles> candidates;
    for (const auto& start : starts) {
        const auto x = wrap(levenberg_marquardt(theta, start, options.max_iterations));
        const auto h = HardyAngles::from_unknowns(theta, x);
        if (std::isfinite(h.residual_norm)) candidates.push_back(h);
    }
    if (candidates.empty()) {
        throw SolverFailure("no start produced a finite residual",
                            HardyAngles::from_unknowns(theta, starts.front()));
    }

    double best_norm = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) best_norm = std::min(best_norm, c.residual_norm);

    const HardyAngles* chosen = nullptr;
    for (const auto& c : candidates) {
        if (c.residual_norm > best_norm + kTieTolerance) continue;
        if (chosen == nullptr) {
            chosen = &c;
            continue;
        }
        const auto x = c.unknowns();
        const auto y = chosen->unknowns();
        if (init) {
            const double dx = circular_distance(x, init->unknowns());
            const double dy = circular_distance(y, init->unknowns());
            if (dx < dy - kTieTolerance) {
                chosen = &c;
                continue;
            }
            if (dx > dy + kTieTolerance) continue;
        }
        if (vector_norm(x) < vector_norm(y)) chosen = &c;
    }
    return *chosen;
}

}  // namespace spherelab::lrmodel
