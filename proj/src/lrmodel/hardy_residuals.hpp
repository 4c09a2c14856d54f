#pragma once

// Residuals of the Hardy constraint system, generic over the scalar type so
// the solver can differentiate them in forward mode.

#include <array>
#include <cmath>

namespace spherelab::lrmodel::detail {

/// Value plus gradient with respect to the seven unknowns.
struct Dual {
    double v = 0.0;
    std::array<double, 7> d{};

    Dual() = default;
    Dual(double value) : v(value) {}  // NOLINT(google-explicit-constructor)

    static Dual variable(double value, std::size_t slot) {
        Dual x(value);
        x.d[slot] = 1.0;
        return x;
    }

    friend Dual operator+(const Dual& a, const Dual& b) {
        Dual r(a.v + b.v);
        for (std::size_t i = 0; i < 7; ++i) r.d[i] = a.d[i] + b.d[i];
        return r;
    }
    friend Dual operator-(const Dual& a, const Dual& b) {
        Dual r(a.v - b.v);
        for (std::size_t i = 0; i < 7; ++i) r.d[i] = a.d[i] - b.d[i];
        return r;
    }
    friend Dual operator*(const Dual& a, const Dual& b) {
        Dual r(a.v * b.v);
        for (std::size_t i = 0; i < 7; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
        return r;
    }
    friend Dual cos(const Dual& a) {
        Dual r(std::cos(a.v));
        const double s = -std::sin(a.v);
        for (std::size_t i = 0; i < 7; ++i) r.d[i] = s * a.d[i];
        return r;
    }
    friend Dual sin(const Dual& a) {
        Dual r(std::sin(a.v));
        const double c = std::cos(a.v);
        for (std::size_t i = 0; i < 7; ++i) r.d[i] = c * a.d[i];
        return r;
    }
};

/// Product-form residuals for unknowns x = (α, β, γ, δ, η, ρ, ν).
template <class T>
std::array<T, 13> product_residuals(double theta, const std::array<T, 7>& x) {
    using std::cos;
    using std::sin;
    const T& alpha = x[0];
    const T& beta = x[1];
    const T& gamma = x[2];
    const T& delta = x[3];
    const T& eta = x[4];
    const T& rho = x[5];
    const T& nu = x[6];

    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double r = std::sqrt(1.0 + c * c);
    const double k = 1.0 - 2.0 * s * s;

    const T rho_nu_eta = (cos(rho) * sin(eta) - cos(nu) * cos(eta)) - k * (sin(rho) * cos(eta) - sin(nu) * sin(eta));
    return {
        cos(gamma) * cos(beta) - k * (sin(gamma) * sin(beta)),
        cos(alpha) * cos(delta) - k * (sin(alpha) * sin(delta)),
        cos(alpha + beta) + T(s / r),
        cos(rho + nu) + cos(gamma + delta) + T(s / r),
        cos(gamma + delta) - T(s * c * c / r),
        rho_nu_eta,
        (cos(gamma) * sin(eta) - cos(delta) * cos(eta)) - k * (sin(delta) * sin(eta) - sin(gamma) * cos(eta)),
        (cos(alpha) * cos(nu) - cos(rho) * cos(beta)) - k * (sin(rho) * sin(beta) - sin(alpha) * sin(nu)),
        rho_nu_eta,
        cos(gamma - nu) - T(c * c * c / r),
        cos(rho - delta) - T(c * c * c / r),
        sin(alpha + eta) - T(c / r),
        cos(eta - beta) - T(c / r),
    };
}

}  // namespace spherelab::lrmodel::detail
