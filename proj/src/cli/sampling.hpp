#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "spherelab/ga3.hpp"
#include "spherelab/sphere7.hpp"

namespace spherelab::cli::detail {

/// Seeded random inputs for the self-check suites.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    ga3::UnitVec3 unit3() {
        for (;;) {
            const ga3::Vec3 v{normal_(rng_), normal_(rng_), normal_(rng_)};
            if (ga3::norm(v) > 1e-6) return ga3::UnitVec3::normalized(v);
        }
    }
    sphere7::Vec7 unit7() {
        for (;;) {
            sphere7::Vec7 v;
            for (double& x : v.c) x = normal_(rng_);
            const double n = sphere7::norm(v);
            if (n > 1e-6) return v * (1.0 / n);
        }
    }
    ga3::Multivector3 multivector() {
        std::array<double, 8> c{};
        for (double& x : c) x = uniform_(rng_);
        return ga3::Multivector3(c);
    }
    ga3::Multivector3 unit_even() {
        std::array<double, 8> c{};
        for (std::size_t i : {0u, 4u, 5u, 6u}) c[i] = normal_(rng_);
        const double n = std::sqrt(c[0] * c[0] + c[4] * c[4] + c[5] * c[5] + c[6] * c[6]);
        for (double& x : c) x /= n;
        return ga3::Multivector3(c);
    }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    ga3::Handedness lambda() { return (rng_() & 1u) != 0 ? ga3::Handedness::right : ga3::Handedness::left; }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{-1.0, 1.0};
};

}  // namespace spherelab::cli::detail
