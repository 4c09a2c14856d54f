#pragma once

// Independent reference implementations used only by the tests.

#include <array>
#include <algorithm>
#include <complex>
#include <random>

#include "spherelab/ga3.hpp"
#include "spherelab/sphere7.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Mat2 = std::array<std::array<Complex, 2>, 2>;

inline Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

/// Cl(3,0) realized by Pauli matrices: e_k -> σ_k, e1e2e3 -> i·1.
inline Mat2 to_matrix(const spherelab::ga3::Multivector3& m) {
    const Complex i(0, 1);
    const Mat2 one{{{1, 0}, {0, 1}}};
    const Mat2 sx{{{0, 1}, {1, 0}}};
    const Mat2 sy{{{0, -i}, {i, 0}}};
    const Mat2 sz{{{1, 0}, {0, -1}}};
    const std::array<Mat2, 3> s{sx, sy, sz};
    Mat2 r{};
    auto add = [&r](const Mat2& x, Complex c) {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) r[a][b] += c * x[a][b];
    };
    add(one, Complex(m[0], m[7]));
    for (int k = 0; k < 3; ++k) add(s[k], Complex(m[1 + k], m[4 + k]));  // e2e3 = iσx, e3e1 = iσy, e1e2 = iσz
    return r;
}

inline spherelab::ga3::Multivector3 from_matrix(const Mat2& m) {
    const Complex i(0, 1);
    const Complex tr = m[0][0] + m[1][1];
    const Complex tx = m[1][0] + m[0][1];
    const Complex ty = i * m[0][1] - i * m[1][0];
    const Complex tz = m[0][0] - m[1][1];
    return spherelab::ga3::Multivector3(
        {tr.real() / 2, tx.real() / 2, ty.real() / 2, tz.real() / 2, tx.imag() / 2, ty.imag() / 2, tz.imag() / 2,
         tr.imag() / 2});
}

/// Right-handed product through the matrix representation.
inline spherelab::ga3::Multivector3 pauli_product(const spherelab::ga3::Multivector3& x,
                                                  const spherelab::ga3::Multivector3& y) {
    return from_matrix(mul(to_matrix(x), to_matrix(y)));
}

inline double max_diff(const spherelab::ga3::Multivector3& a, const spherelab::ga3::Multivector3& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 8; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_diff3(const spherelab::ga3::Vec3& a, const spherelab::ga3::Vec3& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline double max_diff(const spherelab::sphere7::Vec7& a, const spherelab::sphere7::Vec7& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 7; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

class Random {
public:
    explicit Random(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    spherelab::ga3::UnitVec3 unit3() {
        for (;;) {
            const spherelab::ga3::Vec3 v{normal(), normal(), normal()};
            if (spherelab::ga3::norm(v) > 1e-6) return spherelab::ga3::UnitVec3::normalized(v);
        }
    }
    spherelab::sphere7::Vec7 unit7() {
        spherelab::sphere7::Vec7 v;
        for (double& x : v.c) x = normal();
        return v * (1.0 / spherelab::sphere7::norm(v));
    }
    spherelab::ga3::Multivector3 multivector() {
        std::array<double, 8> c{};
        for (double& x : c) x = uniform(-1, 1);
        return spherelab::ga3::Multivector3(c);
    }
    spherelab::ga3::Handedness lambda() {
        return (rng_() & 1u) ? spherelab::ga3::Handedness::right : spherelab::ga3::Handedness::left;
    }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
