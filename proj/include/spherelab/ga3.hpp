#pragma once

// Fixed-dimension Clifford algebra Cl(3,0).
//
// Multivector component layout (metric +,+,+):
//   [0]      scalar
//   [1..3]   e1, e2, e3
//   [4..6]   e2e3, e3e1, e1e2
//   [7]      e1e2e3
//
// The hidden variable is the handedness of the algebra. The right-handed
// algebra has pseudoscalar I = e1e2e3; the left-handed one is its opposite
// algebra (x∘y = yx) whose pseudoscalar is -I. Beables about n are λ I n.

#include <array>
#include <cmath>
#include <span>

#include "spherelab/errors.hpp"

namespace spherelab::ga3 {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
    constexpr bool operator==(const Vec3&) const = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Direction from polar angle `theta` and azimuth `phi` (radians).
inline Vec3 spherical(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

/// Unit-norm direction. Construction accepts |n| within kUnitTolerance of 1
/// and renormalizes, so stored values are unit to rounding.
class UnitVec3 {
public:
    static constexpr double kUnitTolerance = 1e-9;

    explicit UnitVec3(const Vec3& v);
    static UnitVec3 from_spherical(double theta, double phi);
    /// Normalizes any nonzero vector (|v| > 1e-12).
    static UnitVec3 normalized(const Vec3& v);

    const Vec3& vec() const { return v_; }
    operator const Vec3&() const { return v_; }  // NOLINT(google-explicit-constructor)
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

private:
    struct Trusted {};
    UnitVec3(const Vec3& v, Trusted) : v_(v) {}
    Vec3 v_;
};

enum class Handedness : int { right = 1, left = -1 };
using HiddenVariable = Handedness;

constexpr int sign(Handedness h) { return static_cast<int>(h); }
constexpr Handedness flip(Handedness h) {
    return h == Handedness::right ? Handedness::left : Handedness::right;
}

class Multivector3 {
public:
    static constexpr std::size_t kSize = 8;
    enum Index : std::size_t { S = 0, E1, E2, E3, E23, E31, E12, E123 };

    constexpr Multivector3() = default;
    constexpr explicit Multivector3(const std::array<double, kSize>& c) : c_(c) {}

    static constexpr Multivector3 scalar(double s) { return Multivector3({s, 0, 0, 0, 0, 0, 0, 0}); }
    static constexpr Multivector3 vector(const Vec3& v) {
        return Multivector3({0, v.x, v.y, v.z, 0, 0, 0, 0});
    }
    /// Bivector with components on (e2e3, e3e1, e1e2), i.e. I·b.
    static constexpr Multivector3 bivector(const Vec3& b) {
        return Multivector3({0, 0, 0, 0, b.x, b.y, b.z, 0});
    }
    static constexpr Multivector3 pseudoscalar(double t) { return Multivector3({0, 0, 0, 0, 0, 0, 0, t}); }
    static constexpr Multivector3 basis(Index i) {
        std::array<double, kSize> c{};
        c[i] = 1.0;
        return Multivector3(c);
    }

    constexpr double operator[](std::size_t i) const { return c_[i]; }
    constexpr double& operator[](std::size_t i) { return c_[i]; }
    constexpr const std::array<double, kSize>& components() const { return c_; }

    constexpr double scalar_part() const { return c_[S]; }
    constexpr Vec3 vector_part() const { return {c_[E1], c_[E2], c_[E3]}; }
    constexpr Vec3 bivector_part() const { return {c_[E23], c_[E31], c_[E12]}; }
    constexpr double trivector_part() const { return c_[E123]; }

    double norm_squared() const;
    double norm() const { return std::sqrt(norm_squared()); }
    bool is_finite() const;
    bool is_even() const { return c_[E1] == 0 && c_[E2] == 0 && c_[E3] == 0 && c_[E123] == 0; }

    Multivector3 operator+(const Multivector3& o) const;
    Multivector3 operator-(const Multivector3& o) const;
    Multivector3 operator-() const;
    Multivector3 operator*(double s) const;
    friend Multivector3 operator*(double s, const Multivector3& m) { return m * s; }

    constexpr bool operator==(const Multivector3&) const = default;

private:
    std::array<double, kSize> c_{};
};

/// Right-handed geometric product; associative, bilinear.
Multivector3 geometric_product(const Multivector3& x, const Multivector3& y);

/// Product in the algebra whose orientation is `h`.
Multivector3 geometric_product(const Multivector3& x, const Multivector3& y, Handedness h);

/// μ·n = λ I n. Components λ·(nx, ny, nz) on (e2e3, e3e1, e1e2).
Multivector3 bivector_beable(const UnitVec3& n, Handedness lambda);

/// cos χ + sign · sin χ · (μ·n). `sign` must be +1 or -1.
Multivector3 tilted_point(double chi, const UnitVec3& n, Handedness lambda, int sign);

/// Left fold of the product in the algebra of orientation `h`.
Multivector3 product_chain(std::span<const Multivector3> points, Handedness h = Handedness::right);

/// xy - yx in the algebra of orientation `h`.
Multivector3 commutator(const Multivector3& x, const Multivector3& y,
                        Handedness h = Handedness::right);

/// Unit axis (a×b)/|a×b|. Throws DomainError when |a×b| < 1e-12.
UnitVec3 normalized_axis(const Vec3& a, const Vec3& b);

}  // namespace spherelab::ga3
