#include <string>

#include "spherelab/sphere7.hpp"

namespace spherelab::sphere7 {

Vec7 Vec7::operator+(const Vec7& o) const {
    Vec7 r;
    for (std::size_t i = 0; i < 7; ++i) r[i] = c[i] + o[i];
    return r;
}

Vec7 Vec7::operator-(const Vec7& o) const {
    Vec7 r;
    for (std::size_t i = 0; i < 7; ++i) r[i] = c[i] - o[i];
    return r;
}

Vec7 Vec7::operator-() const { return *this * -1.0; }

Vec7 Vec7::operator*(double s) const {
    Vec7 r;
    for (std::size_t i = 0; i < 7; ++i) r[i] = c[i] * s;
    return r;
}

double dot(const Vec7& a, const Vec7& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < 7; ++i) s += a[i] * b[i];
    return s;
}

UnitVec7::UnitVec7(const Vec7& v) {
    const double n2 = dot(v, v);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 2.0 * kUnitTolerance) {
        throw DomainError("7-vector is not unit: |N|^2 = " + std::to_string(n2));
    }
    v_ = v * (1.0 / std::sqrt(n2));
}

Vec7 cross7(const Vec7& x, const Vec7& y, const CrossTable& table) { return table.cross(x, y); }

SevenPoint oct_product(const SevenPoint& p, const SevenPoint& q, const CrossTable& table, Handedness h) {
    const Vec7 xy = table.cross(p.X, q.X) * static_cast<double>(ga3::sign(h));
    return {p.a * q.a - dot(p.X, q.X), q.X * p.a + p.X * q.a - xy};
}

SevenPoint beable7(const UnitVec7& n, Handedness lambda) {
    return {0.0, n.vec() * static_cast<double>(ga3::sign(lambda))};
}

Vec7 z_deviation(const Vec7& n2, const Vec7& n3, const Vec7& n4, const CrossTable& table) {
    return table.cross(n2, table.cross(n3, n4)) - n3 * dot(n2, n4) + n4 * dot(n2, n3);
}

double lagrange_residual(const Vec7& n1, const Vec7& n2, const Vec7& n3, const Vec7& n4,
                         const CrossTable& table) {
    const double lhs = dot(table.cross(n1, n2), table.cross(n3, n4));
    const double rhs = dot(n1, n3) * dot(n2, n4) - dot(n1, n4) * dot(n2, n3) +
                       dot(n1, z_deviation(n2, n3, n4, table));
    return lhs - rhs;
}

Vec7 jacobiator(const Vec7& x, const Vec7& y, const Vec7& z, const CrossTable& table) {
    return table.cross(x, table.cross(y, z)) + table.cross(y, table.cross(z, x)) +
           table.cross(z, table.cross(x, y));
}

std::array<UnitVec7, 4> embed_ghz4(const UnitVec3& n1, const UnitVec3& n2, const UnitVec3& n3,
                                   const UnitVec3& n4) {
    return {UnitVec7(Vec7{{-n1.x(), +n1.y(), -n1.z(), 0, 0, 0, 0}}),
            UnitVec7(Vec7{{+n2.x(), +n2.y(), 0, +n2.z(), 0, 0, 0}}),
            UnitVec7(Vec7{{+n3.x(), +n3.y(), 0, 0, +n3.z(), 0, 0}}),
            UnitVec7(Vec7{{+n4.x(), -n4.y(), 0, 0, 0, -n4.z(), 0}})};
}

std::array<UnitVec7, 4> embed_ghz3(const UnitVec3& n1, const UnitVec3& n2, const UnitVec3& n3,
                                   double alpha, double delta) {
    const ga3::Vec3 n0{std::sin(alpha) * std::cos(delta), std::sin(alpha) * std::sin(delta), std::cos(alpha)};
    return {UnitVec7(Vec7{{-n0.x, +n0.y, -n0.z, 0, 0, 0, 0}}),
            UnitVec7(Vec7{{+n1.x(), +n1.y(), 0, +n1.z(), 0, 0, 0}}),
            UnitVec7(Vec7{{+n2.x(), -n2.y(), 0, 0, -n2.z(), 0, 0}}),
            UnitVec7(Vec7{{-n3.x(), -n3.y(), 0, 0, 0, +n3.z(), 0}})};
}

}  // namespace spherelab::sphere7
