#include "spherelab/ga3.hpp"

#include <bit>
#include <string>

namespace spherelab::ga3 {

namespace {

// Blade bitmask (bit0 = e1, bit1 = e2, bit2 = e3) for each component slot,
// and the sign relating the slot's blade to the canonical ascending blade.
// e3e1 is stored, which is -e1e3.
constexpr std::array<unsigned, 8> kMask{0b000, 0b001, 0b010, 0b100, 0b110, 0b101, 0b011, 0b111};
constexpr std::array<int, 8> kSlotSign{1, 1, 1, 1, 1, -1, 1, 1};

constexpr std::array<std::size_t, 8> slot_of_mask() {
    std::array<std::size_t, 8> out{};
    for (std::size_t i = 0; i < 8; ++i) out[kMask[i]] = i;
    return out;
}
constexpr auto kSlotOfMask = slot_of_mask();

// Sign from reordering canonical blade a · canonical blade b into canonical
// order; euclidean metric so repeated factors square to +1.
constexpr int reorder_sign(unsigned a, unsigned b) {
    int swaps = 0;
    for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
    return (swaps & 1) ? -1 : 1;
}

struct Table {
    // partner[k][i]: slot j such that slot_i * slot_j lands on slot k.
    std::array<std::array<std::size_t, 8>, 8> partner{};
    std::array<std::array<int, 8>, 8> sign{};
};

constexpr Table make_table() {
    Table t{};
    for (std::size_t k = 0; k < 8; ++k) {
        for (std::size_t i = 0; i < 8; ++i) {
            const std::size_t j = kSlotOfMask[kMask[i] ^ kMask[k]];
            t.partner[k][i] = j;
            t.sign[k][i] = kSlotSign[i] * kSlotSign[j] * kSlotSign[k] * reorder_sign(kMask[i], kMask[j]);
        }
    }
    return t;
}
constexpr Table kTable = make_table();

static_assert(kTable.sign[Multivector3::E12][Multivector3::E1] == 1, "e1 e2 = e12");
static_assert(kTable.sign[Multivector3::E31][Multivector3::E3] == 1, "e3 e1 = e31");
static_assert(kTable.sign[Multivector3::S][Multivector3::E123] == -1, "I^2 = -1");

}  // namespace

UnitVec3::UnitVec3(const Vec3& v) {
    const double n2 = dot(v, v);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 2.0 * kUnitTolerance) {
        throw DomainError("direction is not unit: |n|^2 = " + std::to_string(n2));
    }
    v_ = v * (1.0 / std::sqrt(n2));
}

UnitVec3 UnitVec3::from_spherical(double theta, double phi) {
    return UnitVec3(spherical(theta, phi));
}

UnitVec3 UnitVec3::normalized(const Vec3& v) {
    const double n = norm(v);
    if (!std::isfinite(n) || n < 1e-12) throw DomainError("cannot normalize a (near-)zero vector");
    return UnitVec3(v * (1.0 / n), Trusted{});
}

double Multivector3::norm_squared() const {
    double s = 0.0;
    for (double c : c_) s += c * c;
    return s;
}

bool Multivector3::is_finite() const {
    for (double c : c_) {
        if (!std::isfinite(c)) return false;
    }
    return true;
}

Multivector3 Multivector3::operator+(const Multivector3& o) const {
    Multivector3 r;
    for (std::size_t i = 0; i < kSize; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Multivector3 Multivector3::operator-(const Multivector3& o) const {
    Multivector3 r;
    for (std::size_t i = 0; i < kSize; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Multivector3 Multivector3::operator-() const { return *this * -1.0; }

Multivector3 Multivector3::operator*(double s) const {
    Multivector3 r;
    for (std::size_t i = 0; i < kSize; ++i) r.c_[i] = c_[i] * s;
    return r;
}

Multivector3 geometric_product(const Multivector3& x, const Multivector3& y) {
    Multivector3 r;
    for (std::size_t k = 0; k < 8; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < 8; ++i) {
            acc += kTable.sign[k][i] * (x[i] * y[kTable.partner[k][i]]);
        }
        r[k] = acc;
    }
    return r;
}

Multivector3 geometric_product(const Multivector3& x, const Multivector3& y, Handedness h) {
    return h == Handedness::right ? geometric_product(x, y) : geometric_product(y, x);
}

Multivector3 bivector_beable(const UnitVec3& n, Handedness lambda) {
    return Multivector3::bivector(n.vec() * static_cast<double>(sign(lambda)));
}

Multivector3 tilted_point(double chi, const UnitVec3& n, Handedness lambda, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("tilted_point sign must be +1 or -1");
    return Multivector3::scalar(std::cos(chi)) + bivector_beable(n, lambda) * (sign * std::sin(chi));
}

Multivector3 product_chain(std::span<const Multivector3> points, Handedness h) {
    if (points.empty()) throw DomainError("product_chain needs at least one point");
    Multivector3 acc = points.front();
    for (std::size_t i = 1; i < points.size(); ++i) acc = geometric_product(acc, points[i], h);
    return acc;
}

Multivector3 commutator(const Multivector3& x, const Multivector3& y, Handedness h) {
    return geometric_product(x, y, h) - geometric_product(y, x, h);
}

UnitVec3 normalized_axis(const Vec3& a, const Vec3& b) {
    const Vec3 c = cross(a, b);
    if (norm(c) < 1e-12) throw DomainError("axis undefined for parallel directions");
    return UnitVec3::normalized(c);
}

}  // namespace spherelab::ga3
