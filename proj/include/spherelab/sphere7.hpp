#pragma once

// R^7 / S^7 kernel: a configurable 7D cross product, octonionic point
// products, the deviation vector Z and the GHZ embeddings.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "spherelab/ga3.hpp"

namespace spherelab::sphere7 {

using ga3::Handedness;
using ga3::UnitVec3;

struct Vec7 {
    std::array<double, 7> c{};

    /// 1-based basis access, matching ê1..ê7.
    double e(int i) const { return c[static_cast<std::size_t>(i - 1)]; }
    double& e(int i) { return c[static_cast<std::size_t>(i - 1)]; }
    double operator[](std::size_t i) const { return c[i]; }
    double& operator[](std::size_t i) { return c[i]; }

    static Vec7 basis(int i) {
        Vec7 v;
        v.e(i) = 1.0;
        return v;
    }

    Vec7 operator+(const Vec7& o) const;
    Vec7 operator-(const Vec7& o) const;
    Vec7 operator-() const;
    Vec7 operator*(double s) const;
    friend Vec7 operator*(double s, const Vec7& v) { return v * s; }
    bool operator==(const Vec7&) const = default;
};

double dot(const Vec7& a, const Vec7& b);
inline double norm(const Vec7& a) { return std::sqrt(dot(a, a)); }

class UnitVec7 {
public:
    static constexpr double kUnitTolerance = 1e-9;
    explicit UnitVec7(const Vec7& v);
    const Vec7& vec() const { return v_; }
    operator const Vec7&() const { return v_; }  // NOLINT(google-explicit-constructor)

private:
    Vec7 v_;
};

/// One oriented line of the Fano plane: ê_i × ê_j = sign · ê_k (and cyclic).
struct SignedTriple {
    int i = 0;
    int j = 0;
    int k = 0;
    int sign = 1;
    bool operator==(const SignedTriple&) const = default;
};

/// Structure constants of a 7D cross product built from seven signed
/// triples. Construction validates coverage, antisymmetry and the norm
/// identity |x×y|² = |x|²|y|² − (x·y)².
class CrossTable {
public:
    CrossTable(std::string id, std::vector<SignedTriple> triples);

    /// Cyclic convention {124, 235, 346, 457, 561, 672, 713}; the default.
    static const CrossTable& cyclic();
    /// Alternative labelling {123, 145, 176, 246, 257, 347, 365}.
    static const CrossTable& cayley();

    static CrossTable from_json(const std::string& text);
    std::string to_json() const;

    const std::string& id() const { return id_; }
    const std::vector<SignedTriple>& triples() const { return triples_; }

    /// ê_i × ê_j = coefficient(i, j, k) ê_k, 1-based; values in {-1, 0, 1}.
    int coefficient(int i, int j, int k) const;
    /// Index k and sign s with ê_i × ê_j = s ê_k; k = 0 when i == j.
    std::pair<int, int> basis_product(int i, int j) const;

    Vec7 cross(const Vec7& x, const Vec7& y) const;

private:
    std::string id_;
    std::vector<SignedTriple> triples_;
    std::array<std::array<int, 7>, 7> target_{};  // 1-based k, 0 on diagonal
    std::array<std::array<int, 7>, 7> sign_{};
};

Vec7 cross7(const Vec7& x, const Vec7& y, const CrossTable& table = CrossTable::cyclic());

/// Point a + X of R^8; unit points lie on S^7.
struct SevenPoint {
    double a = 0.0;
    Vec7 X;

    double norm_squared() const { return a * a + dot(X, X); }
    double norm() const { return std::sqrt(norm_squared()); }
    bool operator==(const SevenPoint&) const = default;
};

/// (ab − X·Y, aY + bX − X×Y) in the right-handed algebra; the left-handed
/// algebra is the opposite product, which flips the sign of X×Y.
SevenPoint oct_product(const SevenPoint& p, const SevenPoint& q,
                       const CrossTable& table = CrossTable::cyclic(),
                       Handedness h = Handedness::right);

/// (0, λN).
SevenPoint beable7(const UnitVec7& n, Handedness lambda);

/// N2×(N3×N4) − N3(N2·N4) + N4(N2·N3).
Vec7 z_deviation(const Vec7& n2, const Vec7& n3, const Vec7& n4,
                 const CrossTable& table = CrossTable::cyclic());

/// (N1×N2)·(N3×N4) − [(N1·N3)(N2·N4) − (N1·N4)(N2·N3) + N1·Z].
double lagrange_residual(const Vec7& n1, const Vec7& n2, const Vec7& n3, const Vec7& n4,
                         const CrossTable& table = CrossTable::cyclic());

/// x×(y×z) + y×(z×x) + z×(x×y).
Vec7 jacobiator(const Vec7& x, const Vec7& y, const Vec7& z,
                const CrossTable& table = CrossTable::cyclic());

/// Four-particle embedding of measurement directions into R^7.
std::array<UnitVec7, 4> embed_ghz4(const UnitVec3& n1, const UnitVec3& n2, const UnitVec3& n3,
                                   const UnitVec3& n4);

/// Three-particle embedding: reference direction N0 (from the state's
/// amplitude angle α and phase δ) followed by N1..N3.
std::array<UnitVec7, 4> embed_ghz3(const UnitVec3& n1, const UnitVec3& n2, const UnitVec3& n3,
                                   double alpha, double delta);

}  // namespace spherelab::sphere7
