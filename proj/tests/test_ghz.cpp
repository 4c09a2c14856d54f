#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "spherelab/lrmodel/decomposition.hpp"
#include "spherelab/lrmodel/ghz.hpp"
#include "spherelab/qmref.hpp"

using namespace spherelab;
using namespace spherelab::lrmodel;
using ga3::UnitVec3;

namespace {

constexpr double kPi = std::numbers::pi;

using V7 = std::array<double, 7>;

double d7(const V7& a, const V7& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < 7; ++i) s += a[i] * b[i];
    return s;
}

// Component expansion of the postulated-Z pipeline, written out directly
// from the embedding pattern.
double ghz4_expansion(const std::array<UnitVec3, 4>& n) {
    const V7 N1{-n[0].x(), n[0].y(), -n[0].z(), 0, 0, 0, 0};
    const V7 N2{n[1].x(), n[1].y(), 0, n[1].z(), 0, 0, 0};
    const V7 N3{n[2].x(), n[2].y(), 0, 0, n[2].z(), 0, 0};
    const V7 N4{n[3].x(), -n[3].y(), 0, 0, 0, -n[3].z(), 0};
    const double n1_dot_z = -n[0].z() * n[1].z() * n[2].z() * n[3].z();
    return d7(N1, N2) * d7(N3, N4) - d7(N1, N3) * d7(N2, N4) + d7(N1, N4) * d7(N2, N3) - n1_dot_z;
}

double ghz3_expansion(const std::array<UnitVec3, 3>& n, double alpha, double delta) {
    const V7 N0{-std::sin(alpha) * std::cos(delta), std::sin(alpha) * std::sin(delta), -std::cos(alpha), 0, 0, 0, 0};
    const V7 N1{n[0].x(), n[0].y(), 0, n[0].z(), 0, 0, 0};
    const V7 N2{n[1].x(), -n[1].y(), 0, 0, -n[1].z(), 0, 0};
    const V7 N3{-n[2].x(), -n[2].y(), 0, 0, 0, n[2].z(), 0};
    const double n0_dot_z = -std::cos(alpha) * n[0].z() * n[1].z() * n[2].z();
    return d7(N0, N1) * d7(N2, N3) - d7(N0, N2) * d7(N1, N3) + d7(N0, N3) * d7(N1, N2) - n0_dot_z;
}

struct Tuple4 {
    std::array<UnitVec3, 4> n;
    std::array<double, 4> th, ph;
};

Tuple4 random4(oracle::Random& rng) {
    std::array<double, 4> th{}, ph{};
    for (int k = 0; k < 4; ++k) {
        th[k] = rng.uniform(0, kPi);
        ph[k] = rng.uniform(-kPi, kPi);
    }
    return {{UnitVec3::from_spherical(th[0], ph[0]), UnitVec3::from_spherical(th[1], ph[1]),
             UnitVec3::from_spherical(th[2], ph[2]), UnitVec3::from_spherical(th[3], ph[3])},
            th,
            ph};
}

UnitVec3 sph(double th, double ph) { return UnitVec3::from_spherical(th, ph); }

}  // namespace

TEST(Ghz4Model, Examples) {
    const auto z = sph(0, 0);
    const auto x = sph(kPi / 2, 0);
    EXPECT_NEAR(ghz4_model({z, z, z, z}).value, 1.0, 1e-15);
    EXPECT_NEAR(ghz4_model({x, x, x, x}).value, -1.0, 1e-15);
}

TEST(Ghz3Model, Examples) {
    const auto z = sph(0, 0);
    const auto x = sph(kPi / 2, 0);
    EXPECT_NEAR(ghz3_model({z, z, z}, 0.0, 0.0).value, 1.0, 1e-15);
    EXPECT_NEAR(ghz3_model({x, x, x}, kPi / 2, 0.0).value, 1.0, 1e-15);
}

TEST(Ghz4Model, PostulatedZMatchesExpansionAndClosedForm) {
    oracle::Random rng(61);
    for (int i = 0; i < 500; ++i) {
        const auto t = random4(rng);
        const auto terms = ghz4_terms(t.n);
        const double closed = qmref::ghz4_closed_form(t.th, t.ph);
        ASSERT_NEAR(terms.postulated_z, ghz4_expansion(t.n), 1e-14);
        ASSERT_NEAR(terms.postulated_z, closed, 1e-12);
        ASSERT_NEAR(terms.oracle, closed, 1e-14);
        ASSERT_TRUE(ghz4_model(t.n).report.passed());
    }
}

TEST(Ghz3Model, PostulatedZMatchesExpansionAndClosedForm) {
    oracle::Random rng(62);
    for (int i = 0; i < 500; ++i) {
        const auto t = random4(rng);
        const std::array<UnitVec3, 3> n{t.n[0], t.n[1], t.n[2]};
        const double alpha = rng.uniform(0, kPi);
        const double delta = rng.uniform(-kPi, kPi);
        const auto terms = ghz3_terms(n, alpha, delta);
        const double closed = qmref::ghz3_closed_form({t.th[0], t.th[1], t.th[2]}, {t.ph[0], t.ph[1], t.ph[2]}, alpha, delta);
        ASSERT_NEAR(terms.postulated_z, ghz3_expansion(n, alpha, delta), 1e-14);
        ASSERT_NEAR(terms.postulated_z, closed, 1e-12);
        ASSERT_TRUE(ghz3_model(n, alpha, delta).report.passed());
    }
}

TEST(GhzTableMode, CrossFormEqualsLagrangeFormForEveryTable) {
    oracle::Random rng(63);
    const auto loaded = sphere7::CrossTable::from_json(sphere7::CrossTable::cayley().to_json());
    const sphere7::CrossTable* tables[] = {&sphere7::CrossTable::cyclic(), &sphere7::CrossTable::cayley(), &loaded};
    for (const auto* table : tables) {
        GhzOptions opt;
        opt.mode = GhzMode::table;
        opt.table = table;
        for (int i = 0; i < 500; ++i) {
            const auto t = random4(rng);
            const auto t4 = ghz4_terms(t.n, opt);
            ASSERT_NEAR(t4.table_cross, t4.table_lagrange, 1e-12);
            const auto t3 = ghz3_terms({t.n[0], t.n[1], t.n[2]}, t.th[3], t.ph[3], opt);
            ASSERT_NEAR(t3.table_cross, t3.table_lagrange, 1e-12);
            const auto r = ghz4_model(t.n, opt);
            ASSERT_EQ(r.value, t4.table_cross);
            ASSERT_TRUE(r.report.passed());
        }
    }
}

TEST(GhzTableMode, ReportsResidualAgainstPostulatedZ) {
    oracle::Random rng(64);
    GhzOptions opt;
    opt.mode = GhzMode::table;
    const auto t = random4(rng);
    const auto r = ghz4_model(t.n, opt);
    bool found = false;
    for (const auto& row : r.report.rows) {
        if (row.label == "table model vs postulated-Z model") {
            found = true;
            EXPECT_FALSE(row.enforced);
            const auto terms = ghz4_terms(t.n, opt);
            EXPECT_EQ(row.residual, terms.table_cross - terms.postulated_z);
        }
    }
    EXPECT_TRUE(found);
}

TEST(GhzTableMode, DecompositionScalarMatchesTableValue) {
    oracle::Random rng(65);
    GhzOptions opt;
    opt.mode = GhzMode::table;
    for (int i = 0; i < 100; ++i) {
        const auto t = random4(rng);
        const auto N = sphere7::embed_ghz4(t.n[0], t.n[1], t.n[2], t.n[3]);
        std::vector<Beable> pts;
        for (const auto& v : N) pts.emplace_back(sphere7::beable7(v, ga3::Handedness::right));
        const auto d = canonical_decomposition(pts, ga3::Handedness::right);
        ASSERT_NEAR(d.f, ghz4_model(t.n, opt).value, 1e-12);
    }
}

TEST(GhzPostulated, E7CoefficientDoesNotChangeTheValue) {
    oracle::Random rng(66);
    const auto t = random4(rng);
    GhzOptions opt;
    opt.z_e7 = 0.75;
    EXPECT_EQ(ghz4_terms(t.n, opt).postulated_z, ghz4_terms(t.n).postulated_z);
}
