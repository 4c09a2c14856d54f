#include <cmath>

#include "spherelab/cli.hpp"
#include "spherelab/ga3.hpp"
#include "sampling.hpp"

namespace spherelab::cli {

namespace {

using ga3::Handedness;
using ga3::Multivector3;
using ga3::UnitVec3;
using ga3::Vec3;
using sphere7::Vec7;

using detail::Sampler;

/// Keeps the sample with the largest |lhs − rhs|.
struct Worst {
    double lhs = 0.0;
    double rhs = 0.0;

    void consider(double l, double r) {
        if (!(std::abs(l - r) <= std::abs(lhs - rhs))) {
            lhs = l;
            rhs = r;
        }
    }
    void consider(const Vec3& l, const Vec3& r) {
        consider(l.x, r.x);
        consider(l.y, r.y);
        consider(l.z, r.z);
    }
    void consider(const Multivector3& l, const Multivector3& r) {
        for (std::size_t i = 0; i < Multivector3::kSize; ++i) consider(l[i], r[i]);
    }
};

}  // namespace

lrmodel::ComparisonReport identity_suite(std::uint64_t seed, std::uint64_t samples, const sphere7::CrossTable& table,
                                         double tol) {
    Sampler rng(seed);
    lrmodel::ComparisonReport report;
    report.metadata = {"identities", table.id(), seed};

    Worst pair_scalar, pair_bivector, triple_scalar, triple_bivector, quad, assoc, closure, square, comm;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const Handedness h = rng.lambda();
        const double l = ga3::sign(h);
        const auto a = rng.unit3();
        const auto b = rng.unit3();
        const auto c = rng.unit3();
        const auto d = rng.unit3();
        const auto A = ga3::bivector_beable(a, h);
        const auto B = ga3::bivector_beable(b, h);
        const auto C = ga3::bivector_beable(c, h);
        const auto D = ga3::bivector_beable(d, h);

        const auto ab = ga3::geometric_product(A, B, h);
        pair_scalar.consider(ab.scalar_part(), -ga3::dot(a, b));
        pair_bivector.consider(ab.bivector_part(), -l * ga3::cross(a, b));

        const auto abc = ga3::geometric_product(ab, C, h);
        triple_scalar.consider(abc.scalar_part(), ga3::dot(a, ga3::cross(b, c)));
        triple_bivector.consider(abc.bivector_part(), l * (ga3::cross(a, ga3::cross(b, c)) - a.vec() * ga3::dot(b, c)));

        const auto abcd = ga3::geometric_product(abc, D, h);
        const Vec3 axb = ga3::cross(a, b);
        const Vec3 cxd = ga3::cross(c, d);
        const auto quad_expected =
            Multivector3::scalar(ga3::dot(a, b) * ga3::dot(c, d) - ga3::dot(axb, cxd)) +
            Multivector3::bivector(l * (ga3::dot(a, b) * cxd + ga3::dot(c, d) * axb - ga3::cross(axb, cxd)));
        quad.consider(abcd, quad_expected);

        const auto x = rng.multivector();
        const auto y = rng.multivector();
        const auto z = rng.multivector();
        assoc.consider(ga3::geometric_product(ga3::geometric_product(x, y), z),
                       ga3::geometric_product(x, ga3::geometric_product(y, z)));
        closure.consider(ga3::geometric_product(rng.unit_even(), rng.unit_even(), h).norm(), 1.0);
        square.consider(ga3::geometric_product(A, A, h), Multivector3::scalar(-1.0));
        if (ga3::norm(axb) > 1e-6) {
            const double sin_ab = ga3::norm(axb);
            comm.consider(ga3::commutator(A, B, h) +
                              ga3::bivector_beable(ga3::normalized_axis(a, b), h) * (2.0 * sin_ab),
                          Multivector3{});
        }
    }
    auto add = [&](const std::string& label, const Worst& w, bool enforced = true) {
        report.add(label, w.lhs, w.rhs, tol, enforced);
    };
    add("beable pair product, scalar part vs -a.b", pair_scalar);
    add("beable pair product, bivector part vs -lambda(a x b)", pair_bivector);
    add("beable triple product, scalar part vs a.(b x c)", triple_scalar);
    add("beable triple product, bivector part vs lambda{a x (b x c) - a(b.c)}", triple_bivector);
    add("beable quadruple product vs closed-form expansion", quad);
    add("geometric product associativity", assoc);
    add("unit even-grade product norm", closure);
    add("beable square vs -1", square);
    add("beable commutator vs -2 sin(ab) beable(a x b)", comm);

    Worst anti, orth, norm_id, mixed, lagrange, z2, z3, z4, z34, z23, z42, closure7;
    double jacobi = 0.0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const Vec7 x = rng.unit7();
        const Vec7 y = rng.unit7();
        const Vec7 w = rng.unit7();
        const Vec7 v = rng.unit7();
        const Vec7 xy = table.cross(x, y);
        for (int i = 0; i < 7; ++i) anti.consider(xy[static_cast<std::size_t>(i)], -table.cross(y, x)[static_cast<std::size_t>(i)]);
        orth.consider(sphere7::dot(x, xy), 0.0);
        norm_id.consider(sphere7::dot(xy, xy), sphere7::dot(x, x) * sphere7::dot(y, y) - std::pow(sphere7::dot(x, y), 2));
        mixed.consider(sphere7::dot(xy, w), sphere7::dot(x, table.cross(y, w)));
        lagrange.consider(sphere7::lagrange_residual(v, x, y, w, table), 0.0);
        const Vec7 Z = sphere7::z_deviation(x, y, w, table);
        z2.consider(sphere7::dot(Z, x), 0.0);
        z3.consider(sphere7::dot(Z, y), 0.0);
        z4.consider(sphere7::dot(Z, w), 0.0);
        z34.consider(sphere7::dot(Z, table.cross(y, w)), 0.0);
        z23.consider(sphere7::dot(Z, table.cross(x, y)), 0.0);
        z42.consider(sphere7::dot(Z, table.cross(w, x)), 0.0);
        const Handedness h = rng.lambda();
        const double t = std::atan2(1.0, 0.5 + s % 3);
        const sphere7::SevenPoint p{std::cos(t), x * std::sin(t)};
        const sphere7::SevenPoint q{std::sin(t), y * std::cos(t)};
        closure7.consider(sphere7::oct_product(p, q, table, h).norm(), 1.0);
        jacobi = std::max(jacobi, sphere7::norm(sphere7::jacobiator(x, y, w, table)));
    }
    add("7D cross product antisymmetry", anti);
    add("7D cross product orthogonality x.(x x y)", orth);
    add("7D cross product norm identity", norm_id);
    add("7D mixed product (x x y).z vs x.(y x z)", mixed);
    add("generalized Lagrange identity residual", lagrange);
    add("Z.N2", z2);
    add("Z.N3", z3);
    add("Z.N4", z4);
    add("Z.(N3 x N4)", z34);
    add("Z.(N2 x N3)", z23, false);
    add("Z.(N4 x N2)", z42, false);
    add("octonionic product of unit points, norm", closure7);
    report.add("Jacobi failure witness, max jacobiator norm above 0.1", jacobi > 0.1 ? 1.0 : 0.0, 1.0, 0.0);
    report.add("max jacobiator norm over samples", jacobi, 0.0, 0.0, false);
    return report;
}

}  // namespace spherelab::cli
