#include "spherelab/lrmodel/ghz.hpp"

#include <algorithm>
#include <cmath>

#include "spherelab/qmref.hpp"

namespace spherelab::lrmodel {

using sphere7::cross7;
using sphere7::dot;
using sphere7::Vec7;

std::string to_string(GhzMode mode) { return mode == GhzMode::postulated_z ? "postulated_z" : "table"; }

namespace {

double polar(const ga3::UnitVec3& n) { return std::acos(std::clamp(n.z(), -1.0, 1.0)); }
double azimuth(const ga3::UnitVec3& n) { return std::atan2(n.y(), n.x()); }

Vec7 postulated_deviation(double e3, double e7) { return Vec7::basis(3) * e3 + Vec7::basis(7) * e7; }

/// (P·Q)(R·S) − (P·R)(Q·S) + (P·S)(Q·R) − P·Z and the direct cross-product
/// form (P·Q)(R·S) − (P×Q)·(R×S).
struct QuadTerms {
    double postulated_z;
    double table_cross;
    double table_lagrange;
};

QuadTerms quad_terms(const Vec7& p, const Vec7& q, const Vec7& r, const Vec7& s, const Vec7& z_postulated,
                     const sphere7::CrossTable& table) {
    const double pair = dot(p, q) * dot(r, s);
    const double expansion = pair - dot(p, r) * dot(q, s) + dot(p, s) * dot(q, r);
    return {
        expansion - dot(p, z_postulated),
        pair - dot(cross7(p, q, table), cross7(r, s, table)),
        expansion - dot(p, sphere7::z_deviation(q, r, s, table)),
    };
}

template <class Terms>
GhzResult build_result(const Terms& t, double state_vector, const GhzOptions& options) {
    GhzResult out;
    out.value = options.mode == GhzMode::postulated_z ? t.postulated_z : t.table_cross;
    auto& rep = out.report;
    rep.metadata.mode = to_string(options.mode);
    rep.metadata.table_id = options.table->id();
    rep.add("postulated-Z model vs QM closed form", t.postulated_z, t.oracle, options.tolerance);
    rep.add("table model vs QM closed form", t.table_cross, t.oracle, options.tolerance, false);
    rep.add("table model: cross product vs Lagrange expansion", t.table_cross, t.table_lagrange, options.tolerance);
    rep.add("table model vs postulated-Z model", t.table_cross, t.postulated_z, options.tolerance, false);
    rep.add("QM closed form vs state-vector expectation", t.oracle, state_vector, options.tolerance);
    return out;
}

}  // namespace

Ghz4Terms ghz4_terms(const std::array<ga3::UnitVec3, 4>& n, const GhzOptions& options) {
    const auto N = sphere7::embed_ghz4(n[0], n[1], n[2], n[3]);
    const auto z = postulated_deviation(n[1].z() * n[2].z() * n[3].z(), options.z_e7);
    const auto q = quad_terms(N[0], N[1], N[2], N[3], z, *options.table);
    const double oracle = qmref::ghz4_closed_form({polar(n[0]), polar(n[1]), polar(n[2]), polar(n[3])},
                                                  {azimuth(n[0]), azimuth(n[1]), azimuth(n[2]), azimuth(n[3])});
    return {q.postulated_z, q.table_cross, q.table_lagrange, oracle};
}

GhzResult ghz4_model(const std::array<ga3::UnitVec3, 4>& n, const GhzOptions& options) {
    const auto terms = ghz4_terms(n, options);
    const double sv = qmref::tensor_expectation(qmref::make_state(qmref::Ghz4{}), {{n[0], n[1], n[2], n[3]}});
    return build_result(terms, sv, options);
}

Ghz3Terms ghz3_terms(const std::array<ga3::UnitVec3, 3>& n, double alpha, double delta, const GhzOptions& options) {
    const auto N = sphere7::embed_ghz3(n[0], n[1], n[2], alpha, delta);
    const auto z = postulated_deviation(n[0].z() * n[1].z() * n[2].z(), options.z_e7);
    const auto q = quad_terms(N[0], N[1], N[2], N[3], z, *options.table);
    const double oracle = qmref::ghz3_closed_form({polar(n[0]), polar(n[1]), polar(n[2])},
                                                  {azimuth(n[0]), azimuth(n[1]), azimuth(n[2])}, alpha, delta);
    return {q.postulated_z, q.table_cross, q.table_lagrange, oracle};
}

GhzResult ghz3_model(const std::array<ga3::UnitVec3, 3>& n, double alpha, double delta, const GhzOptions& options) {
    const auto terms = ghz3_terms(n, alpha, delta, options);
    const double sv =
        qmref::tensor_expectation(qmref::make_state(qmref::Ghz3{alpha, delta}), {{n[0], n[1], n[2]}});
    return build_result(terms, sv, options);
}

}  // namespace spherelab::lrmodel
