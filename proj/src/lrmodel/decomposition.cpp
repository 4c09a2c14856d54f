#include "spherelab/lrmodel/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace spherelab::lrmodel {

namespace {

constexpr double kZeroOriented = 1e-300;

Space space_of(const Beable& b) { return std::holds_alternative<ga3::Multivector3>(b) ? Space::S3 : Space::S7; }

Space common_space(std::span<const Beable> beables) {
    if (beables.empty()) throw DomainError("decomposition needs at least one beable");
    const Space s = space_of(beables.front());
    for (const auto& b : beables) {
        if (space_of(b) != s) throw DomainError("beables from S3 and S7 cannot be mixed");
    }
    return s;
}

}  // namespace

Beable grouped_product(std::span<const Beable> beables, Handedness h, const sphere7::CrossTable& table) {
    if (common_space(beables) == Space::S3) {
        std::vector<ga3::Multivector3> points;
        for (const auto& b : beables) points.push_back(std::get<ga3::Multivector3>(b));
        const auto result = ga3::product_chain(points, h);
        if (!result.is_even()) throw DomainError("S3 beables must be even-grade");
        return result;
    }
    std::vector<sphere7::SevenPoint> pairs;
    for (std::size_t i = 0; i < beables.size(); i += 2) {
        const auto& p = std::get<sphere7::SevenPoint>(beables[i]);
        if (i + 1 < beables.size()) {
            pairs.push_back(sphere7::oct_product(p, std::get<sphere7::SevenPoint>(beables[i + 1]), table, h));
        } else {
            pairs.push_back(p);
        }
    }
    sphere7::SevenPoint acc = pairs.front();
    for (std::size_t i = 1; i < pairs.size(); ++i) acc = sphere7::oct_product(acc, pairs[i], table, h);
    return acc;
}

DecompositionResult decompose(const Beable& point, Handedness h) {
    DecompositionResult d;
    const double lambda = ga3::sign(h);
    std::vector<double> oriented;
    if (const auto* m = std::get_if<ga3::Multivector3>(&point)) {
        if (!m->is_even()) throw DomainError("S3 point must be even-grade");
        d.space = Space::S3;
        d.f = m->scalar_part();
        const auto b = m->bivector_part();
        oriented = {b.x, b.y, b.z};
    } else {
        const auto& p = std::get<sphere7::SevenPoint>(point);
        d.space = Space::S7;
        d.f = p.a;
        oriented.assign(p.X.c.begin(), p.X.c.end());
    }
    double g2 = 0.0;
    for (double v : oriented) g2 += v * v;
    d.g = std::sqrt(g2);
    if (d.g > kZeroOriented) {
        for (std::size_t i = 0; i < oriented.size(); ++i) d.axis[i] = lambda * oriented[i] / d.g;
    }
    return d;
}

DecompositionResult canonical_decomposition(std::span<const Beable> beables, Handedness h,
                                            const sphere7::CrossTable& table) {
    return decompose(grouped_product(beables, h, table), h);
}

Beable reconstruct(const DecompositionResult& d, Handedness h) {
    const double lambda = ga3::sign(h);
    if (d.space == Space::S3) {
        return ga3::Multivector3::scalar(d.f) + ga3::Multivector3::bivector(d.axis3() * (lambda * d.g));
    }
    return sphere7::SevenPoint{d.f, d.axis7() * (lambda * d.g)};
}

double reconstruction_error(const DecompositionResult& d, const Beable& point, Handedness h) {
    const Beable rebuilt = reconstruct(d, h);
    if (space_of(rebuilt) != space_of(point)) throw DomainError("space mismatch in reconstruction");
    double err = 0.0;
    if (d.space == Space::S3) {
        const auto& x = std::get<ga3::Multivector3>(rebuilt);
        const auto& y = std::get<ga3::Multivector3>(point);
        for (std::size_t i = 0; i < ga3::Multivector3::kSize; ++i) err = std::max(err, std::abs(x[i] - y[i]));
    } else {
        const auto& x = std::get<sphere7::SevenPoint>(rebuilt);
        const auto& y = std::get<sphere7::SevenPoint>(point);
        err = std::abs(x.a - y.a);
        for (std::size_t i = 0; i < 7; ++i) err = std::max(err, std::abs(x.X[i] - y.X[i]));
    }
    return err;
}

}  // namespace spherelab::lrmodel
