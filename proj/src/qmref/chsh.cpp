#include <algorithm>
#include <cmath>
#include <numbers>

#include "spherelab/nelder_mead.hpp"
#include "spherelab/qmref.hpp"

namespace spherelab::qmref {

double chsh_qm(const StateVector& state, const UnitVec3& a, const UnitVec3& a_prime, const UnitVec3& b,
               const UnitVec3& b_prime) {
    if (state.n_qubits() != 2) throw DomainError("CHSH needs a two-qubit state");
    auto e = [&state](const UnitVec3& x, const UnitVec3& y) { return tensor_expectation(state, {{x, y}}); };
    return e(a, b) + e(a, b_prime) + e(a_prime, b) - e(a_prime, b_prime);
}

UnitVec3 in_plane(Plane plane, double t) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    switch (plane) {
        case Plane::xz: return UnitVec3::normalized({s, 0.0, c});
        case Plane::xy: return UnitVec3::normalized({c, s, 0.0});
        case Plane::yz: return UnitVec3::normalized({0.0, s, c});
    }
    throw DomainError("unknown plane");
}

ChshOptimum maximize_chsh(const StateVector& state) {
    constexpr int kGrid = 8;
    constexpr int kPolished = 4;
    const double step = std::numbers::pi / 4;

    ChshOptimum best;
    best.value = -1.0;
    for (Plane plane : {Plane::xz, Plane::xy, Plane::yz}) {
        auto signed_at = [&](const std::vector<double>& t) {
            return chsh_qm(state, in_plane(plane, t[0]), in_plane(plane, t[1]), in_plane(plane, t[2]),
                           in_plane(plane, t[3]));
        };
        auto objective = [&](const std::vector<double>& t) { return -std::abs(signed_at(t)); };

        std::vector<std::pair<double, std::vector<double>>> seeds;
        for (int i = 0; i < kGrid * kGrid * kGrid * kGrid; ++i) {
            std::vector<double> t{step * (i % kGrid), step * (i / kGrid % kGrid),
                                  step * (i / (kGrid * kGrid) % kGrid), step * (i / (kGrid * kGrid * kGrid))};
            seeds.emplace_back(objective(t), std::move(t));
        }
        std::stable_sort(seeds.begin(), seeds.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });

        for (int k = 0; k < kPolished; ++k) {
            const auto result = nelder_mead(objective, seeds[static_cast<std::size_t>(k)].second, 0.1);
            const auto& t = result.value <= seeds[static_cast<std::size_t>(k)].first
                                ? result.x
                                : seeds[static_cast<std::size_t>(k)].second;
            const double value = std::abs(signed_at(t));
            if (value > best.value) {
                best.value = value;
                best.signed_value = signed_at(t);
                best.angles = {t[0], t[1], t[2], t[3]};
                best.plane = plane;
            }
        }
    }
    return best;
}

}  // namespace spherelab::qmref
