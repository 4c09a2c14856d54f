#include "spherelab/lrmodel/singlet.hpp"

#include <algorithm>
#include <cmath>

namespace spherelab::lrmodel {

double singlet_correlation(const UnitVec3& a, const UnitVec3& b) {
    const auto product = ga3::geometric_product(ga3::bivector_beable(a, Handedness::right),
                                                ga3::bivector_beable(b, Handedness::right), Handedness::right);
    return product.scalar_part();
}

double chsh_model(const UnitVec3& a, const UnitVec3& a_prime, const UnitVec3& b, const UnitVec3& b_prime) {
    using ga3::dot;
    return -dot(a, b) - dot(a, b_prime) - dot(a_prime, b) + dot(a_prime, b_prime);
}

double chsh_model_bound(const UnitVec3& a, const UnitVec3& a_prime, const UnitVec3& b, const UnitVec3& b_prime) {
    const double mixed = ga3::dot(ga3::cross(a, a_prime), ga3::cross(b_prime, b));
    return 2.0 * std::sqrt(std::max(0.0, 1.0 - mixed));
}

}  // namespace spherelab::lrmodel
