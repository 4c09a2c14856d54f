#pragma once

#include "spherelab/ga3.hpp"

namespace spherelab::lrmodel {

using ga3::Handedness;
using ga3::UnitVec3;

/// Scalar part of (μ·a)(μ·b); the same for both orientations. Equals −a·b.
double singlet_correlation(const UnitVec3& a, const UnitVec3& b);

/// −a·b − a·b′ − a′·b + a′·b′ with a normalized hidden-variable distribution.
double chsh_model(const UnitVec3& a, const UnitVec3& a_prime, const UnitVec3& b, const UnitVec3& b_prime);

/// 2√(1 − (a×a′)·(b′×b)), with the radicand clamped at 0.
double chsh_model_bound(const UnitVec3& a, const UnitVec3& a_prime, const UnitVec3& b, const UnitVec3& b_prime);

}  // namespace spherelab::lrmodel
