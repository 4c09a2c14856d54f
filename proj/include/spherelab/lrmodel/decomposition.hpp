#pragma once

#include <array>
#include <span>
#include <variant>

#include "spherelab/ga3.hpp"
#include "spherelab/sphere7.hpp"

namespace spherelab::lrmodel {

using ga3::Handedness;

using Beable = std::variant<ga3::Multivector3, sphere7::SevenPoint>;

enum class Space { S3, S7 };

/// A product point written as f + g·(beable about N) in the algebra of a
/// given orientation. g >= 0; N is unit, or zero when g = 0. For S3 only
/// the first three axis components are used.
struct DecompositionResult {
    double f = 0.0;
    double g = 0.0;
    std::array<double, 7> axis{};
    Space space = Space::S3;

    ga3::Vec3 axis3() const { return {axis[0], axis[1], axis[2]}; }
    sphere7::Vec7 axis7() const { return {axis}; }
};

/// Product of the sequence in the algebra of orientation `h`. S3 points are
/// folded left to right; S7 points are multiplied in adjacent pairs first,
/// (AB)(CD), then the pair products are folded.
Beable grouped_product(std::span<const Beable> beables, Handedness h,
                       const sphere7::CrossTable& table = sphere7::CrossTable::cyclic());

/// Splits the grouped product into its orientation-free scalar f, oriented
/// magnitude g and direction N. Rejects empty or mixed-space input.
DecompositionResult canonical_decomposition(std::span<const Beable> beables, Handedness h,
                                            const sphere7::CrossTable& table = sphere7::CrossTable::cyclic());

/// Splits an already computed point.
DecompositionResult decompose(const Beable& point, Handedness h);

/// f + g·(beable about N) rebuilt in the algebra of orientation `h`.
Beable reconstruct(const DecompositionResult& d, Handedness h);

/// Largest component difference between `point` and reconstruct(d, h).
double reconstruction_error(const DecompositionResult& d, const Beable& point, Handedness h);

}  // namespace spherelab::lrmodel
