#pragma once

// Seeded hidden-variable ensembles. Each trial draws the orientation λ from
// a counter-based generator keyed by (seed, trial index), so results do not
// depend on how trials are split across workers.

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "spherelab/ga3.hpp"
#include "spherelab/sphere7.hpp"

namespace spherelab::mcsim {

using ga3::Handedness;
using ga3::UnitVec3;

/// Philox4x32-10 block function.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

/// Uniform double in [0, 1) with 53 random bits for (seed, index).
double uniform01(std::uint64_t seed, std::uint64_t index);

/// Two-point distribution over {+1, −1}.
struct Distribution {
    double weight_plus = 0.5;
    /// Rejects weights outside [0, 1].
    void validate() const;
};

Handedness sample_lambda(std::uint64_t seed, std::uint64_t index, const Distribution& dist = {});

struct SingletExperiment {
    UnitVec3 a;
    UnitVec3 b;
};
struct ChshExperiment {
    UnitVec3 a;
    UnitVec3 a_prime;
    UnitVec3 b;
    UnitVec3 b_prime;
};
struct Ghz4Experiment {
    std::array<UnitVec3, 4> n;
};
struct Ghz3Experiment {
    std::array<UnitVec3, 3> n;
    double alpha = 0.0;
    double delta = 0.0;
};
using Experiment = std::variant<SingletExperiment, ChshExperiment, Ghz4Experiment, Ghz3Experiment>;

std::string experiment_name(const Experiment& e);

struct EnsembleConfig {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    Distribution distribution;
    Experiment experiment = SingletExperiment{UnitVec3({0, 0, 1}), UnitVec3({0, 0, 1})};
    unsigned workers = 1;
    const sphere7::CrossTable* table = &sphere7::CrossTable::cyclic();
};

struct EnsembleReport {
    std::string experiment;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double weight_plus = 0.5;
    std::string table_id;
    /// Echo of the measurement directions (and α, δ for three particles).
    std::vector<std::array<double, 3>> directions;
    std::vector<double> parameters;

    double plus_fraction = 0.0;
    double scalar_mean = 0.0;
    double scalar_sigma = 0.0;
    std::vector<double> oriented_mean;
    std::vector<double> oriented_sigma;  // standard error of each mean
    double sign_channel_mean = 0.0;
    double sign_channel_sigma = 0.0;
    double sign_channel_deviation = 0.0;  // sign_channel_mean − scalar_mean
    std::string sign_channel_rule;

    std::string to_json() const;
    static EnsembleReport from_json(const std::string& text);
    bool operator==(const EnsembleReport&) const = default;
};

/// ±1 read-out of a product point: sign of the scalar part when it exceeds
/// 1e-12 in magnitude, else sign of the largest-magnitude oriented component.
int sign_channel(double scalar, const std::vector<double>& oriented);

EnsembleReport run_ensemble(const EnsembleConfig& config);

}  // namespace spherelab::mcsim
