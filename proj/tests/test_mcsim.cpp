#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "spherelab/errors.hpp"
#include "spherelab/mcsim.hpp"

using namespace spherelab;
using namespace spherelab::mcsim;
using ga3::UnitVec3;

namespace {

SingletExperiment singlet_at(double ta, double tb) {
    return {UnitVec3::from_spherical(ta, 0.3), UnitVec3::from_spherical(tb, 1.9)};
}

}  // namespace

TEST(Philox, KnownAnswerVectors) {
    using W = std::array<std::uint32_t, 4>;
    EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}), (W{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (W{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (W{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Uniform01, RangeAndMoments) {
    double sum = 0.0;
    double sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = uniform01(99, static_cast<std::uint64_t>(i));
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        sum2 += u * u;
    }
    const double mean = sum / n;
    EXPECT_NEAR(mean, 0.5, 5 * std::sqrt(1.0 / 12 / n));
    EXPECT_NEAR(sum2 / n - mean * mean, 1.0 / 12, 1e-3);
    EXPECT_NE(uniform01(1, 0), uniform01(2, 0));
    EXPECT_EQ(uniform01(1, 5), uniform01(1, 5));
}

TEST(Distribution, ValidatesWeights) {
    EXPECT_NO_THROW((Distribution{0.0}.validate()));
    EXPECT_NO_THROW((Distribution{1.0}.validate()));
    EXPECT_THROW((Distribution{1.5}.validate()), DomainError);
    EXPECT_THROW((Distribution{-0.1}.validate()), DomainError);
    EXPECT_THROW((Distribution{std::numeric_limits<double>::quiet_NaN()}.validate()), DomainError);
}

TEST(Distribution, DegenerateWeightsFixTheOrientation) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        ASSERT_EQ(sample_lambda(3, i, {1.0}), ga3::Handedness::right);
        ASSERT_EQ(sample_lambda(3, i, {0.0}), ga3::Handedness::left);
    }
}

TEST(SignChannel, Rule) {
    EXPECT_EQ(sign_channel(0.3, {-5.0}), 1);
    EXPECT_EQ(sign_channel(-0.3, {5.0}), -1);
    EXPECT_EQ(sign_channel(0.0, {0.1, -0.4, 0.2}), -1);
    EXPECT_EQ(sign_channel(1e-13, {0.1, 0.4, 0.2}), 1);
}

TEST(Ensemble, SingletScalarMeanIsExactAndOrientedPartsAverageOut) {
    EnsembleConfig cfg;
    cfg.trials = 200000;
    cfg.seed = 2024;
    cfg.experiment = singlet_at(0.4, 2.2);
    const auto r = run_ensemble(cfg);
    const auto& e = std::get<SingletExperiment>(cfg.experiment);
    EXPECT_NEAR(r.scalar_mean, -ga3::dot(e.a, e.b), 1e-15);
    EXPECT_EQ(r.scalar_sigma, 0.0);
    ASSERT_EQ(r.oriented_mean.size(), r.oriented_sigma.size());
    ASSERT_FALSE(r.oriented_mean.empty());
    for (std::size_t i = 0; i < r.oriented_mean.size(); ++i) {
        EXPECT_LE(std::abs(r.oriented_mean[i]), 5 * r.oriented_sigma[i] + 1e-300) << i;
    }
    EXPECT_NEAR(r.plus_fraction, 0.5, 5 * std::sqrt(0.25 / cfg.trials));
    EXPECT_EQ(r.experiment, "singlet");
}

TEST(Ensemble, BiasedDistributionShiftsOnlyOrientedParts) {
    EnsembleConfig cfg;
    cfg.trials = 50000;
    cfg.seed = 5;
    cfg.distribution.weight_plus = 1.0;
    cfg.experiment = singlet_at(0.4, 2.2);
    const auto all_right = run_ensemble(cfg);
    cfg.distribution.weight_plus = 0.0;
    const auto all_left = run_ensemble(cfg);
    EXPECT_EQ(all_right.scalar_mean, all_left.scalar_mean);
    EXPECT_EQ(all_right.plus_fraction, 1.0);
    EXPECT_EQ(all_left.plus_fraction, 0.0);
    for (std::size_t i = 0; i < all_right.oriented_mean.size(); ++i) {
        EXPECT_NEAR(all_right.oriented_mean[i], -all_left.oriented_mean[i], 1e-15);
    }
}

TEST(Ensemble, BitIdenticalAcrossWorkerCounts) {
    EnsembleConfig cfg;
    cfg.trials = 100003;
    cfg.seed = 77;
    cfg.experiment = ChshExperiment{UnitVec3::from_spherical(0, 0), UnitVec3::from_spherical(1.5, 0.2),
                                    UnitVec3::from_spherical(0.8, 2.0), UnitVec3::from_spherical(2.3, -1.0)};
    cfg.workers = 1;
    const auto one = run_ensemble(cfg);
    for (unsigned w : {2u, 3u, 4u, 8u}) {
        cfg.workers = w;
        const auto many = run_ensemble(cfg);
        EXPECT_EQ(many, one) << w;
        EXPECT_EQ(many.to_json(), one.to_json()) << w;
    }
}

TEST(Ensemble, GhzExperimentsReproduceTableValue) {
    EnsembleConfig cfg;
    cfg.trials = 20000;
    cfg.experiment = Ghz4Experiment{{UnitVec3::from_spherical(0.3, 0.1), UnitVec3::from_spherical(1.1, 2.0),
                                     UnitVec3::from_spherical(2.0, -0.7), UnitVec3::from_spherical(0.9, 0.4)}};
    const auto r4 = run_ensemble(cfg);
    EXPECT_EQ(r4.experiment, "ghz4");
    EXPECT_EQ(r4.scalar_sigma, 0.0);
    cfg.experiment = Ghz3Experiment{{UnitVec3::from_spherical(0.3, 0.1), UnitVec3::from_spherical(1.1, 2.0),
                                     UnitVec3::from_spherical(2.0, -0.7)},
                                    0.6,
                                    0.2};
    const auto r3 = run_ensemble(cfg);
    EXPECT_EQ(r3.experiment, "ghz3");
    EXPECT_EQ(r3.parameters, (std::vector<double>{0.6, 0.2}));
}

TEST(Ensemble, JsonRoundTrip) {
    EnsembleConfig cfg;
    cfg.trials = 1000;
    cfg.seed = 11;
    cfg.experiment = singlet_at(1.0, 2.0);
    const auto r = run_ensemble(cfg);
    const auto back = EnsembleReport::from_json(r.to_json());
    EXPECT_EQ(back, r);
    EXPECT_THROW(EnsembleReport::from_json("{}"), FormatError);
}

TEST(Ensemble, RejectsZeroTrialsAndBadWeights) {
    EnsembleConfig cfg;
    cfg.trials = 0;
    EXPECT_THROW(run_ensemble(cfg), DomainError);
    cfg.trials = 10;
    cfg.distribution.weight_plus = 2.0;
    EXPECT_THROW(run_ensemble(cfg), DomainError);
}
