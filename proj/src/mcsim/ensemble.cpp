#include "spherelab/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "json.hpp"

namespace spherelab::mcsim {

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
    constexpr std::uint64_t kM0 = 0xD2511F53;
    constexpr std::uint64_t kM1 = 0xCD9E8D57;
    constexpr std::uint32_t kW0 = 0x9E3779B9;
    constexpr std::uint32_t kW1 = 0xBB67AE85;
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = kM0 * ctr[0];
        const std::uint64_t p1 = kM1 * ctr[2];
        ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
               static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        key[0] += kW0;
        key[1] += kW1;
    }
    return ctr;
}

double uniform01(std::uint64_t seed, std::uint64_t index) {
    const auto w = philox4x32({static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0, 0},
                              {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
    const std::uint64_t bits = (static_cast<std::uint64_t>(w[0] >> 5) << 26) | (w[1] >> 6);
    return static_cast<double>(bits) * 0x1.0p-53;
}

void Distribution::validate() const {
    if (!(weight_plus >= 0.0 && weight_plus <= 1.0)) {
        throw DomainError("weight of +1 must lie in [0, 1]");
    }
}

Handedness sample_lambda(std::uint64_t seed, std::uint64_t index, const Distribution& dist) {
    return uniform01(seed, index) < dist.weight_plus ? Handedness::right : Handedness::left;
}

std::string experiment_name(const Experiment& e) {
    static constexpr std::array<const char*, 4> kNames{"singlet", "chsh", "ghz4", "ghz3"};
    return kNames[e.index()];
}

int sign_channel(double scalar, const std::vector<double>& oriented) {
    if (std::abs(scalar) > 1e-12) return scalar > 0 ? 1 : -1;
    double best = 0.0;
    for (double v : oriented) {
        if (std::abs(v) > std::abs(best)) best = v;
    }
    if (best == 0.0) return 0;
    return best > 0 ? 1 : -1;
}

namespace {

constexpr std::uint64_t kBlock = 1 << 14;
constexpr std::size_t kMaxComponents = 9;  // scalar, up to 7 oriented, sign channel

struct Sample {
    double scalar = 0.0;
    std::vector<double> oriented;
    int sign = 0;
};

struct TrialEvaluator {
    Handedness lambda;
    const sphere7::CrossTable& table;

    Sample operator()(const SingletExperiment& e) const {
        const auto p = ga3::geometric_product(ga3::bivector_beable(e.a, lambda), ga3::bivector_beable(e.b, lambda),
                                              lambda);
        return from_s3(p);
    }
    Sample operator()(const ChshExperiment& e) const {
        auto pair = [this](const UnitVec3& x, const UnitVec3& y) {
            return ga3::geometric_product(ga3::bivector_beable(x, lambda), ga3::bivector_beable(y, lambda), lambda);
        };
        const std::array<ga3::Multivector3, 4> terms{pair(e.a, e.b), pair(e.a, e.b_prime), pair(e.a_prime, e.b),
                                                     pair(e.a_prime, e.b_prime)};
        const auto total = terms[0] + terms[1] + terms[2] - terms[3];
        Sample s = from_s3(total);
        s.sign = 0;
        const std::array<int, 4> weights{1, 1, 1, -1};
        for (std::size_t k = 0; k < 4; ++k) s.sign += weights[k] * from_s3(terms[k]).sign;
        return s;
    }
    Sample operator()(const Ghz4Experiment& e) const {
        const auto N = sphere7::embed_ghz4(e.n[0], e.n[1], e.n[2], e.n[3]);
        return four_point(N);
    }
    Sample operator()(const Ghz3Experiment& e) const {
        const auto N = sphere7::embed_ghz3(e.n[0], e.n[1], e.n[2], e.alpha, e.delta);
        return four_point(N);
    }

    static Sample from_s3(const ga3::Multivector3& p) {
        Sample s;
        s.scalar = p.scalar_part();
        const auto b = p.bivector_part();
        s.oriented = {b.x, b.y, b.z};
        s.sign = sign_channel(s.scalar, s.oriented);
        return s;
    }

    Sample four_point(const std::array<sphere7::UnitVec7, 4>& N) const {
        const auto first = sphere7::oct_product(sphere7::beable7(N[0], lambda), sphere7::beable7(N[1], lambda), table,
                                                lambda);
        const auto second = sphere7::oct_product(sphere7::beable7(N[2], lambda), sphere7::beable7(N[3], lambda),
                                                 table, lambda);
        const auto p = sphere7::oct_product(first, second, table, lambda);
        Sample s;
        s.scalar = p.a;
        s.oriented.assign(p.X.c.begin(), p.X.c.end());
        s.sign = sign_channel(s.scalar, s.oriented);
        return s;
    }
};

struct Accumulator {
    std::array<double, kMaxComponents> sum{};
    std::array<double, kMaxComponents> sumsq{};
    std::uint64_t plus = 0;

    Accumulator& operator+=(const Accumulator& o) {
        for (std::size_t i = 0; i < kMaxComponents; ++i) {
            sum[i] += o.sum[i];
            sumsq[i] += o.sumsq[i];
        }
        plus += o.plus;
        return *this;
    }
};

std::array<double, kMaxComponents> flatten(const Sample& s, std::size_t dims) {
    std::array<double, kMaxComponents> v{};
    v[0] = s.scalar;
    for (std::size_t i = 0; i < dims; ++i) v[1 + i] = s.oriented[i];
    v[kMaxComponents - 1] = s.sign;
    return v;
}

Accumulator tree_sum(const std::vector<Accumulator>& blocks, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return blocks[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    Accumulator left = tree_sum(blocks, lo, mid);
    left += tree_sum(blocks, mid, hi);
    return left;
}

std::vector<std::array<double, 3>> echo_directions(const Experiment& e) {
    auto v = [](const UnitVec3& n) { return std::array<double, 3>{n.x(), n.y(), n.z()}; };
    return std::visit(
        [&v](const auto& x) -> std::vector<std::array<double, 3>> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SingletExperiment>) {
                return {v(x.a), v(x.b)};
            } else if constexpr (std::is_same_v<T, ChshExperiment>) {
                return {v(x.a), v(x.a_prime), v(x.b), v(x.b_prime)};
            } else {
                std::vector<std::array<double, 3>> out;
                for (const auto& n : x.n) out.push_back(v(n));
                return out;
            }
        },
        e);
}

}  // namespace

EnsembleReport run_ensemble(const EnsembleConfig& config) {
    if (config.trials == 0) throw DomainError("an ensemble needs at least one trial");
    config.distribution.validate();
    const auto& table = *config.table;

    auto evaluate = [&](std::uint64_t index) {
        const Handedness lambda = sample_lambda(config.seed, index, config.distribution);
        return std::pair{lambda, std::visit(TrialEvaluator{lambda, table}, config.experiment)};
    };

    const auto first = evaluate(0).second;
    const std::size_t dims = first.oriented.size();
    const auto shift = flatten(first, dims);

    const std::uint64_t n_blocks = (config.trials + kBlock - 1) / kBlock;
    std::vector<Accumulator> blocks(n_blocks);
    auto run_block = [&](std::uint64_t b) {
        Accumulator acc;
        const std::uint64_t end = std::min(config.trials, (b + 1) * kBlock);
        for (std::uint64_t i = b * kBlock; i < end; ++i) {
            const auto [lambda, sample] = evaluate(i);
            const auto v = flatten(sample, dims);
            for (std::size_t k = 0; k < kMaxComponents; ++k) {
                const double d = v[k] - shift[k];
                acc.sum[k] += d;
                acc.sumsq[k] += d * d;
            }
            if (lambda == Handedness::right) ++acc.plus;
        }
        blocks[b] = acc;
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(config.workers, static_cast<unsigned>(n_blocks)));
    if (workers == 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t b = w; b < n_blocks; b += workers) run_block(b);
            });
        }
        for (auto& t : pool) t.join();
    }
    const Accumulator total = tree_sum(blocks, 0, blocks.size());

    const double n = static_cast<double>(config.trials);
    auto mean = [&](std::size_t k) { return shift[k] + total.sum[k] / n; };
    auto sigma = [&](std::size_t k) {
        if (config.trials < 2) return 0.0;
        const double var = std::max(0.0, (total.sumsq[k] - total.sum[k] * total.sum[k] / n) / (n - 1.0));
        return std::sqrt(var / n);
    };

    EnsembleReport r;
    r.experiment = experiment_name(config.experiment);
    r.trials = config.trials;
    r.seed = config.seed;
    r.weight_plus = config.distribution.weight_plus;
    r.table_id = table.id();
    r.directions = echo_directions(config.experiment);
    if (const auto* g = std::get_if<Ghz3Experiment>(&config.experiment)) r.parameters = {g->alpha, g->delta};
    r.plus_fraction = static_cast<double>(total.plus) / n;
    r.scalar_mean = mean(0);
    r.scalar_sigma = sigma(0);
    for (std::size_t i = 0; i < dims; ++i) {
        r.oriented_mean.push_back(mean(1 + i));
        r.oriented_sigma.push_back(sigma(1 + i));
    }
    r.sign_channel_mean = mean(kMaxComponents - 1);
    r.sign_channel_sigma = sigma(kMaxComponents - 1);
    r.sign_channel_deviation = r.sign_channel_mean - r.scalar_mean;
    r.sign_channel_rule =
        "interpretation: sign of the scalar part when |scalar| > 1e-12, otherwise sign of the largest-magnitude "
        "oriented component; no extraction rule is derived";
    return r;
}

std::string EnsembleReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["experiment"] = experiment;
    doc["trials"] = trials;
    doc["seed"] = seed;
    doc["weight_plus"] = weight_plus;
    doc["table_id"] = table_id;
    doc["directions"] = directions;
    doc["parameters"] = parameters;
    doc["plus_fraction"] = plus_fraction;
    doc["scalar_mean"] = scalar_mean;
    doc["scalar_sigma"] = scalar_sigma;
    doc["oriented_mean"] = oriented_mean;
    doc["oriented_sigma"] = oriented_sigma;
    doc["sign_channel_mean"] = sign_channel_mean;
    doc["sign_channel_sigma"] = sign_channel_sigma;
    doc["sign_channel_deviation"] = sign_channel_deviation;
    doc["sign_channel_rule"] = sign_channel_rule;
    return doc.dump(2) + "\n";
}

EnsembleReport EnsembleReport::from_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        EnsembleReport r;
        r.experiment = doc.at("experiment").get<std::string>();
        r.trials = doc.at("trials").get<std::uint64_t>();
        r.seed = doc.at("seed").get<std::uint64_t>();
        r.weight_plus = doc.at("weight_plus").get<double>();
        r.table_id = doc.at("table_id").get<std::string>();
        r.directions = doc.at("directions").get<std::vector<std::array<double, 3>>>();
        r.parameters = doc.at("parameters").get<std::vector<double>>();
        r.plus_fraction = doc.at("plus_fraction").get<double>();
        r.scalar_mean = doc.at("scalar_mean").get<double>();
        r.scalar_sigma = doc.at("scalar_sigma").get<double>();
        r.oriented_mean = doc.at("oriented_mean").get<std::vector<double>>();
        r.oriented_sigma = doc.at("oriented_sigma").get<std::vector<double>>();
        r.sign_channel_mean = doc.at("sign_channel_mean").get<double>();
        r.sign_channel_sigma = doc.at("sign_channel_sigma").get<double>();
        r.sign_channel_deviation = doc.at("sign_channel_deviation").get<double>();
        r.sign_channel_rule = doc.at("sign_channel_rule").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("ensemble JSON: ") + e.what());
    }
}

}  // namespace spherelab::mcsim
