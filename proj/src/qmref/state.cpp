#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"
#include "spherelab/qmref.hpp"

namespace spherelab::qmref {

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    const std::size_t dim = amplitudes_.size();
    int n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if (dim < 2 || (std::size_t{1} << n) != dim || n > 4) {
        throw DomainError("state dimension must be 2^n with n in 1..4");
    }
    n_qubits_ = n;
    const double n2 = norm_squared();
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTolerance) {
        throw DomainError("state is not normalized: sum |amplitude|^2 = " + std::to_string(n2));
    }
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return s;
}

namespace {

struct Builder {
    StateVector operator()(const Singlet&) const {
        const double h = 1.0 / std::numbers::sqrt2;
        return StateVector({0.0, h, -h, 0.0});
    }
    StateVector operator()(const Hardy& s) const {
        if (!(s.theta >= 0.0 && s.theta <= std::numbers::pi / 2 + 1e-12)) {
            throw DomainError("hardy theta must lie in [0, pi/2]");
        }
        const double c = std::cos(s.theta);
        const double k = 1.0 / std::sqrt(1.0 + c * c);
        return StateVector({-std::sin(s.theta) * k, c * k, c * k, 0.0});
    }
    StateVector operator()(const Ghz4&) const {
        std::vector<Complex> amp(16, 0.0);
        amp[0b0011] = 1.0 / std::numbers::sqrt2;   // |++−−⟩
        amp[0b1100] = -1.0 / std::numbers::sqrt2;  // |−−++⟩
        return StateVector(std::move(amp));
    }
    StateVector operator()(const Ghz3& s) const {
        std::vector<Complex> amp(8, 0.0);
        amp[0b000] = std::cos(s.alpha / 2);
        amp[0b111] = std::sin(s.alpha / 2) * std::polar(1.0, -s.delta);
        return StateVector(std::move(amp));
    }
    StateVector operator()(const General& s) const { return StateVector(s.amplitudes); }
};

}  // namespace

StateVector make_state(const StateKind& kind) { return std::visit(Builder{}, kind); }

std::string state_to_json(const StateVector& state) {
    nlohmann::ordered_json doc;
    doc["n_qubits"] = state.n_qubits();
    doc["amplitudes"] = nlohmann::ordered_json::array();
    for (const auto& a : state.amplitudes()) doc["amplitudes"].push_back({a.real(), a.imag()});
    return doc.dump();
}

StateVector state_from_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        std::vector<Complex> amp;
        for (const auto& pair : doc.at("amplitudes")) {
            amp.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
        StateVector state(std::move(amp));
        if (doc.contains("n_qubits") && doc["n_qubits"].get<int>() != state.n_qubits()) {
            throw FormatError("n_qubits does not match amplitude count");
        }
        return state;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("state JSON: ") + e.what());
    }
}

std::string observable_to_json(const SpinObservable& obs) {
    nlohmann::ordered_json doc;
    doc["unit"] = "rad";
    doc["directions"] = nlohmann::ordered_json::array();
    for (const auto& n : obs.directions) {
        doc["directions"].push_back({std::acos(std::clamp(n.z(), -1.0, 1.0)), std::atan2(n.y(), n.x())});
    }
    return doc.dump();
}

SpinObservable observable_from_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        const std::string unit = doc.at("unit").get<std::string>();
        double scale = 1.0;
        if (unit == "deg") {
            scale = std::numbers::pi / 180.0;
        } else if (unit != "rad") {
            throw FormatError("unit must be 'deg' or 'rad'");
        }
        SpinObservable obs;
        for (const auto& d : doc.at("directions")) {
            obs.directions.push_back(UnitVec3::from_spherical(d.at(0).get<double>() * scale,
                                                              d.at(1).get<double>() * scale));
        }
        return obs;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("observable JSON: ") + e.what());
    }
}

}  // namespace spherelab::qmref
