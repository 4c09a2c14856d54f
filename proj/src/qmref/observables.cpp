#include <cmath>

#include "spherelab/qmref.hpp"

namespace spherelab::qmref {

namespace {

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

Matrix2 sigma_dot(const UnitVec3& n) {
    return {{{Complex(n.z(), 0.0), Complex(n.x(), -n.y())}, {Complex(n.x(), n.y()), Complex(-n.z(), 0.0)}}};
}

// Applies a single-site operator to site `site` (0 = most significant).
std::vector<Complex> apply_site(const std::vector<Complex>& psi, int n_qubits, int site, const Matrix2& m) {
    const std::size_t bit = std::size_t{1} << (n_qubits - 1 - site);
    std::vector<Complex> out(psi.size());
    for (std::size_t idx = 0; idx < psi.size(); ++idx) {
        if (idx & bit) continue;
        const Complex up = psi[idx];
        const Complex down = psi[idx | bit];
        out[idx] = m[0][0] * up + m[0][1] * down;
        out[idx | bit] = m[1][0] * up + m[1][1] * down;
    }
    return out;
}

}  // namespace

double tensor_expectation(const StateVector& state, const SpinObservable& obs) {
    if (static_cast<int>(obs.directions.size()) != state.n_qubits()) {
        throw DomainError("observable has " + std::to_string(obs.directions.size()) + " sites, state has " +
                          std::to_string(state.n_qubits()));
    }
    std::vector<Complex> phi = state.amplitudes();
    for (int site = 0; site < state.n_qubits(); ++site) {
        phi = apply_site(phi, state.n_qubits(), site, sigma_dot(obs.directions[static_cast<std::size_t>(site)]));
    }
    Complex value = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) value += std::conj(state[i]) * phi[i];
    return value.real();
}

std::array<Complex, 2> spin_ket(double theta, double phi, int sign) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    if (sign == +1) return {Complex(c, 0.0), std::polar(s, phi)};
    if (sign == -1) return {-std::polar(s, -phi), Complex(c, 0.0)};
    throw DomainError("spin_ket sign must be +1 or -1");
}

const std::array<HardyPair, 16>& hardy_pairs() {
    static const std::array<HardyPair, 16> pairs = [] {
        std::array<HardyPair, 16> p{{
            {{true, +1}, {false, +1}},
            {{false, +1}, {true, +1}},
            {{false, -1}, {false, -1}},
            {{true, +1}, {true, +1}},
            {{true, +1}, {false, -1}},
            {{false, -1}, {true, +1}},
            {{true, +1}, {true, -1}},
            {{false, +1}, {false, -1}},
            {{true, -1}, {false, +1}},
            {{false, +1}, {true, -1}},
            {{true, -1}, {true, +1}},
            {{false, -1}, {false, +1}},
            {{true, -1}, {false, -1}},
            {{false, -1}, {true, -1}},
            {{true, -1}, {true, -1}},
            {{false, +1}, {false, +1}},
        }};
        return p;
    }();
    return pairs;
}

std::string label(const HardyPair& pair) {
    auto one = [](char site, const HardyOutcome& o) {
        std::string s(1, site);
        if (o.primed) s += '\'';
        s += o.sign > 0 ? '+' : '-';
        return s;
    };
    return one('a', pair.first) + "," + one('b', pair.second);
}

double hardy_amplitude(double theta, const HardyPair& pair) {
    const StateVector psi = make_state(Hardy{theta});
    auto ket = [theta](const HardyOutcome& o) { return spin_ket(o.primed ? 2 * theta : 0.0, 0.0, o.sign); };
    const auto x = ket(pair.first);
    const auto y = ket(pair.second);
    Complex value = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) value += std::conj(psi[2 * i + j]) * x[i] * y[j];
    }
    return value.real();
}

double hardy_closed_form(double theta, const HardyPair& pair) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double r = std::sqrt(1.0 + c * c);
    const bool ap = pair.first.primed;
    const bool bp = pair.second.primed;
    const int sa = pair.first.sign;
    const int sb = pair.second.sign;
    if (ap && bp) {
        if (sa > 0 && sb > 0) return s * c * c / r;
        if (sa > 0 && sb < 0) return c * c * c / r;
        if (sa < 0 && sb > 0) return c * c * c / r;
        return -s * (1.0 + c * c) / r;
    }
    if (ap && !bp) {
        if (sa > 0 && sb > 0) return 0.0;
        if (sa > 0 && sb < 0) return c * c / r;
        if (sa < 0 && sb > 0) return 1.0 / r;
        return -s * c / r;
    }
    if (!ap && bp) {
        if (sa > 0 && sb > 0) return 0.0;
        if (sa < 0 && sb > 0) return c * c / r;
        if (sa > 0 && sb < 0) return 1.0 / r;
        return -s * c / r;
    }
    if (sa > 0 && sb > 0) return -s / r;
    if (sa > 0 && sb < 0) return c / r;
    if (sa < 0 && sb > 0) return c / r;
    return 0.0;
}

double ghz4_closed_form(const std::array<double, 4>& polar, const std::array<double, 4>& azimuth) {
    double cc = 1.0;
    double ss = 1.0;
    for (double t : polar) {
        cc *= std::cos(t);
        ss *= std::sin(t);
    }
    return cc - ss * std::cos(azimuth[0] + azimuth[1] - azimuth[2] - azimuth[3]);
}

double ghz3_closed_form(const std::array<double, 3>& polar, const std::array<double, 3>& azimuth,
                        double alpha, double delta) {
    double cc = 1.0;
    double ss = 1.0;
    for (double t : polar) {
        cc *= std::cos(t);
        ss *= std::sin(t);
    }
    return std::cos(alpha) * cc + std::sin(alpha) * ss * std::cos(azimuth[0] + azimuth[1] + azimuth[2] + delta);
}

}  // namespace spherelab::qmref
