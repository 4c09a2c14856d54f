#pragma once

// Brute-force quantum-mechanical reference: explicit state vectors over the
// z-basis (site 1 is the most significant bit, bit value 0 = spin up) and
// tensor products of σ·n.

#include <array>
#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "spherelab/ga3.hpp"

namespace spherelab::qmref {

using ga3::UnitVec3;
using ga3::Vec3;
using Complex = std::complex<double>;

class StateVector {
public:
    static constexpr double kNormTolerance = 1e-12;

    /// Rejects sizes other than 2^n (n = 1..4) and non-normalized input.
    explicit StateVector(std::vector<Complex> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }
    double norm_squared() const;

private:
    int n_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

struct Singlet {};
struct Hardy {
    double theta = 0.0;
};
struct Ghz4 {};
struct Ghz3 {
    double alpha = 0.0;
    double delta = 0.0;
};
struct General {
    std::vector<Complex> amplitudes;
};
using StateKind = std::variant<Singlet, Hardy, Ghz4, Ghz3, General>;

StateVector make_state(const StateKind& kind);

/// σ·n1 ⊗ ... ⊗ σ·nk.
struct SpinObservable {
    std::vector<UnitVec3> directions;
};

double tensor_expectation(const StateVector& state, const SpinObservable& obs);

/// Eigenvector of σ·n with eigenvalue `sign` for n at polar angle `theta`,
/// azimuth `phi`: |+⟩ = (cos θ/2, e^{iφ} sin θ/2), |−⟩ = (−e^{−iφ} sin θ/2, cos θ/2).
std::array<Complex, 2> spin_ket(double theta, double phi, int sign);

// Hardy geometry: a = b = ẑ, a' = b' at polar angle 2θ in the x–z plane.
struct HardyOutcome {
    bool primed = false;
    int sign = +1;
    bool operator==(const HardyOutcome&) const = default;
};
struct HardyPair {
    HardyOutcome first;   // a or a'
    HardyOutcome second;  // b or b'
    bool operator==(const HardyPair&) const = default;
};

/// All sixteen (site-1, site-2) outcome pairs, headline pairs first:
/// (a'+,b+), (a+,b'+), (a−,b−), (a'+,b'+).
const std::array<HardyPair, 16>& hardy_pairs();
std::string label(const HardyPair& pair);

/// ⟨Ψ| (|site1⟩ ⊗ |site2⟩) by explicit basis rotation of the state vector.
double hardy_amplitude(double theta, const HardyPair& pair);

/// The printed closed forms of the sixteen Hardy predictions.
double hardy_closed_form(double theta, const HardyPair& pair);

/// cosθ1cosθ2cosθ3cosθ4 − sinθ1sinθ2sinθ3sinθ4 cos(φ1+φ2−φ3−φ4).
double ghz4_closed_form(const std::array<double, 4>& polar, const std::array<double, 4>& azimuth);

/// cosα cosθ1cosθ2cosθ3 + sinα sinθ1sinθ2sinθ3 cos(φ1+φ2+φ3+δ).
double ghz3_closed_form(const std::array<double, 3>& polar, const std::array<double, 3>& azimuth,
                        double alpha, double delta);

/// E(a,b) + E(a,b') + E(a',b) − E(a',b') on a two-qubit state.
double chsh_qm(const StateVector& state, const UnitVec3& a, const UnitVec3& a_prime,
               const UnitVec3& b, const UnitVec3& b_prime);

enum class Plane { xz, xy, yz };

/// Direction at in-plane angle t: xz → (sin t, 0, cos t), xy → (cos t, sin t, 0),
/// yz → (0, sin t, cos t).
UnitVec3 in_plane(Plane plane, double t);

struct ChshOptimum {
    double value = 0.0;            // max |chsh_qm|
    double signed_value = 0.0;     // chsh_qm at the optimum
    std::array<double, 4> angles{};  // a, a', b, b' in-plane angles
    Plane plane = Plane::xz;
};

/// Numerical supremum of |chsh_qm| over coplanar quadruples in the three
/// coordinate planes (grid seeds, Nelder–Mead polish).
ChshOptimum maximize_chsh(const StateVector& state);

std::string state_to_json(const StateVector& state);
StateVector state_from_json(const std::string& text);
std::string observable_to_json(const SpinObservable& obs);
SpinObservable observable_from_json(const std::string& text);

}  // namespace spherelab::qmref
