// Copyright 2026 The scb-pulsec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/// @file device.hpp
/// Physical model of single Cooper pair box qubits and the capacitive +
/// Josephson coupler between neighbours. Everything is SI internally
/// (J, s, V, F); flux is stored as a multiple of the flux quantum.

#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "scb/linalg.hpp"

namespace scb {

namespace constants {
inline constexpr double e = 1.602176634e-19; ///< C (exact, SI 2019)
inline constexpr double h = 6.62607015e-34;  ///< J s (exact, SI 2019)
inline constexpr double hbar = h / (2.0 * std::numbers::pi);
inline constexpr double flux_quantum = h / (2.0 * e); ///< Wb
} // namespace constants

namespace units {
inline constexpr double ueV = 1e-6 * constants::e; ///< J per micro-electronvolt
inline constexpr double fF = 1e-15;
inline constexpr double ns = 1e-9;
inline constexpr double kohm = 1e3;
} // namespace units

/// Gate voltage and external flux of one qubit for one slot.
struct ControlSettings {
    double voltage = 0.0; ///< V
    double flux = 0.0;    ///< external flux in units of the flux quantum

    [[nodiscard]] double flux_weber() const { return flux * constants::flux_quantum; }
    bool operator==(const ControlSettings &) const = default;
};

struct QubitParams {
    double charging_energy = 0.0;  ///< E_C = e^2 / (2 C_sigma), J
    double josephson_intrinsic = 0.0; ///< per-junction E_J, J
    double gate_capacitance = 0.0; ///< C_g, F
    double total_capacitance = 0.0; ///< C_sigma, F
    double dt = 0.0;               ///< pulse clock, s

    /// E_C derived from C_sigma.
    static QubitParams from_capacitances(double total_capacitance, double gate_capacitance,
                                         double josephson_intrinsic, double dt);

    /// Throws Error(InvalidArgument) unless every field is finite and positive.
    void validate() const;

    /// The two-level truncation assumes the charge regime. We flag E_C <= 2 E_J.
    [[nodiscard]] bool charge_regime_ok() const {
        return charging_energy > 2.0 * josephson_intrinsic;
    }

    /// Largest Rx angle reachable in one slot: 2 E_J dt / hbar.
    [[nodiscard]] double max_rx_angle() const;

    /// Gate voltage putting the box at the charge degeneracy point n_c = 1/2.
    [[nodiscard]] double degeneracy_voltage() const { return constants::e / gate_capacitance; }
};

struct CouplingParams {
    double coupling_energy = 0.0;      ///< E_cc = e^2 / (2 C_c), J
    double coupling_capacitance = 0.0; ///< C_c, F
    double josephson_max = 0.0;        ///< E_Jc at zero coupler flux (2 x per-junction), J
    double flux = 0.5;                 ///< coupler flux in flux quanta; 1/2 switches it off

    static CouplingParams from_energy(double coupling_energy, double josephson_max);
    static CouplingParams from_capacitance(double coupling_capacitance, double josephson_max);

    void validate() const;

    /// E_Jc at the current coupler flux, in [0, josephson_max].
    [[nodiscard]] double josephson_energy() const;
};

struct DerivedCharges {
    double gate_charge = 0.0;   ///< n_c = C_g V / 2e
    double charge_energy = 0.0; ///< E(V) = E_C (1 - C_g V / e)
    double offset_energy = 0.0; ///< E_O = E_C (n_c^2 - n_c + 1/2)
};

struct SpectrumPoint {
    double voltage = 0.0;
    double gate_charge = 0.0;
    double lower = 0.0; ///< J
    double upper = 0.0; ///< J
};

/// 2 E_J |cos(pi Phi / Phi_0)|, flux in units of Phi_0.
[[nodiscard]] double josephson_energy(double flux, double josephson_intrinsic);

/// E_J = h gap / (8 e^2 R_N), low temperature limit. Gap in J, resistance in ohm.
[[nodiscard]] double ambegaokar_baratoff(double gap, double normal_resistance);

[[nodiscard]] DerivedCharges derived_charges(const QubitParams &p, double voltage);

/// Two-level charge-basis Hamiltonian
///   [[E_O - E(V)/2, -E_J/2], [-E_J/2, E_O + E(V)/2]]
/// with the E_O offset kept.
[[nodiscard]] ComplexMatrix build_h1(const QubitParams &p, const ControlSettings &c);

/// Sorted eigenvalues of build_h1 along a gate-voltage sweep at fixed flux.
[[nodiscard]] std::vector<SpectrumPoint> h1_spectrum(const QubitParams &p, double flux,
                                                     std::span<const double> voltages);

/// 4x4 Hamiltonian of two coupled boxes in the basis |00>, |01>, |10>, |11>
/// (qubit 1 is the major index), measured from the zero of energy E_0 (see
/// coupled_energy_offset).
[[nodiscard]] ComplexMatrix build_h2(const QubitParams &q1, const QubitParams &q2,
                                     const CouplingParams &coupling, const ControlSettings &c1,
                                     const ControlSettings &c2);

/// E_0 = E_C1 (n_c1^2 - n_c1 + 1/2) + E_C2 (n_c2^2 - n_c2 + 1/2)
///       + E_cc (1 - (n_c1 - n_c2)^2)
/// Only affects the global phase.
[[nodiscard]] double coupled_energy_offset(const QubitParams &q1, const QubitParams &q2,
                                           const CouplingParams &coupling,
                                           const ControlSettings &c1, const ControlSettings &c2);

/// A linear chain of qubits sharing one pulse clock. couplers[i] joins
/// qubit i and qubit i + 1 when present.
struct Device {
    std::vector<QubitParams> qubits;
    std::vector<std::optional<CouplingParams>> couplers;

    static Device uniform(const QubitParams &qubit, const std::optional<CouplingParams> &coupling,
                          int width);

    [[nodiscard]] int width() const { return static_cast<int>(qubits.size()); }
    [[nodiscard]] double dt() const;

    /// Throws Error(Topology) when a and b are not joined by a coupler.
    [[nodiscard]] const CouplingParams &coupler(int a, int b) const;

    void validate() const;
};

/// Non-normative aluminium-like preset: gap 200 ueV, R_N 10 kOhm,
/// C_sigma 1 fF, C_g 0.1 fF, and dt chosen so that 2 E_J dt / hbar = 4 pi.
[[nodiscard]] QubitParams preset_qubit();

/// Coupler matched to preset_qubit(): E_cc dt / hbar = 2 pi and
/// E_Jc_max dt / hbar = 3 pi / 2.
[[nodiscard]] CouplingParams preset_coupling();

} // namespace scb
