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

/// @file synthesis.hpp
/// One-qubit gate synthesis on a fixed pulse clock.
///
/// Every pulse lasts exactly one slot of length dt; the only knobs are the
/// gate voltage and the external flux. An arbitrary U(2) target is split as
///
///   U = e^{i phase} Rz(alpha - pi/2) Rx(theta) Rz(beta + pi/2)
///
/// and each factor becomes one slot, so every one-qubit gate takes 3 dt.

#include <string_view>
#include <vector>

#include "scb/device.hpp"
#include "scb/linalg.hpp"

namespace scb {

struct EulerAngles {
    double alpha = 0.0;        ///< (-pi, pi]
    double theta = 0.0;        ///< [0, pi]
    double beta = 0.0;         ///< (-pi, pi]
    double global_phase = 0.0; ///< (-pi, pi]
};

enum class PulseKind { Rz, Rx, Ph, Idle, Couple };

std::string_view to_string(PulseKind kind);
/// Inverse of to_string (lower-case names); throws Error(MalformedInput).
PulseKind pulse_kind_from_string(std::string_view name);

/// A qubit, or the coupler between `qubit` and `partner`.
struct PulseTarget {
    int qubit = 0;
    int partner = -1;

    [[nodiscard]] bool is_coupler() const { return partner >= 0; }
    bool operator==(const PulseTarget &) const = default;
};

/// One slot of control on one qubit or coupler. The duration is always the
/// device clock and deliberately not stored. For Couple pulses `settings.flux`
/// is the coupler flux and `settings.voltage` is unused.
struct Pulse {
    PulseKind kind = PulseKind::Idle;
    PulseTarget target;
    ControlSettings settings;
    double angle = 0.0; ///< rotation realized, for reporting

    bool operator==(const Pulse &) const = default;
};

/// Pulses on a single qubit, one per slot, in execution order. The target
/// gate equals e^{i accumulated_phase} times the product of the simulated
/// pulses.
struct PulseSequence {
    std::vector<Pulse> slots;
    double accumulated_phase = 0.0;

    [[nodiscard]] int slot_count() const { return static_cast<int>(slots.size()); }
};

/// Rx(xi) = e^{i phase} Rx(angle), with angle in [0, 2 pi].
struct CanonicalRx {
    double angle = 0.0;
    double phase = 0.0;
};

struct PhPulse {
    ControlSettings settings;
    double phase_per_pulse = 0.0; ///< -E_C dt / (4 hbar)
};

/// Sign relating the printed Rz voltage formula to the rotation it produces.
/// Evolving the two-level Hamiltonian under
///   V = xi hbar e / (C_g E_C dt) + e / C_g
/// gives E(V) = -xi hbar / dt and hence Rz(-xi). rz_controls multiplies the
/// angle term by this sign so that it realizes Rz(+xi). Pinned by the
/// sign-audit test.
inline constexpr double kRzVoltageSign = -1.0;

[[nodiscard]] ComplexMatrix u_from_euler(const EulerAngles &a);

/// Canonical Euler angles of a 2x2 unitary. theta in [0, pi]; when theta is
/// 0 or pi, beta is fixed to 0. Throws Error(NotUnitary).
[[nodiscard]] EulerAngles euler_decompose(const ComplexMatrix &u, const Tolerance &tol = {});

/// Rz angles are 4 pi periodic; reduce into (-2 pi, 2 pi].
[[nodiscard]] double canonical_rz_angle(double xi);
[[nodiscard]] CanonicalRx canonicalize_rx(double xi);

[[nodiscard]] ControlSettings rz_controls(const QubitParams &p, double xi);

/// Throws Error(OutOfRange) when the canonical angle exceeds
/// p.max_rx_angle(); the message gives the shortest clock that would work.
[[nodiscard]] ControlSettings rx_controls(const QubitParams &p, double xi);

[[nodiscard]] PhPulse ph_pulse(const QubitParams &p);

/// Global phase picked up by a one-qubit pulse: -E_O(V) dt / hbar.
[[nodiscard]] double pulse_offset_phase(const QubitParams &p, const ControlSettings &c);

[[nodiscard]] Pulse make_rz_pulse(const QubitParams &p, int qubit, double xi);
[[nodiscard]] Pulse make_rx_pulse(const QubitParams &p, int qubit, double xi);
[[nodiscard]] Pulse make_idle_pulse(const QubitParams &p, int qubit);

/// exp(-i H_1 dt / hbar) for a one-qubit pulse.
[[nodiscard]] ComplexMatrix simulate_pulse(const QubitParams &p, const Pulse &pulse);

/// Product of the pulse unitaries, last slot leftmost.
[[nodiscard]] ComplexMatrix simulate_sequence(const QubitParams &p, const PulseSequence &seq);

/// Throws Error(SynthIncompleteDevice) when 2 E_J dt / hbar < pi.
void require_synthesis_complete(const QubitParams &p);

/// Three-slot realization of `u`: Rz(beta + pi/2), Rx(theta), Rz(alpha - pi/2).
[[nodiscard]] PulseSequence synthesize_1q(const QubitParams &p, const ComplexMatrix &u,
                                          int qubit = 0, const Tolerance &tol = {});

} // namespace scb
