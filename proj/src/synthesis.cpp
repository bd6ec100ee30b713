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
#include "scb/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "scb/error.hpp"

namespace scb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

// Below this magnitude an off-diagonal (or diagonal) entry is treated as an
// exact zero, which pins theta to 0 (or pi) and beta to 0.
constexpr double kDegenerateEntry = 1e-13;

// Moves `angle` into (-pi, pi] and returns how many 2 pi steps were removed.
int wrap_counting(double &angle) {
    const double wrapped = wrap_angle(angle);
    const int steps = static_cast<int>(std::lround((angle - wrapped) / kTwoPi));
    angle = wrapped;
    return steps;
}

} // namespace

std::string_view to_string(PulseKind kind) {
    switch (kind) {
    case PulseKind::Rz:
        return "rz";
    case PulseKind::Rx:
        return "rx";
    case PulseKind::Ph:
        return "ph";
    case PulseKind::Idle:
        return "idle";
    case PulseKind::Couple:
        return "couple";
    }
    return "?";
}

PulseKind pulse_kind_from_string(std::string_view name) {
    for (PulseKind k :
         {PulseKind::Rz, PulseKind::Rx, PulseKind::Ph, PulseKind::Idle, PulseKind::Couple}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw Error(ErrorCode::MalformedInput, fmt::format("unknown pulse kind '{}'", name));
}

ComplexMatrix u_from_euler(const EulerAngles &a) {
    const double c = std::cos(a.theta / 2);
    const double s = std::sin(a.theta / 2);
    const double sum = (a.alpha + a.beta) / 2;
    const double diff = (a.alpha - a.beta) / 2;
    const Complex g = std::polar(1.0, a.global_phase);
    return ComplexMatrix{{g * std::polar(c, sum), g * std::polar(s, diff)},
                         {-g * std::polar(s, -diff), g * std::polar(c, -sum)}};
}

EulerAngles euler_decompose(const ComplexMatrix &u, const Tolerance &tol) {
    if (u.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "euler_decompose expects a 2x2 matrix");
    }
    const double defect = unitarity_defect(u);
    if (defect > tol.unitarity_tol) {
        throw Error(ErrorCode::NotUnitary,
                    fmt::format("euler_decompose: input is not unitary (defect {:.3e})", defect));
    }

    // Strip det = e^{2 i g} to land in SU(2): v = [[a, b], [-b*, a*]].
    EulerAngles out;
    double phase = std::arg(u.eigen().determinant()) / 2;
    const Complex unphase = std::polar(1.0, -phase);
    const Complex a = unphase * u(0, 0);
    const Complex b = unphase * u(0, 1);

    out.theta = 2.0 * std::atan2(std::abs(b), std::abs(a));
    if (std::abs(b) < kDegenerateEntry) {
        out.theta = 0.0;
        out.alpha = 2.0 * std::arg(a);
        out.beta = 0.0;
    } else if (std::abs(a) < kDegenerateEntry) {
        out.theta = kPi;
        out.alpha = 2.0 * std::arg(b);
        out.beta = 0.0;
    } else {
        out.alpha = std::arg(a) + std::arg(b);
        out.beta = std::arg(a) - std::arg(b);
    }

    // Each 2 pi shift of alpha or beta flips the sign of U(alpha, theta, beta).
    const int flips = wrap_counting(out.alpha) + wrap_counting(out.beta);
    phase += kPi * static_cast<double>(flips);
    out.global_phase = wrap_angle(phase);
    return out;
}

double canonical_rz_angle(double xi) {
    double r = std::remainder(xi, kFourPi);
    if (r <= -kTwoPi) {
        r += kFourPi;
    }
    return r;
}

CanonicalRx canonicalize_rx(double xi) {
    double r = std::fmod(xi, kFourPi);
    if (r < 0.0) {
        r += kFourPi;
    }
    if (r >= kFourPi) {
        r = 0.0;
    }
    // Rx(xi + 2 pi) = -Rx(xi)
    if (r > kTwoPi) {
        return {r - kTwoPi, kPi};
    }
    return {r, 0.0};
}

ControlSettings rz_controls(const QubitParams &p, double xi) {
    const double angle = canonical_rz_angle(xi);
    const double v0 = p.degeneracy_voltage();
    const double slope = constants::hbar * constants::e /
                         (p.gate_capacitance * p.charging_energy * p.dt);
    return {v0 + kRzVoltageSign * angle * slope, 0.5};
}

ControlSettings rx_controls(const QubitParams &p, double xi) {
    const double angle = canonicalize_rx(xi).angle;
    const double reach = p.max_rx_angle();
    if (angle > reach * (1.0 + 1e-12)) {
        const double min_dt = angle * constants::hbar / (2.0 * p.josephson_intrinsic);
        throw Error(ErrorCode::OutOfRange,
                    fmt::format("Rx({:.17g}) needs 2 E_J dt / hbar >= {:.17g} but the device "
                                "reaches {:.17g}; increase dt to at least {:.17g} s or raise E_J",
                                xi, angle, reach, min_dt));
    }
    const double ratio = std::clamp(angle / reach, 0.0, 1.0);
    return {p.degeneracy_voltage(), std::acos(ratio) / kPi};
}

PhPulse ph_pulse(const QubitParams &p) {
    return {{p.degeneracy_voltage(), 0.5},
            -p.charging_energy * p.dt / (4.0 * constants::hbar)};
}

double pulse_offset_phase(const QubitParams &p, const ControlSettings &c) {
    return -derived_charges(p, c.voltage).offset_energy * p.dt / constants::hbar;
}

Pulse make_rz_pulse(const QubitParams &p, int qubit, double xi) {
    return {PulseKind::Rz, {qubit, -1}, rz_controls(p, xi), canonical_rz_angle(xi)};
}

Pulse make_rx_pulse(const QubitParams &p, int qubit, double xi) {
    return {PulseKind::Rx, {qubit, -1}, rx_controls(p, xi), canonicalize_rx(xi).angle};
}

Pulse make_idle_pulse(const QubitParams &p, int qubit) {
    return {PulseKind::Idle, {qubit, -1}, ph_pulse(p).settings, 0.0};
}

ComplexMatrix simulate_pulse(const QubitParams &p, const Pulse &pulse) {
    if (pulse.kind == PulseKind::Couple || pulse.target.is_coupler()) {
        throw Error(ErrorCode::InvalidArgument,
                    "coupler pulses act on two qubits; use simulate_couple_pulse");
    }
    return expm_evolution(build_h1(p, pulse.settings), p.dt, constants::hbar);
}

ComplexMatrix simulate_sequence(const QubitParams &p, const PulseSequence &seq) {
    ComplexMatrix total = ComplexMatrix::identity(2);
    for (const Pulse &pulse : seq.slots) {
        total = simulate_pulse(p, pulse) * total;
    }
    return total;
}

void require_synthesis_complete(const QubitParams &p) {
    const double reach = p.max_rx_angle();
    if (reach < kPi * (1.0 - 1e-12)) {
        throw Error(ErrorCode::SynthIncompleteDevice,
                    fmt::format("device reaches Rx angles up to {:.17g} rad per slot, below pi; "
                                "dt must be at least {:.17g} s",
                                reach, kPi * constants::hbar / (2.0 * p.josephson_intrinsic)));
    }
}

PulseSequence synthesize_1q(const QubitParams &p, const ComplexMatrix &u, int qubit,
                            const Tolerance &tol) {
    require_synthesis_complete(p);
    const EulerAngles angles = euler_decompose(u, tol);

    PulseSequence seq;
    seq.slots.push_back(make_rz_pulse(p, qubit, angles.beta + kPi / 2));
    seq.slots.push_back(make_rx_pulse(p, qubit, angles.theta));
    seq.slots.push_back(make_rz_pulse(p, qubit, angles.alpha - kPi / 2));

    double phase = angles.global_phase + canonicalize_rx(angles.theta).phase;
    for (const Pulse &pulse : seq.slots) {
        phase -= pulse_offset_phase(p, pulse.settings);
    }
    seq.accumulated_phase = wrap_angle(phase);
    return seq;
}

} // namespace scb
