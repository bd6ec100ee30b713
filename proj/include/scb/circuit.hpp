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

/// @file circuit.hpp
/// Logical circuits and their lowering onto the fixed-slot pulse hardware.
///
/// The hardware alphabet is {Rz, Rx, Ph, iSWAP}. Every one-qubit gate takes
/// three slots, iSWAP takes one, and a schedule is a list of moments in which
/// every qubit is driven by exactly one pulse (Idle when it has nothing to
/// do). Gates are placed as soon as their qubits are free, in program order.

#include <array>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "scb/device.hpp"
#include "scb/linalg.hpp"
#include "scb/synthesis.hpp"
#include "scb/two_qubit.hpp"

namespace scb {

enum class GateKind { Rz, Rx, Ry, Ph, UEuler, ISwap, Cnot, Custom1Q, Custom2Q };

std::string_view to_string(GateKind kind);

struct Gate {
    GateKind kind = GateKind::Rz;
    std::vector<int> qubits;
    std::vector<double> angles; ///< one angle, or (alpha, theta, beta) for UEuler
    std::optional<ComplexMatrix> matrix; ///< Custom kinds only

    static Gate rz(int q, double angle) { return {GateKind::Rz, {q}, {angle}, {}}; }
    static Gate rx(int q, double angle) { return {GateKind::Rx, {q}, {angle}, {}}; }
    static Gate ry(int q, double angle) { return {GateKind::Ry, {q}, {angle}, {}}; }
    static Gate ph(int q, double phi) { return {GateKind::Ph, {q}, {phi}, {}}; }
    static Gate u(int q, double alpha, double theta, double beta) {
        return {GateKind::UEuler, {q}, {alpha, theta, beta}, {}};
    }
    static Gate iswap(int a, int b) { return {GateKind::ISwap, {a, b}, {}, {}}; }
    static Gate cnot(int control, int target) {
        return {GateKind::Cnot, {control, target}, {}, {}};
    }
    static Gate custom(std::vector<int> qubits, ComplexMatrix m);

    [[nodiscard]] int arity() const { return static_cast<int>(qubits.size()); }

    /// The gate's own 2x2 or 4x4 matrix, first listed qubit major.
    [[nodiscard]] ComplexMatrix unitary() const;
};

struct Circuit {
    int width = 1;
    std::vector<Gate> gates;

    /// Width, index, arity and linear-chain topology checks. Throws
    /// Error(InvalidArgument) or Error(Topology).
    void validate(const Tolerance &tol = {}) const;
};

/// One slot: a pulse per qubit, or one Couple pulse covering a coupled pair.
/// Pulses are ordered by their first qubit.
struct Moment {
    std::vector<Pulse> pulses;
};

struct Schedule {
    int width = 1;
    double dt = 0.0;
    std::vector<Moment> slots;
    /// ideal unitary = e^{i accumulated_phase} * simulated unitary
    double accumulated_phase = 0.0;

    [[nodiscard]] int slot_count() const { return static_cast<int>(slots.size()); }
};

/// Rz(-pi/2) Rx(xi) Rz(pi/2) = Ry(xi), returned in execution order.
[[nodiscard]] std::vector<Gate> lower_ry(int qubit, double xi);

/// Sign pattern applied to the seven rotation angles of the printed
/// CNOT-from-iSWAP sequence, plus how many iSWAPs sit between the one-qubit
/// layers. Angle order: the target layer after the second iSWAP
/// (Rz(pi/2), Ry(pi/2), Rz(pi/4)), the control layer between the iSWAPs
/// (Rz(pi/4), Ry(pi/2), Rz(pi)), then the target's Rz(pi/2) in that layer.
struct CnotVariant {
    std::array<int, 7> signs{1, 1, 1, 1, 1, 1, 1};
    int middle_iswaps = 1;
    double fidelity = 0.0;

    [[nodiscard]] int flips() const;
    [[nodiscard]] int total_iswaps() const { return middle_iswaps + 1; }
};

struct CnotSearchResult {
    CnotVariant literal; ///< the printed reading: all signs +, three middle iSWAPs
    std::vector<CnotVariant> passing;
    CnotVariant chosen; ///< two iSWAPs in total, fewest sign flips
    int examined = 0;
};

/// The variant used by compile_cnot.
[[nodiscard]] CnotVariant shipped_cnot_variant();

/// Gate list of a CNOT variant over {Rz, Rx, Ph, iSWAP}, in execution order.
[[nodiscard]] std::vector<Gate> cnot_sequence(const CnotVariant &variant, int control,
                                              int target);

/// Matrix-level search over the 2^8 sign / iSWAP-count readings.
[[nodiscard]] CnotSearchResult search_cnot_variants(double match_tol = 1e-9);

/// CNOT from two iSWAPs and one-qubit rotations. Throws Error(Topology)
/// unless |control - target| == 1.
[[nodiscard]] std::vector<Gate> compile_cnot(int control, int target);

/// Product of the ideal gate matrices on a `width`-qubit register.
[[nodiscard]] ComplexMatrix compose_gates(const std::vector<Gate> &gates, int width);

[[nodiscard]] ComplexMatrix ideal_unitary(const Circuit &c);

/// ASAP list scheduling onto the device's pulse clock. The device must be at
/// least as wide as the circuit.
[[nodiscard]] Schedule compile_circuit(const Circuit &c, const Device &device,
                                       const Tolerance &tol = {});

/// Structural checks: every moment covers every qubit exactly once, and
/// coupler pulses only join coupled neighbours.
void check_schedule(const Schedule &s, const Device &device);

[[nodiscard]] ComplexMatrix simulate_schedule(const Schedule &s, const Device &device);

/// Random circuit over {Rz, Rx, Ry, iSWAP}; iSWAPs only on neighbours.
[[nodiscard]] Circuit random_circuit(std::mt19937_64 &rng, int width, int gate_count);

} // namespace scb
