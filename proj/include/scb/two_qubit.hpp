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

/// @file two_qubit.hpp
/// The coupled-pair gate. With both boxes parked at n_c = 1/2 and their own
/// Josephson terms switched off, one slot of the coupled Hamiltonian gives
///
///   diag corners exp(i E_cc dt / hbar), middle block
///   [[cos(E_Jc dt / 2 hbar), i sin(.)], [i sin(.), cos(.)]]
///
/// which is iSWAP once the corners are 1 and the middle block is fully
/// swapped.

#include <vector>

#include "scb/device.hpp"
#include "scb/linalg.hpp"
#include "scb/synthesis.hpp"

namespace scb {

/// One point examined by the iSWAP condition search. Angles are
/// dimensionless: E dt / hbar.
struct ISwapSearchRecord {
    double coupling_angle = 0.0;  ///< E_cc dt / hbar
    double josephson_angle = 0.0; ///< best E_Jc dt / hbar found
    double fidelity = 0.0;
    bool admissible = false;
};

struct ISwapConditions {
    double josephson_required = 0.0; ///< verified E_Jc, J
    double josephson_angle = 0.0;    ///< verified E_Jc dt / hbar
    double josephson_stated = 0.0;   ///< hbar pi / (2 dt), J
    double stated_fidelity = 0.0;    ///< iSWAP fidelity at the stated value
    double verified_fidelity = 0.0;  ///< fidelity on the actual device E_cc
    /// Admissible E_cc values 2 pi k hbar / dt for k = 1..max_multiple, J.
    std::vector<double> admissible_coupling;
    int coupling_multiple = 0; ///< k of the device coupler
    int m = -1;                ///< E_Jc / E_cc = (2m + 1) / n
    int n = -1;
    int slots = 1;
    /// The device coupler keeps E_cc above the largest reachable E_Jc.
    bool coupling_dominates = false;
    std::vector<ISwapSearchRecord> search_log;
};

struct ISwapSearchOptions {
    int max_multiple = 8;
    int grid_points = 64;
    double match_tol = 1e-9;
};

/// The closed-form one-slot gate at the degeneracy point.
[[nodiscard]] ComplexMatrix u2_closed_form(double josephson, double coupling, double dt,
                                           double hbar = constants::hbar);

[[nodiscard]] ComplexMatrix iswap_matrix();

/// Coupled Hamiltonian with both qubits at n_c = 1/2 and E_J1 = E_J2 = 0.
[[nodiscard]] ComplexMatrix degenerate_h2(double josephson, double coupling);

/// Finds the (E_Jc, E_cc) settings that give iSWAP in one slot by searching
/// against the exponential of the coupled Hamiltonian, then checks them on
/// `coupling`. Throws Error(Unreachable) when the coupler cannot supply the
/// required E_Jc or when its E_cc is not a multiple of 2 pi hbar / dt.
[[nodiscard]] ISwapConditions solve_iswap_conditions(const CouplingParams &coupling, double dt,
                                                     const ISwapSearchOptions &opts = {});

/// Single-slot Couple pulse on the pair (a, b). The coupler flux is set so
/// that E_Jc(flux) equals the required value.
[[nodiscard]] Pulse couple_pulse(const CouplingParams &coupling, const ISwapConditions &cond,
                                 int a, int b);

/// exp(-i H_2 dt / hbar) with both qubits pinned at the degeneracy point and
/// the coupler flux taken from the pulse.
[[nodiscard]] ComplexMatrix simulate_couple_pulse(const QubitParams &q1, const QubitParams &q2,
                                                  const CouplingParams &coupling,
                                                  const Pulse &pulse);

} // namespace scb
