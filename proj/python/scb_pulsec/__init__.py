# Copyright 2026 The scb-pulsec Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Pulse synthesis and simulation for Cooper pair box qubits."""

from ._core import (
    E_CHARGE,
    FORMAT_TAG,
    HBAR,
    UEV,
    CouplingParams,
    QubitParams,
    ScbError,
    ambegaokar_baratoff,
    build_h1,
    compile_circuit,
    euler_decompose,
    expm_evolution,
    fidelity_up_to_phase,
    gates,
    h1_spectrum,
    ideal_unitary,
    josephson_energy,
    preset_config_json,
    preset_coupling,
    preset_qubit,
    run_cli,
    simulate_schedule,
    simulate_sequence,
    solve_iswap_conditions,
    synthesize_1q,
    u_from_euler,
)

__version__ = "0.1.0"
