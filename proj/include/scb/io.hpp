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

/// @file io.hpp
/// File formats: device configuration, circuits, schedules (all JSON, tagged
/// "format": "scb-pulsec/1"), unitary dumps, and spectrum CSV.
///
/// Device configuration keys (convenience units):
///   exactly one of  "E_C_ueV" | "C_sigma_fF"
///   exactly one of  "E_J_intr_ueV" | ("gap_ueV" and "R_N_kohm")
///   "C_g_fF", "dt_ns", optional "width" (chain length, default 2)
///   optional "coupling": { exactly one of "E_cc_ueV" | "C_c_fF", "E_Jc_max_ueV" }
///
/// Parse failures throw Error(MalformedInput).

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scb/circuit.hpp"
#include "scb/device.hpp"

namespace scb::io {

inline constexpr const char *kFormatTag = "scb-pulsec/1";

struct DeviceConfig {
    QubitParams qubit;
    std::optional<CouplingParams> coupling;
    int width = 2;
    std::vector<std::string> derived;  ///< quantities computed from others
    std::vector<std::string> warnings; ///< e.g. outside the charge regime

    [[nodiscard]] Device device() const;
};

[[nodiscard]] DeviceConfig parse_device_config(const std::string &json_text);
[[nodiscard]] DeviceConfig load_device_config(const std::filesystem::path &path);
/// Written in the E_C / E_J form so that loading gives the same numbers back.
[[nodiscard]] std::string device_config_json(const QubitParams &qubit,
                                             const std::optional<CouplingParams> &coupling,
                                             int width = 2);

[[nodiscard]] Circuit parse_circuit(const std::string &json_text);
[[nodiscard]] std::string circuit_json(const Circuit &c);

[[nodiscard]] Schedule parse_schedule(const std::string &json_text);
[[nodiscard]] std::string schedule_json(const Schedule &s);

/// {"format", "dim", "unitary": [[re, im], ...] row-major, ...extra}
[[nodiscard]] std::string unitary_json(const ComplexMatrix &u, double fidelity,
                                       double accumulated_phase);
[[nodiscard]] ComplexMatrix parse_unitary_json(const std::string &json_text);
/// One row per matrix row: re0,im0,re1,im1,...
[[nodiscard]] std::string unitary_csv(const ComplexMatrix &u);

/// Header "V,n_c,E_minus,E_plus"; V in volts, energies in ueV.
[[nodiscard]] std::string spectrum_csv(const std::vector<SpectrumPoint> &points);
[[nodiscard]] std::vector<SpectrumPoint> parse_spectrum_csv(const std::string &text);
[[nodiscard]] std::string spectrum_json(const std::vector<SpectrumPoint> &points);

[[nodiscard]] std::string read_file(const std::filesystem::path &path);

/// %.17g
[[nodiscard]] std::string format_double(double x);

} // namespace scb::io
