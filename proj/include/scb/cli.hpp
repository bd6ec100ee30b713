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

#include <ostream>
#include <string>
#include <vector>

#include "scb/error.hpp"
#include "scb/linalg.hpp"

namespace scb::cli {

/// Process exit codes. Stable; scripts depend on them.
enum ExitStatus : int {
    kOk = 0,             ///< success, verification passed
    kVerifyFailed = 1,   ///< a fidelity fell below its threshold
    kInvalidInput = 2,   ///< malformed file, bad flag, topology violation
    kDeviceIncapable = 3 ///< the device cannot realize the request
};

[[nodiscard]] int exit_status_for(ErrorCode code);

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
[[nodiscard]] int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Target matrix for a gate spec: "i", "h", "x", "y", "z", "s", "t",
/// "rz:xi", "rx:xi", "ry:xi", "ph:phi" or "u:alpha,theta,beta".
/// Throws Error(MalformedInput).
[[nodiscard]] ComplexMatrix parse_gate_spec(const std::string &spec);

} // namespace scb::cli
