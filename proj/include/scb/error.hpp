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

#include <stdexcept>
#include <string>
#include <string_view>

namespace scb {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    NotHermitian,
    NotUnitary,
    EigenNonConvergence,
    OutOfRange,            ///< rotation angle beyond what one slot can reach
    SynthIncompleteDevice, ///< device cannot realize Rx(theta) for theta in [0, pi]
    Unreachable,           ///< coupler cannot produce iSWAP in a single slot
    Topology,              ///< two-qubit gate on an uncoupled pair
    Unsupported,
    MalformedInput,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code. Everything in the library
/// reports failure by throwing this.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace scb
