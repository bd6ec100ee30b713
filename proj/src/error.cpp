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
#include "scb/error.hpp"

namespace scb {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument:
        return "INVALID_ARGUMENT";
    case ErrorCode::DimensionMismatch:
        return "DIMENSION_MISMATCH";
    case ErrorCode::NotHermitian:
        return "NOT_HERMITIAN";
    case ErrorCode::NotUnitary:
        return "NOT_UNITARY";
    case ErrorCode::EigenNonConvergence:
        return "EIGEN_NON_CONVERGENCE";
    case ErrorCode::OutOfRange:
        return "OUT_OF_RANGE";
    case ErrorCode::SynthIncompleteDevice:
        return "SYNTH_INCOMPLETE_DEVICE";
    case ErrorCode::Unreachable:
        return "UNREACHABLE";
    case ErrorCode::Topology:
        return "TOPOLOGY";
    case ErrorCode::Unsupported:
        return "UNSUPPORTED";
    case ErrorCode::MalformedInput:
        return "MALFORMED_INPUT";
    }
    return "UNKNOWN";
}

} // namespace scb
