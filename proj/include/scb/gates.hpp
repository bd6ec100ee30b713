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

// Ideal gate matrices. Rotations follow R_a(xi) = exp(+i xi sigma_a / 2).

#include "scb/linalg.hpp"

namespace scb::gates {

ComplexMatrix rz(double angle);
ComplexMatrix rx(double angle);
ComplexMatrix ry(double angle);
/// diag(e^{-i phi}, e^{-i phi})
ComplexMatrix phase(double phi);
ComplexMatrix hadamard();
ComplexMatrix pauli_x();

ComplexMatrix iswap();
/// Control is the first (major) qubit.
ComplexMatrix cnot();
ComplexMatrix swap();

} // namespace scb::gates
