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
#include "scb/gates.hpp"

#include <cmath>
#include <numbers>

namespace scb::gates {

namespace {
constexpr Complex I{0.0, 1.0};
}

ComplexMatrix rz(double angle) {
    return {{std::polar(1.0, angle / 2), 0.0}, {0.0, std::polar(1.0, -angle / 2)}};
}

ComplexMatrix rx(double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    return {{c, I * s}, {I * s, c}};
}

ComplexMatrix ry(double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    return {{c, s}, {-s, c}};
}

ComplexMatrix phase(double phi) {
    const Complex p = std::polar(1.0, -phi);
    return {{p, 0.0}, {0.0, p}};
}

ComplexMatrix hadamard() {
    const double r = 1.0 / std::numbers::sqrt2;
    return {{r, r}, {r, -r}};
}

ComplexMatrix pauli_x() { return pauli::x(); }

ComplexMatrix iswap() {
    return {{1, 0, 0, 0}, {0, 0, I, 0}, {0, I, 0, 0}, {0, 0, 0, 1}};
}

ComplexMatrix cnot() {
    return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
}

ComplexMatrix swap() {
    return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
}

} // namespace scb::gates
