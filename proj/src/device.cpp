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
#include "scb/device.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "scb/error.hpp"

namespace scb {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

void require_positive(double x, const char *name) {
    if (!positive_finite(x)) {
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("{} must be finite and positive, got {}", name, x));
    }
}

} // namespace

QubitParams QubitParams::from_capacitances(double total_capacitance, double gate_capacitance,
                                           double josephson_intrinsic, double dt) {
    require_positive(total_capacitance, "C_sigma");
    QubitParams p;
    p.charging_energy = constants::e * constants::e / (2.0 * total_capacitance);
    p.josephson_intrinsic = josephson_intrinsic;
    p.gate_capacitance = gate_capacitance;
    p.total_capacitance = total_capacitance;
    p.dt = dt;
    p.validate();
    return p;
}

void QubitParams::validate() const {
    require_positive(charging_energy, "E_C");
    require_positive(josephson_intrinsic, "E_J_intr");
    require_positive(gate_capacitance, "C_g");
    require_positive(total_capacitance, "C_sigma");
    require_positive(dt, "dt");
}

double QubitParams::max_rx_angle() const {
    return 2.0 * josephson_intrinsic * dt / constants::hbar;
}

CouplingParams CouplingParams::from_energy(double coupling_energy, double josephson_max) {
    require_positive(coupling_energy, "E_cc");
    CouplingParams cp;
    cp.coupling_energy = coupling_energy;
    cp.coupling_capacitance = constants::e * constants::e / (2.0 * coupling_energy);
    cp.josephson_max = josephson_max;
    cp.validate();
    return cp;
}

CouplingParams CouplingParams::from_capacitance(double coupling_capacitance,
                                                double josephson_max) {
    require_positive(coupling_capacitance, "C_c");
    CouplingParams cp;
    cp.coupling_capacitance = coupling_capacitance;
    cp.coupling_energy = constants::e * constants::e / (2.0 * coupling_capacitance);
    cp.josephson_max = josephson_max;
    cp.validate();
    return cp;
}

void CouplingParams::validate() const {
    require_positive(coupling_energy, "E_cc");
    require_positive(coupling_capacitance, "C_c");
    require_positive(josephson_max, "E_Jc_max");
    if (!std::isfinite(flux)) {
        throw Error(ErrorCode::InvalidArgument, "coupler flux must be finite");
    }
}

double CouplingParams::josephson_energy() const {
    return josephson_max * std::abs(std::cos(std::numbers::pi * flux));
}

double josephson_energy(double flux, double josephson_intrinsic) {
    return 2.0 * josephson_intrinsic * std::abs(std::cos(std::numbers::pi * flux));
}

double ambegaokar_baratoff(double gap, double normal_resistance) {
    require_positive(gap, "superconducting gap");
    require_positive(normal_resistance, "R_N");
    return constants::h * gap / (8.0 * constants::e * constants::e * normal_resistance);
}

DerivedCharges derived_charges(const QubitParams &p, double voltage) {
    DerivedCharges d;
    d.gate_charge = p.gate_capacitance * voltage / (2.0 * constants::e);
    d.charge_energy = p.charging_energy * (1.0 - p.gate_capacitance * voltage / constants::e);
    d.offset_energy =
        p.charging_energy * (d.gate_charge * d.gate_charge - d.gate_charge + 0.5);
    return d;
}

ComplexMatrix build_h1(const QubitParams &p, const ControlSettings &c) {
    const DerivedCharges d = derived_charges(p, c.voltage);
    const double ej = josephson_energy(c.flux, p.josephson_intrinsic);
    return ComplexMatrix{{d.offset_energy - 0.5 * d.charge_energy, -0.5 * ej},
                         {-0.5 * ej, d.offset_energy + 0.5 * d.charge_energy}};
}

std::vector<SpectrumPoint> h1_spectrum(const QubitParams &p, double flux,
                                       std::span<const double> voltages) {
    if (voltages.empty()) {
        throw Error(ErrorCode::InvalidArgument, "spectrum sweep needs at least one voltage");
    }
    std::vector<SpectrumPoint> out;
    out.reserve(voltages.size());
    for (const double v : voltages) {
        const ComplexMatrix h = build_h1(p, {v, flux});
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.eigen(),
                                                               Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw Error(ErrorCode::EigenNonConvergence,
                        fmt::format("eigensolver failed at V = {}", v));
        }
        // Eigen returns eigenvalues in increasing order.
        out.push_back({v, derived_charges(p, v).gate_charge, solver.eigenvalues()(0),
                       solver.eigenvalues()(1)});
    }
    return out;
}

ComplexMatrix build_h2(const QubitParams &q1, const QubitParams &q2,
                       const CouplingParams &coupling, const ControlSettings &c1,
                       const ControlSettings &c2) {
    const double nc1 = derived_charges(q1, c1.voltage).gate_charge;
    const double nc2 = derived_charges(q2, c2.voltage).gate_charge;
    const double e1 = q1.charging_energy * (1.0 - 2.0 * nc1);
    const double e2 = q2.charging_energy * (1.0 - 2.0 * nc2);
    const double ecc = coupling.coupling_energy;
    const double e12 = ecc * (nc1 - nc2);
    const double t1 = -0.5 * josephson_energy(c1.flux, q1.josephson_intrinsic);
    const double t2 = -0.5 * josephson_energy(c2.flux, q2.josephson_intrinsic);
    const double tc = -0.5 * coupling.josephson_energy();

    return ComplexMatrix{
        {-0.5 * e1 - 0.5 * e2 - ecc, t2, t1, 0.0},
        {t2, -0.5 * e1 + 0.5 * e2 + 0.5 * e12, tc, t1},
        {t1, tc, 0.5 * e1 - 0.5 * e2 - 0.5 * e12, t2},
        {0.0, t1, t2, 0.5 * e1 + 0.5 * e2 - ecc},
    };
}

double coupled_energy_offset(const QubitParams &q1, const QubitParams &q2,
                             const CouplingParams &coupling, const ControlSettings &c1,
                             const ControlSettings &c2) {
    const double nc1 = derived_charges(q1, c1.voltage).gate_charge;
    const double nc2 = derived_charges(q2, c2.voltage).gate_charge;
    const double dn = nc1 - nc2;
    return q1.charging_energy * (nc1 * nc1 - nc1 + 0.5) +
           q2.charging_energy * (nc2 * nc2 - nc2 + 0.5) + coupling.coupling_energy * (1.0 - dn * dn);
}

Device Device::uniform(const QubitParams &qubit, const std::optional<CouplingParams> &coupling,
                       int width) {
    if (width < 1) {
        throw Error(ErrorCode::InvalidArgument, "device width must be >= 1");
    }
    Device d;
    d.qubits.assign(static_cast<std::size_t>(width), qubit);
    d.couplers.assign(static_cast<std::size_t>(width - 1), coupling);
    d.validate();
    return d;
}

double Device::dt() const {
    if (qubits.empty()) {
        throw Error(ErrorCode::InvalidArgument, "device has no qubits");
    }
    return qubits.front().dt;
}

const CouplingParams &Device::coupler(int a, int b) const {
    const int lo = std::min(a, b);
    if (std::abs(a - b) != 1 || lo < 0 || lo + 1 >= width() ||
        !couplers[static_cast<std::size_t>(lo)].has_value()) {
        throw Error(ErrorCode::Topology,
                    fmt::format("qubits {} and {} are not joined by a coupler", a, b));
    }
    return *couplers[static_cast<std::size_t>(lo)];
}

void Device::validate() const {
    if (qubits.empty()) {
        throw Error(ErrorCode::InvalidArgument, "device has no qubits");
    }
    if (couplers.size() + 1 != qubits.size()) {
        throw Error(ErrorCode::InvalidArgument, "a chain of n qubits has n - 1 coupler slots");
    }
    for (const QubitParams &q : qubits) {
        q.validate();
        if (q.dt != qubits.front().dt) {
            throw Error(ErrorCode::InvalidArgument, "all qubits must share one pulse clock");
        }
    }
    for (const auto &c : couplers) {
        if (c) {
            c->validate();
        }
    }
}

QubitParams preset_qubit() {
    const double ej = ambegaokar_baratoff(200.0 * units::ueV, 10.0 * units::kohm);
    // 2 E_J dt / hbar = 4 pi
    const double dt = 2.0 * std::numbers::pi * constants::hbar / ej;
    return QubitParams::from_capacitances(1.0 * units::fF, 0.1 * units::fF, ej, dt);
}

CouplingParams preset_coupling() {
    const double dt = preset_qubit().dt;
    const double unit = constants::hbar / dt;
    return CouplingParams::from_energy(2.0 * std::numbers::pi * unit,
                                       1.5 * std::numbers::pi * unit);
}

} // namespace scb
