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
#include "scb/two_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "scb/error.hpp"
#include "scb/gates.hpp"

namespace scb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Any positive parameters will do: at n_c = 1/2 with the qubit junctions off
// the qubit-specific terms drop out of the coupled Hamiltonian.
QubitParams reference_qubit() {
    return QubitParams::from_capacitances(1.0 * units::fF, 0.1 * units::fF, 1.0 * units::ueV,
                                          1.0 * units::ns);
}

double iswap_fidelity(double josephson_angle, double coupling_angle, double dt) {
    const double unit = constants::hbar / dt;
    const ComplexMatrix h = degenerate_h2(josephson_angle * unit, coupling_angle * unit);
    return fidelity_up_to_phase(expm_evolution(h, dt, constants::hbar), gates::iswap());
}

// Golden-section maximization of a unimodal function on [lo, hi].
template <typename F>
double golden_max(F &&f, double lo, double hi) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

ISwapSearchRecord search_josephson_angle(double coupling_angle, double dt,
                                         const ISwapSearchOptions &opts) {
    auto f = [&](double x) { return iswap_fidelity(x, coupling_angle, dt); };
    const double step = kTwoPi / opts.grid_points;
    double best_x = step;
    double best_f = -1.0;
    for (int j = 1; j <= opts.grid_points; ++j) {
        const double x = step * j;
        const double fx = f(x);
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    double x = golden_max(f, std::max(best_x - step, 1e-12), std::min(best_x + step, kTwoPi));
    double fx = f(x);
    if (best_f > fx) {
        x = best_x;
        fx = best_f;
    }
    // Golden section only resolves the flat maximum to ~1e-8; prefer a nearby
    // multiple of pi/8 when it scores at least as well.
    const double snapped = std::round(x / (kPi / 8)) * (kPi / 8);
    if (snapped > 0.0 && std::abs(snapped - x) < 1e-6) {
        const double fs = f(snapped);
        if (fs >= fx - 1e-15) {
            x = snapped;
            fx = fs;
        }
    }
    return {coupling_angle, x, fx, fx >= 1.0 - opts.match_tol};
}

} // namespace

ComplexMatrix u2_closed_form(double josephson, double coupling, double dt, double hbar) {
    const Complex corner = std::polar(1.0, coupling * dt / hbar);
    const double half = josephson * dt / (2.0 * hbar);
    const Complex c = std::cos(half);
    const Complex s = Complex(0.0, std::sin(half));
    return ComplexMatrix{{corner, 0, 0, 0}, {0, c, s, 0}, {0, s, c, 0}, {0, 0, 0, corner}};
}

ComplexMatrix iswap_matrix() { return gates::iswap(); }

ComplexMatrix degenerate_h2(double josephson, double coupling) {
    const QubitParams q = reference_qubit();
    CouplingParams cp;
    cp.coupling_energy = coupling;
    cp.josephson_max = josephson;
    cp.flux = 0.0;
    const ControlSettings park{q.degeneracy_voltage(), 0.5};
    return build_h2(q, q, cp, park, park);
}

ISwapConditions solve_iswap_conditions(const CouplingParams &coupling, double dt,
                                       const ISwapSearchOptions &opts) {
    coupling.validate();
    if (!(dt > 0.0) || opts.max_multiple < 1 || opts.grid_points < 4) {
        throw Error(ErrorCode::InvalidArgument, "invalid iSWAP search setup");
    }
    const double unit = constants::hbar / dt;

    ISwapConditions out;
    std::vector<double> verified_angles;
    for (int k = 1; k <= opts.max_multiple; ++k) {
        // Odd multiples of pi put -1 in the corners; logged to show the exclusion.
        out.search_log.push_back(search_josephson_angle((2 * k - 1) * kPi, dt, opts));
        const ISwapSearchRecord rec = search_josephson_angle(kTwoPi * k, dt, opts);
        out.search_log.push_back(rec);
        out.admissible_coupling.push_back(kTwoPi * k * unit);
        if (rec.admissible) {
            verified_angles.push_back(rec.josephson_angle);
        }
    }
    if (verified_angles.empty()) {
        throw Error(ErrorCode::Unreachable, "no coupler setting reproduces iSWAP in one slot");
    }
    const double angle = verified_angles.front();
    for (double a : verified_angles) {
        if (std::abs(a - angle) > 1e-9) {
            throw Error(ErrorCode::Unreachable,
                        "iSWAP condition depends on the E_cc multiple; search is inconsistent");
        }
    }

    out.josephson_angle = angle;
    out.josephson_required = angle * unit;
    out.josephson_stated = kPi * unit / 2.0;
    out.stated_fidelity = iswap_fidelity(kPi / 2.0, kTwoPi, dt);
    out.coupling_dominates = coupling.coupling_energy > coupling.josephson_max;

    if (out.josephson_required > coupling.josephson_max * (1.0 + 1e-12)) {
        throw Error(ErrorCode::Unreachable,
                    fmt::format("coupler E_Jc_max = {:.17g} J is below the {:.17g} J needed for "
                                "a single-slot iSWAP (E_Jc dt / hbar = {:.17g}); minimum "
                                "E_Jc_max = {:.17g} ueV",
                                coupling.josephson_max, out.josephson_required, angle,
                                out.josephson_required / units::ueV));
    }

    const double coupling_angle = coupling.coupling_energy / unit;
    out.coupling_multiple = static_cast<int>(std::lround(coupling_angle / kTwoPi));
    out.verified_fidelity = iswap_fidelity(angle, coupling_angle, dt);
    if (out.coupling_multiple < 1 || out.verified_fidelity < 1.0 - opts.match_tol) {
        const int k = std::max(out.coupling_multiple, 1);
        throw Error(ErrorCode::Unreachable,
                    fmt::format("coupler E_cc dt / hbar = {:.17g} is not a positive multiple of "
                                "2 pi (iSWAP fidelity {:.17g}); nearest admissible E_cc = {:.17g} "
                                "ueV",
                                coupling_angle, out.verified_fidelity,
                                kTwoPi * k * unit / units::ueV));
    }

    const double ratio = out.josephson_required / coupling.coupling_energy;
    for (int n = 1; n <= 4096; ++n) {
        const double odd = ratio * n;
        const double nearest = std::round(odd);
        if (std::abs(odd - nearest) < 1e-9 * n && std::fmod(nearest, 2.0) == 1.0) {
            out.n = n;
            out.m = static_cast<int>((nearest - 1.0) / 2.0);
            break;
        }
    }
    return out;
}

Pulse couple_pulse(const CouplingParams &coupling, const ISwapConditions &cond, int a, int b) {
    if (a == b || a < 0 || b < 0) {
        throw Error(ErrorCode::InvalidArgument, "couple_pulse needs two distinct qubits");
    }
    if (cond.josephson_required > coupling.josephson_max * (1.0 + 1e-12)) {
        throw Error(ErrorCode::Unreachable,
                    fmt::format("minimum E_Jc_max = {:.17g} ueV",
                                cond.josephson_required / units::ueV));
    }
    const double ratio = std::clamp(cond.josephson_required / coupling.josephson_max, 0.0, 1.0);
    Pulse p;
    p.kind = PulseKind::Couple;
    p.target = {std::min(a, b), std::max(a, b)};
    p.settings = {0.0, std::acos(ratio) / kPi};
    p.angle = cond.josephson_angle;
    return p;
}

ComplexMatrix simulate_couple_pulse(const QubitParams &q1, const QubitParams &q2,
                                    const CouplingParams &coupling, const Pulse &pulse) {
    if (pulse.kind != PulseKind::Couple) {
        throw Error(ErrorCode::InvalidArgument, "simulate_couple_pulse expects a Couple pulse");
    }
    CouplingParams cp = coupling;
    cp.flux = pulse.settings.flux;
    const ControlSettings c1{q1.degeneracy_voltage(), 0.5};
    const ControlSettings c2{q2.degeneracy_voltage(), 0.5};
    return expm_evolution(build_h2(q1, q2, cp, c1, c2), q1.dt, constants::hbar);
}

} // namespace scb
