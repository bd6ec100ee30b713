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
// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "oracle.hpp"
#include "scb/circuit.hpp"
#include "scb/cli.hpp"
#include "scb/gates.hpp"
#include "scb/io.hpp"
#include "scb/synthesis.hpp"
#include "scb/two_qubit.hpp"

using namespace scb;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s; // <= 0: no limit
    std::function<Outcome()> check;
};

std::string g(double x) { return fmt::format("{:.3e}", x); }

Outcome expm_oracle() {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> size(0.0, 20.0);
    double worst = 0.0;
    for (int dim : {2, 4}) {
        for (int k = 0; k < 100; ++k) {
            auto h = testing::random_hermitian(rng, dim, 1.0);
            // |h| dt / hbar <= 20 with dt = hbar = 1
            h = Complex(size(rng) / h.eigen().operatorNorm()) * h;
            worst = std::max(worst, max_abs_diff(expm_evolution(h, 1.0, 1.0),
                                                 testing::taylor_expm(h, 1.0, 1.0)));
        }
    }
    return {worst <= 1e-10, "max entry diff " + g(worst) + " (limit 1e-10)"};
}

Outcome euler_round_trip() {
    std::mt19937_64 rng(202);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto u = testing::haar_unitary(rng, 2);
        worst = std::max(worst, max_abs_diff(u_from_euler(euler_decompose(u)), u));
    }
    return {worst <= 1e-10, "max entry diff " + g(worst) + " (limit 1e-10)"};
}

Outcome synthesis_soundness() {
    const QubitParams p = preset_qubit();
    std::mt19937_64 rng(303);
    double worst = 1.0;
    bool three = true;
    for (int k = 0; k < 1000; ++k) {
        const auto u = testing::haar_unitary(rng, 2);
        const PulseSequence seq = synthesize_1q(p, u);
        three = three && seq.slot_count() == 3;
        worst = std::min(worst, fidelity_up_to_phase(simulate_sequence(p, seq), u));
    }
    return {three && worst >= 1.0 - 1e-9,
            fmt::format("min fidelity {:.17g}, all 3 slots: {}", worst, three)};
}

Outcome sign_audit() {
    const QubitParams p = preset_qubit();
    double worst = 1.0;
    for (double xi : {kPi / 4, -kPi / 4, kPi / 2, -kPi / 2, kPi, 1.5 * kPi}) {
        worst = std::min(worst, fidelity_up_to_phase(simulate_pulse(p, make_rz_pulse(p, 0, xi)),
                                                     gates::rz(xi)));
        worst = std::min(worst, fidelity_up_to_phase(simulate_pulse(p, make_rx_pulse(p, 0, xi)),
                                                     gates::rx(xi)));
    }
    // Without the compensating sign, Rz(pi/2) comes out as Rz(-pi/2).
    const double slope =
        constants::hbar * constants::e / (p.gate_capacitance * p.charging_energy * p.dt);
    const Pulse raw{PulseKind::Rz, {0, -1}, {p.degeneracy_voltage() + kPi / 2 * slope, 0.5}, 0.0};
    const double raw_f = fidelity_up_to_phase(simulate_pulse(p, raw), gates::rz(kPi / 2));
    return {worst >= 1.0 - 1e-10,
            fmt::format("min fidelity {:.17g}; audited Rz sign {:+.0f} (uncompensated Rz(pi/2) "
                        "fidelity {:.3g})",
                        worst, kRzVoltageSign, raw_f)};
}

Outcome closed_form_grid() {
    const double dt = preset_qubit().dt;
    const double unit = constants::hbar / dt;
    double worst = 0.0;
    for (int i = 1; i <= 20; ++i) {
        for (int j = 1; j <= 20; ++j) {
            const double jc = 2.0 * kPi * i / 20.0 * unit;
            const double cc = 2.0 * kPi * j / 20.0 * unit;
            const auto u = expm_evolution(degenerate_h2(jc, cc), dt, constants::hbar);
            worst = std::max(worst, testing::phase_aligned_diff(u, u2_closed_form(jc, cc, dt)));
        }
    }
    return {worst <= 1e-10, "max entry diff after phase alignment " + g(worst)};
}

Outcome iswap_adjudication() {
    const QubitParams q = preset_qubit();
    const CouplingParams cp = preset_coupling();
    const ISwapConditions c = solve_iswap_conditions(cp, q.dt);
    const double pulse_f =
        fidelity_up_to_phase(simulate_couple_pulse(q, q, cp, couple_pulse(cp, c, 0, 1)),
                             iswap_matrix());
    const bool ok = pulse_f >= 1.0 - 1e-9 && c.m == 0 &&
                    std::abs(c.josephson_angle - kPi) < 1e-12 &&
                    c.stated_fidelity < 1.0 - 1e-9;
    return {ok, fmt::format("verified E_Jc dt/hbar = {:.17g} (pulse fidelity {:.17g}); stated "
                            "E_Jc dt/hbar = pi/2 gives fidelity {:.17g}; E_cc dt/hbar = 2 pi x "
                            "{}, m = {}, n = {}",
                            c.josephson_angle, pulse_f, c.stated_fidelity, c.coupling_multiple,
                            c.m, c.n)};
}

Outcome cnot_universality() {
    const CnotSearchResult search = search_cnot_variants();
    const auto seq = compile_cnot(0, 1);
    const double matrix_f = fidelity_up_to_phase(compose_gates(seq, 2), gates::cnot());
    const Device d = Device::uniform(preset_qubit(), preset_coupling(), 2);
    Circuit c;
    c.width = 2;
    c.gates = {Gate::cnot(0, 1)};
    const Schedule s = compile_circuit(c, d);
    const double pulse_f = fidelity_up_to_phase(simulate_schedule(s, d), gates::cnot());
    const CnotVariant v = shipped_cnot_variant();
    return {matrix_f >= 1.0 - 1e-9 && pulse_f >= 1.0 - 1e-8,
            fmt::format("matrix {:.17g}, pulse {:.17g} over {} slots; {} of {} readings pass, "
                        "shipped signs [{}] with {} iSWAPs",
                        matrix_f, pulse_f, s.slot_count(), search.passing.size(),
                        search.examined, fmt::join(v.signs, ","), v.total_iswaps())};
}

Outcome level_diagram() {
    const QubitParams p = preset_qubit();
    const double ve = p.degeneracy_voltage();
    std::vector<double> volts;
    for (int i = 0; i <= 200; ++i) {
        volts.push_back(ve * (0.5 + i / 200.0));
    }
    volts[100] = ve;
    double worst = 0.0;
    bool at_degeneracy = true;
    for (double flux : {0.0, 0.1, 0.2, 1.0 / 3.0, 0.45}) {
        const auto pts = h1_spectrum(p, flux, volts);
        std::size_t best = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (pts[i].upper - pts[i].lower < pts[best].upper - pts[best].lower) {
                best = i;
            }
        }
        at_degeneracy = at_degeneracy && best == 100;
        const double ej = josephson_energy(flux, p.josephson_intrinsic);
        worst = std::max(worst, std::abs(pts[best].upper - pts[best].lower - ej) / ej);
    }
    const auto zero = h1_spectrum(p, 0.0, std::vector<double>{ve});
    const double rel0 = std::abs(zero[0].upper - zero[0].lower - 2.0 * p.josephson_intrinsic) /
                        (2.0 * p.josephson_intrinsic);
    return {at_degeneracy && worst <= 1e-9 && rel0 <= 1e-9,
            fmt::format("minimum at n_c = 1/2: {}; max relative gap error {} ; zero-flux gap vs "
                        "2 E_J_intr {}",
                        at_degeneracy, g(worst), g(rel0))};
}

Outcome random_circuits() {
    const Device d = Device::uniform(preset_qubit(), preset_coupling(), 3);
    auto run_suite = [&](std::uint64_t seed, std::vector<std::string> &dump) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> width(1, 3);
        std::uniform_int_distribution<int> count(1, 12);
        double worst = 1.0;
        for (int k = 0; k < 200; ++k) {
            const Circuit c = random_circuit(rng, width(rng), count(rng));
            const Schedule s = compile_circuit(c, d);
            check_schedule(s, d);
            dump.push_back(io::schedule_json(s));
            worst = std::min(worst, fidelity_up_to_phase(simulate_schedule(s, d),
                                                         ideal_unitary(c), {1e-10, 1e-9}));
        }
        return worst;
    };
    std::vector<std::string> first;
    std::vector<std::string> second;
    const double worst = run_suite(404, first);
    (void)run_suite(404, second);
    const bool same = first == second;
    return {worst >= 1.0 - 1e-8 && same,
            fmt::format("min fidelity {:.17g}; schedules byte-identical on rerun: {}", worst, same)};
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli_run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Outcome cli_contract() {
    const std::string preset = (std::filesystem::path(SCB_SOURCE_DIR) / "configs" / "preset.json")
                                   .string();
    const CliRun verify = cli_run({"--config", preset, "verify-cnot"});

    const auto dir = std::filesystem::temp_directory_path() / "scb_pulsec_acceptance";
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string &name, const std::string &text) {
        const auto p = dir / name;
        std::FILE *f = std::fopen(p.string().c_str(), "wb");
        std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
        return p.string();
    };
    const CliRun slow_cfg = cli_run({"preset", "--dt-scale", "0.125"});
    const CliRun synth = cli_run({"--config", write("slow.json", slow_cfg.out), "synth", "h"});
    const bool remediation = synth.err.find("dt must be at least") != std::string::npos;

    // Round trips through the loaders.
    bool trips = true;
    const CliRun cfg_out = cli_run({"preset"});
    const auto cfg = io::parse_device_config(cfg_out.out);
    trips = trips && io::device_config_json(cfg.qubit, cfg.coupling, cfg.width) == cfg_out.out;

    const std::string circuit_text =
        R"({"format": "scb-pulsec/1", "width": 2, "gates": [{"kind": "cnot", "qubits": [0, 1]},)"
        R"( {"kind": "ry", "qubits": [1], "angle": 0.25}]})";
    const std::string circuit = write("c.json", circuit_text);
    const Circuit parsed = io::parse_circuit(circuit_text);
    trips = trips && io::circuit_json(io::parse_circuit(io::circuit_json(parsed))) ==
                         io::circuit_json(parsed);

    const CliRun compiled = cli_run({"--config", preset, "compile", circuit});
    trips = trips && compiled.code == 0 &&
            io::schedule_json(io::parse_schedule(compiled.out)) == compiled.out;
    const CliRun sim = cli_run({"--config", preset, "simulate", write("s.json", compiled.out),
                                "--circuit", circuit});
    const auto u = io::parse_unitary_json(sim.out);
    trips = trips && sim.code == 0 &&
            max_abs_diff(io::parse_unitary_json(io::unitary_json(u, 1.0, 0.0)), u) == 0.0 &&
            io::unitary_csv(u).find(io::format_double(u(0, 0).real())) == 0;

    const std::string ve = io::format_double(cfg.qubit.degeneracy_voltage());
    const CliRun spec = cli_run({"--config", preset, "spectrum", "--vmin", "0", "--vmax", ve,
                                 "--steps", "11"});
    const auto pts = io::parse_spectrum_csv(spec.out);
    trips = trips && spec.code == 0 && pts.size() == 11;
    for (const auto &pt : h1_spectrum(cfg.qubit, 0.0, std::vector<double>{pts[3].voltage})) {
        trips = trips && std::abs(pt.lower - pts[3].lower) <= 1e-15 * std::abs(pt.lower) &&
                std::abs(pt.upper - pts[3].upper) <= 1e-15 * std::abs(pt.upper);
    }

    const bool ok = verify.code == 0 && synth.code == 3 && remediation && trips;
    return {ok, fmt::format("verify-cnot exit {}; under-clocked synth exit {} (remediation: {}); "
                            "round trips: {}",
                            verify.code, synth.code, remediation, trips)};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "expm oracle equivalence", 1.0, expm_oracle},
        {2, "Euler round trip", 1.0, euler_round_trip},
        {3, "one-qubit synthesis soundness", 5.0, synthesis_soundness},
        {4, "Rz/Rx control formulas with sign audit", 0.0, sign_audit},
        {5, "closed-form coupled evolution vs exponential", 0.0, closed_form_grid},
        {6, "iSWAP condition adjudication", 0.0, iswap_adjudication},
        {7, "CNOT universality", 0.0, cnot_universality},
        {8, "level diagram", 0.0, level_diagram},
        {9, "end-to-end compiler property", 30.0, random_circuits},
        {10, "CLI contract", 0.0, cli_contract},
    };
    int failures = 0;
    for (const Criterion &c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0.0 && secs >= c.time_limit_s) {
            o.pass = false;
            o.detail += fmt::format("; over the {} s budget", c.time_limit_s);
        }
        failures += o.pass ? 0 : 1;
        fmt::print("{} [{}] {}: {} ({:.2f} s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                   o.detail, secs);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
