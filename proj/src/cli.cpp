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
#include "scb/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "scb/circuit.hpp"
#include "scb/gates.hpp"
#include "scb/io.hpp"
#include "scb/synthesis.hpp"
#include "scb/two_qubit.hpp"

namespace scb::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSynthTol = 1e-9;
constexpr double kEndToEndTol = 1e-8;

using io::format_double;

struct Options {
    std::string config;
    std::optional<double> tol;
    std::uint64_t seed = 1;
    std::string format;
};

double parse_number(std::string_view text, const std::string &spec) {
    double x = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(x)) {
        throw Error(ErrorCode::MalformedInput,
                    fmt::format("gate spec '{}': '{}' is not a number", spec, text));
    }
    return x;
}

io::DeviceConfig require_config(const Options &opt) {
    if (opt.config.empty()) {
        throw Error(ErrorCode::MalformedInput, "--config <path> is required");
    }
    return io::load_device_config(opt.config);
}

double threshold(const Options &opt, double fallback) {
    const double tol = opt.tol.value_or(fallback);
    if (!(tol > 0.0) || tol >= 1.0) {
        throw Error(ErrorCode::MalformedInput, "--tol must be in (0, 1)");
    }
    return 1.0 - tol;
}

std::string verdict(bool ok) { return ok ? "true" : "false"; }

// Synthesis needs every canonical Rx angle in [0, 2 pi] reachable in one slot.
bool synthesis_complete(const QubitParams &q) {
    return q.max_rx_angle() >= 2.0 * kPi * (1.0 - 1e-12);
}

int cmd_device_info(const Options &opt, std::ostream &out, std::ostream &err) {
    const io::DeviceConfig cfg = require_config(opt);
    const QubitParams &q = cfg.qubit;
    const double reach = q.max_rx_angle();
    const bool complete = synthesis_complete(q);
    const double min_dt = 2.0 * kPi * constants::hbar / (2.0 * q.josephson_intrinsic);

    fmt::print(out, "E_C_ueV = {}\n", format_double(q.charging_energy / units::ueV));
    fmt::print(out, "E_J_intr_ueV = {}\n", format_double(q.josephson_intrinsic / units::ueV));
    fmt::print(out, "C_sigma_fF = {}\n", format_double(q.total_capacitance / units::fF));
    fmt::print(out, "C_g_fF = {}\n", format_double(q.gate_capacitance / units::fF));
    fmt::print(out, "dt_ns = {}\n", format_double(q.dt / units::ns));
    fmt::print(out, "degeneracy_voltage_V = {}\n", format_double(q.degeneracy_voltage()));
    fmt::print(out, "max_rx_angle = {} (= {} pi)\n", format_double(reach),
               format_double(reach / kPi));
    fmt::print(out, "ph_phase_per_pulse = {}\n", format_double(ph_pulse(q).phase_per_pulse));
    fmt::print(out, "charge_regime = {}\n", q.charge_regime_ok() ? "ok" : "warning");
    fmt::print(out, "synthesis_complete = {}\n", verdict(complete));
    if (!complete) {
        fmt::print(out, "min_dt_ns = {}\n", format_double(min_dt / units::ns));
    }
    if (cfg.coupling) {
        try {
            const ISwapConditions c = solve_iswap_conditions(*cfg.coupling, q.dt);
            fmt::print(out, "iswap_reachable = true\n");
            fmt::print(out, "iswap_E_Jc_ueV = {}\n",
                       format_double(c.josephson_required / units::ueV));
        } catch (const Error &e) {
            if (e.code() != ErrorCode::Unreachable) {
                throw;
            }
            fmt::print(out, "iswap_reachable = false\n");
            fmt::print(out, "iswap_reason = {}\n", e.what());
        }
    } else {
        fmt::print(out, "iswap_reachable = false\n");
        fmt::print(out, "iswap_reason = no coupling configured\n");
    }
    for (const std::string &d : cfg.derived) {
        fmt::print(out, "derived: {}\n", d);
    }
    for (const std::string &w : cfg.warnings) {
        fmt::print(err, "warning: {}\n", w);
    }
    if (!complete) {
        fmt::print(err, "device is not synthesis-complete: 2 E_J dt / hbar = {} < 2 pi; "
                        "use dt >= {} ns\n",
                   format_double(reach), format_double(min_dt / units::ns));
        return kDeviceIncapable;
    }
    return kOk;
}

int cmd_spectrum(const Options &opt, double flux, double vmin, double vmax, int steps,
                 std::ostream &out) {
    const io::DeviceConfig cfg = require_config(opt);
    if (steps < 2 || !std::isfinite(vmin) || !std::isfinite(vmax) || !(vmax > vmin) ||
        !std::isfinite(flux)) {
        throw Error(ErrorCode::MalformedInput,
                    "spectrum needs finite --vmin < --vmax, finite --flux and --steps >= 2");
    }
    std::vector<double> volts(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        volts[static_cast<std::size_t>(i)] = vmin + (vmax - vmin) * i / (steps - 1);
    }
    const auto points = h1_spectrum(cfg.qubit, flux, volts);
    if (opt.format == "json") {
        out << io::spectrum_json(points);
    } else {
        out << io::spectrum_csv(points);
    }
    return kOk;
}

int cmd_synth(const Options &opt, const std::string &spec, std::ostream &out,
              std::ostream &err) {
    const io::DeviceConfig cfg = require_config(opt);
    const ComplexMatrix target = parse_gate_spec(spec);
    const PulseSequence seq = synthesize_1q(cfg.qubit, target, 0);

    Schedule s;
    s.width = 1;
    s.dt = cfg.qubit.dt;
    s.accumulated_phase = seq.accumulated_phase;
    for (const Pulse &p : seq.slots) {
        s.slots.push_back(Moment{{p}});
    }
    const double f = fidelity_up_to_phase(simulate_sequence(cfg.qubit, seq), target);
    out << io::schedule_json(s);
    fmt::print(err, "fidelity={}\n", format_double(f));
    fmt::print(err, "slots={}\n", s.slot_count());
    return f >= threshold(opt, kSynthTol) ? kOk : kVerifyFailed;
}

int cmd_verify_cnot(const Options &opt, std::ostream &out) {
    const io::DeviceConfig cfg = require_config(opt);
    if (!cfg.coupling) {
        throw Error(ErrorCode::MalformedInput, "verify-cnot needs a \"coupling\" section");
    }
    const QubitParams &q = cfg.qubit;
    const double unit = constants::hbar / q.dt;
    const ISwapConditions cond = solve_iswap_conditions(*cfg.coupling, q.dt);

    fmt::print(out, "iswap stated: E_Jc = hbar pi / (2 dt) = {} ueV (E_Jc dt/hbar = {}), "
                    "iSWAP fidelity = {}\n",
               format_double(cond.josephson_stated / units::ueV),
               format_double(cond.josephson_stated / unit), format_double(cond.stated_fidelity));
    fmt::print(out, "iswap verified: E_Jc = {} ueV (E_Jc dt/hbar = {}), iSWAP fidelity = {}\n",
               format_double(cond.josephson_required / units::ueV),
               format_double(cond.josephson_angle), format_double(cond.verified_fidelity));
    if (std::abs(cond.josephson_required - cond.josephson_stated) >
        1e-12 * cond.josephson_required) {
        fmt::print(out,
                   "note: the stated E_Jc leaves cos(E_Jc dt / 2 hbar) = {} in the exchange "
                   "block, a partial swap; the verified value is {} times the stated one "
                   "(see README, \"iSWAP condition\")\n",
                   format_double(std::cos(cond.josephson_stated / unit / 2.0)),
                   format_double(cond.josephson_required / cond.josephson_stated));
    }
    fmt::print(out, "iswap E_cc: E_cc dt/hbar = 2 pi x {}, E_Jc/E_cc = (2m+1)/n with m = {}, "
                    "n = {}; E_cc > E_Jc_max: {}\n",
               cond.coupling_multiple, cond.m, cond.n, verdict(cond.coupling_dominates));
    const Pulse couple = couple_pulse(*cfg.coupling, cond, 0, 1);
    fmt::print(out, "coupler flux = {} Phi_0\n", format_double(couple.settings.flux));

    const CnotSearchResult search = search_cnot_variants(kSynthTol);
    const CnotVariant shipped = shipped_cnot_variant();
    fmt::print(out, "cnot variant search: {} readings examined, {} pass; literal reading "
                    "(three middle iSWAPs) fidelity = {}\n",
               search.examined, search.passing.size(), format_double(search.literal.fidelity));
    fmt::print(out, "cnot shipped variant: signs [{}], {} iSWAPs, {} sign flips\n",
               fmt::join(shipped.signs, ", "), shipped.total_iswaps(), shipped.flips());

    const std::vector<Gate> seq = compile_cnot(0, 1);
    std::vector<std::string> names;
    for (const Gate &g : seq) {
        if (g.angles.empty()) {
            names.push_back(fmt::format("{}({})", to_string(g.kind), fmt::join(g.qubits, ",")));
        } else {
            names.push_back(fmt::format("{}[q{}]({:.6g})", to_string(g.kind), g.qubits[0],
                                        g.angles[0]));
        }
    }
    fmt::print(out, "cnot sequence: {}\n", fmt::join(names, " ; "));

    const double matrix_fid = fidelity_up_to_phase(compose_gates(seq, 2), gates::cnot());
    Circuit c;
    c.width = 2;
    c.gates.push_back(Gate::cnot(0, 1));
    const Device device = cfg.device();
    const Schedule s = compile_circuit(c, device);
    const double pulse_fid = fidelity_up_to_phase(simulate_schedule(s, device), gates::cnot());
    const bool ok = matrix_fid >= 1.0 - kSynthTol && pulse_fid >= threshold(opt, kEndToEndTol);
    fmt::print(out, "slots = {}\n", s.slot_count());
    fmt::print(out, "matrix fidelity = {}\n", format_double(matrix_fid));
    fmt::print(out, "pulse fidelity = {}\n", format_double(pulse_fid));
    fmt::print(out, "verdict = {}\n", ok ? "PASS" : "FAIL");
    return ok ? kOk : kVerifyFailed;
}

int cmd_compile(const Options &opt, const std::string &circuit_path, std::ostream &out,
                std::ostream &err) {
    const io::DeviceConfig cfg = require_config(opt);
    const Circuit c = io::parse_circuit(io::read_file(circuit_path));
    const Device device = Device::uniform(cfg.qubit, cfg.coupling, std::max(cfg.width, c.width));
    const Schedule s = compile_circuit(c, device);
    const double f = fidelity_up_to_phase(simulate_schedule(s, device), ideal_unitary(c),
                                          {1e-10, 1e-9});
    out << io::schedule_json(s);
    fmt::print(err, "slots={}\n", s.slot_count());
    fmt::print(err, "fidelity={}\n", format_double(f));
    return f >= threshold(opt, kEndToEndTol) ? kOk : kVerifyFailed;
}

int cmd_simulate(const Options &opt, const std::string &input, const std::string &circuit_path,
                 std::ostream &out, std::ostream &err) {
    const io::DeviceConfig cfg = require_config(opt);
    const std::string text = io::read_file(input);
    const bool is_schedule = text.find("\"slots\"") != std::string::npos;

    std::optional<Circuit> circuit;
    Schedule s;
    if (is_schedule) {
        s = io::parse_schedule(text);
        if (!circuit_path.empty()) {
            circuit = io::parse_circuit(io::read_file(circuit_path));
        }
    } else {
        circuit = io::parse_circuit(text);
    }
    const int width = std::max({cfg.width, s.width, circuit ? circuit->width : 1});
    const Device device = Device::uniform(cfg.qubit, cfg.coupling, width);
    if (!is_schedule) {
        s = compile_circuit(*circuit, device);
    }
    const ComplexMatrix u = simulate_schedule(s, device);

    double f = 1.0;
    bool have_reference = false;
    if (circuit) {
        if (circuit->width != s.width) {
            throw Error(ErrorCode::MalformedInput, "schedule and circuit widths differ");
        }
        f = fidelity_up_to_phase(u, ideal_unitary(*circuit), {1e-10, 1e-9});
        have_reference = true;
    }
    if (opt.format == "csv") {
        out << io::unitary_csv(u);
    } else {
        out << io::unitary_json(u, f, s.accumulated_phase);
    }
    fmt::print(err, "unitarity_defect={}\n", format_double(unitarity_defect(u)));
    if (have_reference) {
        fmt::print(err, "fidelity={}\n", format_double(f));
        return f >= threshold(opt, kEndToEndTol) ? kOk : kVerifyFailed;
    }
    return kOk;
}

int cmd_preset(int width, bool coupling, double dt_scale, std::ostream &out) {
    if (!(dt_scale > 0.0) || width < 1 || width > 10) {
        throw Error(ErrorCode::MalformedInput, "preset needs --dt-scale > 0 and 1 <= --width <= 10");
    }
    QubitParams q = preset_qubit();
    std::optional<CouplingParams> cp;
    if (coupling) {
        cp = preset_coupling();
    }
    q.dt *= dt_scale;
    out << io::device_config_json(q, cp, width);
    return kOk;
}

int cmd_random_suite(const Options &opt, int count, int max_width, int max_gates,
                     std::ostream &out, std::ostream &err) {
    const io::DeviceConfig cfg = require_config(opt);
    if (count < 1 || max_width < 1 || max_width > 6 || max_gates < 1) {
        throw Error(ErrorCode::MalformedInput, "random-suite: bad --count/--max-width/--max-gates");
    }
    const Device device =
        Device::uniform(cfg.qubit, cfg.coupling, std::max(cfg.width, max_width));
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick_width(1, max_width);
    std::uniform_int_distribution<int> pick_gates(1, max_gates);
    const double pass = threshold(opt, kEndToEndTol);

    int failures = 0;
    double worst = 1.0;
    for (int i = 0; i < count; ++i) {
        const int w = pick_width(rng);
        const Circuit c = random_circuit(rng, w, pick_gates(rng));
        const Schedule s = compile_circuit(c, device);
        const double f = fidelity_up_to_phase(simulate_schedule(s, device), ideal_unitary(c),
                                              {1e-10, 1e-9});
        const bool deterministic =
            io::schedule_json(s) == io::schedule_json(compile_circuit(c, device));
        worst = std::min(worst, f);
        if (f < pass || !deterministic) {
            ++failures;
            fmt::print(err, "circuit {} failed: fidelity={} deterministic={}\n", i,
                       format_double(f), verdict(deterministic));
        }
    }
    fmt::print(out, "circuits={} failures={} min_fidelity={}\n", count, failures,
               format_double(worst));
    return failures == 0 ? kOk : kVerifyFailed;
}

} // namespace

int exit_status_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::OutOfRange:
    case ErrorCode::SynthIncompleteDevice:
    case ErrorCode::Unreachable:
        return kDeviceIncapable;
    case ErrorCode::EigenNonConvergence:
        return kVerifyFailed;
    default:
        return kInvalidInput;
    }
}

ComplexMatrix parse_gate_spec(const std::string &spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::string_view rest(spec);
        rest.remove_prefix(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            args.push_back(parse_number(rest.substr(0, comma), spec));
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
    }
    auto expect = [&](std::size_t n) {
        if (args.size() != n) {
            throw Error(ErrorCode::MalformedInput,
                        fmt::format("gate spec '{}': expected {} parameter(s)", spec, n));
        }
    };
    if (name == "rz" || name == "rx" || name == "ry" || name == "ph") {
        expect(1);
        if (name == "rz") {
            return gates::rz(args[0]);
        }
        if (name == "rx") {
            return gates::rx(args[0]);
        }
        if (name == "ry") {
            return gates::ry(args[0]);
        }
        return gates::phase(args[0]);
    }
    if (name == "u") {
        expect(3);
        return u_from_euler({args[0], args[1], args[2], 0.0});
    }
    expect(0);
    if (name == "i") {
        return ComplexMatrix::identity(2);
    }
    if (name == "h") {
        return gates::hadamard();
    }
    if (name == "x") {
        return pauli::x();
    }
    if (name == "y") {
        return pauli::y();
    }
    if (name == "z") {
        return pauli::z();
    }
    if (name == "s") {
        return ComplexMatrix{{1.0, 0.0}, {0.0, Complex(0.0, 1.0)}};
    }
    if (name == "t") {
        return ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, kPi / 4)}};
    }
    throw Error(ErrorCode::MalformedInput, fmt::format("unknown gate spec '{}'", spec));
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Pulse compiler and simulator for Cooper pair box qubits", "scb-pulsec"};
    app.require_subcommand(1);

    Options opt;
    double tol = 0.0;
    app.add_option("--config", opt.config, "device configuration JSON");
    auto *tol_opt = app.add_option("--tol", tol, "override the match tolerance");
    app.add_option("--seed", opt.seed, "seed for random suites");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv"}));

    auto *info = app.add_subcommand("device-info", "print derived device quantities");

    double flux = 0.0;
    double vmin = 0.0;
    double vmax = 0.0;
    int steps = 101;
    auto *spectrum = app.add_subcommand("spectrum", "two-level spectrum along a voltage sweep");
    spectrum->add_option("--flux", flux, "external flux in units of Phi_0");
    spectrum->add_option("--vmin", vmin, "first gate voltage (V)")->required();
    spectrum->add_option("--vmax", vmax, "last gate voltage (V)")->required();
    spectrum->add_option("--steps", steps, "number of sweep points (>= 2)");

    std::string gate_spec;
    auto *synth = app.add_subcommand("synth", "synthesize a one-qubit gate into three pulses");
    synth->add_option("gate", gate_spec, "h, x, rz:xi, rx:xi, u:alpha,theta,beta, ...")
        ->required();

    auto *verify = app.add_subcommand("verify-cnot", "build CNOT from iSWAP and verify it");

    std::string circuit_path;
    auto *compile = app.add_subcommand("compile", "compile a circuit JSON into a schedule");
    compile->add_option("circuit", circuit_path, "circuit JSON")->required();

    std::string sim_input;
    std::string sim_reference;
    auto *simulate = app.add_subcommand("simulate", "simulate a schedule or circuit JSON");
    simulate->add_option("input", sim_input, "schedule or circuit JSON")->required();
    simulate->add_option("--circuit", sim_reference, "reference circuit for a schedule input");

    int preset_width = 2;
    bool no_coupling = false;
    double dt_scale = 1.0;
    auto *preset = app.add_subcommand("preset", "print the shipped device configuration");
    preset->add_option("--width", preset_width, "chain length");
    preset->add_flag("--no-coupling", no_coupling, "omit the coupler");
    preset->add_option("--dt-scale", dt_scale, "multiply the pulse clock");

    int count = 200;
    int max_width = 3;
    int max_gates = 12;
    auto *suite = app.add_subcommand("random-suite", "compile and verify random circuits");
    suite->add_option("--count", count);
    suite->add_option("--max-width", max_width);
    suite->add_option("--max-gates", max_gates);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }
    if (*tol_opt) {
        opt.tol = tol;
    }

    try {
        if (*info) {
            return cmd_device_info(opt, out, err);
        }
        if (*spectrum) {
            return cmd_spectrum(opt, flux, vmin, vmax, steps, out);
        }
        if (*synth) {
            return cmd_synth(opt, gate_spec, out, err);
        }
        if (*verify) {
            return cmd_verify_cnot(opt, out);
        }
        if (*compile) {
            return cmd_compile(opt, circuit_path, out, err);
        }
        if (*simulate) {
            return cmd_simulate(opt, sim_input, sim_reference, out, err);
        }
        if (*preset) {
            return cmd_preset(preset_width, !no_coupling, dt_scale, out);
        }
        if (*suite) {
            return cmd_random_suite(opt, count, max_width, max_gates, out, err);
        }
    } catch (const Error &e) {
        fmt::print(err, "error [{}]: {}\n", to_string(e.code()), e.what());
        return exit_status_for(e.code());
    }
    return kInvalidInput;
}

} // namespace scb::cli
