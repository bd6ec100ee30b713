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
#include "scb/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "scb/error.hpp"

namespace scb::io {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string &msg) {
    throw Error(ErrorCode::MalformedInput, msg);
}

json parse_json(const std::string &text, const char *what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        malformed(fmt::format("{}: invalid JSON ({})", what, e.what()));
    }
}

void check_format(const json &j, const char *what) {
    if (!j.is_object()) {
        malformed(fmt::format("{}: top level must be a JSON object", what));
    }
    if (j.contains("format") && j["format"] != kFormatTag) {
        malformed(fmt::format("{}: unsupported format {} (expected \"{}\")", what,
                              j["format"].dump(), kFormatTag));
    }
}

double number(const json &obj, const char *key, const char *what) {
    if (!obj.contains(key)) {
        malformed(fmt::format("{}: missing \"{}\"", what, key));
    }
    const json &v = obj[key];
    if (!v.is_number()) {
        malformed(fmt::format("{}: \"{}\" must be a number", what, key));
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        malformed(fmt::format("{}: \"{}\" must be finite", what, key));
    }
    return x;
}

double positive(const json &obj, const char *key, const char *what) {
    const double x = number(obj, key, what);
    if (!(x > 0.0)) {
        malformed(fmt::format("{}: \"{}\" must be positive, got {}", what, key, x));
    }
    return x;
}

// Returns which of the two keys is present; complains unless exactly one is.
const char *exactly_one(const json &obj, const char *a, const char *b, const char *what) {
    const bool has_a = obj.contains(a);
    const bool has_b = obj.contains(b);
    if (has_a == has_b) {
        malformed(fmt::format("{}: exactly one of \"{}\" or \"{}\" must be given", what, a, b));
    }
    return has_a ? a : b;
}

int integer(const json &v, const char *what) {
    if (!v.is_number_integer()) {
        malformed(fmt::format("{}: expected an integer, got {}", what, v.dump()));
    }
    return v.get<int>();
}

json pulse_to_json(const Pulse &p) {
    json j;
    if (p.target.is_coupler()) {
        j["target"] = fmt::format("coupler:{}-{}", p.target.qubit, p.target.partner);
    } else {
        j["target"] = p.target.qubit;
    }
    j["kind"] = std::string(to_string(p.kind));
    j["V_volts"] = p.settings.voltage;
    j["flux_phi0"] = p.settings.flux;
    j["angle"] = p.angle;
    return j;
}

PulseTarget parse_target(const json &v) {
    if (v.is_number_integer()) {
        return {v.get<int>(), -1};
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const std::string prefix = "coupler:";
        const auto dash = s.find('-', prefix.size());
        if (s.rfind(prefix, 0) == 0 && dash != std::string::npos) {
            int a = -1;
            int b = -1;
            const char *first = s.data() + prefix.size();
            const auto ra = std::from_chars(first, s.data() + dash, a);
            const auto rb = std::from_chars(s.data() + dash + 1, s.data() + s.size(), b);
            if (ra.ec == std::errc{} && ra.ptr == s.data() + dash && rb.ec == std::errc{} &&
                rb.ptr == s.data() + s.size() && a >= 0 && b >= 0) {
                return {std::min(a, b), std::max(a, b)};
            }
        }
    }
    malformed(fmt::format("schedule: bad pulse target {}", v.dump()));
}

} // namespace

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        malformed(fmt::format("cannot read {}", path.string()));
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Device DeviceConfig::device() const { return Device::uniform(qubit, coupling, width); }

DeviceConfig parse_device_config(const std::string &json_text) {
    const char *what = "device config";
    const json j = parse_json(json_text, what);
    check_format(j, what);

    DeviceConfig cfg;
    const double cg = positive(j, "C_g_fF", what) * units::fF;
    const double dt = positive(j, "dt_ns", what) * units::ns;

    double ej = 0.0;
    if (j.contains("E_J_intr_ueV")) {
        if (j.contains("gap_ueV") || j.contains("R_N_kohm")) {
            malformed("device config: exactly one of \"E_J_intr_ueV\" or "
                      "{\"gap_ueV\", \"R_N_kohm\"} must be given");
        }
        ej = positive(j, "E_J_intr_ueV", what) * units::ueV;
    } else if (j.contains("gap_ueV") && j.contains("R_N_kohm")) {
        ej = ambegaokar_baratoff(positive(j, "gap_ueV", what) * units::ueV,
                                 positive(j, "R_N_kohm", what) * units::kohm);
        cfg.derived.push_back(fmt::format("E_J_intr = {} ueV (Ambegaokar-Baratoff)",
                                          format_double(ej / units::ueV)));
    } else {
        malformed("device config: exactly one of \"E_J_intr_ueV\" or "
                  "{\"gap_ueV\", \"R_N_kohm\"} must be given");
    }

    if (std::string(exactly_one(j, "E_C_ueV", "C_sigma_fF", what)) == "E_C_ueV") {
        const double ec = positive(j, "E_C_ueV", what) * units::ueV;
        cfg.qubit.charging_energy = ec;
        cfg.qubit.total_capacitance = constants::e * constants::e / (2.0 * ec);
        cfg.derived.push_back(fmt::format("C_sigma = {} fF (from E_C)",
                                          format_double(cfg.qubit.total_capacitance / units::fF)));
    } else {
        const double cs = positive(j, "C_sigma_fF", what) * units::fF;
        cfg.qubit.total_capacitance = cs;
        cfg.qubit.charging_energy = constants::e * constants::e / (2.0 * cs);
        cfg.derived.push_back(fmt::format("E_C = {} ueV (from C_sigma)",
                                          format_double(cfg.qubit.charging_energy / units::ueV)));
    }
    cfg.qubit.josephson_intrinsic = ej;
    cfg.qubit.gate_capacitance = cg;
    cfg.qubit.dt = dt;
    try {
        cfg.qubit.validate();
    } catch (const Error &e) {
        malformed(fmt::format("device config: {}", e.what()));
    }
    if (cfg.qubit.total_capacitance <= cg) {
        cfg.warnings.push_back("C_sigma does not exceed C_g");
    }
    if (!cfg.qubit.charge_regime_ok()) {
        cfg.warnings.push_back(fmt::format(
            "E_C = {} ueV is not above 2 E_J = {} ueV; the two-level charge model may be "
            "inaccurate",
            format_double(cfg.qubit.charging_energy / units::ueV), format_double(2 * ej / units::ueV)));
    }

    if (j.contains("width")) {
        cfg.width = integer(j["width"], "device config: width");
        if (cfg.width < 1 || cfg.width > 10) {
            malformed("device config: width must be in [1, 10]");
        }
    }

    if (j.contains("coupling")) {
        const char *cwhat = "device config coupling";
        const json &c = j["coupling"];
        if (!c.is_object()) {
            malformed("device config: \"coupling\" must be an object");
        }
        const double ejc = positive(c, "E_Jc_max_ueV", cwhat) * units::ueV;
        if (std::string(exactly_one(c, "E_cc_ueV", "C_c_fF", cwhat)) == "E_cc_ueV") {
            cfg.coupling = CouplingParams::from_energy(positive(c, "E_cc_ueV", cwhat) * units::ueV,
                                                       ejc);
            cfg.derived.push_back(fmt::format(
                "C_c = {} fF (from E_cc)", format_double(cfg.coupling->coupling_capacitance / units::fF)));
        } else {
            cfg.coupling =
                CouplingParams::from_capacitance(positive(c, "C_c_fF", cwhat) * units::fF, ejc);
            cfg.derived.push_back(fmt::format(
                "E_cc = {} ueV (from C_c)", format_double(cfg.coupling->coupling_energy / units::ueV)));
        }
    }
    return cfg;
}

DeviceConfig load_device_config(const std::filesystem::path &path) {
    return parse_device_config(read_file(path));
}

std::string device_config_json(const QubitParams &qubit,
                               const std::optional<CouplingParams> &coupling, int width) {
    json j;
    j["format"] = kFormatTag;
    j["E_C_ueV"] = qubit.charging_energy / units::ueV;
    j["E_J_intr_ueV"] = qubit.josephson_intrinsic / units::ueV;
    j["C_g_fF"] = qubit.gate_capacitance / units::fF;
    j["dt_ns"] = qubit.dt / units::ns;
    j["width"] = width;
    if (coupling) {
        j["coupling"] = {{"E_cc_ueV", coupling->coupling_energy / units::ueV},
                         {"E_Jc_max_ueV", coupling->josephson_max / units::ueV}};
    }
    return j.dump(2) + "\n";
}

Circuit parse_circuit(const std::string &json_text) {
    const char *what = "circuit";
    const json j = parse_json(json_text, what);
    check_format(j, what);
    Circuit c;
    if (!j.contains("width")) {
        malformed("circuit: missing \"width\"");
    }
    c.width = integer(j["width"], "circuit: width");
    if (!j.contains("gates") || !j["gates"].is_array()) {
        malformed("circuit: \"gates\" must be an array");
    }
    for (const json &g : j["gates"]) {
        if (!g.is_object() || !g.contains("kind") || !g["kind"].is_string() ||
            !g.contains("qubits") || !g["qubits"].is_array()) {
            malformed(fmt::format("circuit: bad gate entry {}", g.dump()));
        }
        const std::string kind = g["kind"].get<std::string>();
        Gate gate;
        if (kind == "rz") {
            gate.kind = GateKind::Rz;
        } else if (kind == "rx") {
            gate.kind = GateKind::Rx;
        } else if (kind == "ry") {
            gate.kind = GateKind::Ry;
        } else if (kind == "ph") {
            gate.kind = GateKind::Ph;
        } else if (kind == "u") {
            gate.kind = GateKind::UEuler;
        } else if (kind == "iswap") {
            gate.kind = GateKind::ISwap;
        } else if (kind == "cnot") {
            gate.kind = GateKind::Cnot;
        } else {
            malformed(fmt::format("circuit: unknown gate kind \"{}\"", kind));
        }
        for (const json &q : g["qubits"]) {
            gate.qubits.push_back(integer(q, "circuit: qubit index"));
        }
        if (g.contains("angle")) {
            gate.angles.push_back(number(g, "angle", "circuit gate"));
        }
        if (g.contains("angles")) {
            if (!g["angles"].is_array()) {
                malformed("circuit: \"angles\" must be an array");
            }
            for (const json &a : g["angles"]) {
                if (!a.is_number()) {
                    malformed("circuit: angles must be numbers");
                }
                gate.angles.push_back(a.get<double>());
            }
        }
        c.gates.push_back(std::move(gate));
    }
    try {
        c.validate();
    } catch (const Error &e) {
        if (e.code() == ErrorCode::Topology) {
            throw;
        }
        malformed(fmt::format("circuit: {}", e.what()));
    }
    return c;
}

std::string circuit_json(const Circuit &c) {
    json j;
    j["format"] = kFormatTag;
    j["width"] = c.width;
    json gates = json::array();
    for (const Gate &g : c.gates) {
        if (g.kind == GateKind::Custom1Q || g.kind == GateKind::Custom2Q) {
            throw Error(ErrorCode::Unsupported, "custom gates have no file representation");
        }
        json e;
        e["kind"] = std::string(to_string(g.kind));
        e["qubits"] = g.qubits;
        if (g.kind == GateKind::UEuler) {
            e["angles"] = g.angles;
        } else if (!g.angles.empty()) {
            e["angle"] = g.angles.front();
        }
        gates.push_back(std::move(e));
    }
    j["gates"] = std::move(gates);
    return j.dump(2) + "\n";
}

Schedule parse_schedule(const std::string &json_text) {
    const char *what = "schedule";
    const json j = parse_json(json_text, what);
    check_format(j, what);
    Schedule s;
    s.dt = positive(j, "dt_ns", what) * units::ns;
    s.accumulated_phase = j.contains("accumulated_phase") ? number(j, "accumulated_phase", what)
                                                          : 0.0;
    if (!j.contains("slots") || !j["slots"].is_array()) {
        malformed("schedule: \"slots\" must be an array");
    }
    int width = 0;
    for (const json &slot : j["slots"]) {
        if (!slot.is_array()) {
            malformed("schedule: each slot must be an array of pulses");
        }
        Moment m;
        for (const json &p : slot) {
            if (!p.is_object() || !p.contains("target") || !p.contains("kind") ||
                !p["kind"].is_string()) {
                malformed(fmt::format("schedule: bad pulse {}", p.dump()));
            }
            Pulse pulse;
            pulse.target = parse_target(p["target"]);
            pulse.kind = pulse_kind_from_string(p["kind"].get<std::string>());
            pulse.settings.voltage = number(p, "V_volts", what);
            pulse.settings.flux = number(p, "flux_phi0", what);
            pulse.angle = p.contains("angle") ? number(p, "angle", what) : 0.0;
            width = std::max(width, std::max(pulse.target.qubit, pulse.target.partner) + 1);
            m.pulses.push_back(pulse);
        }
        s.slots.push_back(std::move(m));
    }
    if (j.contains("width")) {
        s.width = integer(j["width"], "schedule: width");
    } else {
        s.width = std::max(width, 1);
    }
    return s;
}

std::string schedule_json(const Schedule &s) {
    json j;
    j["format"] = kFormatTag;
    j["dt_ns"] = s.dt / units::ns;
    j["width"] = s.width;
    json slots = json::array();
    for (const Moment &m : s.slots) {
        json slot = json::array();
        for (const Pulse &p : m.pulses) {
            slot.push_back(pulse_to_json(p));
        }
        slots.push_back(std::move(slot));
    }
    j["slots"] = std::move(slots);
    j["accumulated_phase"] = s.accumulated_phase;
    return j.dump(2) + "\n";
}

std::string unitary_json(const ComplexMatrix &u, double fidelity, double accumulated_phase) {
    json j;
    j["format"] = kFormatTag;
    j["dim"] = u.dim();
    json entries = json::array();
    for (const Complex &z : u.entries()) {
        entries.push_back({z.real(), z.imag()});
    }
    j["unitary"] = std::move(entries);
    j["fidelity"] = fidelity;
    j["accumulated_phase"] = accumulated_phase;
    return j.dump() + "\n";
}

ComplexMatrix parse_unitary_json(const std::string &json_text) {
    const char *what = "unitary";
    const json j = parse_json(json_text, what);
    check_format(j, what);
    if (!j.contains("unitary") || !j["unitary"].is_array()) {
        malformed("unitary: missing \"unitary\" array");
    }
    std::vector<Complex> entries;
    for (const json &z : j["unitary"]) {
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
            malformed("unitary: entries must be [re, im] pairs");
        }
        entries.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
    const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(entries.size())));
    if (dim * dim != entries.size() || dim == 0) {
        malformed("unitary: entry count is not a square");
    }
    return ComplexMatrix(dim, entries);
}

std::string unitary_csv(const ComplexMatrix &u) {
    std::string out;
    for (std::size_t r = 0; r < u.dim(); ++r) {
        for (std::size_t c = 0; c < u.dim(); ++c) {
            if (c > 0) {
                out += ',';
            }
            out += format_double(u(r, c).real());
            out += ',';
            out += format_double(u(r, c).imag());
        }
        out += '\n';
    }
    return out;
}

std::string spectrum_csv(const std::vector<SpectrumPoint> &points) {
    std::string out = "V,n_c,E_minus,E_plus\n";
    for (const SpectrumPoint &p : points) {
        out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", p.voltage, p.gate_charge,
                           p.lower / units::ueV, p.upper / units::ueV);
    }
    return out;
}

std::vector<SpectrumPoint> parse_spectrum_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "V,n_c,E_minus,E_plus") {
        malformed("spectrum csv: missing header");
    }
    std::vector<SpectrumPoint> out;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        double v[4];
        std::size_t pos = 0;
        for (int i = 0; i < 4; ++i) {
            const std::size_t end = i < 3 ? line.find(',', pos) : line.size();
            if (end == std::string::npos) {
                malformed(fmt::format("spectrum csv: short row '{}'", line));
            }
            const auto res = std::from_chars(line.data() + pos, line.data() + end, v[i]);
            if (res.ec != std::errc{} || res.ptr != line.data() + end) {
                malformed(fmt::format("spectrum csv: bad number in '{}'", line));
            }
            pos = end + 1;
        }
        out.push_back({v[0], v[1], v[2] * units::ueV, v[3] * units::ueV});
    }
    return out;
}

std::string spectrum_json(const std::vector<SpectrumPoint> &points) {
    json j;
    j["format"] = kFormatTag;
    json rows = json::array();
    for (const SpectrumPoint &p : points) {
        rows.push_back({{"V", p.voltage},
                        {"n_c", p.gate_charge},
                        {"E_minus", p.lower / units::ueV},
                        {"E_plus", p.upper / units::ueV}});
    }
    j["spectrum"] = std::move(rows);
    return j.dump(2) + "\n";
}

} // namespace scb::io
