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
#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "scb/cli.hpp"
#include "scb/gates.hpp"
#include "scb/io.hpp"

using namespace scb;
using Catch::Matchers::ContainsSubstring;

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path data(const std::string &name) { return fs::path(SCB_TEST_DATA_DIR) / name; }

fs::path scratch(const std::string &name, const std::string &text) {
    const fs::path dir = fs::temp_directory_path() / "scb_pulsec_cli_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
}

// Writes `preset <extra...>` output to a scratch config.
std::string preset_config(const std::string &name, std::vector<std::string> extra = {}) {
    std::vector<std::string> args{"preset"};
    args.insert(args.end(), extra.begin(), extra.end());
    const Result r = run(args);
    REQUIRE(r.code == 0);
    return scratch(name, r.out).string();
}

double stderr_value(const std::string &err, const std::string &key) {
    const auto pos = err.find(key + "=");
    REQUIRE(pos != std::string::npos);
    return std::stod(err.substr(pos + key.size() + 1));
}

} // namespace

TEST_CASE("exit codes", "[cli]") {
    CHECK(cli::exit_status_for(ErrorCode::OutOfRange) == 3);
    CHECK(cli::exit_status_for(ErrorCode::SynthIncompleteDevice) == 3);
    CHECK(cli::exit_status_for(ErrorCode::Unreachable) == 3);
    CHECK(cli::exit_status_for(ErrorCode::MalformedInput) == 2);
    CHECK(cli::exit_status_for(ErrorCode::Topology) == 2);
    CHECK(cli::exit_status_for(ErrorCode::EigenNonConvergence) == 1);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"device-info"}).code == 2);
    CHECK(run({"--config", "/nonexistent/x.json", "device-info"}).code == 2);
}

TEST_CASE("gate specs", "[cli]") {
    CHECK(max_abs_diff(cli::parse_gate_spec("h"), gates::hadamard()) == 0.0);
    CHECK(max_abs_diff(cli::parse_gate_spec("rx:0.5"), gates::rx(0.5)) == 0.0);
    CHECK(fidelity_up_to_phase(cli::parse_gate_spec("u:0.1,0.2,0.3"),
                               gates::rz(0.1 - 1.5707963267948966) * gates::rx(0.2) *
                                   gates::rz(0.3 + 1.5707963267948966)) > 1.0 - 1e-14);
    for (const char *bad : {"", "q", "rz", "rz:", "rz:abc", "u:1,2", "h:1", "rx:1e999"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(cli::parse_gate_spec(bad), Error);
    }
}

TEST_CASE("device-info", "[cli]") {
    const std::string cfg = preset_config("preset.json");
    Result r = run({"--config", cfg, "device-info"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("synthesis_complete = true"));
    CHECK_THAT(r.out, ContainsSubstring("(= 4 pi)"));
    CHECK_THAT(r.out, ContainsSubstring("iswap_reachable = true"));

    const std::string slow = preset_config("slow.json", {"--dt-scale", "0.25"});
    r = run({"--config", slow, "device-info"});
    CHECK(r.code == 3);
    CHECK_THAT(r.out, ContainsSubstring("synthesis_complete = false"));
    CHECK_THAT(r.out, ContainsSubstring("min_dt_ns = "));

    r = run({"--config", data("both_ec.json").string(), "device-info"});
    CHECK(r.code == 2);
    CHECK_THAT(r.err, ContainsSubstring("exactly one of"));
}

TEST_CASE("spectrum", "[cli]") {
    const std::string cfg = preset_config("preset.json");
    const auto dc = io::load_device_config(cfg);
    const double ve = dc.qubit.degeneracy_voltage();
    const std::string lo = io::format_double(0.5 * ve);
    const std::string hi = io::format_double(1.5 * ve);

    Result r = run({"--config", cfg, "spectrum", "--flux", "0", "--vmin", lo, "--vmax", hi,
                    "--steps", "101"});
    REQUIRE(r.code == 0);
    auto pts = io::parse_spectrum_csv(r.out);
    REQUIRE(pts.size() == 101);
    double gap = 1e300;
    for (const auto &p : pts) {
        gap = std::min(gap, p.upper - p.lower);
    }
    CHECK_THAT(gap, Catch::Matchers::WithinRel(2.0 * dc.qubit.josephson_intrinsic, 1e-9));

    r = run({"--config", cfg, "spectrum", "--flux", "0.5", "--vmin", lo, "--vmax", hi,
             "--steps", "101"});
    REQUIRE(r.code == 0);
    pts = io::parse_spectrum_csv(r.out);
    gap = 1e300;
    for (const auto &p : pts) {
        gap = std::min(gap, p.upper - p.lower);
    }
    CHECK(gap < 1e-9 * dc.qubit.charging_energy);

    r = run({"--config", cfg, "spectrum", "--vmin", lo, "--vmax", hi, "--steps", "2"});
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    CHECK(run({"--config", cfg, "spectrum", "--vmin", hi, "--vmax", lo}).code == 2);
    CHECK(run({"--config", cfg, "spectrum", "--vmin", lo, "--vmax", hi, "--steps", "1"}).code ==
          2);
    r = run({"--config", cfg, "--format", "json", "spectrum", "--vmin", lo, "--vmax", hi,
             "--steps", "3"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("\"E_minus\""));
}

TEST_CASE("synth", "[cli]") {
    const std::string cfg = preset_config("preset.json");
    Result r = run({"--config", cfg, "synth", "rz:0"});
    CHECK(r.code == 0);
    CHECK(io::parse_schedule(r.out).slot_count() == 3);
    CHECK(stderr_value(r.err, "fidelity") >= 1.0 - 1e-12);

    r = run({"--config", cfg, "synth", "h"});
    CHECK(r.code == 0);
    CHECK(stderr_value(r.err, "fidelity") >= 1.0 - 1e-9);

    r = run({"--config", cfg, "synth", "rx:20"});
    CHECK(r.code == 0);
    CHECK(stderr_value(r.err, "fidelity") >= 1.0 - 1e-9);

    CHECK(run({"--config", cfg, "synth", "rz:x"}).code == 2);

    const std::string slow = preset_config("underclocked.json", {"--dt-scale", "0.125"});
    r = run({"--config", slow, "synth", "h"});
    CHECK(r.code == 3);
    CHECK_THAT(r.err, ContainsSubstring("dt must be at least"));
}

TEST_CASE("verify-cnot", "[cli]") {
    const std::string cfg = preset_config("preset.json");
    Result r = run({"--config", cfg, "verify-cnot"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("iswap stated"));
    CHECK_THAT(r.out, ContainsSubstring("iswap verified"));
    CHECK_THAT(r.out, ContainsSubstring("note:"));
    CHECK_THAT(r.out, ContainsSubstring("cnot sequence:"));
    CHECK_THAT(r.out, ContainsSubstring("verdict = PASS"));

    const auto dc = io::load_device_config(cfg);
    CouplingParams weak = *dc.coupling;
    weak.josephson_max *= 0.6;
    const std::string weak_cfg =
        scratch("weak.json", io::device_config_json(dc.qubit, weak, 2)).string();
    r = run({"--config", weak_cfg, "verify-cnot"});
    CHECK(r.code == 3);
    CHECK_THAT(r.err, ContainsSubstring("minimum E_Jc_max"));

    const std::string bare = preset_config("bare.json", {"--no-coupling"});
    CHECK(run({"--config", bare, "verify-cnot"}).code == 2);
}

TEST_CASE("compile and simulate", "[cli]") {
    const std::string cfg = preset_config("preset.json");

    Result r = run({"--config", cfg, "simulate", data("empty.json").string()});
    CHECK(r.code == 0);
    CHECK(max_abs_diff(io::parse_unitary_json(r.out), ComplexMatrix::identity(4)) < 1e-12);
    CHECK(stderr_value(r.err, "fidelity") == 1.0);

    r = run({"--config", cfg, "simulate", data("iswap.json").string()});
    CHECK(r.code == 0);
    CHECK(fidelity_up_to_phase(io::parse_unitary_json(r.out), gates::iswap(), {1e-10, 1e-9}) >=
          1.0 - 1e-9);

    const std::string circuit = data("random12.json").string();
    r = run({"--config", cfg, "compile", circuit});
    CHECK(r.code == 0);
    CHECK(stderr_value(r.err, "fidelity") >= 1.0 - 1e-8);
    const std::string sched = scratch("random12.schedule.json", r.out).string();

    r = run({"--config", cfg, "simulate", sched, "--circuit", circuit});
    CHECK(r.code == 0);
    CHECK(stderr_value(r.err, "fidelity") >= 1.0 - 1e-8);
    const Result again = run({"--config", cfg, "simulate", circuit});
    CHECK(again.code == 0);
    CHECK(again.out == r.out);

    r = run({"--config", cfg, "--format", "csv", "simulate", circuit});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);

    const std::string broken = scratch("broken.json", "{\"width\": 2, \"gates\": [").string();
    CHECK(run({"--config", cfg, "compile", broken}).code == 2);
    const std::string far =
        scratch("far.json", R"({"width": 3, "gates": [{"kind": "cnot", "qubits": [0, 2]}]})")
            .string();
    CHECK(run({"--config", cfg, "compile", far}).code == 2);
}

TEST_CASE("outputs are deterministic", "[cli]") {
    const std::string cfg = preset_config("preset.json");
    for (const std::vector<std::string> &args :
         {std::vector<std::string>{"--config", cfg, "synth", "u:0.3,2.0,-1.0"},
          std::vector<std::string>{"--config", cfg, "verify-cnot"},
          std::vector<std::string>{"--config", cfg, "compile", data("random12.json").string()},
          std::vector<std::string>{"--config", cfg, "--seed", "9", "random-suite", "--count",
                                   "10"}}) {
        const Result a = run(args);
        const Result b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("random-suite", "[cli]") {
    const std::string cfg = preset_config("preset.json");
    const Result r = run({"--config", cfg, "--seed", "3", "random-suite", "--count", "25"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("circuits=25 failures=0"));
    CHECK(run({"--config", cfg, "random-suite", "--count", "0"}).code == 2);
}

TEST_CASE("preset round trip", "[cli]") {
    const Result r = run({"preset", "--width", "4"});
    REQUIRE(r.code == 0);
    const auto cfg = io::parse_device_config(r.out);
    CHECK(cfg.width == 4);
    CHECK(io::device_config_json(cfg.qubit, cfg.coupling, cfg.width) == r.out);
}
