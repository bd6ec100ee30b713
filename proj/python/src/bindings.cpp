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
#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scb/circuit.hpp"
#include "scb/cli.hpp"
#include "scb/device.hpp"
#include "scb/error.hpp"
#include "scb/gates.hpp"
#include "scb/io.hpp"
#include "scb/synthesis.hpp"
#include "scb/two_qubit.hpp"

namespace py = pybind11;
using namespace scb;

namespace {

ComplexMatrix to_matrix(const Eigen::MatrixXcd &m) { return ComplexMatrix(m); }

py::dict pulse_dict(const Pulse &p) {
    py::dict d;
    d["kind"] = std::string(to_string(p.kind));
    d["qubit"] = p.target.qubit;
    d["partner"] = p.target.partner;
    d["voltage"] = p.settings.voltage;
    d["flux"] = p.settings.flux;
    d["angle"] = p.angle;
    return d;
}

py::dict sequence_dict(const PulseSequence &s) {
    py::list slots;
    for (const Pulse &p : s.slots) {
        slots.append(pulse_dict(p));
    }
    py::dict d;
    d["slots"] = slots;
    d["accumulated_phase"] = s.accumulated_phase;
    return d;
}

PulseSequence sequence_from(const py::dict &d) {
    PulseSequence s;
    for (const auto &item : d["slots"].cast<py::list>()) {
        const auto p = item.cast<py::dict>();
        Pulse pulse;
        pulse.kind = pulse_kind_from_string(p["kind"].cast<std::string>());
        pulse.target = {p["qubit"].cast<int>(), p["partner"].cast<int>()};
        pulse.settings = {p["voltage"].cast<double>(), p["flux"].cast<double>()};
        pulse.angle = p["angle"].cast<double>();
        s.slots.push_back(pulse);
    }
    s.accumulated_phase = d["accumulated_phase"].cast<double>();
    return s;
}

io::DeviceConfig config_from(const std::string &config_json) {
    return io::parse_device_config(config_json);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pulse synthesis and simulation for Cooper pair box qubits";

    static py::exception<Error> scb_error(m, "ScbError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::object err = scb_error;
            py::object exc = err(std::string(e.what()));
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(scb_error.ptr(), exc.ptr());
        }
    });

    m.attr("HBAR") = constants::hbar;
    m.attr("E_CHARGE") = constants::e;
    m.attr("UEV") = units::ueV;
    m.attr("FORMAT_TAG") = io::kFormatTag;

    py::class_<QubitParams>(m, "QubitParams")
        .def(py::init<>())
        .def_static("from_capacitances", &QubitParams::from_capacitances,
                    py::arg("total_capacitance"), py::arg("gate_capacitance"),
                    py::arg("josephson_intrinsic"), py::arg("dt"))
        .def_readwrite("charging_energy", &QubitParams::charging_energy)
        .def_readwrite("josephson_intrinsic", &QubitParams::josephson_intrinsic)
        .def_readwrite("gate_capacitance", &QubitParams::gate_capacitance)
        .def_readwrite("total_capacitance", &QubitParams::total_capacitance)
        .def_readwrite("dt", &QubitParams::dt)
        .def("validate", &QubitParams::validate)
        .def("max_rx_angle", &QubitParams::max_rx_angle)
        .def("degeneracy_voltage", &QubitParams::degeneracy_voltage)
        .def("charge_regime_ok", &QubitParams::charge_regime_ok);

    py::class_<CouplingParams>(m, "CouplingParams")
        .def(py::init<>())
        .def_static("from_energy", &CouplingParams::from_energy)
        .def_static("from_capacitance", &CouplingParams::from_capacitance)
        .def_readwrite("coupling_energy", &CouplingParams::coupling_energy)
        .def_readwrite("coupling_capacitance", &CouplingParams::coupling_capacitance)
        .def_readwrite("josephson_max", &CouplingParams::josephson_max)
        .def_readwrite("flux", &CouplingParams::flux)
        .def("josephson_energy", &CouplingParams::josephson_energy);

    m.def("preset_qubit", &preset_qubit);
    m.def("preset_coupling", &preset_coupling);
    m.def("josephson_energy", &josephson_energy, py::arg("flux"), py::arg("josephson_intrinsic"));
    m.def("ambegaokar_baratoff", &ambegaokar_baratoff, py::arg("gap"), py::arg("normal_resistance"));

    m.def(
        "build_h1",
        [](const QubitParams &p, double voltage, double flux) {
            return build_h1(p, {voltage, flux}).eigen();
        },
        py::arg("qubit"), py::arg("voltage"), py::arg("flux"));
    m.def(
        "h1_spectrum",
        [](const QubitParams &p, double flux, const std::vector<double> &volts) {
            std::vector<std::tuple<double, double, double, double>> out;
            for (const SpectrumPoint &s : h1_spectrum(p, flux, volts)) {
                out.emplace_back(s.voltage, s.gate_charge, s.lower, s.upper);
            }
            return out;
        },
        py::arg("qubit"), py::arg("flux"), py::arg("voltages"));

    m.def(
        "expm_evolution",
        [](const Eigen::MatrixXcd &h, double duration, double hbar) {
            return expm_evolution(to_matrix(h), duration, hbar).eigen();
        },
        py::arg("h"), py::arg("duration"), py::arg("hbar") = constants::hbar);
    m.def(
        "fidelity_up_to_phase",
        [](const Eigen::MatrixXcd &u, const Eigen::MatrixXcd &v) {
            return fidelity_up_to_phase(to_matrix(u), to_matrix(v));
        },
        py::arg("u"), py::arg("v"));

    py::module_ g = m.def_submodule("gates", "Ideal gate matrices");
    g.def("rz", [](double a) { return gates::rz(a).eigen(); });
    g.def("rx", [](double a) { return gates::rx(a).eigen(); });
    g.def("ry", [](double a) { return gates::ry(a).eigen(); });
    g.def("hadamard", [] { return gates::hadamard().eigen(); });
    g.def("iswap", [] { return gates::iswap().eigen(); });
    g.def("cnot", [] { return gates::cnot().eigen(); });
    g.def("swap", [] { return gates::swap().eigen(); });

    m.def(
        "euler_decompose",
        [](const Eigen::MatrixXcd &u) {
            const EulerAngles a = euler_decompose(to_matrix(u));
            return py::make_tuple(a.alpha, a.theta, a.beta, a.global_phase);
        },
        py::arg("u"), "Returns (alpha, theta, beta, global_phase).");
    m.def(
        "u_from_euler",
        [](double alpha, double theta, double beta, double global_phase) {
            return u_from_euler({alpha, theta, beta, global_phase}).eigen();
        },
        py::arg("alpha"), py::arg("theta"), py::arg("beta"), py::arg("global_phase") = 0.0);

    m.def(
        "synthesize_1q",
        [](const QubitParams &p, const Eigen::MatrixXcd &u) {
            return sequence_dict(synthesize_1q(p, to_matrix(u)));
        },
        py::arg("qubit"), py::arg("u"));
    m.def(
        "simulate_sequence",
        [](const QubitParams &p, const py::dict &seq) {
            return simulate_sequence(p, sequence_from(seq)).eigen();
        },
        py::arg("qubit"), py::arg("sequence"));

    m.def(
        "solve_iswap_conditions",
        [](const CouplingParams &cp, double dt) {
            const ISwapConditions c = solve_iswap_conditions(cp, dt);
            py::dict d;
            d["josephson_required"] = c.josephson_required;
            d["josephson_angle"] = c.josephson_angle;
            d["josephson_stated"] = c.josephson_stated;
            d["stated_fidelity"] = c.stated_fidelity;
            d["verified_fidelity"] = c.verified_fidelity;
            d["coupling_multiple"] = c.coupling_multiple;
            d["m"] = c.m;
            d["n"] = c.n;
            d["slots"] = c.slots;
            return d;
        },
        py::arg("coupling"), py::arg("dt"));

    m.def(
        "compile_circuit",
        [](const std::string &circuit_json, const std::string &config_json) {
            const io::DeviceConfig cfg = config_from(config_json);
            const Circuit c = io::parse_circuit(circuit_json);
            const Device d = Device::uniform(cfg.qubit, cfg.coupling, std::max(cfg.width, c.width));
            return io::schedule_json(compile_circuit(c, d));
        },
        py::arg("circuit_json"), py::arg("config_json"),
        "Compiles a circuit document into a schedule document.");
    m.def(
        "simulate_schedule",
        [](const std::string &schedule_json, const std::string &config_json) {
            const io::DeviceConfig cfg = config_from(config_json);
            const Schedule s = io::parse_schedule(schedule_json);
            const Device d = Device::uniform(cfg.qubit, cfg.coupling, std::max(cfg.width, s.width));
            return simulate_schedule(s, d).eigen();
        },
        py::arg("schedule_json"), py::arg("config_json"));
    m.def(
        "ideal_unitary",
        [](const std::string &circuit_json) {
            return ideal_unitary(io::parse_circuit(circuit_json)).eigen();
        },
        py::arg("circuit_json"));
    m.def(
        "preset_config_json",
        [](int width, bool coupling) {
            std::optional<CouplingParams> cp;
            if (coupling) {
                cp = preset_coupling();
            }
            return io::device_config_json(preset_qubit(), cp, width);
        },
        py::arg("width") = 2, py::arg("coupling") = true);

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
