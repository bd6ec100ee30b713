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

#include <numbers>

#include "oracle.hpp"
#include "scb/error.hpp"
#include "scb/gates.hpp"
#include "scb/two_qubit.hpp"

using namespace scb;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex I{0.0, 1.0};

double dt() { return preset_qubit().dt; }
double unit() { return constants::hbar / dt(); }

bool preserves_exchange_block(const ComplexMatrix &u, double tol) {
    // |00> and |11> never mix with |01>, |10>.
    for (std::size_t r : {0u, 3u}) {
        for (std::size_t c : {1u, 2u}) {
            if (std::abs(u(r, c)) > tol || std::abs(u(c, r)) > tol) {
                return false;
            }
        }
    }
    return true;
}
} // namespace

TEST_CASE("iSWAP matrix", "[two_qubit]") {
    const auto u = iswap_matrix();
    CHECK(u(2, 1) == I); // |01> -> i|10>
    CHECK(u(1, 1) == Complex(0.0));
    CHECK(u(0, 0) == Complex(1.0)); // |00> -> |00>
    CHECK(is_unitary(u, 1e-15));
}

TEST_CASE("u2_closed_form examples", "[two_qubit]") {
    CHECK(max_abs_diff(u2_closed_form(0.0, 2.0 * kPi * unit(), dt()),
                       ComplexMatrix::identity(4)) < 1e-15);
    CHECK(max_abs_diff(u2_closed_form(kPi * unit(), 2.0 * kPi * unit(), dt()), iswap_matrix()) <
          1e-15);
    // The stated E_Jc = hbar pi / (2 dt): half-way exchange.
    const auto partial = u2_closed_form(0.5 * kPi * unit(), 2.0 * kPi * unit(), dt());
    CHECK_THAT(partial(1, 1).real(), WithinAbs(std::cos(kPi / 4), 1e-15));
    CHECK_THAT(partial(2, 1).imag(), WithinAbs(std::sin(kPi / 4), 1e-15));
    CHECK(fidelity_up_to_phase(partial, iswap_matrix()) < 1.0 - 1e-9);
}

TEST_CASE("closed form agrees with the exponential on a grid", "[two_qubit]") {
    for (int i = 1; i <= 20; ++i) {
        for (int j = 1; j <= 20; ++j) {
            const double jc = 2.0 * kPi * i / 20.0;
            const double cc = 2.0 * kPi * j / 20.0;
            const auto h = degenerate_h2(jc * unit(), cc * unit());
            const auto expm = expm_evolution(h, dt(), constants::hbar);
            const auto closed = u2_closed_form(jc * unit(), cc * unit(), dt());
            CAPTURE(i, j);
            CHECK(testing::phase_aligned_diff(expm, closed) <= 1e-10);
            CHECK(max_abs_diff(expm, testing::taylor_expm(h, dt(), constants::hbar)) <= 1e-10);
            CHECK(unitarity_defect(closed) <= 1e-14);
            CHECK(preserves_exchange_block(closed, 0.0));
        }
    }
}

TEST_CASE("closed form has no leftover global phase", "[two_qubit]") {
    const auto h = degenerate_h2(1.3 * unit(), 4.1 * unit());
    const auto expm = expm_evolution(h, dt(), constants::hbar);
    CHECK(max_abs_diff(expm, u2_closed_form(1.3 * unit(), 4.1 * unit(), dt())) < 1e-12);
}

TEST_CASE("solve_iswap_conditions on the preset", "[two_qubit]") {
    const CouplingParams cp = preset_coupling();
    const ISwapConditions c = solve_iswap_conditions(cp, dt());
    CHECK_THAT(c.josephson_angle, WithinAbs(kPi, 1e-12));
    CHECK_THAT(c.josephson_required, WithinRel(kPi * unit(), 1e-12));
    CHECK_THAT(c.josephson_stated, WithinRel(0.5 * kPi * unit(), 1e-15));
    CHECK(c.verified_fidelity >= 1.0 - 1e-9);
    CHECK_THAT(c.stated_fidelity, WithinAbs((2.0 + std::sqrt(2.0)) / 4.0, 1e-12));
    CHECK(c.coupling_multiple == 1);
    CHECK(c.m == 0);
    CHECK(c.n == 2);
    CHECK(c.slots == 1);
    CHECK(c.coupling_dominates);
    REQUIRE(c.admissible_coupling.size() == 8);
    CHECK_THAT(c.admissible_coupling[2], WithinRel(6.0 * kPi * unit(), 1e-15));

    // Odd multiples of pi for E_cc never admit an iSWAP.
    int odd = 0;
    for (const auto &rec : c.search_log) {
        const double k = rec.coupling_angle / kPi;
        if (std::fmod(std::round(k), 2.0) == 1.0) {
            ++odd;
            CHECK_FALSE(rec.admissible);
        } else {
            CHECK(rec.admissible);
            CHECK_THAT(rec.josephson_angle, WithinAbs(kPi, 1e-12));
        }
    }
    CHECK(odd == 8);
}

TEST_CASE("iSWAP conditions are periodic in E_cc", "[two_qubit]") {
    const CouplingParams cp = preset_coupling();
    const auto base = solve_iswap_conditions(cp, dt());
    for (int k = 2; k <= 4; ++k) {
        const auto shifted = CouplingParams::from_energy(
            cp.coupling_energy + (k - 1) * 2.0 * kPi * unit(), cp.josephson_max);
        const auto c = solve_iswap_conditions(shifted, dt());
        CHECK(c.josephson_required == base.josephson_required);
        CHECK(c.coupling_multiple == k);
        CHECK(c.verified_fidelity >= 1.0 - 1e-9);
        CHECK(c.m == 0);
        CHECK(c.n == 2 * k);
    }
}

TEST_CASE("unreachable couplers", "[two_qubit]") {
    const CouplingParams cp = preset_coupling();
    // E_cc dt / hbar = pi puts -1 in the corners.
    const auto odd = CouplingParams::from_energy(kPi * unit(), cp.josephson_max);
    CHECK_THROWS_MATCHES(solve_iswap_conditions(odd, dt()), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("not a positive multiple")));

    const auto weak = CouplingParams::from_energy(cp.coupling_energy, 0.9 * kPi * unit());
    try {
        (void)solve_iswap_conditions(weak, dt());
        FAIL("no throw");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::Unreachable);
        CHECK(std::string(e.what()).find("minimum E_Jc_max") != std::string::npos);
    }
}

TEST_CASE("couple_pulse realizes iSWAP", "[two_qubit]") {
    const QubitParams q = preset_qubit();
    const CouplingParams cp = preset_coupling();
    const auto cond = solve_iswap_conditions(cp, dt());
    const Pulse p = couple_pulse(cp, cond, 1, 0);
    CHECK(p.kind == PulseKind::Couple);
    CHECK(p.target.qubit == 0);
    CHECK(p.target.partner == 1);
    const auto u = simulate_couple_pulse(q, q, cp, p);
    CHECK(fidelity_up_to_phase(u, iswap_matrix()) >= 1.0 - 1e-9);

    Pulse off = p;
    off.settings.flux = 0.5;
    const auto d = simulate_couple_pulse(q, q, cp, off);
    CHECK(std::abs(d(1, 2)) < 1e-12);
    CHECK(std::abs(d(2, 1)) < 1e-12);
    CHECK(fidelity_up_to_phase(d, iswap_matrix()) <= 0.5 + 1e-12);

    CHECK_THROWS_AS(couple_pulse(cp, cond, 1, 1), Error);
    CHECK_THROWS_AS(simulate_couple_pulse(q, q, cp, make_idle_pulse(q, 0)), Error);
}
