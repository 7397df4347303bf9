// Copyright 2026 The qecc1wqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qecc1wqc/protocols.hpp"

using namespace qecc1wqc;

namespace {

QubitState random_qubit(std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    return QubitState{amp_t{d(rng), d(rng)}, amp_t{d(rng), d(rng)}}.normalized();
}

// (X^L)^m H^L Rz^L(xi) |psi^L>.
StateVector teleport_target(QubitState psi, double xi, uint8_t m) {
    amp_t a = psi.alpha;
    amp_t b = psi.beta * std::polar(1.0, xi);
    amp_t c0 = (a + b) / std::sqrt(2.0);
    amp_t c1 = (a - b) / std::sqrt(2.0);
    if (m) {
        std::swap(c0, c1);
    }
    return logical_state(c0, c1);
}

}  // namespace

TEST_CASE("two-register logical cluster state") {
    LCS2 l = build_LCS2();
    CHECK(two_qubit_gate_count(l.circuit) == 35);
    for (uint32_t v = 0; v < 10; v++) {
        CHECK(l.graph.degree(v) == 7);
    }
    StateVector printed = lcs2_printed_rhs(+1);
    CHECK(fidelity(printed, l.state) < 1e-9);
    PauliString zb = logical_z_on(10, 1);
    printed.apply(zb);
    CHECK(fidelity(printed, l.state) > 1 - 1e-9);
    CHECK(fidelity(lcs2_printed_rhs(-1), l.state) > 1 - 1e-9);

    // CZ gates commute: any ordering gives the same state.
    std::vector<Gate> gates = l.circuit.gates();
    std::mt19937_64 rng(5);
    std::shuffle(gates.begin() + 10, gates.end(), rng);
    StateVector s(10);
    for (const Gate &g : gates) {
        s.apply(g);
    }
    CHECK(equal_up_to_phase(s, l.state));
}

TEST_CASE("sequential logical cluster state uses 23 two-qubit gates") {
    Circuit c = build_lcs2_sequential();
    CHECK(two_qubit_gate_count(c) == 23);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; trial++) {
        QubitState psi = random_qubit(rng);
        StateVector s = tensor(psi.state(), StateVector(9));
        s.apply_gates(c);
        // CZ^L |psi^L>|+L> = alpha|0L>|+L> + beta|1L>|-L>
        StateVector zero = tensor(logical_zero(), logical_plus());
        StateVector one = tensor(logical_one(), logical_minus());
        std::vector<amp_t> amps(zero.amplitudes().size());
        for (std::size_t i = 0; i < amps.size(); i++) {
            amps[i] = psi.alpha * zero.amplitude(i) + psi.beta * one.amplitude(i);
        }
        CHECK(fidelity(s, StateVector::from_amplitudes(10, amps)) > 1 - 1e-9);
    }
}

TEST_CASE("logical-physical state") {
    StateVector plus = build_logical_physical(QubitState::from_symbol('+'));
    StateVector zero = build_logical_physical(QubitState::from_symbol('0'));
    CHECK(fidelity(zero, tensor(logical_zero(), StateVector::from_symbols("+"))) > 1 - 1e-9);
    // alpha|0L>|+> + beta|1L>|->: for psi = + this is a CZ-linked pair, so Z^L X_5 stabilizes it.
    PauliString zx = PauliString::from_text("+ZZZZZX");
    CHECK(std::abs(plus.expectation(zx) - amp_t(1)) < 1e-9);
    PauliString xz = logical_x_on(6, 0);
    xz.set_bits(5, false, true);
    CHECK(std::abs(plus.expectation(xz) - amp_t(1)) < 1e-9);
}

TEST_CASE("encoded teleportation matches the logical rotation for both outcomes") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int trial = 0; trial < 50; trial++) {
        QubitState psi = random_qubit(rng);
        double xi = angle(rng);
        for (uint8_t m = 0; m < 2; m++) {
            TeleportReport r = encoded_teleport(psi, xi, std::nullopt, m);
            CHECK(r.m == m);
            CHECK(r.syndrome.bits == 0);
            CHECK(r.fidelity > 1 - 1e-9);
            CHECK(r.intermediate_fidelity > 1 - 1e-9);
            CHECK(r.measured_angle == doctest::Approx(-xi));
        }
    }
    TeleportReport r = encoded_teleport(QubitState::from_symbol('0'), 0.3);
    CHECK(r.hop_two_qubit_gates == 23);
    CHECK(r.full_two_qubit_gates == 32);
    CHECK(two_qubit_gate_count(build_teleport_unitary()) == 32);
    CHECK(two_qubit_gate_count(build_hop_unitary()) == 23);
}

TEST_CASE("target oracle for the teleportation output") {
    QubitState psi = QubitState::from_symbol('0');
    TeleportReport r = encoded_teleport(psi, 0.0, std::nullopt, 0);
    CHECK(fidelity(teleport_target(psi, 0.0, 0), logical_plus()) > 1 - 1e-9);
    CHECK(r.fidelity > 1 - 1e-9);
}

TEST_CASE("single-qubit errors before decoding are corrected") {
    std::mt19937_64 rng(17);
    for (const SyndromeRow &row : syndrome_table()) {
        if (row.error == "None") {
            continue;
        }
        QubitState psi = random_qubit(rng);
        double xi = 0.7;
        for (uint8_t m = 0; m < 2; m++) {
            TeleportReport r = encoded_teleport(psi, xi, InjectedError{row.error_pauli, InjectionStage::PreDecode}, m);
            CAPTURE(row.error);
            CHECK(r.syndrome.bits == row.syndrome.bits);
            CHECK(r.fidelity > 1 - 1e-9);
        }
    }
}

TEST_CASE("X error on the input qubit before the link spreads to the new register") {
    PauliString x0 = PauliString::from_text("+XIIII");
    TeleportReport r = encoded_teleport(QubitState::from_symbol('0'), 0.4,
                                        InjectedError{x0, InjectionStage::PostEncode}, 0);
    CHECK(r.fidelity < 0.99);
    CHECK(stage_from_name(stage_name(InjectionStage::PostEncode)) == InjectionStage::PostEncode);
    CHECK_THROWS_AS(stage_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("push-through identity and its control") {
    PushThroughReport r = push_through_check(10, 2);
    CHECK(r.passed);
    CHECK(r.min_fidelity > 1 - 1e-9);
    CHECK(r.fidelities.size() == 11);
    CHECK(r.control_failed);
}

TEST_CASE("encoded horseshoe in tableau mode") {
    for (char psi : std::string("01+-")) {
        for (char phi : std::string("0+")) {
            HorseshoeReport r = horseshoe_check(psi, phi);
            CAPTURE(psi);
            CAPTURE(phi);
            CHECK(r.sequential_two_qubit_gates == 51);
            CHECK(r.bridged_two_qubit_gates == 47);
            CHECK(r.routes_agree);
            CHECK(r.matches_target);
            CHECK(r.slice_matches);
        }
    }
    HorseshoeReport r = horseshoe_check('+', '+');
    REQUIRE(r.matches_graph.has_value());
    CHECK(*r.matches_graph);
    std::vector<std::size_t> expected{7, 7, 7, 7, 7, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 7, 7, 7, 7, 7};
    CHECK(r.graph_degrees == expected);
}

TEST_CASE("encoded horseshoe in dense mode") {
    std::mt19937_64 rng(23);
    HorseshoeReport r = horseshoe_check_dense(random_qubit(rng), random_qubit(rng));
    CHECK(r.routes_agree);
    CHECK(r.matches_target);
    CHECK(r.slice_matches);
    HorseshoeReport f = horseshoe_check_dense({0.6, 0.8}, QubitState{1, amp_t(0, 1)}.normalized());
    CHECK(f.slice_matches);
    HorseshoeReport g = horseshoe_check_dense(QubitState::from_symbol('+'), QubitState::from_symbol('+'));
    REQUIRE(g.matches_graph.has_value());
    CHECK(*g.matches_graph);
}

TEST_CASE("GHZ-ancilla verification") {
    std::mt19937_64 rng(29);
    QubitState psi = random_qubit(rng);
    StateVector data = logical_state(psi.alpha, psi.beta);

    VerifyReport clean = ghz_verify_logical(data);
    CHECK(clean.rounds.size() == 4);
    CHECK_FALSE(clean.any_data_flag);
    CHECK_FALSE(clean.any_ancilla_rejected);

    for (uint32_t q = 0; q < 5; q++) {
        for (char p : std::string("XYZ")) {
            PauliString e(5);
            e.set_bits(q, p != 'Z', p != 'X');
            VerifyReport r = ghz_verify_logical(data, 4, VerifyFault::Data, e);
            CAPTURE(q);
            CAPTURE(p);
            CHECK(r.any_data_flag);
            CHECK_FALSE(r.any_ancilla_rejected);
        }
    }

    VerifyReport ax = ghz_verify_logical(data, 4, VerifyFault::AncillaX);
    CHECK(ax.rounds[0].ancilla_rejected);
    CHECK_FALSE(ax.rounds[0].data_flag);
    for (std::size_t r = 1; r < 4; r++) {
        CHECK_FALSE(ax.rounds[r].ancilla_rejected);
        CHECK_FALSE(ax.rounds[r].data_flag);
    }

    VerifyReport az = ghz_verify_logical(data, 4, VerifyFault::AncillaZ);
    CHECK_FALSE(az.any_ancilla_rejected);
    CHECK(az.rounds[0].data_flag);
    CHECK_FALSE(az.rounds[1].data_flag);

    CHECK_THROWS_AS(ghz_verify_logical(StateVector(4)), std::invalid_argument);
}

TEST_CASE("nine-gate entangler") {
    EntanglerReport r = nine_gate_entangler();
    CHECK(r.two_qubit_gates == 9);
    CHECK(r.bipartite_gates == 25);
    CHECK(r.pivot_matches);
    CHECK(r.layer_verified);
    CHECK(r.certificate().contains("local_clifford_layer"));
}
