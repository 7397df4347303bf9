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

#include <random>
#include <set>

#include "qecc1wqc/code5.hpp"
#include "qecc1wqc/graph.hpp"
#include "qecc1wqc/tableau.hpp"

using namespace qecc1wqc;

namespace {

std::pair<amp_t, amp_t> random_qubit(std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    amp_t a{d(rng), d(rng)}, b{d(rng), d(rng)};
    double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
}

StateVector qubit(amp_t a, amp_t b) {
    return StateVector::from_amplitudes(1, {a, b});
}

StateVector pentagon_on(const char *symbols) {
    StateVector s = StateVector::from_symbols(symbols);
    s.apply_gates(build_E2());
    return s;
}

}  // namespace

TEST_CASE("logical basis states") {
    StateVector z = logical_zero();
    int nonzero = 0;
    for (std::size_t i = 0; i < 32; i++) {
        if (std::abs(z.amplitude(i)) > 1e-12) {
            nonzero++;
            CHECK(std::abs(std::abs(z.amplitude(i)) - 0.25) < 1e-12);
        }
    }
    CHECK(nonzero == 16);
    CHECK(z.amplitude(0b10010).real() == doctest::Approx(0.25));
    CHECK(z.amplitude(0b11011).real() == doctest::Approx(-0.25));

    StateVector o = logical_one();
    CHECK(std::abs(z.inner(o)) < 1e-12);
    CHECK(equal_up_to_phase(logical_minus(), pentagon_on("+++++"), 1e-10));
    CHECK(equal_up_to_phase(logical_plus(), pentagon_on("-----"), 1e-10));
    StateVector zp = pentagon_on("+++++");
    zp.apply(logical_z());
    CHECK(equal_up_to_phase(logical_plus(), zp, 1e-10));
}

TEST_CASE("logical zero from the complete graph") {
    CHECK(fidelity(logical_zero_from_K5(), logical_zero()) == doctest::Approx(1).epsilon(1e-10));

    Graph k5(5);
    for (uint32_t a = 0; a < 5; a++) {
        for (uint32_t b = a + 1; b < 5; b++) {
            k5.add_edge(a, b);
        }
    }
    GraphForm f = tableau_to_graph(graph_to_tableau(k5));
    CHECK(f.graph.num_edges() == 10);

    StateVector twice = logical_zero_from_K5();
    twice.apply_gates(k5_to_logical_zero());
    StateVector k5state = StateVector::from_symbols("+++++");
    k5state.apply_gates(k5.cz_circuit());
    CHECK(fidelity(twice, k5state) < 1 - 1e-6);
}

TEST_CASE("code stabilizers fix the code space and commute with logical operators") {
    std::vector<PauliString> gens = code_stabilizers();
    REQUIRE(gens.size() == 4);
    for (const PauliString &g : gens) {
        CHECK(g.weight() == 4);
        CHECK(g.commutes_with(logical_x()));
        CHECK(g.commutes_with(logical_z()));
        for (const StateVector &s : {logical_zero(), logical_one()}) {
            CHECK(s.expectation(g).real() == doctest::Approx(1));
        }
    }
    CHECK(!logical_x().commutes_with(logical_z()));
    StateVector x0 = logical_zero();
    x0.apply(logical_x());
    CHECK(equal_up_to_phase(x0, logical_one()));
    StateVector z1 = logical_one();
    z1.apply(logical_z());
    CHECK(z1.inner(logical_one()).real() == doctest::Approx(-1));
}

TEST_CASE("encoder contract") {
    CHECK(two_qubit_gate_count(build_E1()) == 4);
    CHECK(two_qubit_gate_count(build_E2()) == 5);

    StateVector e1 = StateVector::from_symbols("00000");
    e1.apply_gates(build_E1());
    std::vector<amp_t> want(32);
    StateVector p = StateVector::from_symbols("+++++"), m = StateVector::from_symbols("-----");
    for (std::size_t i = 0; i < 32; i++) {
        want[i] = p.amplitude(i) + m.amplitude(i);
    }
    CHECK(fidelity(e1, StateVector::from_amplitudes(5, want)) == doctest::Approx(1).epsilon(1e-10));

    CHECK(fidelity(encode(1, 0), logical_zero()) == doctest::Approx(1).epsilon(1e-10));
    const double r = 1 / std::sqrt(2.0);
    CHECK(fidelity(encode(r, r), logical_plus()) == doctest::Approx(1).epsilon(1e-10));

    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; k++) {
        auto [a, b] = random_qubit(rng);
        CHECK(fidelity(encode(a, b), logical_state(a, b)) == doctest::Approx(1).epsilon(1e-10));

        // ((alpha - beta)|+>^5 + (alpha + beta)|->^5)/sqrt2 after E1 alone.
        StateVector in = StateVector::from_amplitudes(5, [&] {
            std::vector<amp_t> v(32);
            v[0] = a;
            v[16] = b;
            return v;
        }());
        StateVector got = in;
        got.apply_gates(build_E1());
        std::vector<amp_t> w(32);
        for (std::size_t i = 0; i < 32; i++) {
            w[i] = (a - b) * p.amplitude(i) + (a + b) * m.amplitude(i);
        }
        CHECK(fidelity(got, StateVector::from_amplitudes(5, w)) == doctest::Approx(1).epsilon(1e-10));
    }
}

TEST_CASE("encoder followed by decoder is the identity") {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> d;
    for (int k = 0; k < 10; k++) {
        std::vector<amp_t> v(32);
        for (amp_t &x : v) {
            x = {d(rng), d(rng)};
        }
        StateVector s = StateVector::from_amplitudes(5, v);
        StateVector t = s;
        t.apply_gates(build_encoder()).apply_gates(build_decoder());
        CHECK(fidelity(s, t) == doctest::Approx(1).epsilon(1e-10));
    }
}

TEST_CASE("single-error sweep matches the syndrome table") {
    const auto &table = syndrome_table();
    REQUIRE(table.size() == 16);
    std::set<uint8_t> seen;
    for (const SyndromeRow &row : table) {
        seen.insert(row.syndrome.bits);
    }
    CHECK(seen.size() == 16);

    std::mt19937_64 rng(3);
    for (const SyndromeRow &row : table) {
        for (int trial = 0; trial < 5; trial++) {
            auto [a, b] = random_qubit(rng);
            StateVector s = encode(a, b);
            s.apply(row.error_pauli);
            DecodeResult r = decode_and_syndrome(s);
            CHECK_MESSAGE(r.syndrome == row.syndrome, row.error << " gave " << r.syndrome.str());

            StateVector byproduct = qubit(a, b);
            if (row.outcome == "XZ") {
                byproduct.apply(Gate::z(0)).apply(Gate::x(0));
            } else if (row.outcome != "I") {
                byproduct.apply(PauliString::single(1, 0, row.outcome[0]));
            }
            CHECK_MESSAGE(fidelity(r.qubit, byproduct) == doctest::Approx(1).epsilon(1e-9), row.error);

            StateVector fixed = r.qubit;
            fixed.apply(correction_for(r.syndrome));
            CHECK_MESSAGE(fidelity(fixed, qubit(a, b)) == doctest::Approx(1).epsilon(1e-9), row.error);
        }
    }
}

TEST_CASE("correction lookup") {
    CHECK(correction_for(Syndrome::from_string("0000")).str() == "+I");
    CHECK(correction_for(Syndrome::from_string("1101")) ==
          compose_pauli(PauliString::from_text("+X"), PauliString::from_text("+Z")));
    CHECK(correction_for(Syndrome::from_string("1111")).str() == "+Z");
    CHECK(correction_for(Syndrome::from_string("1001")).str() == "+X");
    CHECK_THROWS(Syndrome::from_string("10"));
    CHECK_THROWS(named_error("Q3"));
}
