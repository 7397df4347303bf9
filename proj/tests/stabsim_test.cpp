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
#include <string>

#include "qecc1wqc/graph.hpp"
#include "qecc1wqc/statevector.hpp"
#include "qecc1wqc/tableau.hpp"

using namespace qecc1wqc;

namespace {

std::set<std::string> tableau_group(const Tableau &t) {
    std::set<std::string> out;
    std::size_t n = t.num_qubits();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); mask++) {
        PauliString p(n);
        for (std::size_t k = 0; k < n; k++) {
            if (mask >> k & 1) {
                p *= t.stabilizer(k);
            }
        }
        out.insert(p.str());
    }
    return out;
}

std::set<std::string> dense_group(const StateVector &s) {
    std::set<std::string> out;
    std::size_t n = s.num_qubits();
    for (std::size_t code = 0; code < (std::size_t{1} << (2 * n)); code++) {
        PauliString p(n);
        for (std::size_t q = 0; q < n; q++) {
            p.set(q, "IXYZ"[(code >> (2 * q)) & 3]);
        }
        double e = s.expectation(p).real();
        if (e > 1 - 1e-9) {
            out.insert(p.str());
        } else if (e < -1 + 1e-9) {
            p.set_phase(2);
            out.insert(p.str());
        }
    }
    return out;
}

Gate random_clifford(std::size_t n, std::mt19937_64 &rng) {
    uint32_t a = (uint32_t)(rng() % n);
    switch (rng() % (n > 1 ? 6 : 5)) {
        case 0:
            return Gate::h(a);
        case 1:
            return Gate::s(a);
        case 2:
            return Gate::x(a);
        case 3:
            return Gate::z(a);
        case 4:
            return Gate::rz(a, 3 * std::numbers::pi / 2);
        default: {
            uint32_t b = (uint32_t)((a + 1 + rng() % (n - 1)) % n);
            return Gate::cz(a, b);
        }
    }
}

Graph pentagon() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

}  // namespace

TEST_CASE("tableau initial states") {
    Tableau t = Tableau::from_symbols("0");
    CHECK(t.stabilizer(0).str() == "+Z");
    t = Tableau::from_symbols("++");
    CHECK(t.stabilizer(0).str() == "+XI");
    CHECK(t.stabilizer(1).str() == "+IX");
    t = Tableau::from_symbols("+++++");
    for (std::size_t k = 0; k < 5; k++) {
        CHECK(t.stabilizer(k) == PauliString::single(5, k, 'X'));
    }
}

TEST_CASE("tableau gate updates") {
    Tableau t = Tableau::from_symbols("++");
    t.apply(Gate::cz(0, 1));
    CHECK(tableau_group(t) == std::set<std::string>{"+II", "+XZ", "+ZX", "+YY"});

    Tableau p = graph_to_tableau(pentagon());
    for (std::size_t a = 0; a < 5; a++) {
        PauliString k = PauliString::single(5, a, 'X');
        k.set((a + 4) % 5, 'Z');
        k.set((a + 1) % 5, 'Z');
        CHECK(p.expectation(k) == 1);
    }
    CHECK_THROWS_AS(t.apply(Gate::rz(0, 0.1)), std::invalid_argument);
}

TEST_CASE("tableau agrees with the dense simulator on random Clifford circuits") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t n = 1 + rng() % 5;
        std::size_t len = rng() % 31;
        Tableau t(n);
        StateVector s(n);
        for (std::size_t k = 0; k < len; k++) {
            Gate g = random_clifford(n, rng);
            t.apply(g);
            s.apply(g);
        }
        REQUIRE(tableau_group(t) == dense_group(s));
    }
}

TEST_CASE("tableau measurements") {
    SUBCASE("X measurement of |+> is deterministic") {
        Tableau t = Tableau::from_symbols("+");
        StabMeasurement m = t.measure_forced(0, MeasureBasis::X, 0);
        CHECK(m.deterministic);
        CHECK(m.outcome == 0);
        CHECK_THROWS_AS(t.measure_forced(0, MeasureBasis::X, 1), std::domain_error);
        CHECK(t.stabilizer(0).str() == "+X");
    }
    SUBCASE("Bell pair collapses consistently") {
        std::mt19937_64 rng(5);
        for (int k = 0; k < 20; k++) {
            Tableau t = Tableau::from_symbols("+0");
            t.apply(Gate::h(1)).apply(Gate::cz(0, 1)).apply(Gate::h(1));
            StabMeasurement a = t.measure(0, MeasureBasis::Z, std::nullopt, &rng);
            CHECK(!a.deterministic);
            StabMeasurement b = t.measure(1, MeasureBasis::Z, std::nullopt, &rng);
            CHECK(b.deterministic);
            CHECK(a.outcome == b.outcome);
        }
    }
    SUBCASE("X-measuring the interior of a 4-path leaves a graph state on the ends") {
        Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
        for (uint8_t m1 = 0; m1 < 2; m1++) {
            for (uint8_t m2 = 0; m2 < 2; m2++) {
                Tableau t = graph_to_tableau(path);
                StateVector s = StateVector::from_symbols("++++");
                s.apply_gates(path.cz_circuit());
                CHECK(!t.measure_forced(1, MeasureBasis::X, m1).deterministic);
                CHECK(!t.measure_forced(2, MeasureBasis::X, m2).deterministic);
                s.measure_forced(1, MeasureBasis::X, m1);
                s.measure_forced(2, MeasureBasis::X, m2);
                CHECK(tableau_group(t) == dense_group(s));
                // Ends carry CZ|++> up to Z_0^{m2} Z_3^{m1}.
                std::string sym = "++++";
                sym[1] = m1 ? '-' : '+';
                sym[2] = m2 ? '-' : '+';
                Tableau want = Tableau::from_symbols(sym);
                want.apply(Gate::cz(0, 3));
                if (m2) {
                    want.apply(Gate::z(0));
                }
                if (m1) {
                    want.apply(Gate::z(3));
                }
                CHECK(stab_equal(t, want));
            }
        }
    }
    SUBCASE("Z statistics of graph states match the dense simulator") {
        std::mt19937_64 rng(99);
        Graph g = pentagon();
        const int trials = 4000;
        int parity_ones = 0;
        for (int k = 0; k < trials; k++) {
            Tableau t = graph_to_tableau(g);
            int par = 0;
            for (uint32_t q = 0; q < 5; q++) {
                par ^= t.measure(q, MeasureBasis::Z, std::nullopt, &rng).outcome;
            }
            parity_ones += par;
        }
        StateVector s = StateVector::from_symbols("+++++");
        s.apply_gates(g.cz_circuit());
        double p = (1 - s.expectation(PauliString::from_text("+ZZZZZ")).real()) / 2;
        double sigma = std::sqrt(trials * 0.25);
        CHECK(std::abs(parity_ones - p * trials) < 5 * sigma);
    }
}

TEST_CASE("canonical form and equality") {
    Tableau a = Tableau::from_symbols("0");
    Tableau b = Tableau::from_symbols("1");
    CHECK(stab_equal(a, a));
    CHECK(!stab_equal(a, b));
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; trial++) {
        Tableau t(4);
        for (int k = 0; k < 25; k++) {
            t.apply(random_clifford(4, rng));
        }
        Tableau u = Tableau::from_stabilizers(t.canonical_form());
        CHECK(stab_equal(t, u));
        CHECK(tableau_group(t) == tableau_group(u));
    }
    CHECK_THROWS_AS(Tableau::from_stabilizers({PauliString::from_text("+XI"), PauliString::from_text("+ZI")}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Tableau::from_stabilizers({PauliString::from_text("+XI"), PauliString::from_text("+XI")}),
                    std::invalid_argument);
}

TEST_CASE("from_stabilizers builds a valid symplectic tableau") {
    Tableau t = Tableau::from_stabilizers(graph_to_tableau(pentagon()).stabilizers());
    for (std::size_t i = 0; i < 5; i++) {
        for (std::size_t j = 0; j < 5; j++) {
            CHECK(t.destabilizer(i).commutes_with(t.stabilizer(j)) == (i != j));
            CHECK(t.destabilizer(i).commutes_with(t.destabilizer(j)));
        }
    }
}

TEST_CASE("disentanglement and reset") {
    Tableau t = Tableau::from_symbols("+0+");
    t.apply(Gate::cz(0, 2));
    CHECK(t.is_disentangled(1));
    CHECK(!t.is_disentangled(0));
    CHECK_THROWS_AS(t.reset(0), std::domain_error);
    t.apply(Gate::h(1));
    t.reset(1);
    CHECK(t.expectation(PauliString::from_text("+IZI")) == 1);
    t.apply(Gate::x(1));
    t.reset(1);
    CHECK(t.expectation(PauliString::from_text("+IZI")) == 1);
}

TEST_CASE("graph operations") {
    Graph path(2, {{0, 1}});
    Graph lc = path;
    lc.local_complement(1);
    CHECK(lc == path);

    Graph g = pentagon();
    Graph twice = g;
    twice.local_complement(2).local_complement(2);
    CHECK(twice == g);
    CHECK_THROWS_AS(g.pivot(0, 2), std::invalid_argument);

    Graph k55(10);
    for (uint32_t a = 0; a < 5; a++) {
        for (uint32_t b = 5; b < 10; b++) {
            k55.add_edge(a, b);
        }
    }
    Graph pv = k55;
    pv.pivot(0, 5);
    Graph want(10);
    want.add_edge(0, 5);
    for (uint32_t k = 1; k < 5; k++) {
        want.add_edge(0, k);
        want.add_edge(5, 5 + k);
    }
    CHECK(pv == want);
    Graph pv2 = k55;
    pv2.pivot(5, 0);
    CHECK(pv2 == pv);

    CHECK(Graph::from_json(pv.to_json()) == pv);
    CHECK_THROWS(Graph(3).add_edge(1, 1));
}

TEST_CASE("local complementation is realized by local Cliffords") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; trial++) {
        std::size_t n = 2 + rng() % 6;
        Graph g(n);
        for (uint32_t a = 0; a < n; a++) {
            for (uint32_t b = a + 1; b < n; b++) {
                if (rng() & 1) {
                    g.add_edge(a, b);
                }
            }
        }
        uint32_t v = (uint32_t)(rng() % n);
        Tableau t = graph_to_tableau(g);
        t.apply_gates(local_complement_gates(g, v));
        Graph h = g;
        h.local_complement(v);
        CHECK(stab_equal(t, graph_to_tableau(h)));
    }
}

TEST_CASE("tableau_to_graph") {
    SUBCASE("graph states round trip with an empty layer") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 30; trial++) {
            std::size_t n = 1 + rng() % 8;
            Graph g(n);
            for (uint32_t a = 0; a < n; a++) {
                for (uint32_t b = a + 1; b < n; b++) {
                    if (rng() % 3 == 0) {
                        g.add_edge(a, b);
                    }
                }
            }
            GraphForm f = tableau_to_graph(graph_to_tableau(g));
            CHECK(f.graph == g);
            CHECK(f.layer.size() == 0);
        }
    }
    SUBCASE("empty graph from |+>") {
        GraphForm f = tableau_to_graph(Tableau::from_symbols("+++"));
        CHECK(f.graph.num_edges() == 0);
    }
    SUBCASE("fig. 3 style graph has degree seven") {
        Graph g(10);
        for (uint32_t a = 0; a < 5; a++) {
            g.add_edge(a, (a + 1) % 5);
            g.add_edge(5 + a, 5 + (a + 1) % 5);
            for (uint32_t b = 5; b < 10; b++) {
                g.add_edge(a, b);
            }
        }
        GraphForm f = tableau_to_graph(graph_to_tableau(g));
        for (uint32_t v = 0; v < 10; v++) {
            CHECK(f.graph.degree(v) == 7);
        }
    }
    SUBCASE("random stabilizer states equal layer applied to the graph state") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 100; trial++) {
            std::size_t n = 1 + rng() % 7;
            Tableau t(n);
            for (int k = 0; k < 40; k++) {
                t.apply(random_clifford(n, rng));
            }
            GraphForm f = tableau_to_graph(t);
            for (const Gate &g : f.layer.gates()) {
                CHECK(!g.is_two_qubit());
            }
            Tableau rebuilt = graph_to_tableau(f.graph);
            rebuilt.apply_gates(f.layer);
            CHECK(stab_equal(rebuilt, t));
        }
    }
    SUBCASE("pivot of K5,5 is local-Clifford equivalent") {
        Graph k55(10);
        for (uint32_t a = 0; a < 5; a++) {
            for (uint32_t b = 5; b < 10; b++) {
                k55.add_edge(a, b);
            }
        }
        Graph pv = k55;
        pv.pivot(0, 5);
        Tableau t = graph_to_tableau(k55);
        Graph cur = k55;
        for (uint32_t v : {0u, 5u, 0u}) {
            t.apply_gates(local_complement_gates(cur, v));
            cur.local_complement(v);
        }
        CHECK(stab_equal(t, graph_to_tableau(pv)));
    }
}
