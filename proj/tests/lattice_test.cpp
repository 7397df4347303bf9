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
#include <string>

#include "qecc1wqc/graph.hpp"
#include "qecc1wqc/lattice.hpp"
#include "qecc1wqc/protocols.hpp"
#include "qecc1wqc/statevector.hpp"

using namespace qecc1wqc;

namespace {

std::vector<CellSpec> row_cells(int n, char init) {
    std::vector<CellSpec> cells;
    for (int c = 0; c < n; c++) {
        cells.push_back({{0, c}, CellRole::Data, init, c});
    }
    return cells;
}

Graph grid_graph(int rows, int cols) {
    Graph g(static_cast<std::size_t>(rows * cols), {});
    for (int r = 0; r < rows; r++) {
        for (int c = 0; c < cols; c++) {
            uint32_t v = static_cast<uint32_t>(r * cols + c);
            if (c + 1 < cols) {
                g.add_edge(v, v + 1);
            }
            if (r + 1 < rows) {
                g.add_edge(v, v + static_cast<uint32_t>(cols));
            }
        }
    }
    return g;
}

StateVector random_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    return StateVector::from_amplitudes(1, {amp_t(d(rng), d(rng)), amp_t(d(rng), d(rng))});
}

// Drops `cell` from the last measurement step of a schedule and from the reset after it.
Schedule skip_last_measurement(Schedule s, CellRC cell) {
    for (std::size_t i = s.steps.size(); i-- > 0;) {
        Step &st = s.steps[i];
        if (st.kind == Step::Kind::MeasureX) {
            std::erase(st.measure, cell);
            Step &reset = s.steps.at(i + 1);
            std::erase_if(reset.prepare, [&](const auto &p) { return p.first == cell; });
            return s;
        }
    }
    return s;
}

}  // namespace

TEST_CASE("single active row becomes a path graph") {
    Lattice l(1, 5, row_cells(5, '+'));
    l.global_cz(Axis::Horizontal);
    CHECK(stab_equal(l.tableau(), graph_to_tableau(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}))));
    CHECK(l.counts().global_cz == 1);
}

TEST_CASE("an inactive cell blocks entanglement") {
    std::vector<CellSpec> cells = row_cells(3, '+');
    cells[1] = {{0, 1}, CellRole::Inactive, '0', std::nullopt};
    Lattice l(1, 3, cells);
    l.global_cz(Axis::Horizontal);
    CHECK(stab_equal(l.tableau(), Tableau::from_symbols("+0+")));
    CHECK(l.tableau().is_disentangled(0));
}

TEST_CASE("vertical axis leaves a row untouched") {
    Lattice l(1, 3, row_cells(3, '+'));
    l.global_cz(Axis::Vertical);
    CHECK(stab_equal(l.tableau(), Tableau::from_symbols("+++")));
}

TEST_CASE("3x3 grid after vertical and horizontal layers is the grid cluster state") {
    std::vector<CellSpec> cells;
    for (int r = 0; r < 3; r++) {
        for (int c = 0; c < 3; c++) {
            cells.push_back({{r, c}, CellRole::Data, '+', r * 3 + c});
        }
    }
    Lattice l(3, 3, cells);
    l.global_cz(Axis::Vertical);
    l.global_cz(Axis::Horizontal);
    CHECK(stab_equal(l.tableau(), graph_to_tableau(grid_graph(3, 3))));
    CHECK(l.counts().global_cz == 2);
}

TEST_CASE("global CZ is an involution") {
    std::vector<CellSpec> cells;
    for (int r = 0; r < 3; r++) {
        for (int c = 0; c < 4; c++) {
            cells.push_back({{r, c}, CellRole::Data, (r + c) % 2 ? '+' : '-', r * 4 + c});
        }
    }
    for (Axis a : {Axis::Horizontal, Axis::Vertical}) {
        Lattice l(3, 4, cells);
        Tableau before = l.tableau();
        l.global_cz(a);
        CHECK_FALSE(stab_equal(l.tableau(), before));
        l.global_cz(a);
        CHECK(stab_equal(l.tableau(), before));
    }
}

TEST_CASE("distant CZ matches CZ plus the recorded byproduct for every outcome") {
    std::mt19937_64 rng(11);
    for (int interior : {2, 4}) {
        int n = interior + 2;
        for (uint32_t pattern = 0; pattern < (1u << interior); pattern++) {
            std::vector<CellSpec> cells;
            cells.push_back({{0, 0}, CellRole::Data, 'p', 0});
            for (int c = 1; c <= interior; c++) {
                cells.push_back({{0, c}, CellRole::Ancilla, '0', std::nullopt});
            }
            cells.push_back({{0, n - 1}, CellRole::Data, 'p', 1});
            Lattice l(1, n, cells);
            std::vector<CellRC> path;
            for (int c = 0; c < n; c++) {
                path.push_back({0, c});
            }
            OutcomePolicy policy;
            policy.forced = [&](CellRC rc, std::size_t) { return static_cast<uint8_t>((pattern >> (rc.col - 1)) & 1); };
            l.distant_cz(path, policy);
            REQUIRE(l.measurements().size() == static_cast<std::size_t>(interior));
            for (const CellMeasurement &m : l.measurements()) {
                CHECK(m.outcome == ((pattern >> (m.cell.col - 1)) & 1));
            }
            CHECK(l.verify(Circuit(2).append(Gate::cz(0, 1)), "pp").ok);
            CHECK(l.counts().global_cz == 0);

            // Dense brute force with random inputs and the same outcomes.
            StateVector u = random_state(rng);
            StateVector v = random_state(rng);
            StateVector s = tensor(u, StateVector::from_symbols(std::string(static_cast<std::size_t>(interior), '+')));
            s = tensor(s, v);
            for (int k = 0; k + 1 < n; k++) {
                s.apply(Gate::cz(static_cast<uint32_t>(k), static_cast<uint32_t>(k + 1)));
            }
            for (int k = 1; k <= interior; k++) {
                s.measure_forced(static_cast<uint32_t>(k), MeasureBasis::X, (pattern >> (k - 1)) & 1);
            }
            PauliString f = l.frame().as_pauli();
            PauliString fd(static_cast<std::size_t>(n));
            for (int k = 0; k < n; k++) {
                std::size_t q = static_cast<std::size_t>(k);
                fd.set_bits(q, f.x(q), f.z(q));
            }
            CHECK(fd.x(1) == false);
            s.apply(fd);
            std::vector<uint32_t> ends{0, static_cast<uint32_t>(n - 1)};
            StateVector got = s.extract(ends);
            StateVector want = tensor(u, v);
            want.apply(Gate::cz(0, 1));
            CHECK(fidelity(got, want) > 1 - 1e-9);
        }
    }
}

TEST_CASE("distant CZ rejects odd interiors and broken paths") {
    std::vector<CellSpec> cells = row_cells(5, '+');
    for (int c = 1; c < 4; c++) {
        cells[static_cast<std::size_t>(c)] = {{0, c}, CellRole::Ancilla, '0', std::nullopt};
    }
    Lattice l(1, 5, cells);
    std::mt19937_64 rng(1);
    OutcomePolicy policy{&rng, {}};
    CHECK_THROWS_AS(l.distant_cz({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}, policy), std::invalid_argument);
    CHECK_THROWS_AS(l.distant_cz({{0, 0}, {0, 2}, {0, 3}, {0, 4}}, policy), std::invalid_argument);
    CHECK_THROWS_AS(l.distant_cz({{0, 0}}, policy), std::invalid_argument);
}

TEST_CASE("preparation rules") {
    Lattice l(1, 3, row_cells(3, '+'));
    l.global_cz(Axis::Horizontal);
    CHECK_THROWS_AS(l.prepare({0, 1}, '0'), std::domain_error);
    CHECK_THROWS_AS(l.prepare({0, 5}, '0'), std::out_of_range);
    CHECK_THROWS_AS(l.prepare({0, 1}, 'q'), std::invalid_argument);
    std::mt19937_64 rng(2);
    l.measure_x({0, 1}, std::nullopt, &rng);
    CHECK_NOTHROW(l.prepare({0, 1}, '0'));
    std::vector<CellSpec> cells = row_cells(2, '+');
    cells.push_back({{0, 2}, CellRole::Inactive, '0', std::nullopt});
    Lattice m(1, 3, cells);
    CHECK_THROWS_AS(m.prepare({0, 2}, '+'), std::invalid_argument);
    CHECK_THROWS_AS(Lattice(1, 1, {{{0, 0}, CellRole::Inactive, '+', std::nullopt}}), std::invalid_argument);
}

TEST_CASE("schedule JSON round trip and errors") {
    Schedule s = load_schedule("LP_full");
    CHECK(Schedule::from_json(s.to_json()).to_json() == s.to_json());
    CHECK_THROWS_AS(Schedule::from_json(nlohmann::json{{"grid", {2, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(Schedule::from_json(nlohmann::json::parse(
                        R"({"grid":[1,1],"cells":[],"steps":[{"op":"swap"}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_schedule("/nonexistent/schedule.json"), std::invalid_argument);
    CHECK_THROWS_AS(target_circuit("nothing"), std::invalid_argument);
}

TEST_CASE("named schedules reach the stated global CZ counts") {
    CHECK(run_named_schedule("E1_lattice").counts.global_cz == 2);
    CHECK(run_named_schedule("E2_lattice").counts.global_cz == 2);
    CHECK(run_named_schedule("GHZ6_lattice").counts.global_cz == 3);
    CHECK(run_named_schedule("LP_full").counts.global_cz == 7);
    CHECK(run_named_schedule("hop_simultaneous").counts.global_cz == 7);
    CHECK(run_named_schedule("hop_sequential").counts.global_cz > 7);
    for (const std::string &name : named_schedules()) {
        CHECK(load_schedule(name).global_cz_count() == run_named_schedule(name).counts.global_cz);
    }
}

TEST_CASE("every named schedule verifies for several outcome seeds") {
    for (const std::string &name : named_schedules()) {
        for (uint64_t seed = 1; seed <= 3; seed++) {
            VerifyResult r = verify_schedule(name, std::nullopt, seed);
            INFO(name << " seed " << seed << ": " << r.diagnostic);
            CHECK(r.ok);
        }
    }
}

TEST_CASE("schedules verify with all outcomes forced to one") {
    for (const char *name : {"E2_lattice", "GHZ6_lattice", "LP_full"}) {
        Schedule s = load_schedule(name);
        Lattice l(s);
        OutcomePolicy policy;
        policy.forced = [](CellRC, std::size_t) { return std::optional<uint8_t>(1); };
        l.run(s, policy);
        VerifyResult r = l.verify(target_circuit(s.target->circuit), s.target->inputs);
        INFO(name << ": " << r.diagnostic);
        CHECK(r.ok);
    }
}

TEST_CASE("E1 and E2 schedules match their circuits on plus inputs") {
    ScheduleRun e1 = run_named_schedule("E1_lattice");
    CHECK_THROWS_AS(e1.lattice.verify(target_circuit("e1_star"), "+++++"), std::invalid_argument);
    Schedule s = load_schedule("E1_lattice");
    for (CellSpec &c : s.cells) {
        c.init = '+';
    }
    Lattice l(s);
    l.run(s, {});
    CHECK(l.verify(target_circuit("e1_star"), "+++++").ok);
    VerifyResult e2 = verify_schedule("E2_lattice", TargetSpec{"pentagon", "ppppp"});
    CHECK(e2.ok);
}

TEST_CASE("LCS2 lattice state equals the LCS2 graph state up to logical XZ on register B") {
    Schedule s = load_schedule("LCS2_lattice");
    for (CellSpec &c : s.cells) {
        if (c.init == 'p') {
            c.init = '+';
        }
    }
    for (uint64_t seed = 1; seed <= 3; seed++) {
        Lattice l(s);
        std::mt19937_64 rng(seed);
        OutcomePolicy policy;
        policy.rng = &rng;
        l.run(s, policy);
        Tableau t = l.data_tableau();
        t.apply(logical_x_on(10, 1));
        t.apply(logical_z_on(10, 1));
        CHECK(stab_equal(t, graph_to_tableau(build_LCS2().graph)));
        Tableau plain = l.data_tableau();
        CHECK_FALSE(stab_equal(plain, graph_to_tableau(build_LCS2().graph)));
    }
}

TEST_CASE("skipping an X measurement leaves a named entangled ancilla") {
    Schedule s = load_schedule("LP_full");
    const Step *last = nullptr;
    for (const Step &st : s.steps) {
        if (st.kind == Step::Kind::MeasureX) {
            last = &st;
        }
    }
    REQUIRE(last != nullptr);
    CellRC skipped = last->measure.front();
    Schedule broken = skip_last_measurement(s, skipped);
    Lattice l(broken);
    std::mt19937_64 rng(4);
    l.run(broken, {&rng, {}});
    VerifyResult r = l.verify(target_circuit("logical_physical"), "p00000");
    CHECK_FALSE(r.ok);
    REQUIRE(r.leftover.size() >= 1);
    CHECK(r.leftover.front() == skipped);
    CHECK(r.diagnostic.find(skipped.str()) != std::string::npos);
}

TEST_CASE("a missing local gate is reported as a differing generator") {
    Schedule s = load_schedule("LP_full");
    for (Step &st : s.steps) {
        if (st.kind == Step::Kind::Local) {
            st.local.pop_back();
            break;
        }
    }
    Lattice l(s);
    l.run(s, {});
    VerifyResult r = l.verify(target_circuit("logical_physical"), "p00000");
    CHECK_FALSE(r.ok);
    CHECK(r.diagnostic.find("differs") != std::string::npos);
}

TEST_CASE("simultaneous encode and decode") {
    EncodeDecodeReport rep = simultaneous_encode_decode();
    INFO(rep.diagnostic);
    CHECK(rep.simultaneous.global_cz == 7);
    CHECK(rep.sequential.global_cz > 7);
    CHECK(rep.simultaneous_verified);
    CHECK(rep.sequential_verified);
    CHECK(rep.regions_disjoint);
    CHECK(rep.sequential_inefficient);
    CHECK(rep.to_json()["simultaneous"]["global_cz"] == 7);
}

TEST_CASE("region overlap is detected") {
    // Two registers linked through one shared ancilla run.
    Schedule s;
    s.rows = 1;
    s.cols = 4;
    s.cells = {{{0, 0}, CellRole::Data, '+', 0}, {{0, 3}, CellRole::Data, '+', 1}};
    Step prep;
    prep.kind = Step::Kind::Prepare;
    prep.prepare = {{{0, 1}, '+'}, {{0, 2}, '+'}};
    Step cz;
    cz.kind = Step::Kind::GlobalCZ;
    cz.axis = Axis::Horizontal;
    s.steps = {prep, cz};
    s.regions = {{"A", {0}}, {"B", {1}}};
    std::string diag;
    CHECK_FALSE(regions_disjoint(s, 1, &diag));
    CHECK(diag.find("(0,1)") != std::string::npos);
    s.regions = {{"A", {0, 1}}};
    CHECK(regions_disjoint(s, 1));
}
