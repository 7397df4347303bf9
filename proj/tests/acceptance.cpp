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

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qecc1wqc/code5.hpp"
#include "qecc1wqc/graph.hpp"
#include "qecc1wqc/harness.hpp"
#include "qecc1wqc/lattice.hpp"
#include "qecc1wqc/protocols.hpp"

using namespace qecc1wqc;
using json = nlohmann::json;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

std::string fmt(double v, int digits = 12) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

// |- >^5 through the pentagon, |+>^5 through the pentagon, and the K5 form of |0_L>.
Outcome code_states() {
    StateVector minus_in = StateVector::from_symbols("+++++");
    minus_in.apply_gates(pentagon_on(5, 0));
    StateVector plus_in = StateVector::from_symbols("-----");
    plus_in.apply_gates(pentagon_on(5, 0));
    double f1 = fidelity(logical_minus(), minus_in);
    double f2 = fidelity(logical_plus(), plus_in);
    double f3 = fidelity(logical_zero(), logical_zero_from_K5());
    double lo = std::min({f1, f2, f3});
    return {lo >= 1 - 1e-10, "fidelities " + fmt(f1) + ", " + fmt(f2) + ", " + fmt(f3)};
}

Outcome syndrome_table_check() {
    RunReport r = run_exhaustive_correction_sweep(1, 20);
    std::size_t matched = 0;
    double lo = 1;
    for (const json &row : r.details.at("rows")) {
        if (row.at("syndrome_matches").get<bool>() && row.at("outcome_matches").get<bool>()) {
            matched++;
        }
        lo = std::min(lo, row.at("min_fidelity").get<double>());
    }
    bool ok = matched == 16 && r.details.at("rows").size() == 16 && lo >= 1 - 1e-9;
    return {ok, std::to_string(matched) + "/16 rows match, min recovery fidelity " + fmt(lo) + " over 20 inputs"};
}

Outcome teleported_gate() {
    double lo = 1;
    std::size_t runs = 0;
    for (uint64_t k = 0; k < 50; k++) {
        std::mt19937_64 rng = trial_rng(3, k);
        QubitState psi = random_qubit_state(rng);
        double xi = std::uniform_real_distribution<double>(-M_PI, M_PI)(rng);
        for (uint8_t m : {0, 1}) {
            lo = std::min(lo, encoded_teleport(psi, xi, std::nullopt, m, &rng).fidelity);
            runs++;
        }
    }
    return {lo >= 1 - 1e-9, std::to_string(runs) + " runs, min fidelity " + fmt(lo)};
}

Outcome push_through() {
    PushThroughReport r = push_through_check(20, 1);
    bool ok = r.min_fidelity >= 1 - 1e-9 && r.fidelities.size() >= 20 && r.control_failed;
    double worst_control = *std::min_element(r.control_fidelities.begin(), r.control_fidelities.end());
    return {ok, std::to_string(r.fidelities.size()) + " inputs, min fidelity " + fmt(r.min_fidelity) +
                    "; without Z_L min fidelity " + fmt(worst_control, 6)};
}

Outcome gate_counts() {
    std::size_t hop = two_qubit_gate_count(build_hop_unitary());
    std::size_t horseshoe = two_qubit_gate_count(build_horseshoe_circuit(HorseshoeRoute::Sequential));
    std::size_t entangler = nine_gate_entangler().two_qubit_gates;
    std::vector<std::pair<std::string, std::size_t>> lattice;
    for (const char *name : {"E1_lattice", "E2_lattice", "GHZ6_lattice", "LP_full", "hop_simultaneous"}) {
        lattice.emplace_back(name, run_named_schedule(name).counts.global_cz);
    }
    std::vector<std::size_t> want{2, 2, 3, 7, 7};
    bool ok = hop == 23 && horseshoe == 51 && entangler == 9;
    std::string d = "teleport " + std::to_string(hop) + ", horseshoe " + std::to_string(horseshoe) + ", entangler " +
                    std::to_string(entangler) + "; GlobalCZ";
    for (std::size_t i = 0; i < lattice.size(); i++) {
        ok = ok && lattice[i].second == want[i];
        d += " " + lattice[i].first + "=" + std::to_string(lattice[i].second);
    }
    return {ok, d};
}

Outcome graph_structure(const std::string &certificate_path) {
    Graph lcs2 = build_LCS2().graph;
    bool lcs2_ok = lcs2.num_vertices() == 10;
    for (uint32_t v = 0; v < lcs2.num_vertices(); v++) {
        lcs2_ok = lcs2_ok && lcs2.degree(v) == 7;
    }
    Graph hs = horseshoe_graph();
    bool hs_ok = hs.num_vertices() == 20;
    for (uint32_t v = 0; v < hs.num_vertices(); v++) {
        bool endpoint = v < 5 || v >= 15;
        hs_ok = hs_ok && hs.degree(v) == (endpoint ? 7u : 12u);
    }
    EntanglerReport e = nine_gate_entangler();
    bool pivot_ok = e.pivot_matches && e.layer_verified;
    std::ofstream(certificate_path) << e.certificate().dump(2) << "\n";
    return {lcs2_ok && hs_ok && pivot_ok, std::string("LCS2 degrees ") + (lcs2_ok ? "all 7" : "wrong") +
                                              ", horseshoe degrees " + (hs_ok ? "7/12" : "wrong") + ", pivot " +
                                              (pivot_ok ? "certified" : "not certified") + " (" +
                                              certificate_path + ")"};
}

Outcome lattice_schedules() {
    std::size_t verified = 0;
    std::size_t runs = 0;
    std::string first_failure;
    for (const char *name : {"E1_lattice", "E2_lattice", "GHZ6_lattice", "LP_full", "horseshoe_lattice"}) {
        for (uint64_t seed = 1; seed <= 3; seed++) {
            VerifyResult r = verify_schedule(name, std::nullopt, seed);
            runs++;
            if (r.ok) {
                verified++;
            } else if (first_failure.empty()) {
                first_failure = std::string(name) + ": " + r.diagnostic;
            }
        }
    }
    std::size_t paths_ok = 0;
    std::size_t paths = 0;
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
            policy.forced = [&](CellRC rc, std::size_t) {
                return std::optional<uint8_t>((pattern >> (rc.col - 1)) & 1);
            };
            l.distant_cz(path, policy);
            bool outcomes_forced = true;
            for (const CellMeasurement &m : l.measurements()) {
                outcomes_forced = outcomes_forced && m.outcome == ((pattern >> (m.cell.col - 1)) & 1);
            }
            paths++;
            if (outcomes_forced && l.verify(Circuit(2).append(Gate::cz(0, 1)), "pp").ok) {
                paths_ok++;
            }
        }
    }
    std::string d = std::to_string(verified) + "/" + std::to_string(runs) + " schedule runs verified, " +
                    std::to_string(paths_ok) + "/" + std::to_string(paths) + " distant-CZ outcome patterns";
    if (!first_failure.empty()) {
        d += "; " + first_failure;
    }
    return {verified == runs && paths_ok == paths, d};
}

Outcome distance_three() {
    RunReport sweep = run_exhaustive_correction_sweep(1, 20);
    double single_lo = 1;
    for (const json &row : sweep.details.at("rows")) {
        single_lo = std::min(single_lo, row.at("min_fidelity").get<double>());
    }
    const json &w2 = sweep.details.at("weight2");
    double w2_lo = w2.at("min_fidelity").get<double>();
    bool ok = single_lo >= 1 - 1e-9 && w2_lo <= 0.99;
    std::string d = "weight-1 min fidelity " + fmt(single_lo) + ", X1X2 min fidelity " + fmt(w2_lo, 4);
    for (double p : {1e-3, 1e-2}) {
        RunReport r = run_depolarizing(p, 10000, 1);
        const json &x = r.details;
        bool low = x.at("weight_le1_all_corrected").get<bool>();
        bool within = x.at("within_5_sigma").get<bool>();
        ok = ok && low && within;
        d += "; p=" + fmt(p, 3) + " rate " + fmt(x.at("failure_rate").get<double>(), 4) + " vs " +
             fmt(x.at("predicted_failure_rate").get<double>(), 4) +
             (within ? " (within 5 sigma)" : " (outside 5 sigma)") +
             ", weight<=1 " + std::to_string(x.at("weight_le1_successes").get<std::size_t>()) + "/" +
             std::to_string(x.at("weight_le1_trials").get<std::size_t>());
    }
    return {ok, d};
}

}  // namespace

int main(int argc, char **argv) {
    std::string certificate = argc > 1 ? argv[1] : "pivot_certificate.json";
    struct Criterion {
        int id;
        std::string title;
        double limit_seconds;  // 0 when unbounded
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "code-state identities", 1, code_states},
        {2, "syndrome table", 5, syndrome_table_check},
        {3, "teleported gate", 30, teleported_gate},
        {4, "logical CZ push-through", 0, push_through},
        {5, "gate counts", 0, gate_counts},
        {6, "graph structure", 0, [&] { return graph_structure(certificate); }},
        {7, "lattice schedules", 0, lattice_schedules},
        {8, "distance-3 properties", 120, distance_three},
    };
    int failures = 0;
    for (const Criterion &c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
        bool pass = o.ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("AC%d %s  %s: %s [%.2f s%s]\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(), o.detail.c_str(),
                    secs, in_time ? "" : ", over the time limit");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
