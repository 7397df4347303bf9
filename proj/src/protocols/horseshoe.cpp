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

#include <stdexcept>
#include <string>

#include "qecc1wqc/protocols.hpp"

namespace qecc1wqc {

namespace {

constexpr std::size_t kRegs = 4;
constexpr std::size_t kN = kRegs * CODE_QUBITS;

std::string input_symbols(char psi, char phi) {
    std::string s(kN, '0');
    s[0] = psi;
    s[15] = phi;
    return s;
}

Circuit target_layer() {
    Circuit c(kN);
    for (std::size_t r = 0; r + 1 < kRegs; r++) {
        c.append(cross_cz(kN, r, r + 1));
    }
    return c;
}

// Prefix of the bridged route up to and including the bridge CZ.
Circuit bridged_prefix() {
    Circuit c = encoder_on(kN, 0);
    c.append(encoder_on(kN, 3));
    c.append(Gate::h(5)).append(Gate::h(10)).append(Gate::cz(5, 10));
    return c;
}

// Stabilizer generators of the encoded symbol on register `reg`.
void append_logical_generators(std::vector<PauliString> &gens, std::size_t reg, char symbol) {
    for (const PauliString &g : code_stabilizers()) {
        PauliString w(kN);
        w.set_phase(g.phase());
        for (std::size_t q = 0; q < CODE_QUBITS; q++) {
            w.set_bits(CODE_QUBITS * reg + q, g.x(q), g.z(q));
        }
        gens.push_back(w);
    }
    PauliString l = (symbol == '0' || symbol == '1') ? logical_z_on(kN, reg) : logical_x_on(kN, reg);
    if (symbol == '1' || symbol == '-') {
        l.set_phase(2);
    }
    gens.push_back(l);
}

bool is_stabilizer_symbol(char c) {
    return c == '0' || c == '1' || c == '+' || c == '-';
}

void fill_counts(HorseshoeReport &r) {
    r.sequential_two_qubit_gates = two_qubit_gate_count(build_horseshoe_circuit(HorseshoeRoute::Sequential));
    r.bridged_two_qubit_gates = two_qubit_gate_count(build_horseshoe_circuit(HorseshoeRoute::Bridged));
    Graph g = horseshoe_graph();
    for (uint32_t v = 0; v < g.num_vertices(); v++) {
        r.graph_degrees.push_back(g.degree(v));
    }
}

}  // namespace

Circuit build_horseshoe_circuit(HorseshoeRoute route) {
    Circuit c(kN);
    if (route == HorseshoeRoute::Sequential) {
        c.append(encoder_on(kN, 0));
        c.append(Gate::h(5)).append(ghz_on(kN, 0, 5));
        c.append(encoder_on(kN, 1));
        c.append(Gate::h(10)).append(ghz_on(kN, 1, 10));
        c.append(encoder_on(kN, 2));
        c.append(ghz_on(kN, 2, 15));
        c.append(encoder_on(kN, 3));
    } else {
        c.append(bridged_prefix());
        c.append(ghz_on(kN, 0, 5)).append(ghz_on(kN, 3, 10));
        c.append(encoder_on(kN, 1)).append(encoder_on(kN, 2));
    }
    return c;
}

Graph horseshoe_graph() {
    Graph g(kN);
    Circuit c(kN);
    for (std::size_t r = 0; r < kRegs; r++) {
        c.append(pentagon_on(kN, r));
    }
    c.append(target_layer());
    for (const Gate &gate : c.gates()) {
        g.add_edge(gate.targets[0], gate.targets[1]);
    }
    return g;
}

HorseshoeReport horseshoe_check(char psi, char phi, HorseshoeMode mode) {
    if (mode == HorseshoeMode::Dense) {
        return horseshoe_check_dense(QubitState::from_symbol(psi), QubitState::from_symbol(phi));
    }
    if (!is_stabilizer_symbol(psi) || !is_stabilizer_symbol(phi)) {
        throw std::invalid_argument("tableau mode needs inputs from {0, 1, +, -}");
    }
    HorseshoeReport r;
    r.mode = HorseshoeMode::Tableau;
    fill_counts(r);

    const std::string init = input_symbols(psi, phi);
    Tableau seq = Tableau::from_symbols(init);
    seq.apply_gates(build_horseshoe_circuit(HorseshoeRoute::Sequential));
    Tableau bri = Tableau::from_symbols(init);
    bri.apply_gates(build_horseshoe_circuit(HorseshoeRoute::Bridged));
    r.routes_agree = stab_equal(seq, bri);

    std::vector<PauliString> gens;
    append_logical_generators(gens, 0, psi);
    append_logical_generators(gens, 1, '+');
    append_logical_generators(gens, 2, '+');
    append_logical_generators(gens, 3, phi);
    Tableau target = Tableau::from_stabilizers(gens);
    target.apply_gates(target_layer());
    r.matches_target = stab_equal(seq, target);

    std::vector<PauliString> slice;
    append_logical_generators(slice, 0, psi);
    append_logical_generators(slice, 3, phi);
    slice.push_back(PauliString::single(kN, 5, 'X'));
    slice.back().set(10, 'Z');
    slice.push_back(PauliString::single(kN, 10, 'X'));
    slice.back().set(5, 'Z');
    for (uint32_t q : {6u, 7u, 8u, 9u, 11u, 12u, 13u, 14u}) {
        slice.push_back(PauliString::single(kN, q, 'Z'));
    }
    Tableau prefix = Tableau::from_symbols(init);
    prefix.apply_gates(bridged_prefix());
    r.slice_matches = stab_equal(prefix, Tableau::from_stabilizers(slice));

    if (psi == '+' && phi == '+') {
        Tableau g = graph_to_tableau(horseshoe_graph());
        for (std::size_t reg = 0; reg < kRegs; reg++) {
            g.apply(logical_z_on(kN, reg));
        }
        r.matches_graph = stab_equal(seq, g);
    }
    return r;
}

HorseshoeReport horseshoe_check_dense(QubitState psi, QubitState phi) {
    psi = psi.normalized();
    phi = phi.normalized();
    HorseshoeReport r;
    r.mode = HorseshoeMode::Dense;
    fill_counts(r);

    StateVector in = tensor(tensor(psi.state(), StateVector(14)), tensor(phi.state(), StateVector(4)));
    StateVector seq = in;
    seq.apply_gates(build_horseshoe_circuit(HorseshoeRoute::Sequential));
    StateVector bri = in;
    bri.apply_gates(build_horseshoe_circuit(HorseshoeRoute::Bridged));
    r.routes_agree = equal_up_to_phase(seq, bri);

    StateVector target = tensor(tensor(logical_state(psi.alpha, psi.beta), logical_plus()),
                                tensor(logical_plus(), logical_state(phi.alpha, phi.beta)));
    target.apply_gates(target_layer());
    r.matches_target = equal_up_to_phase(seq, target);

    StateVector prefix = in;
    prefix.apply_gates(bridged_prefix());
    std::vector<uint32_t> keep = {0, 1, 2, 3, 4, 5, 10, 15, 16, 17, 18, 19};
    const double h = 0.5;
    StateVector pair = StateVector::from_amplitudes(2, {h, h, h, -h});
    StateVector want =
        tensor(tensor(logical_state(psi.alpha, psi.beta), pair), logical_state(phi.alpha, phi.beta));
    try {
        r.slice_matches = equal_up_to_phase(prefix.extract(keep), want);
    } catch (const std::domain_error &) {
        r.slice_matches = false;
    }

    const double s = 1 / std::sqrt(2.0);
    bool plus_inputs = std::abs(psi.alpha - s) < 1e-12 && std::abs(psi.beta - s) < 1e-12 &&
                       std::abs(phi.alpha - s) < 1e-12 && std::abs(phi.beta - s) < 1e-12;
    if (plus_inputs) {
        StateVector g = StateVector::from_symbols(std::string(kN, '+'));
        g.apply_gates(horseshoe_graph().cz_circuit());
        for (std::size_t reg = 0; reg < kRegs; reg++) {
            g.apply(logical_z_on(kN, reg));
        }
        r.matches_graph = equal_up_to_phase(seq, g);
    }
    return r;
}

nlohmann::json HorseshoeReport::to_json() const {
    nlohmann::json j{{"mode", mode == HorseshoeMode::Tableau ? "tableau" : "dense"},
                     {"sequential_two_qubit_gates", sequential_two_qubit_gates},
                     {"bridged_two_qubit_gates", bridged_two_qubit_gates},
                     {"routes_agree", routes_agree},
                     {"matches_target", matches_target},
                     {"slice_matches", slice_matches},
                     {"graph_degrees", graph_degrees}};
    j["matches_graph"] = matches_graph ? nlohmann::json(*matches_graph) : nlohmann::json(nullptr);
    return j;
}

}  // namespace qecc1wqc
