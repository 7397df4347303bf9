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

#include <cmath>
#include <stdexcept>

#include "qecc1wqc/protocols.hpp"

namespace qecc1wqc {

namespace {

uint32_t reg_qubit(std::size_t reg, std::size_t k) {
    return (uint32_t)(CODE_QUBITS * reg + k);
}

void check_register(std::size_t n, std::size_t reg) {
    if (CODE_QUBITS * (reg + 1) > n) {
        throw std::out_of_range("register " + std::to_string(reg) + " does not fit in " + std::to_string(n) +
                                " qubits");
    }
}

Circuit on_register(std::size_t n, std::size_t reg, const Circuit &c) {
    check_register(n, reg);
    std::vector<uint32_t> map;
    for (std::size_t k = 0; k < CODE_QUBITS; k++) {
        map.push_back(reg_qubit(reg, k));
    }
    Circuit out(n);
    out.append(c, map);
    return out;
}

PauliString register_pauli(std::size_t n, std::size_t reg, char p) {
    check_register(n, reg);
    PauliString out(n);
    for (std::size_t k = 0; k < CODE_QUBITS; k++) {
        out.set(reg_qubit(reg, k), p);
    }
    return out;
}

}  // namespace

Circuit encoder_on(std::size_t n, std::size_t reg) {
    return on_register(n, reg, build_encoder());
}

Circuit decoder_on(std::size_t n, std::size_t reg) {
    return on_register(n, reg, build_decoder());
}

Circuit pentagon_on(std::size_t n, std::size_t reg) {
    return on_register(n, reg, build_E2());
}

Circuit ghz_on(std::size_t n, std::size_t reg, uint32_t target) {
    check_register(n, reg);
    Circuit c(n);
    for (std::size_t k = 0; k < CODE_QUBITS; k++) {
        c.append(Gate::cz(reg_qubit(reg, k), target));
    }
    return c;
}

Circuit cross_cz(std::size_t n, std::size_t a, std::size_t b) {
    check_register(n, a);
    check_register(n, b);
    Circuit c(n);
    for (std::size_t i = 0; i < CODE_QUBITS; i++) {
        for (std::size_t j = 0; j < CODE_QUBITS; j++) {
            c.append(Gate::cz(reg_qubit(a, i), reg_qubit(b, j)));
        }
    }
    return c;
}

PauliString logical_z_on(std::size_t n, std::size_t reg) {
    return register_pauli(n, reg, 'Z');
}

PauliString logical_x_on(std::size_t n, std::size_t reg) {
    return register_pauli(n, reg, 'X');
}

LCS2 build_LCS2() {
    const std::size_t n = 2 * CODE_QUBITS;
    LCS2 out{Circuit(n), StateVector(n), Graph(n)};
    for (uint32_t q = 0; q < n; q++) {
        out.circuit.append(Gate::h(q));
    }
    out.circuit.append(pentagon_on(n, 0)).append(pentagon_on(n, 1)).append(cross_cz(n, 0, 1));
    for (const Gate &g : out.circuit.gates()) {
        if (g.is_two_qubit()) {
            out.graph.add_edge(g.targets[0], g.targets[1]);
        }
    }
    out.state.apply_gates(out.circuit);
    return out;
}

StateVector lcs2_printed_rhs(int sign) {
    StateVector a = tensor(logical_minus(), logical_zero());
    StateVector b = tensor(logical_plus(), logical_one());
    std::vector<amp_t> v(a.amplitudes().size());
    for (std::size_t i = 0; i < v.size(); i++) {
        v[i] = a.amplitude(i) + (double)sign * b.amplitude(i);
    }
    return StateVector::from_amplitudes(a.num_qubits(), std::move(v));
}

Circuit build_lcs2_sequential() {
    const std::size_t n = 2 * CODE_QUBITS;
    Circuit c = encoder_on(n, 0);
    c.append(Gate::h(reg_qubit(1, 0)));
    c.append(ghz_on(n, 0, reg_qubit(1, 0)));
    c.append(encoder_on(n, 1));
    return c;
}

StateVector build_logical_physical(QubitState psi) {
    psi = psi.normalized();
    StateVector s = tensor(encode(psi.alpha, psi.beta), StateVector(1));
    s.apply(Gate::h(5));
    s.apply_gates(ghz_on(6, 0, 5));
    return s;
}

EntanglerReport nine_gate_entangler() {
    const std::size_t n = 2 * CODE_QUBITS;
    EntanglerReport r;
    r.circuit = Circuit(n);
    for (uint32_t q = 0; q < n; q++) {
        r.circuit.append(Gate::h(q));
    }
    r.circuit.append(Gate::cz(0, 5));
    for (uint32_t k = 1; k < 5; k++) {
        r.circuit.append(Gate::cz(0, k));
    }
    for (uint32_t k = 6; k < 10; k++) {
        r.circuit.append(Gate::cz(5, k));
    }
    r.two_qubit_gates = two_qubit_gate_count(r.circuit);
    r.bipartite_gates = two_qubit_gate_count(cross_cz(n, 0, 1));

    r.nine_gate_graph = Graph(n);
    for (const Gate &g : r.circuit.gates()) {
        if (g.is_two_qubit()) {
            r.nine_gate_graph.add_edge(g.targets[0], g.targets[1]);
        }
    }
    Graph k55(n);
    for (const Gate &g : cross_cz(n, 0, 1).gates()) {
        k55.add_edge(g.targets[0], g.targets[1]);
    }
    r.pivoted = k55;
    r.pivoted.pivot(0, 5);
    r.pivot_matches = r.pivoted == r.nine_gate_graph;

    r.local_layer = Circuit(n);
    Graph cur = k55;
    for (uint32_t v : {0u, 5u, 0u}) {
        r.local_layer.append(local_complement_gates(cur, v));
        cur.local_complement(v);
    }
    Tableau t = graph_to_tableau(k55);
    t.apply_gates(r.local_layer);
    r.layer_verified = stab_equal(t, graph_to_tableau(r.nine_gate_graph));
    return r;
}

nlohmann::json EntanglerReport::certificate() const {
    nlohmann::json layer = nlohmann::json::array();
    for (const Gate &g : local_layer.gates()) {
        layer.push_back({{"g", gate_kind_name(g.kind)}, {"t", {g.targets[0]}}});
    }
    return {{"two_qubit_gates", two_qubit_gates},
            {"bipartite_gates", bipartite_gates},
            {"pivot_edge", {0, 5}},
            {"pivoted_graph", pivoted.to_json()},
            {"nine_gate_graph", nine_gate_graph.to_json()},
            {"pivot_matches", pivot_matches},
            {"local_clifford_layer", layer},
            {"layer_maps_bipartite_state_to_nine_gate_state", layer_verified}};
}

}  // namespace qecc1wqc
