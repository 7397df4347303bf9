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

#include "qecc1wqc/graph.hpp"

#include <stdexcept>
#include <string>

namespace qecc1wqc {

Graph::Graph(std::size_t num_vertices, const std::vector<std::pair<uint32_t, uint32_t>> &edges) : Graph(num_vertices) {
    for (auto [a, b] : edges) {
        add_edge(a, b);
    }
}

void Graph::check(uint32_t a, uint32_t b) const {
    if (a >= adj_.size() || b >= adj_.size()) {
        throw std::out_of_range("edge (" + std::to_string(a) + ", " + std::to_string(b) + ") outside a " +
                                std::to_string(adj_.size()) + "-vertex graph");
    }
    if (a == b) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
}

bool Graph::has_edge(uint32_t a, uint32_t b) const {
    check(a, b);
    return adj_[a][b];
}

void Graph::add_edge(uint32_t a, uint32_t b) {
    check(a, b);
    adj_[a][b] = adj_[b][a] = true;
}

void Graph::remove_edge(uint32_t a, uint32_t b) {
    check(a, b);
    adj_[a][b] = adj_[b][a] = false;
}

void Graph::toggle_edge(uint32_t a, uint32_t b) {
    check(a, b);
    adj_[a][b] = adj_[b][a] = !adj_[a][b];
}

std::vector<uint32_t> Graph::neighbors(uint32_t v) const {
    std::vector<uint32_t> out;
    for (uint32_t w = 0; w < adj_.at(v).size(); w++) {
        if (adj_[v][w]) {
            out.push_back(w);
        }
    }
    return out;
}

std::size_t Graph::degree(uint32_t v) const {
    return neighbors(v).size();
}

std::size_t Graph::num_edges() const {
    return edges().size();
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (uint32_t a = 0; a < adj_.size(); a++) {
        for (uint32_t b = a + 1; b < adj_.size(); b++) {
            if (adj_[a][b]) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

Graph &Graph::local_complement(uint32_t v) {
    std::vector<uint32_t> nb = neighbors(v);
    for (std::size_t i = 0; i < nb.size(); i++) {
        for (std::size_t j = i + 1; j < nb.size(); j++) {
            toggle_edge(nb[i], nb[j]);
        }
    }
    return *this;
}

Graph &Graph::pivot(uint32_t u, uint32_t v) {
    if (!has_edge(u, v)) {
        throw std::invalid_argument("pivot on non-edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    return local_complement(u).local_complement(v).local_complement(u);
}

Circuit Graph::cz_circuit() const {
    Circuit c(adj_.size());
    for (auto [a, b] : edges()) {
        c.append(Gate::cz(a, b));
    }
    return c;
}

nlohmann::json Graph::to_json() const {
    nlohmann::json e = nlohmann::json::array();
    for (auto [a, b] : edges()) {
        e.push_back({a, b});
    }
    return {{"n", adj_.size()}, {"edges", std::move(e)}};
}

Graph Graph::from_json(const nlohmann::json &j) {
    try {
        Graph g(j.at("n").get<std::size_t>());
        for (const auto &e : j.at("edges")) {
            g.add_edge(e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>());
        }
        return g;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    }
}

Tableau graph_to_tableau(const Graph &g) {
    Tableau t = Tableau::from_symbols(std::string(g.num_vertices(), '+'));
    t.apply_gates(g.cz_circuit());
    return t;
}

GraphForm tableau_to_graph(const Tableau &input) {
    std::size_t n = input.num_qubits();
    Tableau t = input;
    Circuit undo(n);
    auto push = [&](const Gate &g) {
        t.apply(g);
        undo.append(g);
    };

    for (const PauliString &row : t.canonical_form()) {
        bool has_x = false;
        for (std::size_t q = 0; q < n && !has_x; q++) {
            has_x = row.x(q);
        }
        if (has_x) {
            continue;
        }
        for (std::size_t q = 0; q < n; q++) {
            if (row.z(q)) {
                push(Gate::h((uint32_t)q));
                break;
            }
        }
    }

    std::vector<PauliString> rows = t.canonical_form();
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t q = 0; q < n; q++) {
            if (rows[i].x(q) != (q == i)) {
                throw std::logic_error("tableau_to_graph: X block is not full rank after Hadamards");
            }
        }
    }
    for (std::size_t i = 0; i < n; i++) {
        if (rows[i].z(i)) {
            // S^dagger maps Y to X.
            push(Gate::s((uint32_t)i));
            push(Gate::z((uint32_t)i));
        }
    }
    rows = t.canonical_form();
    for (std::size_t i = 0; i < n; i++) {
        if (rows[i].phase() == 2) {
            push(Gate::z((uint32_t)i));
        }
    }
    rows = t.canonical_form();

    GraphForm out{Graph(n), undo.adjoint()};
    for (uint32_t i = 0; i < n; i++) {
        if (rows[i].phase() != 0 || rows[i].z(i)) {
            throw std::logic_error("tableau_to_graph: residual sign or diagonal term");
        }
        for (uint32_t j = i + 1; j < n; j++) {
            if (rows[i].z(j) != rows[j].z(i)) {
                throw std::logic_error("tableau_to_graph: asymmetric Z block");
            }
            if (rows[i].z(j)) {
                out.graph.add_edge(i, j);
            }
        }
    }
    return out;
}

Circuit local_complement_gates(const Graph &g, uint32_t v) {
    Circuit c(g.num_vertices());
    c.append(Gate::h(v)).append(Gate::s(v)).append(Gate::h(v));
    for (uint32_t w : g.neighbors(v)) {
        c.append(Gate::s(w)).append(Gate::z(w));
    }
    return c;
}

}  // namespace qecc1wqc
