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

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qecc1wqc/circuit.hpp"
#include "qecc1wqc/tableau.hpp"

namespace qecc1wqc {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t num_vertices) : adj_(num_vertices, std::vector<bool>(num_vertices, false)) {
    }
    Graph(std::size_t num_vertices, const std::vector<std::pair<uint32_t, uint32_t>> &edges);

    std::size_t num_vertices() const {
        return adj_.size();
    }
    bool has_edge(uint32_t a, uint32_t b) const;
    void add_edge(uint32_t a, uint32_t b);
    void remove_edge(uint32_t a, uint32_t b);
    void toggle_edge(uint32_t a, uint32_t b);

    std::vector<uint32_t> neighbors(uint32_t v) const;
    std::size_t degree(uint32_t v) const;
    std::size_t num_edges() const;
    /// Edges (a, b) with a < b in lexicographic order.
    std::vector<std::pair<uint32_t, uint32_t>> edges() const;

    /// Toggles every edge inside the neighbourhood of v.
    Graph &local_complement(uint32_t v);
    /// Local complement at u, v, u. Throws std::invalid_argument if (u, v) is not an edge.
    Graph &pivot(uint32_t u, uint32_t v);

    /// CZ circuit building the graph state from |+>^n (one CZ per edge, lexicographic).
    Circuit cz_circuit() const;

    nlohmann::json to_json() const;
    static Graph from_json(const nlohmann::json &j);

    friend bool operator==(const Graph &, const Graph &) = default;

   private:
    void check(uint32_t a, uint32_t b) const;
    std::vector<std::vector<bool>> adj_;
};

/// Graph state |G> with generators K_v = X_v prod_{w in N(v)} Z_w.
Tableau graph_to_tableau(const Graph &g);

/// Stabilizer state written as layer |G>, where layer holds single-qubit Cliffords.
struct GraphForm {
    Graph graph;
    Circuit layer;
};

GraphForm tableau_to_graph(const Tableau &t);

/// Single-qubit gates realizing the local complementation unitary at v:
/// |LC_v(G)> = U |G> with U = exp(-i pi/4 X_v) prod_{w in N(v)} exp(i pi/4 Z_w), up to phase.
Circuit local_complement_gates(const Graph &g, uint32_t v);

}  // namespace qecc1wqc
