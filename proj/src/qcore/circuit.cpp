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

#include "qecc1wqc/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qecc1wqc {

void Circuit::check_qubit(uint32_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for a " + std::to_string(num_qubits_) +
                                "-qubit circuit");
    }
}

Circuit &Circuit::append(const Gate &g) {
    for (uint32_t k = 0; k < g.arity(); k++) {
        check_qubit(g.targets[k]);
    }
    if (g.is_two_qubit() && g.targets[0] == g.targets[1]) {
        throw std::invalid_argument("two-qubit gate with repeated target");
    }
    ops_.emplace_back(g);
    return *this;
}

Circuit &Circuit::measure(uint32_t qubit, MeasureBasis basis, uint32_t slot, double angle) {
    check_qubit(qubit);
    ops_.emplace_back(Measure{qubit, basis, angle, slot});
    return *this;
}

Circuit &Circuit::correct_if(uint32_t slot, PauliString pauli) {
    if (pauli.num_qubits() != num_qubits_) {
        throw std::invalid_argument("correction Pauli has " + std::to_string(pauli.num_qubits()) +
                                    " qubits, circuit has " + std::to_string(num_qubits_));
    }
    ops_.emplace_back(CorrectIf{slot, std::move(pauli)});
    return *this;
}

Circuit &Circuit::append(const Circuit &other, std::span<const uint32_t> qubit_map) {
    if (qubit_map.size() != other.num_qubits()) {
        throw std::invalid_argument("qubit map size does not match the appended circuit");
    }
    for (const Instruction &ins : other.ops_) {
        if (const Gate *g = std::get_if<Gate>(&ins)) {
            Gate mapped = *g;
            mapped.targets[0] = qubit_map[g->targets[0]];
            mapped.targets[1] = qubit_map[g->targets[1]];
            append(mapped);
        } else if (const Measure *m = std::get_if<Measure>(&ins)) {
            measure(qubit_map[m->qubit], m->basis, m->slot, m->angle);
        } else {
            const CorrectIf &c = std::get<CorrectIf>(ins);
            PauliString p(num_qubits_);
            p.set_phase(c.pauli.phase());
            for (std::size_t q = 0; q < c.pauli.num_qubits(); q++) {
                p.set_bits(qubit_map[q], c.pauli.x(q), c.pauli.z(q));
            }
            correct_if(c.slot, std::move(p));
        }
    }
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    std::vector<uint32_t> identity(other.num_qubits());
    std::iota(identity.begin(), identity.end(), 0);
    return append(other, identity);
}

std::size_t Circuit::num_slots() const {
    std::size_t n = 0;
    for (const Instruction &ins : ops_) {
        if (const Measure *m = std::get_if<Measure>(&ins)) {
            n = std::max<std::size_t>(n, m->slot + 1);
        } else if (const CorrectIf *c = std::get_if<CorrectIf>(&ins)) {
            n = std::max<std::size_t>(n, c->slot + 1);
        }
    }
    return n;
}

void Circuit::validate() const {
    std::vector<bool> written(num_slots(), false);
    for (const Instruction &ins : ops_) {
        if (const Measure *m = std::get_if<Measure>(&ins)) {
            if (written[m->slot]) {
                throw std::invalid_argument("result slot " + std::to_string(m->slot) + " written twice");
            }
            written[m->slot] = true;
        } else if (const CorrectIf *c = std::get_if<CorrectIf>(&ins)) {
            if (!written[c->slot]) {
                throw std::invalid_argument("result slot " + std::to_string(c->slot) + " read before written");
            }
        }
    }
}

Circuit Circuit::adjoint() const {
    Circuit out(num_qubits_);
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        const Gate *g = std::get_if<Gate>(&*it);
        if (g == nullptr) {
            throw std::invalid_argument("adjoint of a circuit with measurements or corrections");
        }
        switch (g->kind) {
            case GateKind::S:
                // S^dagger = S Z.
                out.append(Gate::z(g->targets[0]));
                out.append(Gate::s(g->targets[0]));
                break;
            case GateKind::Rz:
                out.append(Gate::rz(g->targets[0], -g->angle));
                break;
            default:
                out.append(*g);
        }
    }
    return out;
}

std::vector<Gate> Circuit::gates() const {
    std::vector<Gate> out;
    for (const Instruction &ins : ops_) {
        if (const Gate *g = std::get_if<Gate>(&ins)) {
            out.push_back(*g);
        }
    }
    return out;
}

std::size_t two_qubit_gate_count(const Circuit &c) {
    return (std::size_t)std::count_if(c.instructions().begin(), c.instructions().end(), [](const Instruction &ins) {
        const Gate *g = std::get_if<Gate>(&ins);
        return g != nullptr && g->is_two_qubit();
    });
}

}  // namespace qecc1wqc
