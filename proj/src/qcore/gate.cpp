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

#include "qecc1wqc/gate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qecc1wqc {

Gate Gate::rz(uint32_t q, double xi) {
    if (!std::isfinite(xi)) {
        throw std::invalid_argument("Rz angle must be finite");
    }
    return {GateKind::Rz, {q, q}, xi};
}

Gate Gate::cz(uint32_t a, uint32_t b) {
    if (a == b) {
        throw std::invalid_argument("CZ needs two distinct targets, got " + std::to_string(a) + " twice");
    }
    return {GateKind::CZ, {a, b}, 0};
}

std::optional<int> Gate::quarter_turns() const {
    if (kind != GateKind::Rz) {
        return std::nullopt;
    }
    double turns = angle / (std::numbers::pi / 2);
    double nearest = std::round(turns);
    if (std::abs(angle - nearest * (std::numbers::pi / 2)) > kCliffordAngleTolerance) {
        return std::nullopt;
    }
    return (int)(((long long)nearest % 4 + 4) % 4);
}

bool Gate::is_clifford() const {
    return kind != GateKind::Rz || quarter_turns().has_value();
}

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::S:
            return "S";
        case GateKind::Rz:
            return "RZ";
        case GateKind::CZ:
            return "CZ";
    }
    return "?";
}

GateKind gate_kind_from_name(std::string_view name) {
    for (GateKind k : {GateKind::H, GateKind::X, GateKind::Y, GateKind::Z, GateKind::S, GateKind::Rz, GateKind::CZ}) {
        if (gate_kind_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown gate \"" + std::string(name) + "\"");
}

std::string Gate::name() const {
    std::string out(gate_kind_name(kind));
    if (kind == GateKind::Rz) {
        out += "(" + std::to_string(angle) + ")";
    }
    out += " " + std::to_string(targets[0]);
    if (is_two_qubit()) {
        out += "," + std::to_string(targets[1]);
    }
    return out;
}

namespace {

void conjugate_s(PauliString &p, std::size_t q) {
    bool x = p.x(q), z = p.z(q);
    if (x && z) {
        p.add_phase(2);
    }
    p.set_bits(q, x, z ^ x);
}

}  // namespace

void conjugate_in_place(PauliString &out, const Gate &g) {
    const PauliString &p = out;
    for (uint32_t k = 0; k < g.arity(); k++) {
        if (g.targets[k] >= p.num_qubits()) {
            throw std::out_of_range("gate " + g.name() + " targets a qubit outside the " +
                                    std::to_string(p.num_qubits()) + "-qubit Pauli string");
        }
    }
    std::size_t q = g.targets[0];
    bool x = p.x(q), z = p.z(q);
    switch (g.kind) {
        case GateKind::H:
            if (x && z) {
                out.add_phase(2);
            }
            out.set_bits(q, z, x);
            break;
        case GateKind::X:
            if (z) {
                out.add_phase(2);
            }
            break;
        case GateKind::Y:
            if (x != z) {
                out.add_phase(2);
            }
            break;
        case GateKind::Z:
            if (x) {
                out.add_phase(2);
            }
            break;
        case GateKind::S:
            conjugate_s(out, q);
            break;
        case GateKind::Rz: {
            auto turns = g.quarter_turns();
            if (!turns) {
                throw std::invalid_argument("conjugation by " + g.name() + " is not a Clifford gate");
            }
            for (int k = 0; k < *turns; k++) {
                conjugate_s(out, q);
            }
            break;
        }
        case GateKind::CZ: {
            std::size_t b = g.targets[1];
            bool xb = p.x(b), zb = p.z(b);
            if (x && xb && (z != zb)) {
                out.add_phase(2);
            }
            out.set_bits(q, x, z ^ xb);
            out.set_bits(b, xb, zb ^ x);
            break;
        }
    }
}

PauliString conjugate_pauli(const PauliString &p, const Gate &g) {
    PauliString out = p;
    conjugate_in_place(out, g);
    return out;
}

}  // namespace qecc1wqc
