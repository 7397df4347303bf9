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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qecc1wqc/gate.hpp"
#include "qecc1wqc/pauli.hpp"

namespace qecc1wqc {

/// Z and X are the Pauli bases. XY(xi) is the basis
/// |+-_xi> = (|0> +- e^{i xi}|1>)/sqrt(2); outcome 0 is the "+" vector.
enum class MeasureBasis : uint8_t { Z, X, XY };

struct Measure {
    uint32_t qubit = 0;
    MeasureBasis basis = MeasureBasis::Z;
    double angle = 0;
    uint32_t slot = 0;

    friend bool operator==(const Measure &, const Measure &) = default;
};

/// Applies `pauli` when the outcome stored in `slot` is 1.
struct CorrectIf {
    uint32_t slot = 0;
    PauliString pauli;

    friend bool operator==(const CorrectIf &, const CorrectIf &) = default;
};

using Instruction = std::variant<Gate, Measure, CorrectIf>;

/// Ordered instruction list over `num_qubits` qubits. Result slots are
/// numbered by the caller; every slot is written exactly once and before any
/// CorrectIf reads it.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
    }

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Instruction> &instructions() const {
        return ops_;
    }
    std::size_t size() const {
        return ops_.size();
    }

    /// Each append validates targets and throws std::out_of_range /
    /// std::invalid_argument.
    Circuit &append(const Gate &g);
    Circuit &measure(uint32_t qubit, MeasureBasis basis, uint32_t slot, double angle = 0);
    Circuit &correct_if(uint32_t slot, PauliString pauli);

    /// Appends `other` with its qubit k mapped to qubit_map[k].
    Circuit &append(const Circuit &other, std::span<const uint32_t> qubit_map);
    Circuit &append(const Circuit &other);

    /// Number of slots referenced; max slot + 1.
    std::size_t num_slots() const;

    /// Throws std::invalid_argument if the slot discipline is broken.
    void validate() const;

    /// Inverse of a gate-only circuit (reversed order, each gate inverted).
    /// Throws std::invalid_argument if the circuit contains measurements.
    Circuit adjoint() const;

    std::vector<Gate> gates() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

   private:
    void check_qubit(uint32_t q) const;

    std::size_t num_qubits_ = 0;
    std::vector<Instruction> ops_;
};

/// Number of GateApp instructions acting on two qubits.
std::size_t two_qubit_gate_count(const Circuit &c);

}  // namespace qecc1wqc
