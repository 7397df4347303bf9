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
#include <vector>

#include "qecc1wqc/gate.hpp"
#include "qecc1wqc/pauli.hpp"

namespace qecc1wqc {

/// Pauli byproducts accumulated by measurement-based steps, up to global phase.
/// The actual state equals frame.as_pauli() applied to the reference state.
class ByproductFrame {
   public:
    ByproductFrame() = default;
    explicit ByproductFrame(std::size_t num_qubits) : bits_(num_qubits) {
    }

    std::size_t num_qubits() const {
        return bits_.size();
    }
    bool x(std::size_t q) const {
        return bits_.at(q).x;
    }
    bool z(std::size_t q) const {
        return bits_.at(q).z;
    }
    bool is_trivial() const;

    /// Multiplies the frame by a Pauli (phase dropped).
    void record(const PauliString &p);
    void record_x(std::size_t q) {
        bits_.at(q).x ^= true;
    }
    void record_z(std::size_t q) {
        bits_.at(q).z ^= true;
    }
    void clear(std::size_t q) {
        bits_.at(q) = {};
    }

    /// Pushes the frame through a Clifford gate applied to the actual state.
    void conjugate(const Gate &g);

    ByproductFrame &operator^=(const ByproductFrame &other);
    friend ByproductFrame operator^(ByproductFrame a, const ByproductFrame &b) {
        a ^= b;
        return a;
    }

    PauliString as_pauli() const;

    friend bool operator==(const ByproductFrame &, const ByproductFrame &) = default;

   private:
    struct Bits {
        bool x = false;
        bool z = false;
        friend bool operator==(const Bits &, const Bits &) = default;
    };
    std::vector<Bits> bits_;
};

}  // namespace qecc1wqc
