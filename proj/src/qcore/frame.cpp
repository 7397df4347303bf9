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

#include "qecc1wqc/frame.hpp"

#include <stdexcept>

namespace qecc1wqc {

bool ByproductFrame::is_trivial() const {
    for (const Bits &b : bits_) {
        if (b.x || b.z) {
            return false;
        }
    }
    return true;
}

void ByproductFrame::record(const PauliString &p) {
    if (p.num_qubits() != bits_.size()) {
        throw std::invalid_argument("frame has " + std::to_string(bits_.size()) + " qubits, Pauli has " +
                                    std::to_string(p.num_qubits()));
    }
    for (std::size_t q = 0; q < bits_.size(); q++) {
        bits_[q].x ^= p.x(q);
        bits_[q].z ^= p.z(q);
    }
}

void ByproductFrame::conjugate(const Gate &g) {
    PauliString p = conjugate_pauli(as_pauli(), g);
    for (std::size_t q = 0; q < bits_.size(); q++) {
        bits_[q] = {p.x(q), p.z(q)};
    }
}

ByproductFrame &ByproductFrame::operator^=(const ByproductFrame &other) {
    if (other.bits_.size() != bits_.size()) {
        throw std::invalid_argument("frame size mismatch");
    }
    for (std::size_t q = 0; q < bits_.size(); q++) {
        bits_[q].x ^= other.bits_[q].x;
        bits_[q].z ^= other.bits_[q].z;
    }
    return *this;
}

PauliString ByproductFrame::as_pauli() const {
    PauliString p(bits_.size());
    for (std::size_t q = 0; q < bits_.size(); q++) {
        p.set_bits(q, bits_[q].x, bits_[q].z);
    }
    return p;
}

}  // namespace qecc1wqc
