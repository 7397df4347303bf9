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
#include <string_view>
#include <vector>

namespace qecc1wqc {

/// A Pauli operator i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1}, where each P_q is
/// one of the Hermitian Paulis I, X, Y, Z.
///
/// Qubit q is stored as the bit pair (x_q, z_q): I=(0,0), X=(1,0), Y=(1,1),
/// Z=(0,1). Bits are packed into 64-bit words so products can run through the
/// word-parallel kernels. Text form is a phase prefix ("+", "-", "+i", "-i")
/// followed by one letter per qubit, e.g. "+XZIIY" or "-iYY".
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t num_qubits);

    /// Throws std::invalid_argument on malformed text.
    static PauliString from_text(std::string_view text);

    /// Weight-one operator `p` in {'I','X','Y','Z'} on qubit q.
    static PauliString single(std::size_t num_qubits, std::size_t q, char p);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t num_words() const {
        return xs_.size();
    }

    bool x(std::size_t q) const;
    bool z(std::size_t q) const;
    char at(std::size_t q) const;
    void set(std::size_t q, char p);
    void set_bits(std::size_t q, bool x, bool z);

    /// Exponent k of the i^k prefix, in 0..3.
    uint8_t phase() const {
        return phase_;
    }
    void set_phase(uint8_t k) {
        phase_ = k & 3;
    }
    /// Multiplies the operator by i^k.
    void add_phase(uint8_t k) {
        phase_ = (phase_ + k) & 3;
    }

    bool is_identity() const;
    std::size_t weight() const;
    bool commutes_with(const PauliString &other) const;

    /// Copy restricted to the listed qubits, in that order. The phase is kept.
    PauliString restricted(std::span<const std::size_t> qubits) const;

    std::string str() const;

    std::span<uint64_t> x_words() {
        return xs_;
    }
    std::span<uint64_t> z_words() {
        return zs_;
    }
    std::span<const uint64_t> x_words() const {
        return xs_;
    }
    std::span<const uint64_t> z_words() const {
        return zs_;
    }

    /// this <- this * rhs.
    PauliString &operator*=(const PauliString &rhs);

    friend bool operator==(const PauliString &a, const PauliString &b) = default;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    uint8_t phase_ = 0;
};

/// Operator product p * q with the phase tracked exactly. Throws
/// std::invalid_argument when the qubit counts differ.
PauliString compose_pauli(const PauliString &p, const PauliString &q);

}  // namespace qecc1wqc
