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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qecc1wqc/circuit.hpp"
#include "qecc1wqc/pauli.hpp"
#include "qecc1wqc/statevector.hpp"

namespace qecc1wqc {

// Five-qubit code. Physical qubits 0..4 of a register correspond to labels 1..5 in the
// usual presentation; qubit 0 carries the unencoded input and the decoded output.

constexpr std::size_t CODE_QUBITS = 5;

/// Unencoded single-qubit state alpha|0> + beta|1>.
struct QubitState {
    amp_t alpha = 1;
    amp_t beta = 0;

    /// One of '0', '1', '+', '-'.
    static QubitState from_symbol(char symbol);
    /// Throws std::invalid_argument for the zero vector.
    QubitState normalized() const;
    StateVector state() const;
};

StateVector logical_zero();
StateVector logical_one();
StateVector logical_plus();
StateVector logical_minus();

/// alpha|0L> + beta|1L>.
StateVector logical_state(amp_t alpha, amp_t beta);

/// Complete graph K5 followed by CZ(1,2) CZ(1,4) CZ(3,4), then X on 1..4, then H0.
StateVector logical_zero_from_K5();
Circuit k5_to_logical_zero();

PauliString logical_x();
PauliString logical_z();

/// Four commuting weight-4 generators of the code space (adjacent pentagon stabilizer products).
std::vector<PauliString> code_stabilizers();

/// |psi>_0 |0000>_{1..4} -> ((alpha - beta)|+>^5 + (alpha + beta)|->^5) / sqrt2.
Circuit build_E1();
/// Pentagon CZ ring.
Circuit build_E2();
/// E2 after E1.
Circuit build_encoder();
/// Adjoint of the encoder.
Circuit build_decoder();

/// Encodes a 1-qubit state into a 5-qubit register.
StateVector encode(amp_t alpha, amp_t beta);

/// Four syndrome bits read from qubits 1..4; bit a (qubit 1) is the most significant.
struct Syndrome {
    uint8_t bits = 0;

    static Syndrome from_string(const std::string &abcd);
    bool bit(std::size_t k) const {
        return (bits >> (3 - k)) & 1;
    }
    std::string str() const;
    friend bool operator==(const Syndrome &, const Syndrome &) = default;
};

struct DecodeResult {
    Syndrome syndrome;
    StateVector qubit;
};

/// Decodes and measures qubits 1..4 in Z. For states outside the single-error set the more likely
/// outcome is taken at each measurement.
DecodeResult decode_and_syndrome(const StateVector &five);

/// One-qubit correction (I, X, XZ or Z) undoing the decoded byproduct.
PauliString correction_for(Syndrome s);

struct SyndromeRow {
    std::string error;
    /// Error on the 5-qubit register (identity for "None").
    PauliString error_pauli;
    Syndrome syndrome;
    /// Byproduct on the decoded qubit: "I", "X", "XZ" or "Z".
    std::string outcome;
};

/// The 16 single-error rows: None, then Z, X and XZ errors in table order.
const std::vector<SyndromeRow> &syndrome_table();

/// Operator for a named single error such as "X1", "Z3", "XZ5" (labels 1..5) or "None".
PauliString named_error(const std::string &name);

}  // namespace qecc1wqc
