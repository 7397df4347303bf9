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
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qecc1wqc/circuit.hpp"
#include "qecc1wqc/gate.hpp"
#include "qecc1wqc/pauli.hpp"

namespace qecc1wqc {

struct StabMeasurement {
    uint8_t outcome = 0;
    bool deterministic = false;
};

/// Aaronson-Gottesman stabilizer tableau with signed generators and destabilizers.
class Tableau {
   public:
    Tableau() = default;
    /// |0...0>.
    explicit Tableau(std::size_t num_qubits);

    /// Product state from symbols in {'0', '1', '+', '-'}.
    static Tableau from_symbols(std::string_view symbols);

    /// Stabilizer state with the given generators. Throws std::invalid_argument unless they are
    /// n independent, mutually commuting Hermitian Paulis.
    static Tableau from_stabilizers(const std::vector<PauliString> &generators);

    std::size_t num_qubits() const {
        return n_;
    }
    const PauliString &stabilizer(std::size_t k) const {
        return rows_.at(n_ + k);
    }
    const PauliString &destabilizer(std::size_t k) const {
        return rows_.at(k);
    }
    std::vector<PauliString> stabilizers() const;

    /// Throws std::invalid_argument for a non-Clifford gate.
    Tableau &apply(const Gate &g);
    Tableau &apply(const PauliString &p);
    Tableau &apply_gates(const Circuit &c);

    /// Measures in the Z or X basis. A random outcome takes `forced` when given, otherwise a bit
    /// from `rng`. Forcing against a deterministic result throws std::domain_error.
    StabMeasurement measure(uint32_t qubit, MeasureBasis basis, std::optional<uint8_t> forced,
                            std::mt19937_64 *rng);
    StabMeasurement measure_forced(uint32_t qubit, MeasureBasis basis, uint8_t outcome) {
        return measure(qubit, basis, outcome, nullptr);
    }

    /// Returns +1 or -1 when +-p is in the stabilizer group and 0 otherwise. p must be Hermitian.
    int expectation(const PauliString &p) const;

    /// True when the qubit is in a pure state unentangled with the rest.
    bool is_disentangled(uint32_t qubit) const;

    /// Resets a disentangled qubit to |0>. Throws std::domain_error when it is entangled.
    void reset(uint32_t qubit);

    /// Row-reduced stabilizer generators, pivots over columns x0..x(n-1) then z0..z(n-1).
    std::vector<PauliString> canonical_form() const;

    /// {"n": n, "stabilizers": [...], "destabilizers": [...]}.
    nlohmann::json to_json() const;

   private:
    std::size_t n_ = 0;
    // Rows 0..n-1 are destabilizers, rows n..2n-1 stabilizers.
    std::vector<PauliString> rows_;
};

/// Equality of stabilizer groups including signs.
bool stab_equal(const Tableau &a, const Tableau &b);

/// Reduced row echelon form of a list of commuting Paulis (same pivot order as canonical_form).
/// Dependent rows are dropped.
std::vector<PauliString> row_reduce(std::vector<PauliString> rows);

}  // namespace qecc1wqc
