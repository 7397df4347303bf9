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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qecc1wqc/circuit.hpp"
#include "qecc1wqc/gate.hpp"
#include "qecc1wqc/pauli.hpp"

namespace qecc1wqc {

using amp_t = std::complex<double>;

constexpr std::size_t MAX_DENSE_QUBITS = 24;

struct MeasurementRecord {
    uint32_t qubit = 0;
    MeasureBasis basis = MeasureBasis::Z;
    double angle = 0;
    uint8_t outcome = 0;
    /// Probability of the observed outcome before collapse.
    double probability = 1;
};

/// Dense pure state. Qubit 0 is the most significant bit of the basis index.
class StateVector {
   public:
    /// |0...0> on n qubits.
    explicit StateVector(std::size_t num_qubits);

    /// Product state from one symbol per qubit out of {'0', '1', '+', '-'}.
    /// The text form uses those characters directly, e.g. "0+-1".
    static StateVector from_symbols(std::string_view symbols);

    static StateVector from_amplitudes(std::size_t num_qubits, std::vector<amp_t> amps);

    std::size_t num_qubits() const {
        return n_;
    }
    std::span<const amp_t> amplitudes() const {
        return amps_;
    }
    amp_t amplitude(std::size_t index) const {
        return amps_.at(index);
    }
    double norm() const;

    StateVector &apply(const Gate &g);
    StateVector &apply(const PauliString &p);
    /// Applies the gates of a measurement-free circuit.
    StateVector &apply_gates(const Circuit &c);

    /// Probability of outcome 1 when measuring `qubit` in the given basis.
    double probability_one(uint32_t qubit, MeasureBasis basis, double angle = 0) const;

    /// Collapses onto the outcome. XY(angle) projects onto (|0> +- e^{i angle}|1>)/sqrt2,
    /// outcome 0 for the + sign; X is XY(0). The measured qubit keeps its post-measurement state.
    /// Throws std::domain_error when a forced outcome has probability below 1e-12.
    MeasurementRecord measure(uint32_t qubit, MeasureBasis basis, double angle, std::optional<uint8_t> forced,
                              std::mt19937_64 *rng);
    MeasurementRecord measure_forced(uint32_t qubit, MeasureBasis basis, uint8_t outcome, double angle = 0) {
        return measure(qubit, basis, angle, outcome, nullptr);
    }

    /// <this|other>.
    amp_t inner(const StateVector &other) const;

    /// Purity of the reduced state on `subset`.
    double subset_purity(std::span<const uint32_t> subset) const;

    /// State of `subset` (in the listed order) when the state is a product across the cut.
    /// Throws std::domain_error when entanglement across the cut exceeds 1e-10.
    StateVector extract(std::span<const uint32_t> subset) const;

    /// Expectation value <P> (real part; P Hermitian up to its phase).
    amp_t expectation(const PauliString &p) const;

    /// {"n": n, "amplitudes": [[index, re, im], ...]} for |a| > 1e-12.
    nlohmann::json to_json() const;

   private:
    StateVector(std::size_t n, std::vector<amp_t> amps) : n_(n), amps_(std::move(amps)) {
    }
    std::size_t mask_of(uint32_t q) const;
    void check_qubit(uint32_t q) const;
    void renormalize();

    std::size_t n_ = 0;
    std::vector<amp_t> amps_;
};

/// a (x) b, with a on the leading qubits. Throws std::length_error beyond the dense budget.
StateVector tensor(const StateVector &a, const StateVector &b);

/// |<a|b>|. Throws std::invalid_argument on a size mismatch.
double fidelity(const StateVector &a, const StateVector &b);

/// True when fidelity(a, b) >= 1 - tol.
bool equal_up_to_phase(const StateVector &a, const StateVector &b, double tol = 1e-9);

/// Result of running a circuit with measurements.
struct DenseRun {
    std::vector<MeasurementRecord> records;
    std::vector<uint8_t> slots;
};

/// Runs every instruction of `c`. Slot k takes its value from forced[k] when given,
/// otherwise it is sampled with `rng` (which must then be non-null).
DenseRun run_circuit(StateVector &state, const Circuit &c, std::span<const std::optional<uint8_t>> forced = {},
                     std::mt19937_64 *rng = nullptr);

}  // namespace qecc1wqc
