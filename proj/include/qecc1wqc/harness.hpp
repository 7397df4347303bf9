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
#include <string>
#include <vector>

#include <json.hpp>

#include "qecc1wqc/code5.hpp"
#include "qecc1wqc/pauli.hpp"
#include "qecc1wqc/protocols.hpp"

namespace qecc1wqc {

/// A trial succeeds when its output fidelity reaches this value.
inline constexpr double SUCCESS_FIDELITY = 1 - 1e-6;

inline constexpr const char *REPORT_SCHEMA = "1";

enum class ErrorKind : uint8_t { None, ExhaustiveSinglePauli, Depolarizing, Targeted };

struct ErrorModel {
    ErrorKind kind = ErrorKind::None;
    /// Per-qubit error probability for Depolarizing.
    double p = 0;
    /// Five-qubit Pauli for Targeted.
    PauliString pauli;
    InjectionStage stage = InjectionStage::PreDecode;

    static ErrorModel depolarizing(double p);
    static ErrorModel targeted(PauliString pauli, InjectionStage stage = InjectionStage::PreDecode);

    /// Throws std::invalid_argument for p outside [0, 1] or a Pauli not on five qubits.
    void validate() const;
    nlohmann::json to_json() const;
};

struct TrialRecord {
    /// Injected five-qubit Pauli ("+IIIII" when none).
    std::string injected;
    std::size_t weight = 0;
    Syndrome syndrome;
    uint8_t m = 0;
    double fidelity = 0;
    bool success = false;

    nlohmann::json to_json() const;
};

struct RunReport {
    std::string kind;
    uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<TrialRecord> records;
    std::size_t successes = 0;
    double mean_fidelity = 0;
    /// Mode-specific results and operation counts.
    nlohmann::json details = nlohmann::json::object();
    /// Every asserted property of the run holds.
    bool passed = false;

    nlohmann::json to_json() const;
};

/// Independent generator for trial `k` of a run seeded with `seed`.
std::mt19937_64 trial_rng(uint64_t seed, uint64_t k);

/// Haar-random single-qubit state.
QubitState random_qubit_state(std::mt19937_64 &rng);

/// Sixteen single-error rows (no error plus all 15 single-qubit Paulis), each with `states`
/// random inputs and angles, plus the weight-two error X1X2 which must not be corrected.
RunReport run_exhaustive_correction_sweep(uint64_t seed = 1, std::size_t states = 20);

/// Failure table over all 4^5 Pauli patterns on the protected register. Pattern index digits
/// (base 4, qubit 0 most significant) are 0=I, 1=X, 2=Y, 3=Z.
struct FailureOracle {
    std::vector<uint8_t> fails;

    static PauliString pattern(std::size_t index);
    static std::size_t weight(std::size_t index);
    /// Fraction of weight-w patterns that are not corrected.
    double failure_fraction(std::size_t w) const;
    /// Exact logical failure probability under i.i.d. depolarizing noise of strength p.
    double failure_probability(double p) const;
    /// Probability of an error of weight at least two, times the weight-two failure fraction.
    double weight2_estimate(double p) const;

    nlohmann::json to_json() const;
};

const FailureOracle &failure_oracle();

/// Monte Carlo over `trials` trials with one depolarizing opportunity per protected qubit.
/// `threads` = 0 uses the hardware concurrency.
RunReport run_depolarizing(double p, std::size_t trials, uint64_t seed = 1, unsigned threads = 0);

/// Runs `model` for `trials` trials (Targeted or None).
RunReport run_error_model(const ErrorModel &model, std::size_t trials, uint64_t seed = 1);

/// Feed-forward frame of the logical qubit carried between hops.
struct LogicalFrame {
    uint8_t x = 0;
    uint8_t z = 0;

    /// Angle to realize Rz(xi) through the byproduct X^x.
    double adapt(double xi) const {
        return x ? -xi : xi;
    }
    /// Update after a hop with outcome m.
    LogicalFrame after_hop(uint8_t m) const {
        return {static_cast<uint8_t>(m ^ z), x};
    }
};

/// Teleports an encoded state hop after hop between two columns, applying H Rz(xi_k) at hop k.
/// `forced_m` (when non-empty) fixes the outcome of each hop.
RunReport run_two_column_computation(const std::vector<double> &xis, QubitState psi, uint64_t seed = 1,
                                     const std::vector<uint8_t> &forced_m = {});

/// One-qubit reference for the computation: H Rz(xi_k) ... H Rz(xi_1)|psi>.
QubitState computation_oracle(const std::vector<double> &xis, QubitState psi);

}  // namespace qecc1wqc
