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

#include "qecc1wqc/circuit.hpp"
#include "qecc1wqc/code5.hpp"
#include "qecc1wqc/graph.hpp"
#include "qecc1wqc/statevector.hpp"
#include "qecc1wqc/tableau.hpp"

namespace qecc1wqc {

// Registers of five physical qubits are laid out consecutively: register r occupies
// qubits 5r..5r+4, and qubit 5r is its input/output qubit.

/// Encoder (E2 after E1) on register `reg` of an n-qubit circuit.
Circuit encoder_on(std::size_t n, std::size_t reg);
/// Decoder on register `reg`.
Circuit decoder_on(std::size_t n, std::size_t reg);
/// Five CZ gates from every qubit of register `reg` to `target`.
Circuit ghz_on(std::size_t n, std::size_t reg, uint32_t target);
/// All 25 CZ gates between registers `a` and `b`.
Circuit cross_cz(std::size_t n, std::size_t a, std::size_t b);
/// Pentagon ring on register `reg`.
Circuit pentagon_on(std::size_t n, std::size_t reg);
/// Z^L (or X^L) on register `reg` of an n-qubit Pauli.
PauliString logical_z_on(std::size_t n, std::size_t reg);
PauliString logical_x_on(std::size_t n, std::size_t reg);

// ---------------------------------------------------------------------------------------------
// Logical cluster states

struct LCS2 {
    /// 35 CZs (two pentagons plus 25 cross links) preceded by H on all ten qubits.
    Circuit circuit;
    StateVector state;
    Graph graph;
};

LCS2 build_LCS2();

/// (|-L>|0L> + sign |+L>|1L>)/sqrt2 assembled from the logical basis states.
StateVector lcs2_printed_rhs(int sign = +1);

/// Encode(A), H on qubit 5, GHZ from A to qubit 5, encode(B). Acts on |psi>|0>^9; 23 CZs.
Circuit build_lcs2_sequential();

/// alpha|0L>|+> + beta|1L>|-> on six qubits.
StateVector build_logical_physical(QubitState psi);

// ---------------------------------------------------------------------------------------------
// Encoded teleportation

enum class InjectionStage {
    /// After the GHZ link and the encoding of B, just before decoding A.
    PreDecode,
    /// Right after encoding A, before the GHZ link (X-type errors then spread to B).
    PostEncode,
};

const char *stage_name(InjectionStage s);
InjectionStage stage_from_name(const std::string &name);

struct InjectedError {
    /// Pauli on the five qubits of register A.
    PauliString pauli;
    InjectionStage stage = InjectionStage::PreDecode;
};

struct TeleportReport {
    double xi = 0;
    /// Angle actually used for the XY measurement of qubit 0.
    double measured_angle = 0;
    uint8_t m = 0;
    Syndrome syndrome;
    PauliString correction;
    std::optional<InjectedError> injected;
    /// Output register vs (X^L)^m H^L Rz^L(xi)|psi^L>.
    double fidelity = 0;
    /// Qubit 0 and register B after correction vs alpha|0>|+L> + beta|1>|-L>.
    double intermediate_fidelity = 0;
    std::size_t hop_two_qubit_gates = 0;
    std::size_t full_two_qubit_gates = 0;

    nlohmann::json to_json() const;
};

struct HopResult {
    uint8_t m = 0;
    Syndrome syndrome;
    PauliString correction;
    /// Register holding the output (five qubits).
    StateVector output{0};
    /// Qubit 0 plus the new register just before the XY measurement (six qubits).
    StateVector pre_measurement{0};
};

/// One teleportation hop from an encoded register. Measures qubit 0 in XY(measure_angle) after
/// decoding, syndrome extraction and correction.
HopResult teleport_hop(const StateVector &encoded, double measure_angle, const std::optional<InjectedError> &error,
                       std::optional<uint8_t> forced_m, std::mt19937_64 *rng);

/// Full circuit: encode A, GHZ, encode B, decode A; then syndrome, correction and the
/// XY(-xi) measurement, so the output is (X^L)^m H^L Rz^L(xi)|psi^L>.
TeleportReport encoded_teleport(QubitState psi, double xi, const std::optional<InjectedError> &error = std::nullopt,
                                std::optional<uint8_t> forced_m = std::nullopt, std::mt19937_64 *rng = nullptr);

/// Two-qubit gates of the unitary part of the full teleportation (32) and of one hop (23).
Circuit build_teleport_unitary();
Circuit build_hop_unitary();

// ---------------------------------------------------------------------------------------------
// Push-through identity

struct PushThroughReport {
    std::vector<double> fidelities;
    double min_fidelity = 0;
    bool passed = false;
    /// Same comparison with the Z^L factor removed.
    std::vector<double> control_fidelities;
    bool control_failed = false;

    nlohmann::json to_json() const;
};

/// Compares E2E1 prod CZ(n,6) H6 |0>^5 with Z^L C prod prod CZ |+>^5 on |+>^5 and `random_inputs`
/// random register-A states.
PushThroughReport push_through_check(std::size_t random_inputs = 20, uint64_t seed = 1);

// ---------------------------------------------------------------------------------------------
// Encoded horseshoe (four registers in a line)

enum class HorseshoeRoute {
    /// encode A, GHZ(A->5), encode B, GHZ(B->10), encode C, GHZ(C->15), encode D.
    Sequential,
    /// encode A and D, CZ(5,10), GHZ(A->5), GHZ(D->10), encode B and C.
    Bridged,
};

/// 20-qubit circuit acting on |psi>_0 |phi>_15 with every other qubit in |0>.
Circuit build_horseshoe_circuit(HorseshoeRoute route);

/// Pentagons on four registers plus complete bipartite links between consecutive registers.
Graph horseshoe_graph();

enum class HorseshoeMode { Tableau, Dense };

struct HorseshoeReport {
    HorseshoeMode mode = HorseshoeMode::Tableau;
    std::size_t sequential_two_qubit_gates = 0;
    std::size_t bridged_two_qubit_gates = 0;
    /// Both routes give the same state.
    bool routes_agree = false;
    /// Matches CZ^L_AB CZ^L_BC CZ^L_CD |psi^L>|+^L>|+^L>|phi^L>.
    bool matches_target = false;
    /// Bridged route after encode(A, D) and CZ(5,10) matches |psi^L>_A (|0>|+> + |1>|->)/sqrt2 |phi^L>_D.
    bool slice_matches = false;
    /// For psi = phi = |+>: the state is Z^L on every register times the horseshoe graph state.
    std::optional<bool> matches_graph;
    std::vector<std::size_t> graph_degrees;

    nlohmann::json to_json() const;
};

/// Tableau mode requires stabilizer inputs given as symbols.
HorseshoeReport horseshoe_check(char psi, char phi, HorseshoeMode mode = HorseshoeMode::Tableau);
/// Dense mode with arbitrary inputs.
HorseshoeReport horseshoe_check_dense(QubitState psi, QubitState phi);

// ---------------------------------------------------------------------------------------------
// GHZ-ancilla verification of an encoded state

struct VerifyRound {
    PauliString generator;
    /// Pairwise Z-parity checks of the GHZ ancilla (qubit pairs 5-6, 6-7, 7-8).
    std::vector<uint8_t> ancilla_parities;
    bool ancilla_rejected = false;
    /// Measured generator disagrees with +1 (only meaningful when the ancilla passed).
    bool data_flag = false;
};

enum class VerifyFault {
    None,
    /// Pauli on a data qubit before the first round.
    Data,
    /// X on the first GHZ qubit right after preparation (caught by the ancilla parity checks).
    AncillaX,
    /// Z on the first GHZ qubit after its verification (produces a false data flag).
    AncillaZ,
};

struct VerifyReport {
    std::vector<VerifyRound> rounds;
    bool any_data_flag = false;
    bool any_ancilla_rejected = false;

    nlohmann::json to_json() const;
};

/// Measures the code generators round by round (round r uses generator r mod 4) with a verified
/// four-qubit GHZ ancilla. `fault_pauli` is used for VerifyFault::Data (five-qubit Pauli).
VerifyReport ghz_verify_logical(const StateVector &data, std::size_t rounds = 4, VerifyFault fault = VerifyFault::None,
                                const PauliString &fault_pauli = PauliString(), uint64_t seed = 1);

// ---------------------------------------------------------------------------------------------
// Nine-gate entangler

struct EntanglerReport {
    Circuit circuit;
    std::size_t two_qubit_gates = 0;
    std::size_t bipartite_gates = 0;
    Graph pivoted;
    Graph nine_gate_graph;
    bool pivot_matches = false;
    /// Local Cliffords mapping the K5,5 graph state to the nine-gate graph state.
    Circuit local_layer;
    bool layer_verified = false;

    nlohmann::json certificate() const;
};

EntanglerReport nine_gate_entangler();

}  // namespace qecc1wqc
