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

#include <stdexcept>

#include "qecc1wqc/protocols.hpp"

namespace qecc1wqc {

namespace {

constexpr std::size_t kVerifyQubits = 10;
constexpr uint32_t kAncilla0 = 5;
constexpr uint32_t kCheck = 9;

void controlled_x(StateVector &s, uint32_t c, uint32_t t) {
    s.apply(Gate::h(t)).apply(Gate::cz(c, t)).apply(Gate::h(t));
}

void controlled_pauli(StateVector &s, uint32_t c, uint32_t t, char p) {
    switch (p) {
        case 'Z':
            s.apply(Gate::cz(c, t));
            break;
        case 'X':
            controlled_x(s, c, t);
            break;
        case 'Y':
            // S X S^dagger = Y.
            s.apply(Gate::s(t)).apply(Gate::z(t));
            controlled_x(s, c, t);
            s.apply(Gate::s(t));
            break;
        default:
            break;
    }
}

// Z-basis measurement taking the more likely outcome, then reset to |0>.
uint8_t measure_and_reset(StateVector &s, uint32_t q) {
    uint8_t bit = s.probability_one(q, MeasureBasis::Z) > 0.5 ? 1 : 0;
    s.measure_forced(q, MeasureBasis::Z, bit);
    if (bit) {
        s.apply(Gate::x(q));
    }
    return bit;
}

}  // namespace

VerifyReport ghz_verify_logical(const StateVector &data, std::size_t rounds, VerifyFault fault,
                                const PauliString &fault_pauli, uint64_t seed) {
    if (data.num_qubits() != CODE_QUBITS) {
        throw std::invalid_argument("ghz_verify_logical expects a five-qubit register");
    }
    if (rounds == 0) {
        throw std::invalid_argument("ghz_verify_logical needs at least one round");
    }
    std::mt19937_64 rng(seed);
    StateVector s = tensor(data, StateVector(kVerifyQubits - CODE_QUBITS));
    if (fault == VerifyFault::Data) {
        if (fault_pauli.num_qubits() != CODE_QUBITS) {
            throw std::invalid_argument("data fault must be a five-qubit Pauli");
        }
        PauliString w(kVerifyQubits);
        for (std::size_t q = 0; q < CODE_QUBITS; q++) {
            w.set_bits(q, fault_pauli.x(q), fault_pauli.z(q));
        }
        s.apply(w);
    }

    const std::vector<PauliString> gens = code_stabilizers();
    VerifyReport rep;
    for (std::size_t r = 0; r < rounds; r++) {
        VerifyRound round;
        round.generator = gens[r % gens.size()];

        // Star graph on the ancilla, Hadamards on the leaves: (|0000> + |1111>)/sqrt2.
        for (uint32_t k = 0; k < 4; k++) {
            s.apply(Gate::h(kAncilla0 + k));
        }
        for (uint32_t k = 1; k < 4; k++) {
            s.apply(Gate::cz(kAncilla0, kAncilla0 + k));
            s.apply(Gate::h(kAncilla0 + k));
        }
        if (fault == VerifyFault::AncillaX && r == 0) {
            s.apply(Gate::x(kAncilla0));
        }
        for (uint32_t k = 0; k < 3; k++) {
            controlled_x(s, kAncilla0 + k, kCheck);
            controlled_x(s, kAncilla0 + k + 1, kCheck);
            round.ancilla_parities.push_back(measure_and_reset(s, kCheck));
            round.ancilla_rejected |= round.ancilla_parities.back() != 0;
        }
        if (fault == VerifyFault::AncillaZ && r == 0) {
            s.apply(Gate::z(kAncilla0));
        }

        if (!round.ancilla_rejected) {
            uint32_t k = 0;
            for (uint32_t q = 0; q < CODE_QUBITS; q++) {
                char p = round.generator.at(q);
                if (p != 'I') {
                    controlled_pauli(s, kAncilla0 + k, q, p);
                    k++;
                }
            }
            uint8_t parity = 0;
            for (uint32_t a = 0; a < 4; a++) {
                parity ^= s.measure(kAncilla0 + a, MeasureBasis::X, 0, std::nullopt, &rng).outcome;
                s.apply(Gate::h(kAncilla0 + a));
            }
            uint8_t expected = round.generator.phase() == 2 ? 1 : 0;
            round.data_flag = parity != expected;
        }
        for (uint32_t a = 0; a < 4; a++) {
            measure_and_reset(s, kAncilla0 + a);
        }
        rep.any_data_flag |= round.data_flag;
        rep.any_ancilla_rejected |= round.ancilla_rejected;
        rep.rounds.push_back(std::move(round));
    }
    return rep;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json rs = nlohmann::json::array();
    for (const VerifyRound &r : rounds) {
        rs.push_back({{"generator", r.generator.str()},
                      {"ancilla_parities", r.ancilla_parities},
                      {"ancilla_rejected", r.ancilla_rejected},
                      {"data_flag", r.data_flag}});
    }
    return {{"rounds", rs}, {"any_data_flag", any_data_flag}, {"any_ancilla_rejected", any_ancilla_rejected}};
}

}  // namespace qecc1wqc
