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

#include "qecc1wqc/code5.hpp"

#include <stdexcept>

namespace qecc1wqc {

namespace {

struct SignedBasis {
    const char *bits;
    int sign;
};

constexpr SignedBasis kZeroL[16] = {
    {"00000", +1}, {"10010", +1}, {"01001", +1}, {"10100", +1}, {"01010", +1}, {"11011", -1},
    {"00110", -1}, {"11000", -1}, {"11101", -1}, {"00011", -1}, {"11110", -1}, {"01111", -1},
    {"10001", -1}, {"01100", -1}, {"10111", -1}, {"00101", +1},
};

std::size_t index_of(const char *bits) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < CODE_QUBITS; k++) {
        idx = (idx << 1) | (bits[k] == '1');
    }
    return idx;
}

}  // namespace

QubitState QubitState::from_symbol(char symbol) {
    const double r = 1 / std::sqrt(2.0);
    switch (symbol) {
        case '0':
            return {1, 0};
        case '1':
            return {0, 1};
        case '+':
            return {r, r};
        case '-':
            return {r, -r};
        default:
            throw std::invalid_argument(std::string("unknown qubit symbol '") + symbol + "'");
    }
}

QubitState QubitState::normalized() const {
    double n = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (n < 1e-12) {
        throw std::invalid_argument("qubit state has zero norm");
    }
    return {alpha / n, beta / n};
}

StateVector QubitState::state() const {
    return StateVector::from_amplitudes(1, {alpha, beta});
}

StateVector logical_zero() {
    std::vector<amp_t> a(32);
    for (const SignedBasis &b : kZeroL) {
        a[index_of(b.bits)] = 0.25 * b.sign;
    }
    return StateVector::from_amplitudes(CODE_QUBITS, std::move(a));
}

StateVector logical_one() {
    StateVector s = logical_zero();
    s.apply(logical_x());
    return s;
}

StateVector logical_state(amp_t alpha, amp_t beta) {
    StateVector z = logical_zero(), o = logical_one();
    std::vector<amp_t> a(32);
    for (std::size_t i = 0; i < 32; i++) {
        a[i] = alpha * z.amplitude(i) + beta * o.amplitude(i);
    }
    return StateVector::from_amplitudes(CODE_QUBITS, std::move(a));
}

StateVector logical_plus() {
    const double r = 1 / std::sqrt(2.0);
    return logical_state(r, r);
}

StateVector logical_minus() {
    const double r = 1 / std::sqrt(2.0);
    return logical_state(r, -r);
}

Circuit k5_to_logical_zero() {
    Circuit c(CODE_QUBITS);
    c.append(Gate::cz(1, 2)).append(Gate::cz(1, 4)).append(Gate::cz(3, 4));
    for (uint32_t q = 1; q < 5; q++) {
        c.append(Gate::x(q));
    }
    c.append(Gate::h(0));
    return c;
}

StateVector logical_zero_from_K5() {
    StateVector s = StateVector::from_symbols("+++++");
    for (uint32_t a = 0; a < 5; a++) {
        for (uint32_t b = a + 1; b < 5; b++) {
            s.apply(Gate::cz(a, b));
        }
    }
    s.apply_gates(k5_to_logical_zero());
    return s;
}

PauliString logical_x() {
    return PauliString::from_text("+XXXXX");
}

PauliString logical_z() {
    return PauliString::from_text("+ZZZZZ");
}

std::vector<PauliString> code_stabilizers() {
    // Pentagon graph generators K_a = Z_{a-1} X_a Z_{a+1}; K_a K_{a+1} commute with X^5 and Z^5.
    std::vector<PauliString> k;
    for (std::size_t a = 0; a < 5; a++) {
        PauliString p = PauliString::single(5, a, 'X');
        p.set((a + 4) % 5, 'Z');
        p.set((a + 1) % 5, 'Z');
        k.push_back(p);
    }
    std::vector<PauliString> out;
    for (std::size_t a = 0; a < 4; a++) {
        out.push_back(compose_pauli(k[a], k[a + 1]));
    }
    return out;
}

Circuit build_E1() {
    Circuit c(CODE_QUBITS);
    c.append(Gate::z(0)).append(Gate::h(0));
    for (uint32_t q = 1; q < 5; q++) {
        c.append(Gate::h(q));
    }
    for (uint32_t q = 1; q < 5; q++) {
        c.append(Gate::cz(0, q));
    }
    c.append(Gate::h(0));
    return c;
}

Circuit build_E2() {
    Circuit c(CODE_QUBITS);
    for (uint32_t q = 0; q < 5; q++) {
        c.append(Gate::cz(q, (q + 1) % 5));
    }
    return c;
}

Circuit build_encoder() {
    Circuit c = build_E1();
    c.append(build_E2());
    return c;
}

Circuit build_decoder() {
    return build_encoder().adjoint();
}

StateVector encode(amp_t alpha, amp_t beta) {
    std::vector<amp_t> a(32);
    a[0] = alpha;
    a[16] = beta;
    StateVector s = StateVector::from_amplitudes(CODE_QUBITS, std::move(a));
    s.apply_gates(build_encoder());
    return s;
}

Syndrome Syndrome::from_string(const std::string &abcd) {
    if (abcd.size() != 4 || abcd.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("syndrome must be four binary digits, got \"" + abcd + "\"");
    }
    Syndrome s;
    for (char c : abcd) {
        s.bits = (uint8_t)((s.bits << 1) | (c == '1'));
    }
    return s;
}

std::string Syndrome::str() const {
    std::string out;
    for (std::size_t k = 0; k < 4; k++) {
        out += bit(k) ? '1' : '0';
    }
    return out;
}

DecodeResult decode_and_syndrome(const StateVector &five) {
    if (five.num_qubits() != CODE_QUBITS) {
        throw std::invalid_argument("decode_and_syndrome expects a 5-qubit state");
    }
    StateVector s = five;
    s.apply_gates(build_decoder());
    Syndrome syn;
    for (uint32_t q = 1; q < 5; q++) {
        double p1 = s.probability_one(q, MeasureBasis::Z);
        uint8_t m = p1 > 0.5 ? 1 : 0;
        s.measure_forced(q, MeasureBasis::Z, m);
        syn.bits = (uint8_t)((syn.bits << 1) | m);
    }
    std::vector<uint32_t> keep = {0};
    return {syn, s.extract(keep)};
}

const std::vector<SyndromeRow> &syndrome_table() {
    static const std::vector<SyndromeRow> table = [] {
        struct Raw {
            const char *error, *syndrome, *outcome;
        };
        const Raw raw[16] = {
            {"None", "0000", "I"}, {"Z2", "1000", "I"},   {"Z3", "0100", "I"},   {"Z4", "0010", "I"},
            {"Z5", "0001", "I"},   {"X1", "1001", "X"},   {"X3", "1010", "X"},   {"X4", "0101", "X"},
            {"XZ3", "1110", "X"},  {"XZ4", "0111", "X"},  {"XZ1", "0110", "XZ"}, {"X2", "1011", "XZ"},
            {"X5", "1101", "XZ"},  {"XZ2", "0011", "XZ"}, {"XZ5", "1100", "XZ"}, {"Z1", "1111", "Z"},
        };
        std::vector<SyndromeRow> rows;
        for (const Raw &r : raw) {
            rows.push_back({r.error, named_error(r.error), Syndrome::from_string(r.syndrome), r.outcome});
        }
        return rows;
    }();
    return table;
}

PauliString named_error(const std::string &name) {
    PauliString p(CODE_QUBITS);
    if (name == "None" || name == "I") {
        return p;
    }
    std::string kind = name.substr(0, name.size() - 1);
    char label = name.back();
    if (label < '1' || label > '5' || (kind != "X" && kind != "Z" && kind != "XZ" && kind != "Y")) {
        throw std::invalid_argument("unknown single-qubit error \"" + name + "\"");
    }
    std::size_t q = (std::size_t)(label - '1');
    if (kind == "XZ") {
        return compose_pauli(PauliString::single(CODE_QUBITS, q, 'X'), PauliString::single(CODE_QUBITS, q, 'Z'));
    }
    return PauliString::single(CODE_QUBITS, q, kind[0]);
}

PauliString correction_for(Syndrome s) {
    for (const SyndromeRow &row : syndrome_table()) {
        if (row.syndrome == s) {
            if (row.outcome == "XZ") {
                return compose_pauli(PauliString::from_text("+X"), PauliString::from_text("+Z"));
            }
            return PauliString::single(1, 0, row.outcome[0]);
        }
    }
    throw std::logic_error("syndrome table is not total");
}

}  // namespace qecc1wqc
