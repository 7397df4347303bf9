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

#include "qecc1wqc/pauli.hpp"

#include <bit>
#include <stdexcept>

#include "qecc1wqc/simd.hpp"

namespace qecc1wqc {

namespace {
std::size_t words_for(std::size_t n) {
    return (n + 63) / 64;
}
}  // namespace

PauliString::PauliString(std::size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {
}

PauliString PauliString::from_text(std::string_view text) {
    uint8_t phase = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') {
            phase = 2;
        }
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = (phase + 1) & 3;
        pos++;
    }
    PauliString result(text.size() - pos);
    for (std::size_t q = 0; pos < text.size(); pos++, q++) {
        char c = text[pos];
        if (c == '_') {
            c = 'I';
        }
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("bad Pauli character '" + std::string(1, text[pos]) + "' in \"" +
                                        std::string(text) + "\"");
        }
        result.set(q, c);
    }
    result.phase_ = phase;
    return result;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t q, char p) {
    PauliString result(num_qubits);
    result.set(q, p);
    return result;
}

bool PauliString::x(std::size_t q) const {
    return (xs_[q / 64] >> (q % 64)) & 1;
}

bool PauliString::z(std::size_t q) const {
    return (zs_[q / 64] >> (q % 64)) & 1;
}

char PauliString::at(std::size_t q) const {
    static constexpr char letters[4] = {'I', 'X', 'Z', 'Y'};
    return letters[(int)x(q) | ((int)z(q) << 1)];
}

void PauliString::set_bits(std::size_t q, bool x, bool z) {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) +
                                "-qubit Pauli string");
    }
    uint64_t bit = uint64_t{1} << (q % 64);
    xs_[q / 64] = x ? (xs_[q / 64] | bit) : (xs_[q / 64] & ~bit);
    zs_[q / 64] = z ? (zs_[q / 64] | bit) : (zs_[q / 64] & ~bit);
}

void PauliString::set(std::size_t q, char p) {
    switch (p) {
        case 'I':
            set_bits(q, false, false);
            break;
        case 'X':
            set_bits(q, true, false);
            break;
        case 'Y':
            set_bits(q, true, true);
            break;
        case 'Z':
            set_bits(q, false, true);
            break;
        default:
            throw std::invalid_argument(std::string("bad Pauli character '") + p + "'");
    }
}

bool PauliString::is_identity() const {
    for (std::size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

std::size_t PauliString::weight() const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < xs_.size(); w++) {
        total += (std::size_t)std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("commutes_with: qubit count mismatch");
    }
    uint64_t acc = 0;
    for (std::size_t w = 0; w < xs_.size(); w++) {
        acc ^= (xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w]);
    }
    return std::popcount(acc) % 2 == 0;
}

PauliString PauliString::restricted(std::span<const std::size_t> qubits) const {
    PauliString result(qubits.size());
    for (std::size_t k = 0; k < qubits.size(); k++) {
        result.set_bits(k, x(qubits[k]), z(qubits[k]));
    }
    result.phase_ = phase_;
    return result;
}

std::string PauliString::str() const {
    static constexpr const char *prefixes[4] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[phase_];
    for (std::size_t q = 0; q < num_qubits_; q++) {
        out += at(q);
    }
    return out;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("Pauli product of " + std::to_string(num_qubits_) + "-qubit and " +
                                    std::to_string(rhs.num_qubits_) + "-qubit strings");
    }
    uint8_t k = simd::active_kernels().mul_rows(xs_.data(), zs_.data(), rhs.xs_.data(), rhs.zs_.data(), xs_.size());
    phase_ = (uint8_t)((phase_ + rhs.phase_ + k) & 3);
    return *this;
}

PauliString compose_pauli(const PauliString &p, const PauliString &q) {
    PauliString result = p;
    result *= q;
    return result;
}

}  // namespace qecc1wqc
