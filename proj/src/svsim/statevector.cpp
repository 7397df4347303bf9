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

#include "qecc1wqc/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qecc1wqc/simd.hpp"

namespace qecc1wqc {

namespace {

constexpr double kForcedFloor = 1e-12;
constexpr double kCutTolerance = 1e-10;
const double kInvSqrt2 = 1 / std::sqrt(2.0);

void check_size(std::size_t n) {
    if (n > MAX_DENSE_QUBITS) {
        throw std::length_error("dense simulation limited to " + std::to_string(MAX_DENSE_QUBITS) + " qubits, got " +
                                std::to_string(n));
    }
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : n_(num_qubits) {
    check_size(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, amp_t{});
    amps_[0] = 1;
}

StateVector StateVector::from_symbols(std::string_view symbols) {
    StateVector s(symbols.size());
    for (std::size_t q = 0; q < symbols.size(); q++) {
        switch (symbols[q]) {
            case '0':
                break;
            case '1':
                s.apply(Gate::x((uint32_t)q));
                break;
            case '+':
                s.apply(Gate::h((uint32_t)q));
                break;
            case '-':
                s.apply(Gate::x((uint32_t)q));
                s.apply(Gate::h((uint32_t)q));
                break;
            default:
                throw std::invalid_argument(std::string("unknown initial symbol '") + symbols[q] + "'");
        }
    }
    return s;
}

StateVector StateVector::from_amplitudes(std::size_t num_qubits, std::vector<amp_t> amps) {
    check_size(num_qubits);
    if (amps.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude vector length is not 2^n");
    }
    StateVector s(num_qubits, std::move(amps));
    if (s.norm() < kForcedFloor) {
        throw std::invalid_argument("zero amplitude vector");
    }
    s.renormalize();
    return s;
}

std::size_t StateVector::mask_of(uint32_t q) const {
    return std::size_t{1} << (n_ - 1 - q);
}

void StateVector::check_qubit(uint32_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for a " + std::to_string(n_) +
                                "-qubit state");
    }
}

double StateVector::norm() const {
    double s = 0;
    for (const amp_t &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

void StateVector::renormalize() {
    double r = 1 / norm();
    for (amp_t &a : amps_) {
        a *= r;
    }
}

StateVector &StateVector::apply(const Gate &g) {
    for (uint32_t k = 0; k < g.arity(); k++) {
        check_qubit(g.targets[k]);
    }
    const simd::KernelSet &k = simd::active_kernels();
    std::size_t m = mask_of(g.targets[0]);
    std::size_t len = amps_.size();
    switch (g.kind) {
        case GateKind::H: {
            const amp_t mat[4] = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
            k.apply_1q(amps_.data(), len, m, mat);
            break;
        }
        case GateKind::X: {
            const amp_t mat[4] = {0, 1, 1, 0};
            k.apply_1q(amps_.data(), len, m, mat);
            break;
        }
        case GateKind::Y: {
            const amp_t mat[4] = {0, amp_t{0, -1}, amp_t{0, 1}, 0};
            k.apply_1q(amps_.data(), len, m, mat);
            break;
        }
        case GateKind::Z:
            k.apply_diag(amps_.data(), len, m, 1, -1);
            break;
        case GateKind::S:
            k.apply_diag(amps_.data(), len, m, 1, amp_t{0, 1});
            break;
        case GateKind::Rz:
            k.apply_diag(amps_.data(), len, m, 1, std::polar(1.0, g.angle));
            break;
        case GateKind::CZ:
            k.apply_cz(amps_.data(), len, m, mask_of(g.targets[1]));
            break;
    }
    return *this;
}

StateVector &StateVector::apply(const PauliString &p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size does not match the state");
    }
    static const amp_t ipow[4] = {1, amp_t{0, 1}, -1, amp_t{0, -1}};
    for (uint32_t q = 0; q < n_; q++) {
        switch (p.at(q)) {
            case 'X':
                apply(Gate::x(q));
                break;
            case 'Y':
                apply(Gate::y(q));
                break;
            case 'Z':
                apply(Gate::z(q));
                break;
            default:
                break;
        }
    }
    if (p.phase() != 0) {
        for (amp_t &a : amps_) {
            a *= ipow[p.phase()];
        }
    }
    return *this;
}

StateVector &StateVector::apply_gates(const Circuit &c) {
    if (c.num_qubits() != n_) {
        throw std::invalid_argument("circuit size does not match the state");
    }
    for (const Instruction &ins : c.instructions()) {
        const Gate *g = std::get_if<Gate>(&ins);
        if (g == nullptr) {
            throw std::invalid_argument("apply_gates on a circuit with measurements");
        }
        apply(*g);
    }
    return *this;
}

double StateVector::probability_one(uint32_t qubit, MeasureBasis basis, double angle) const {
    check_qubit(qubit);
    if (basis == MeasureBasis::Z) {
        return simd::active_kernels().prob_one(amps_.data(), amps_.size(), mask_of(qubit));
    }
    if (basis == MeasureBasis::X) {
        angle = 0;
    }
    // P(1) = (1 - Re(e^{-i angle} <X + iY>)) / 2 with <X+iY> = 2 sum conj(a0) a1.
    std::size_t m = mask_of(qubit);
    amp_t c{};
    for (std::size_t i = 0; i < amps_.size(); i++) {
        if ((i & m) == 0) {
            c += std::conj(amps_[i]) * amps_[i | m];
        }
    }
    double p1 = 0.5 - std::real(std::polar(1.0, -angle) * c);
    return std::clamp(p1, 0.0, 1.0);
}

MeasurementRecord StateVector::measure(uint32_t qubit, MeasureBasis basis, double angle,
                                       std::optional<uint8_t> forced, std::mt19937_64 *rng) {
    check_qubit(qubit);
    if (basis == MeasureBasis::X) {
        angle = 0;
    }
    double p1 = probability_one(qubit, basis, angle);
    uint8_t outcome;
    if (forced.has_value()) {
        outcome = *forced & 1;
    } else {
        if (rng == nullptr) {
            throw std::invalid_argument("unforced measurement needs a random generator");
        }
        outcome = std::uniform_real_distribution<double>(0, 1)(*rng) < p1 ? 1 : 0;
    }
    double p = outcome ? p1 : 1 - p1;
    if (p < kForcedFloor) {
        throw std::domain_error("measurement outcome " + std::to_string(outcome) + " on qubit " +
                                std::to_string(qubit) + " has probability " + std::to_string(p));
    }
    std::size_t m = mask_of(qubit);
    if (basis == MeasureBasis::Z) {
        for (std::size_t i = 0; i < amps_.size(); i++) {
            if (((i & m) != 0) != (outcome == 1)) {
                amps_[i] = 0;
            }
        }
    } else {
        // Project with |e><e|, |e> = (|0> + s e^{i angle}|1>)/sqrt2.
        amp_t ph = std::polar(1.0, angle) * (outcome ? -1.0 : 1.0);
        for (std::size_t i = 0; i < amps_.size(); i++) {
            if ((i & m) == 0) {
                amp_t overlap = 0.5 * (amps_[i] + std::conj(ph) * amps_[i | m]);
                amps_[i] = overlap;
                amps_[i | m] = ph * overlap;
            }
        }
    }
    renormalize();
    return MeasurementRecord{qubit, basis, angle, outcome, p};
}

amp_t StateVector::inner(const StateVector &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    amp_t s{};
    for (std::size_t i = 0; i < amps_.size(); i++) {
        s += std::conj(amps_[i]) * other.amps_[i];
    }
    return s;
}

namespace {

struct Cut {
    std::vector<std::size_t> keep_masks;
    std::size_t rest_mask = 0;
};

Cut make_cut(std::size_t n, std::span<const uint32_t> subset) {
    Cut cut;
    std::vector<bool> used(n, false);
    for (uint32_t q : subset) {
        if (q >= n || used[q]) {
            throw std::invalid_argument("subset has an invalid or repeated qubit");
        }
        used[q] = true;
        cut.keep_masks.push_back(std::size_t{1} << (n - 1 - q));
    }
    for (std::size_t q = 0; q < n; q++) {
        if (!used[q]) {
            cut.rest_mask |= std::size_t{1} << (n - 1 - q);
        }
    }
    return cut;
}

// Index of subset basis state k (MSB = first listed qubit) embedded in the full index.
std::size_t embed(const Cut &cut, std::size_t k) {
    std::size_t idx = 0;
    std::size_t ns = cut.keep_masks.size();
    for (std::size_t j = 0; j < ns; j++) {
        if (k & (std::size_t{1} << (ns - 1 - j))) {
            idx |= cut.keep_masks[j];
        }
    }
    return idx;
}

// Enumerates full indices with bits only in the rest mask.
template <typename F>
void for_each_rest(std::size_t rest_mask, F &&f) {
    std::size_t r = 0;
    while (true) {
        f(r);
        if (r == rest_mask) {
            break;
        }
        r = (r - rest_mask) & rest_mask;
    }
}

}  // namespace

double StateVector::subset_purity(std::span<const uint32_t> subset) const {
    Cut cut = make_cut(n_, subset);
    std::size_t d = std::size_t{1} << subset.size();
    std::vector<std::size_t> emb(d);
    for (std::size_t k = 0; k < d; k++) {
        emb[k] = embed(cut, k);
    }
    // rho[a][b] = sum_r psi[a, r] conj(psi[b, r]).
    std::vector<amp_t> rho(d * d);
    for_each_rest(cut.rest_mask, [&](std::size_t r) {
        for (std::size_t a = 0; a < d; a++) {
            amp_t va = amps_[emb[a] | r];
            if (va == amp_t{}) {
                continue;
            }
            for (std::size_t b = 0; b < d; b++) {
                rho[a * d + b] += va * std::conj(amps_[emb[b] | r]);
            }
        }
    });
    double purity = 0;
    for (const amp_t &v : rho) {
        purity += std::norm(v);
    }
    return purity;
}

StateVector StateVector::extract(std::span<const uint32_t> subset) const {
    double purity = subset_purity(subset);
    // Rounding in the reduced density matrix grows with its dimension.
    double tol = std::max(kCutTolerance, 1e-12 * static_cast<double>(std::size_t{1} << subset.size()));
    if (purity < 1 - tol) {
        throw std::domain_error("subset is entangled with the rest (purity " + std::to_string(purity) + ")");
    }
    Cut cut = make_cut(n_, subset);
    std::size_t d = std::size_t{1} << subset.size();
    // Pick the rest configuration with the largest weight and read the subset column.
    std::size_t best = 0;
    double best_w = -1;
    for_each_rest(cut.rest_mask, [&](std::size_t r) {
        double w = 0;
        for (std::size_t k = 0; k < d; k++) {
            w += std::norm(amps_[embed(cut, k) | r]);
        }
        if (w > best_w) {
            best_w = w;
            best = r;
        }
    });
    std::vector<amp_t> out(d);
    for (std::size_t k = 0; k < d; k++) {
        out[k] = amps_[embed(cut, k) | best];
    }
    return from_amplitudes(subset.size(), std::move(out));
}

amp_t StateVector::expectation(const PauliString &p) const {
    StateVector t = *this;
    t.apply(p);
    return inner(t);
}

nlohmann::json StateVector::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t i = 0; i < amps_.size(); i++) {
        if (std::abs(amps_[i]) > 1e-12) {
            list.push_back({i, amps_[i].real(), amps_[i].imag()});
        }
    }
    return {{"n", n_}, {"amplitudes", std::move(list)}};
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::size_t n = a.num_qubits() + b.num_qubits();
    check_size(n);
    std::span<const amp_t> x = a.amplitudes(), y = b.amplitudes();
    std::vector<amp_t> out(x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); i++) {
        for (std::size_t j = 0; j < y.size(); j++) {
            out[i * y.size() + j] = x[i] * y[j];
        }
    }
    return StateVector::from_amplitudes(n, std::move(out));
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::min(1.0, std::abs(a.inner(b)));
}

bool equal_up_to_phase(const StateVector &a, const StateVector &b, double tol) {
    return fidelity(a, b) >= 1 - tol;
}

DenseRun run_circuit(StateVector &state, const Circuit &c, std::span<const std::optional<uint8_t>> forced,
                     std::mt19937_64 *rng) {
    if (c.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("circuit size does not match the state");
    }
    c.validate();
    DenseRun run;
    run.slots.assign(c.num_slots(), 0);
    for (const Instruction &ins : c.instructions()) {
        if (const Gate *g = std::get_if<Gate>(&ins)) {
            state.apply(*g);
        } else if (const Measure *m = std::get_if<Measure>(&ins)) {
            std::optional<uint8_t> f;
            if (m->slot < forced.size()) {
                f = forced[m->slot];
            }
            MeasurementRecord rec = state.measure(m->qubit, m->basis, m->angle, f, rng);
            run.slots[m->slot] = rec.outcome;
            run.records.push_back(rec);
        } else {
            const CorrectIf &cif = std::get<CorrectIf>(ins);
            if (run.slots[cif.slot]) {
                state.apply(cif.pauli);
            }
        }
    }
    return run;
}

}  // namespace qecc1wqc
