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

#include "qecc1wqc/tableau.hpp"

#include <stdexcept>
#include <utility>

namespace qecc1wqc {

Tableau::Tableau(std::size_t num_qubits) : n_(num_qubits) {
    rows_.reserve(2 * n_);
    for (std::size_t q = 0; q < n_; q++) {
        rows_.push_back(PauliString::single(n_, q, 'X'));
    }
    for (std::size_t q = 0; q < n_; q++) {
        rows_.push_back(PauliString::single(n_, q, 'Z'));
    }
}

Tableau Tableau::from_symbols(std::string_view symbols) {
    Tableau t(symbols.size());
    for (std::size_t q = 0; q < symbols.size(); q++) {
        uint32_t k = (uint32_t)q;
        switch (symbols[q]) {
            case '0':
                break;
            case '1':
                t.apply(Gate::x(k));
                break;
            case '+':
                t.apply(Gate::h(k));
                break;
            case '-':
                t.apply(Gate::x(k)).apply(Gate::h(k));
                break;
            default:
                throw std::invalid_argument(std::string("unknown initial symbol '") + symbols[q] + "'");
        }
    }
    return t;
}

namespace {

// Symplectic product as a bit.
bool anticommute(const PauliString &a, const PauliString &b) {
    return !a.commutes_with(b);
}

}  // namespace

Tableau Tableau::from_stabilizers(const std::vector<PauliString> &generators) {
    std::size_t n = generators.size();
    for (const PauliString &g : generators) {
        if (g.num_qubits() != n) {
            throw std::invalid_argument("need exactly n generators on n qubits");
        }
        if (g.phase() & 1) {
            throw std::invalid_argument("generator " + g.str() + " is not Hermitian");
        }
    }
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = a + 1; b < n; b++) {
            if (anticommute(generators[a], generators[b])) {
                throw std::invalid_argument("generators " + generators[a].str() + " and " + generators[b].str() +
                                            " anticommute");
            }
        }
    }
    if (row_reduce(generators).size() != n) {
        throw std::invalid_argument("generators are not independent");
    }

    // Solve <d_k, g_j> = delta_jk. Unknown v = (vx | vz); <v, g> = vx.gz + vz.gx.
    std::vector<std::vector<uint8_t>> a(n, std::vector<uint8_t>(2 * n + n, 0));
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t q = 0; q < n; q++) {
            a[j][q] = generators[j].z(q);
            a[j][n + q] = generators[j].x(q);
        }
        a[j][2 * n + j] = 1;
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < 2 * n && r < n; c++) {
        std::size_t p = r;
        while (p < n && !a[p][c]) {
            p++;
        }
        if (p == n) {
            continue;
        }
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < n; i++) {
            if (i != r && a[i][c]) {
                for (std::size_t k = 0; k < 3 * n; k++) {
                    a[i][k] ^= a[r][k];
                }
            }
        }
        pivot_col.push_back(c);
        r++;
    }
    Tableau t;
    t.n_ = n;
    t.rows_.assign(2 * n, PauliString(n));
    for (std::size_t k = 0; k < n; k++) {
        PauliString d(n);
        for (std::size_t i = 0; i < n; i++) {
            if (a[i][2 * n + k]) {
                std::size_t c = pivot_col[i];
                if (c < n) {
                    d.set_bits(c, true, d.z(c));
                } else {
                    d.set_bits(c - n, d.x(c - n), true);
                }
            }
        }
        t.rows_[k] = d;
        t.rows_[n + k] = generators[k];
    }
    // Make destabilizers mutually commute.
    for (std::size_t k = 0; k < n; k++) {
        for (std::size_t j = 0; j < k; j++) {
            if (anticommute(t.rows_[k], t.rows_[j])) {
                t.rows_[k] *= t.rows_[n + j];
            }
        }
        t.rows_[k].set_phase(0);
    }
    return t;
}

std::vector<PauliString> Tableau::stabilizers() const {
    return {rows_.begin() + (std::ptrdiff_t)n_, rows_.end()};
}

Tableau &Tableau::apply(const Gate &g) {
    if (!g.is_clifford()) {
        throw std::invalid_argument("tableau cannot apply non-Clifford gate " + g.name());
    }
    for (uint32_t k = 0; k < g.arity(); k++) {
        if (g.targets[k] >= n_) {
            throw std::out_of_range("gate " + g.name() + " targets a qubit outside the tableau");
        }
    }
    for (PauliString &row : rows_) {
        conjugate_in_place(row, g);
    }
    return *this;
}

Tableau &Tableau::apply(const PauliString &p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size does not match the tableau");
    }
    for (std::size_t k = n_; k < 2 * n_; k++) {
        if (anticommute(rows_[k], p)) {
            rows_[k].add_phase(2);
        }
    }
    return *this;
}

Tableau &Tableau::apply_gates(const Circuit &c) {
    if (c.num_qubits() != n_) {
        throw std::invalid_argument("circuit size does not match the tableau");
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

StabMeasurement Tableau::measure(uint32_t qubit, MeasureBasis basis, std::optional<uint8_t> forced,
                                 std::mt19937_64 *rng) {
    if (qubit >= n_) {
        throw std::out_of_range("measured qubit outside the tableau");
    }
    if (basis == MeasureBasis::XY) {
        throw std::invalid_argument("tableau measurements support the Z and X bases only");
    }
    if (basis == MeasureBasis::X) {
        apply(Gate::h(qubit));
        StabMeasurement m;
        try {
            m = measure(qubit, MeasureBasis::Z, forced, rng);
        } catch (...) {
            apply(Gate::h(qubit));
            throw;
        }
        apply(Gate::h(qubit));
        return m;
    }

    std::size_t p = 2 * n_;
    for (std::size_t k = n_; k < 2 * n_; k++) {
        if (rows_[k].x(qubit)) {
            p = k;
            break;
        }
    }
    if (p == 2 * n_) {
        PauliString acc(n_);
        for (std::size_t k = 0; k < n_; k++) {
            if (rows_[k].x(qubit)) {
                acc *= rows_[n_ + k];
            }
        }
        uint8_t outcome = acc.phase() == 2 ? 1 : 0;
        if (forced.has_value() && (*forced & 1) != outcome) {
            throw std::domain_error("forced outcome " + std::to_string(*forced) + " contradicts deterministic result " +
                                    std::to_string(outcome) + " on qubit " + std::to_string(qubit));
        }
        return {outcome, true};
    }

    uint8_t outcome;
    if (forced.has_value()) {
        outcome = *forced & 1;
    } else {
        if (rng == nullptr) {
            throw std::invalid_argument("unforced measurement needs a random generator");
        }
        outcome = (uint8_t)((*rng)() & 1);
    }
    for (std::size_t k = 0; k < 2 * n_; k++) {
        if (k != p && rows_[k].x(qubit)) {
            rows_[k] *= rows_[p];
            if (k < n_) {
                rows_[k].set_phase(0);
            }
        }
    }
    rows_[p - n_] = rows_[p];
    rows_[p - n_].set_phase(0);
    rows_[p] = PauliString::single(n_, qubit, 'Z');
    rows_[p].set_phase(outcome ? 2 : 0);
    return {outcome, false};
}

int Tableau::expectation(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size does not match the tableau");
    }
    for (std::size_t k = n_; k < 2 * n_; k++) {
        if (anticommute(rows_[k], p)) {
            return 0;
        }
    }
    PauliString acc(n_);
    for (std::size_t k = 0; k < n_; k++) {
        if (anticommute(rows_[k], p)) {
            acc *= rows_[n_ + k];
        }
    }
    return ((p.phase() - acc.phase()) & 3) == 0 ? 1 : -1;
}

bool Tableau::is_disentangled(uint32_t qubit) const {
    for (char c : {'Z', 'X', 'Y'}) {
        if (expectation(PauliString::single(n_, qubit, c)) != 0) {
            return true;
        }
    }
    return false;
}

void Tableau::reset(uint32_t qubit) {
    if (!is_disentangled(qubit)) {
        throw std::domain_error("cannot reset qubit " + std::to_string(qubit) + ": it is entangled");
    }
    PauliString z = PauliString::single(n_, qubit, 'Z');
    int e = expectation(z);
    if (e == 0) {
        measure(qubit, MeasureBasis::Z, uint8_t{0}, nullptr);
    } else if (e < 0) {
        apply(Gate::x(qubit));
    }
}

std::vector<PauliString> row_reduce(std::vector<PauliString> rows) {
    if (rows.empty()) {
        return rows;
    }
    std::size_t n = rows[0].num_qubits();
    std::size_t r = 0;
    for (std::size_t c = 0; c < 2 * n && r < rows.size(); c++) {
        bool is_x = c < n;
        std::size_t q = is_x ? c : c - n;
        auto bit = [&](const PauliString &p) { return is_x ? p.x(q) : p.z(q); };
        std::size_t p = r;
        while (p < rows.size() && !bit(rows[p])) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (i != r && bit(rows[i])) {
                rows[i] *= rows[r];
            }
        }
        r++;
    }
    rows.resize(r);
    return rows;
}

std::vector<PauliString> Tableau::canonical_form() const {
    return row_reduce(stabilizers());
}

bool stab_equal(const Tableau &a, const Tableau &b) {
    return a.num_qubits() == b.num_qubits() && a.canonical_form() == b.canonical_form();
}

nlohmann::json Tableau::to_json() const {
    nlohmann::json stabs = nlohmann::json::array(), destabs = nlohmann::json::array();
    for (std::size_t k = 0; k < n_; k++) {
        destabs.push_back(rows_[k].str());
        stabs.push_back(rows_[n_ + k].str());
    }
    return {{"n", n_}, {"stabilizers", std::move(stabs)}, {"destabilizers", std::move(destabs)}};
}

}  // namespace qecc1wqc
