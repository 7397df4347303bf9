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

#include "qecc1wqc/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "qecc1wqc/code5.hpp"
#include "qecc1wqc/protocols.hpp"

#ifndef QECC1WQC_SCHEDULE_DIR
#define QECC1WQC_SCHEDULE_DIR "schedules"
#endif

namespace qecc1wqc {

using nlohmann::json;

Axis axis_from_name(std::string_view name) {
    if (name == "H" || name == "horizontal") {
        return Axis::Horizontal;
    }
    if (name == "V" || name == "vertical") {
        return Axis::Vertical;
    }
    throw std::invalid_argument("unknown axis '" + std::string(name) + "'");
}

const char *axis_name(Axis a) {
    return a == Axis::Horizontal ? "H" : "V";
}

CellRole role_from_name(std::string_view name) {
    if (name == "data") {
        return CellRole::Data;
    }
    if (name == "ancilla") {
        return CellRole::Ancilla;
    }
    if (name == "inactive") {
        return CellRole::Inactive;
    }
    throw std::invalid_argument("unknown cell role '" + std::string(name) + "'");
}

const char *role_name(CellRole r) {
    switch (r) {
        case CellRole::Data:
            return "data";
        case CellRole::Ancilla:
            return "ancilla";
        case CellRole::Inactive:
            return "inactive";
    }
    return "inactive";
}

std::string CellRC::str() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

namespace {

CellRC rc_from_json(const json &j) {
    if (!j.is_array() || j.size() < 2) {
        throw std::invalid_argument("cell coordinates must be [row, col]");
    }
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

bool is_prep_symbol(char c) {
    return c == '0' || c == '1' || c == '+' || c == '-';
}

char symbol_from_json(const json &j) {
    std::string s = j.get<std::string>();
    if (s.size() != 1) {
        throw std::invalid_argument("state symbol must be one character");
    }
    return s[0];
}

}  // namespace

Schedule Schedule::from_json(const json &j) {
    try {
        Schedule s;
        s.name = j.value("name", std::string{});
        const json &grid = j.at("grid");
        s.rows = grid.at(0).get<int>();
        s.cols = grid.at(1).get<int>();
        if (s.rows <= 0 || s.cols <= 0) {
            throw std::invalid_argument("grid dimensions must be positive");
        }
        for (const json &c : j.at("cells")) {
            CellSpec spec;
            spec.rc = rc_from_json(c.at("rc"));
            spec.role = role_from_name(c.value("role", std::string("ancilla")));
            spec.init = c.contains("init") ? symbol_from_json(c.at("init")) : '0';
            if (c.contains("label")) {
                spec.label = c.at("label").get<int>();
            }
            s.cells.push_back(spec);
        }
        for (const json &st : j.at("steps")) {
            Step step;
            std::string op = st.at("op").get<std::string>();
            if (op == "prepare") {
                step.kind = Step::Kind::Prepare;
                for (const json &c : st.at("cells")) {
                    step.prepare.emplace_back(CellRC{c.at(0).get<int>(), c.at(1).get<int>()},
                                              symbol_from_json(c.at(2)));
                }
            } else if (op == "cz") {
                step.kind = Step::Kind::GlobalCZ;
                step.axis = axis_from_name(st.at("axis").get<std::string>());
            } else if (op == "measure_x") {
                step.kind = Step::Kind::MeasureX;
                for (const json &c : st.at("cells")) {
                    step.measure.push_back(rc_from_json(c));
                }
            } else if (op == "local") {
                step.kind = Step::Kind::Local;
                for (const json &g : st.at("gates")) {
                    step.local.emplace_back(CellRC{g.at(0).get<int>(), g.at(1).get<int>()},
                                            gate_kind_from_name(g.at(2).get<std::string>()));
                }
            } else if (op == "relabel") {
                step.kind = Step::Kind::Relabel;
                for (const json &m : st.at("moves")) {
                    step.relabel.emplace_back(m.at(0).get<int>(), CellRC{m.at(1).get<int>(), m.at(2).get<int>()});
                }
            } else {
                throw std::invalid_argument("unknown step op '" + op + "'");
            }
            s.steps.push_back(std::move(step));
        }
        if (j.contains("target")) {
            s.target = TargetSpec{j.at("target").at("circuit").get<std::string>(),
                                  j.at("target").at("inputs").get<std::string>()};
        }
        if (j.contains("regions")) {
            for (auto it = j.at("regions").begin(); it != j.at("regions").end(); ++it) {
                s.regions.emplace_back(it.key(), it.value().get<std::vector<int>>());
            }
        }
        return s;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed schedule: ") + e.what());
    }
}

json Schedule::to_json() const {
    json j;
    j["name"] = name;
    j["grid"] = {rows, cols};
    j["cells"] = json::array();
    for (const CellSpec &c : cells) {
        json cj = {{"rc", {c.rc.row, c.rc.col}}, {"role", role_name(c.role)}, {"init", std::string(1, c.init)}};
        if (c.label) {
            cj["label"] = *c.label;
        }
        j["cells"].push_back(cj);
    }
    j["steps"] = json::array();
    for (const Step &s : steps) {
        json sj;
        switch (s.kind) {
            case Step::Kind::Prepare:
                sj["op"] = "prepare";
                sj["cells"] = json::array();
                for (const auto &[rc, sym] : s.prepare) {
                    sj["cells"].push_back({rc.row, rc.col, std::string(1, sym)});
                }
                break;
            case Step::Kind::GlobalCZ:
                sj["op"] = "cz";
                sj["axis"] = axis_name(s.axis);
                break;
            case Step::Kind::MeasureX:
                sj["op"] = "measure_x";
                sj["cells"] = json::array();
                for (const CellRC &rc : s.measure) {
                    sj["cells"].push_back({rc.row, rc.col});
                }
                break;
            case Step::Kind::Local:
                sj["op"] = "local";
                sj["gates"] = json::array();
                for (const auto &[rc, g] : s.local) {
                    sj["gates"].push_back({rc.row, rc.col, std::string(gate_kind_name(g))});
                }
                break;
            case Step::Kind::Relabel:
                sj["op"] = "relabel";
                sj["moves"] = json::array();
                for (const auto &[label, rc] : s.relabel) {
                    sj["moves"].push_back({label, rc.row, rc.col});
                }
                break;
        }
        j["steps"].push_back(sj);
    }
    if (target) {
        j["target"] = {{"circuit", target->circuit}, {"inputs", target->inputs}};
    }
    if (!regions.empty()) {
        j["regions"] = json::object();
        for (const auto &[name, labels] : regions) {
            j["regions"][name] = labels;
        }
    }
    return j;
}

std::size_t Schedule::global_cz_count() const {
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [](const Step &s) { return s.kind == Step::Kind::GlobalCZ; }));
}

json OpCountReport::to_json() const {
    return {{"global_cz", global_cz},
            {"measured_ancillae", measured_ancillae},
            {"local_layers", local_layers},
            {"prepare_layers", prepare_layers}};
}

json VerifyResult::to_json() const {
    json j = {{"ok", ok}, {"diagnostic", diagnostic}, {"leftover", json::array()}};
    for (const CellRC &rc : leftover) {
        j["leftover"].push_back({rc.row, rc.col});
    }
    return j;
}

// ---------------------------------------------------------------------------------------------
// Lattice

Lattice::Lattice(int rows, int cols, const std::vector<CellSpec> &cells) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    std::size_t n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    roles_.assign(n, CellRole::Inactive);
    labels_.assign(n, -1);
    zero_.assign(n, 1);
    std::set<int> seen_labels;
    std::vector<std::pair<int, std::size_t>> choi;
    for (const CellSpec &c : cells) {
        std::size_t i = index(c.rc);
        roles_[i] = c.role;
        if (c.label) {
            if (c.role != CellRole::Data) {
                throw std::invalid_argument("label on non-data cell " + c.rc.str());
            }
            if (!seen_labels.insert(*c.label).second) {
                throw std::invalid_argument("duplicate data label " + std::to_string(*c.label));
            }
            labels_[i] = *c.label;
        }
        if (c.init == 'p') {
            if (!c.label) {
                throw std::invalid_argument("input cell " + c.rc.str() + " needs a data label");
            }
            choi.emplace_back(*c.label, i);
        } else if (!is_prep_symbol(c.init)) {
            throw std::invalid_argument(std::string("bad initial symbol '") + c.init + "'");
        }
        if (c.role == CellRole::Inactive && c.init != '0') {
            throw std::invalid_argument("inactive cell " + c.rc.str() + " must start in |0>");
        }
    }
    std::sort(choi.begin(), choi.end());
    tab_ = Tableau(n + choi.size());
    frame_ = ByproductFrame(n + choi.size());
    for (std::size_t j = 0; j < choi.size(); j++) {
        uint32_t ref = static_cast<uint32_t>(n + j);
        uint32_t q = static_cast<uint32_t>(choi[j].second);
        tab_.apply(Gate::h(q));
        tab_.apply(Gate::h(ref));
        tab_.apply(Gate::cz(q, ref));
        tab_.apply(Gate::h(ref));
        zero_[q] = 0;
        refs_.emplace_back(choi[j].first, ref);
    }
    for (const CellSpec &c : cells) {
        if (c.init != 'p' && c.init != '0') {
            std::size_t i = index(c.rc);
            if (c.init == '1' || c.init == '-') {
                tab_.apply(Gate::x(static_cast<uint32_t>(i)));
            }
            if (c.init == '+' || c.init == '-') {
                tab_.apply(Gate::h(static_cast<uint32_t>(i)));
            }
            zero_[i] = 0;
        }
    }
}

std::size_t Lattice::index(CellRC rc) const {
    if (rc.row < 0 || rc.row >= rows_ || rc.col < 0 || rc.col >= cols_) {
        throw std::out_of_range("cell " + rc.str() + " outside the " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " grid");
    }
    return static_cast<std::size_t>(rc.row) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(rc.col);
}

uint32_t Lattice::qubit(CellRC rc) const {
    return static_cast<uint32_t>(index(rc));
}

CellRole Lattice::role(CellRC rc) const {
    return roles_[index(rc)];
}

std::optional<int> Lattice::label_at(CellRC rc) const {
    int l = labels_[index(rc)];
    if (l < 0) {
        return std::nullopt;
    }
    return l;
}

CellRC Lattice::cell_of(int label) const {
    for (std::size_t i = 0; i < labels_.size(); i++) {
        if (labels_[i] == label) {
            return {static_cast<int>(i) / cols_, static_cast<int>(i) % cols_};
        }
    }
    throw std::out_of_range("no data cell carries label " + std::to_string(label));
}

std::vector<int> Lattice::labels() const {
    std::vector<int> out;
    for (int l : labels_) {
        if (l >= 0) {
            out.push_back(l);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void Lattice::apply_cz(uint32_t a, uint32_t b) {
    tab_.apply(Gate::cz(a, b));
    bool xa = frame_.x(a);
    bool xb = frame_.x(b);
    if (xa) {
        frame_.record_z(b);
    }
    if (xb) {
        frame_.record_z(a);
    }
}

void Lattice::apply_local(uint32_t q, GateKind g) {
    Gate gate{g, {q, q}, 0};
    if (g == GateKind::CZ || g == GateKind::Rz) {
        throw std::invalid_argument("local steps take single-qubit Clifford gates H, S, X, Y, Z");
    }
    tab_.apply(gate);
    frame_.conjugate(gate);
    if (g != GateKind::Z && g != GateKind::S) {
        zero_[q] = 0;
    }
}

void Lattice::global_cz(Axis axis) {
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            CellRC a{r, c};
            CellRC b = axis == Axis::Horizontal ? CellRC{r, c + 1} : CellRC{r + 1, c};
            if (b.row >= rows_ || b.col >= cols_) {
                continue;
            }
            std::size_t ia = index(a);
            std::size_t ib = index(b);
            if (roles_[ia] == CellRole::Inactive || roles_[ib] == CellRole::Inactive) {
                continue;
            }
            // CZ with a cell in |0> is the identity.
            if (zero_[ia] || zero_[ib]) {
                continue;
            }
            apply_cz(static_cast<uint32_t>(ia), static_cast<uint32_t>(ib));
        }
    }
    counts_.global_cz++;
}

void Lattice::prepare(CellRC rc, char symbol) {
    std::size_t i = index(rc);
    if (!is_prep_symbol(symbol)) {
        throw std::invalid_argument(std::string("cannot prepare symbol '") + symbol + "'");
    }
    if (roles_[i] == CellRole::Inactive && symbol != '0') {
        throw std::invalid_argument("inactive cell " + rc.str() + " cannot be activated");
    }
    uint32_t q = static_cast<uint32_t>(i);
    if (!tab_.is_disentangled(q)) {
        throw std::domain_error("cannot reset cell " + rc.str() + ": it is still entangled");
    }
    tab_.reset(q);
    frame_.clear(q);
    if (symbol == '1' || symbol == '-') {
        tab_.apply(Gate::x(q));
    }
    if (symbol == '+' || symbol == '-') {
        tab_.apply(Gate::h(q));
    }
    zero_[i] = symbol == '0' ? 1 : 0;
}

namespace {

// Stabilizer of `t` that anticommutes with X on qubit a and acts trivially on the excluded
// qubits, or nothing when no such element exists.
std::optional<PauliString> correcting_stabilizer(const Tableau &t, uint32_t a, const std::vector<uint32_t> &excluded) {
    std::size_t n = t.num_qubits();
    std::vector<PauliString> gens = t.stabilizers();
    std::size_t ncols = 2 * excluded.size();
    struct Row {
        std::vector<uint8_t> bits;
        uint8_t target = 0;
        std::vector<uint8_t> combo;
    };
    std::vector<Row> rows(n);
    for (std::size_t i = 0; i < n; i++) {
        rows[i].bits.resize(ncols);
        for (std::size_t k = 0; k < excluded.size(); k++) {
            rows[i].bits[2 * k] = gens[i].x(excluded[k]);
            rows[i].bits[2 * k + 1] = gens[i].z(excluded[k]);
        }
        rows[i].target = gens[i].z(a);
        rows[i].combo.assign(n, 0);
        rows[i].combo[i] = 1;
    }
    auto add_row = [](Row &dst, const Row &src) {
        for (std::size_t k = 0; k < dst.bits.size(); k++) {
            dst.bits[k] ^= src.bits[k];
        }
        dst.target ^= src.target;
        for (std::size_t k = 0; k < dst.combo.size(); k++) {
            dst.combo[k] ^= src.combo[k];
        }
    };
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < n; col++) {
        std::size_t p = r;
        while (p < n && !rows[p].bits[col]) {
            p++;
        }
        if (p == n) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < n; i++) {
            if (i != r && rows[i].bits[col]) {
                add_row(rows[i], rows[r]);
            }
        }
        r++;
    }
    for (std::size_t i = r; i < n; i++) {
        if (rows[i].target) {
            PauliString s(n);
            for (std::size_t k = 0; k < n; k++) {
                if (rows[i].combo[k]) {
                    s *= gens[k];
                }
            }
            return s;
        }
    }
    return std::nullopt;
}

}  // namespace

uint8_t Lattice::measure_x(CellRC rc, std::optional<uint8_t> forced, std::mt19937_64 *rng) {
    std::size_t i = index(rc);
    uint32_t q = static_cast<uint32_t>(i);
    if (roles_[i] == CellRole::Inactive) {
        throw std::invalid_argument("cannot measure inactive cell " + rc.str());
    }
    PauliString xq = PauliString::single(tab_.num_qubits(), q, 'X');
    bool random = tab_.expectation(xq) == 0;
    std::optional<PauliString> fix;
    if (random) {
        std::vector<uint32_t> excluded;
        for (const auto &ref : refs_) {
            excluded.push_back(ref.second);
        }
        fix = correcting_stabilizer(tab_, q, excluded);
    }
    std::mt19937_64 fallback(0);
    StabMeasurement m = tab_.measure(q, MeasureBasis::X, random ? forced : std::nullopt, rng ? rng : &fallback);
    CellMeasurement rec;
    rec.cell = rc;
    rec.outcome = m.outcome;
    rec.deterministic = m.deterministic;
    rec.frame_outcome = static_cast<uint8_t>(m.outcome ^ (frame_.z(q) ? 1 : 0));
    if (rec.frame_outcome && random) {
        if (!fix) {
            throw std::logic_error("measurement of " + rc.str() + " disturbs the encoded inputs");
        }
        fix->set_bits(q, false, false);
        frame_.record(*fix);
    }
    frame_.clear(q);
    zero_[i] = 0;
    log_.push_back(rec);
    if (roles_[i] != CellRole::Data) {
        counts_.measured_ancillae++;
    }
    return m.outcome;
}

void Lattice::local(CellRC rc, GateKind g) {
    std::size_t i = index(rc);
    if (roles_[i] == CellRole::Inactive) {
        throw std::invalid_argument("cannot act on inactive cell " + rc.str());
    }
    apply_local(static_cast<uint32_t>(i), g);
}

void Lattice::relabel(int label, CellRC rc) {
    std::size_t to = index(rc);
    if (roles_[to] == CellRole::Inactive) {
        throw std::invalid_argument("cannot move label " + std::to_string(label) + " onto inactive cell " + rc.str());
    }
    if (labels_[to] >= 0 && labels_[to] != label) {
        throw std::invalid_argument("cell " + rc.str() + " already carries label " + std::to_string(labels_[to]));
    }
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it != labels_.end()) {
        std::size_t from = static_cast<std::size_t>(it - labels_.begin());
        labels_[from] = -1;
        roles_[from] = CellRole::Ancilla;
    }
    labels_[to] = label;
    roles_[to] = CellRole::Data;
}

void Lattice::distant_cz(const std::vector<CellRC> &path, const OutcomePolicy &policy) {
    if (path.size() < 2) {
        throw std::invalid_argument("a path needs two end cells");
    }
    std::size_t interior = path.size() - 2;
    if (interior % 2 != 0) {
        throw std::invalid_argument("odd interior length " + std::to_string(interior) +
                                    " cannot carry a CZ without a manual Hadamard");
    }
    for (std::size_t k = 0; k + 1 < path.size(); k++) {
        int d = std::abs(path[k].row - path[k + 1].row) + std::abs(path[k].col - path[k + 1].col);
        if (d != 1) {
            throw std::invalid_argument("path cells " + path[k].str() + " and " + path[k + 1].str() +
                                        " are not adjacent");
        }
    }
    for (std::size_t k = 1; k + 1 < path.size(); k++) {
        if (roles_[index(path[k])] == CellRole::Data) {
            throw std::invalid_argument("path interior " + path[k].str() + " is a data cell");
        }
        roles_[index(path[k])] = CellRole::Ancilla;
        prepare(path[k], '+');
    }
    for (std::size_t k = 0; k + 1 < path.size(); k++) {
        apply_cz(qubit(path[k]), qubit(path[k + 1]));
    }
    for (std::size_t k = 1; k + 1 < path.size(); k++) {
        std::optional<uint8_t> f;
        if (policy.forced) {
            f = policy.forced(path[k], log_.size());
        }
        measure_x(path[k], f, policy.rng);
    }
    for (std::size_t k = 1; k + 1 < path.size(); k++) {
        prepare(path[k], '0');
    }
}

void Lattice::run(const Step &step, const OutcomePolicy &policy) {
    switch (step.kind) {
        case Step::Kind::Prepare:
            for (const auto &[rc, sym] : step.prepare) {
                std::size_t i = index(rc);
                if (roles_[i] == CellRole::Inactive && sym != '0') {
                    roles_[i] = CellRole::Ancilla;
                }
                prepare(rc, sym);
            }
            counts_.prepare_layers++;
            break;
        case Step::Kind::GlobalCZ:
            global_cz(step.axis);
            break;
        case Step::Kind::MeasureX:
            for (const CellRC &rc : step.measure) {
                std::optional<uint8_t> f;
                if (policy.forced) {
                    f = policy.forced(rc, log_.size());
                }
                measure_x(rc, f, policy.rng);
            }
            break;
        case Step::Kind::Local:
            for (const auto &[rc, g] : step.local) {
                local(rc, g);
            }
            counts_.local_layers++;
            break;
        case Step::Kind::Relabel:
            for (const auto &[label, rc] : step.relabel) {
                relabel(label, rc);
            }
            break;
    }
}

void Lattice::run(const Schedule &s, const OutcomePolicy &policy) {
    for (const Step &step : s.steps) {
        run(step, policy);
    }
}

Tableau Lattice::corrected_tableau() const {
    Tableau t = tab_;
    PauliString f = frame_.as_pauli();
    if (!f.is_identity()) {
        t.apply(f);
    }
    return t;
}

std::vector<CellRC> Lattice::entangled_ancillae() const {
    Tableau t = corrected_tableau();
    std::vector<CellRC> out;
    for (std::size_t i = 0; i < labels_.size(); i++) {
        if (labels_[i] < 0 && !t.is_disentangled(static_cast<uint32_t>(i))) {
            out.push_back({static_cast<int>(i) / cols_, static_cast<int>(i) % cols_});
        }
    }
    return out;
}

Tableau Lattice::data_tableau() const {
    std::vector<CellRC> left = entangled_ancillae();
    if (!left.empty()) {
        throw std::domain_error("ancilla " + left.front().str() + " remains entangled after the schedule");
    }
    std::vector<int> labs = labels();
    for (std::size_t i = 0; i < labs.size(); i++) {
        if (labs[i] != static_cast<int>(i)) {
            throw std::invalid_argument("data labels must be 0..k-1");
        }
    }
    Tableau t = corrected_tableau();
    std::size_t ncells = labels_.size();
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < ncells; i++) {
        if (labels_[i] < 0) {
            others.push_back(i);
        }
    }
    // Column order: non-data cells, data cells by label, reference qubits.
    std::vector<std::size_t> order = others;
    for (std::size_t l = 0; l < labs.size(); l++) {
        order.push_back(index(cell_of(static_cast<int>(l))));
    }
    for (const auto &ref : refs_) {
        order.push_back(ref.second);
    }
    std::vector<PauliString> rows;
    for (const PauliString &g : t.stabilizers()) {
        PauliString p(order.size());
        p.set_phase(g.phase());
        for (std::size_t c = 0; c < order.size(); c++) {
            p.set_bits(c, g.x(order[c]), g.z(order[c]));
        }
        rows.push_back(p);
    }
    rows = row_reduce(std::move(rows));
    std::vector<std::size_t> tail;
    for (std::size_t c = others.size(); c < order.size(); c++) {
        tail.push_back(c);
    }
    std::vector<PauliString> data_rows;
    for (const PauliString &p : rows) {
        bool outside = false;
        for (std::size_t c = 0; c < others.size(); c++) {
            if (p.x(c) || p.z(c)) {
                outside = true;
                break;
            }
        }
        if (!outside) {
            data_rows.push_back(p.restricted(tail));
        }
    }
    if (data_rows.size() != tail.size()) {
        throw std::domain_error("data cells are not in a pure state (" + std::to_string(data_rows.size()) + " of " +
                                std::to_string(tail.size()) + " generators)");
    }
    return Tableau::from_stabilizers(data_rows);
}

VerifyResult Lattice::verify(const Circuit &target, std::string_view inputs) const {
    VerifyResult res;
    std::size_t k = labels().size();
    if (inputs.size() != k || target.num_qubits() != k) {
        throw std::invalid_argument("target has " + std::to_string(target.num_qubits()) + " qubits and " +
                                    std::to_string(inputs.size()) + " inputs; the lattice has " +
                                    std::to_string(k) + " data cells");
    }
    std::size_t nref = static_cast<std::size_t>(std::count(inputs.begin(), inputs.end(), 'p'));
    if (nref != refs_.size()) {
        throw std::invalid_argument("target has " + std::to_string(nref) + " arbitrary inputs; the lattice has " +
                                    std::to_string(refs_.size()));
    }
    res.leftover = entangled_ancillae();
    if (!res.leftover.empty()) {
        res.diagnostic = "ancilla " + res.leftover.front().str() + " remains entangled after the schedule";
        return res;
    }
    Tableau got;
    try {
        got = data_tableau();
    } catch (const std::domain_error &e) {
        res.diagnostic = e.what();
        return res;
    }

    std::size_t m = k + nref;
    Tableau want(m);
    std::size_t j = 0;
    for (std::size_t l = 0; l < k; l++) {
        uint32_t q = static_cast<uint32_t>(l);
        char s = inputs[l];
        if (s == 'p') {
            uint32_t ref = static_cast<uint32_t>(k + j++);
            want.apply(Gate::h(q));
            want.apply(Gate::h(ref));
            want.apply(Gate::cz(q, ref));
            want.apply(Gate::h(ref));
        } else if (is_prep_symbol(s)) {
            if (s == '1' || s == '-') {
                want.apply(Gate::x(q));
            }
            if (s == '+' || s == '-') {
                want.apply(Gate::h(q));
            }
        } else {
            throw std::invalid_argument(std::string("bad input symbol '") + s + "'");
        }
    }
    for (const Gate &g : target.gates()) {
        want.apply(g);
    }
    if (stab_equal(got, want)) {
        res.ok = true;
        return res;
    }
    std::vector<PauliString> a = got.canonical_form();
    std::vector<PauliString> b = want.canonical_form();
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); i++) {
        if (!(a[i] == b[i])) {
            res.diagnostic = "canonical generator " + std::to_string(i) + " differs: lattice " + a[i].str() +
                             ", target " + b[i].str();
            return res;
        }
    }
    res.diagnostic = "stabilizer groups differ";
    return res;
}

// ---------------------------------------------------------------------------------------------
// Targets and named schedules

Circuit target_circuit(const std::string &name) {
    if (name == "e1_star") {
        Circuit c(5);
        for (uint32_t q = 1; q < 5; q++) {
            c.append(Gate::cz(0, q));
        }
        return c;
    }
    if (name == "pentagon") {
        return pentagon_on(5, 0);
    }
    if (name == "ghz6") {
        return ghz_on(6, 0, 5);
    }
    if (name == "logical_physical") {
        Circuit c = encoder_on(6, 0);
        c.append(Gate::h(5));
        c.append(ghz_on(6, 0, 5));
        return c;
    }
    if (name == "hop") {
        return build_hop_unitary();
    }
    if (name == "lcs2_sequential") {
        return build_lcs2_sequential();
    }
    if (name == "horseshoe") {
        return build_horseshoe_circuit(HorseshoeRoute::Bridged);
    }
    throw std::invalid_argument("unknown target circuit '" + name + "'");
}

std::string schedule_dir() {
    if (const char *env = std::getenv("QECC1WQC_SCHEDULES")) {
        return env;
    }
    return QECC1WQC_SCHEDULE_DIR;
}

std::vector<std::string> named_schedules() {
    return {"E1_lattice",        "E2_lattice",       "GHZ6_lattice",   "LP_full",
            "horseshoe_lattice", "hop_simultaneous", "hop_sequential", "LCS2_lattice"};
}

Schedule load_schedule(const std::string &name_or_path) {
    std::string path = name_or_path;
    auto names = named_schedules();
    if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
        path = schedule_dir() + "/" + name_or_path + ".json";
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open schedule '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw std::invalid_argument("schedule '" + path + "' is not valid JSON: " + e.what());
    }
    Schedule s = Schedule::from_json(j);
    if (s.name.empty()) {
        s.name = name_or_path;
    }
    return s;
}

ScheduleRun run_named_schedule(const std::string &name_or_path, uint64_t seed) {
    Schedule s = load_schedule(name_or_path);
    Lattice l(s);
    std::mt19937_64 rng(seed);
    OutcomePolicy policy;
    policy.rng = &rng;
    l.run(s, policy);
    OpCountReport counts = l.counts();
    return {std::move(s), std::move(l), counts};
}

VerifyResult verify_schedule(const std::string &name_or_path, const std::optional<TargetSpec> &target, uint64_t seed) {
    ScheduleRun run = run_named_schedule(name_or_path, seed);
    std::optional<TargetSpec> t = target ? target : run.schedule.target;
    if (!t) {
        throw std::invalid_argument("schedule '" + name_or_path + "' has no target");
    }
    return run.lattice.verify(target_circuit(t->circuit), t->inputs);
}

bool regions_disjoint(const Schedule &s, std::size_t first_layer, std::string *diagnostic) {
    std::size_t n = static_cast<std::size_t>(s.rows) * static_cast<std::size_t>(s.cols);
    auto idx = [&](CellRC rc) { return static_cast<std::size_t>(rc.row * s.cols + rc.col); };
    std::vector<uint8_t> active(n, 0);
    std::vector<int> label(n, -1);
    for (const CellSpec &c : s.cells) {
        active[idx(c.rc)] = c.init != '0';
        if (c.label) {
            label[idx(c.rc)] = *c.label;
        }
    }
    std::map<int, std::string> region_of;
    for (const auto &[name, labels] : s.regions) {
        for (int l : labels) {
            region_of[l] = name;
        }
    }
    std::map<std::string, std::set<std::size_t>> used;
    std::size_t layer = 0;
    for (const Step &st : s.steps) {
        if (st.kind == Step::Kind::Prepare) {
            for (const auto &[rc, sym] : st.prepare) {
                active[idx(rc)] = sym != '0';
            }
        } else if (st.kind == Step::Kind::Relabel) {
            for (const auto &[l, rc] : st.relabel) {
                for (std::size_t i = 0; i < n; i++) {
                    if (label[i] == l) {
                        label[i] = -1;
                    }
                }
                label[idx(rc)] = l;
            }
        } else if (st.kind == Step::Kind::GlobalCZ) {
            layer++;
            if (layer < first_layer) {
                continue;
            }
            int outer = st.axis == Axis::Horizontal ? s.rows : s.cols;
            int inner = st.axis == Axis::Horizontal ? s.cols : s.rows;
            for (int a = 0; a < outer; a++) {
                int b = 0;
                while (b < inner) {
                    auto cell = [&](int t) { return st.axis == Axis::Horizontal ? CellRC{a, t} : CellRC{t, a}; };
                    if (!active[idx(cell(b))]) {
                        b++;
                        continue;
                    }
                    std::vector<std::size_t> seg;
                    while (b < inner && active[idx(cell(b))]) {
                        seg.push_back(idx(cell(b)));
                        b++;
                    }
                    std::set<std::string> regs;
                    for (std::size_t i : seg) {
                        if (label[i] >= 0 && region_of.count(label[i])) {
                            regs.insert(region_of[label[i]]);
                        }
                    }
                    for (std::size_t i : seg) {
                        if (label[i] < 0) {
                            for (const std::string &r : regs) {
                                used[r].insert(i);
                            }
                        }
                    }
                }
            }
        }
    }
    for (auto it = used.begin(); it != used.end(); ++it) {
        for (auto jt = std::next(it); jt != used.end(); ++jt) {
            for (std::size_t i : it->second) {
                if (jt->second.count(i)) {
                    if (diagnostic) {
                        *diagnostic = "ancilla cell (" + std::to_string(i / s.cols) + "," + std::to_string(i % s.cols) +
                                      ") serves regions " + it->first + " and " + jt->first;
                    }
                    return false;
                }
            }
        }
    }
    return true;
}

json EncodeDecodeReport::to_json() const {
    return {{"simultaneous", simultaneous.to_json()},
            {"sequential", sequential.to_json()},
            {"simultaneous_verified", simultaneous_verified},
            {"sequential_verified", sequential_verified},
            {"regions_disjoint", regions_disjoint},
            {"sequential_inefficient", sequential_inefficient},
            {"diagnostic", diagnostic}};
}

EncodeDecodeReport simultaneous_encode_decode(uint64_t seed) {
    EncodeDecodeReport rep;
    ScheduleRun sim = run_named_schedule("hop_simultaneous", seed);
    ScheduleRun seq = run_named_schedule("hop_sequential", seed);
    rep.simultaneous = sim.counts;
    rep.sequential = seq.counts;
    Circuit target = target_circuit("hop");
    VerifyResult a = sim.lattice.verify(target, sim.schedule.target->inputs);
    VerifyResult b = seq.lattice.verify(target, seq.schedule.target->inputs);
    rep.simultaneous_verified = a.ok;
    rep.sequential_verified = b.ok;
    std::string diag;
    // The GHZ link occupies the first three layers; the overlapped stages follow.
    rep.regions_disjoint = regions_disjoint(sim.schedule, 4, &diag);
    rep.sequential_inefficient = rep.sequential.global_cz > rep.simultaneous.global_cz;
    if (!a.ok) {
        rep.diagnostic = "simultaneous: " + a.diagnostic;
    } else if (!b.ok) {
        rep.diagnostic = "sequential: " + b.diagnostic;
    } else if (!rep.regions_disjoint) {
        rep.diagnostic = diag;
    }
    return rep;
}

}  // namespace qecc1wqc
