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

#include "qecc1wqc/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <mutex>
#include <thread>

namespace qecc1wqc {

using nlohmann::json;

ErrorModel ErrorModel::depolarizing(double p) {
    ErrorModel m;
    m.kind = ErrorKind::Depolarizing;
    m.p = p;
    m.validate();
    return m;
}

ErrorModel ErrorModel::targeted(PauliString pauli, InjectionStage stage) {
    ErrorModel m;
    m.kind = ErrorKind::Targeted;
    m.pauli = std::move(pauli);
    m.stage = stage;
    m.validate();
    return m;
}

void ErrorModel::validate() const {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("error probability must lie in [0, 1]");
    }
    if (kind == ErrorKind::Targeted && pauli.num_qubits() != CODE_QUBITS) {
        throw std::invalid_argument("targeted error must act on the five protected qubits");
    }
}

json ErrorModel::to_json() const {
    static const char *names[] = {"none", "exhaustive-single-pauli", "iid-depolarizing", "targeted"};
    json j = {{"kind", names[static_cast<int>(kind)]}};
    if (kind == ErrorKind::Depolarizing) {
        j["p"] = p;
    }
    if (kind == ErrorKind::Targeted) {
        j["pauli"] = pauli.str();
        j["stage"] = stage_name(stage);
    }
    return j;
}

json TrialRecord::to_json() const {
    return {{"injected", injected}, {"weight", weight}, {"syndrome", syndrome.str()},
            {"m", m},               {"fidelity", fidelity}, {"success", success}};
}

json RunReport::to_json() const {
    json j = {{"schema", REPORT_SCHEMA}, {"kind", kind},     {"seed", seed},
              {"trials", trials},        {"successes", successes}, {"mean_fidelity", mean_fidelity},
              {"passed", passed},        {"details", details}};
    j["records"] = json::array();
    for (const TrialRecord &r : records) {
        j["records"].push_back(r.to_json());
    }
    return j;
}

std::mt19937_64 trial_rng(uint64_t seed, uint64_t k) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(k),
                      static_cast<uint32_t>(k >> 32)};
    return std::mt19937_64(seq);
}

QubitState random_qubit_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    return QubitState{amp_t{d(rng), d(rng)}, amp_t{d(rng), d(rng)}}.normalized();
}

namespace {

double random_angle(std::mt19937_64 &rng) {
    return std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
}

TrialRecord run_trial(QubitState psi, double xi, const std::optional<InjectedError> &error, std::mt19937_64 &rng) {
    TeleportReport rep = encoded_teleport(psi, xi, error, std::nullopt, &rng);
    TrialRecord r;
    r.injected = error ? error->pauli.str() : PauliString(CODE_QUBITS).str();
    r.weight = error ? error->pauli.weight() : 0;
    r.syndrome = rep.syndrome;
    r.m = rep.m;
    r.fidelity = rep.fidelity;
    r.success = rep.fidelity >= SUCCESS_FIDELITY;
    return r;
}

void fold(RunReport &rep) {
    rep.trials = rep.records.size();
    rep.successes = 0;
    double sum = 0;
    for (const TrialRecord &r : rep.records) {
        rep.successes += r.success ? 1 : 0;
        sum += r.fidelity;
    }
    rep.mean_fidelity = rep.records.empty() ? 0 : sum / static_cast<double>(rep.records.size());
}

bool same_up_to_phase(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    for (std::size_t q = 0; q < a.num_qubits(); q++) {
        if (a.x(q) != b.x(q) || a.z(q) != b.z(q)) {
            return false;
        }
    }
    return true;
}

PauliString outcome_pauli(const std::string &outcome) {
    PauliString p(1);
    for (char c : outcome) {
        if (c != 'I') {
            p *= PauliString::single(1, 0, c);
        }
    }
    return p;
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F &&body) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t k = 0; k < n; k++) {
            body(k);
        }
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex mu;
    for (unsigned t = 0; t < threads; t++) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t k = t; k < n; k += threads) {
                    body(k);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                failure = std::current_exception();
            }
        });
    }
    for (std::thread &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace

RunReport run_exhaustive_correction_sweep(uint64_t seed, std::size_t states) {
    if (states == 0) {
        throw std::invalid_argument("the sweep needs at least one input state");
    }
    RunReport rep;
    rep.kind = "exhaustive";
    rep.seed = seed;
    json rows = json::array();
    bool rows_ok = true;
    uint64_t k = 0;
    for (const SyndromeRow &row : syndrome_table()) {
        bool syndrome_ok = true;
        bool outcome_ok = same_up_to_phase(correction_for(row.syndrome), outcome_pauli(row.outcome));
        double min_fid = 1;
        std::size_t ok = 0;
        for (std::size_t s = 0; s < states; s++) {
            std::mt19937_64 rng = trial_rng(seed, k++);
            QubitState psi = random_qubit_state(rng);
            double xi = random_angle(rng);
            std::optional<InjectedError> err;
            if (!row.error_pauli.is_identity()) {
                err = InjectedError{row.error_pauli, InjectionStage::PreDecode};
            }
            TrialRecord r = run_trial(psi, xi, err, rng);
            syndrome_ok = syndrome_ok && r.syndrome == row.syndrome;
            min_fid = std::min(min_fid, r.fidelity);
            ok += r.success ? 1 : 0;
            rep.records.push_back(r);
        }
        bool row_ok = syndrome_ok && outcome_ok && ok == states;
        rows_ok = rows_ok && row_ok;
        rows.push_back({{"error", row.error},
                        {"syndrome", row.syndrome.str()},
                        {"outcome", row.outcome},
                        {"syndrome_matches", syndrome_ok},
                        {"outcome_matches", outcome_ok},
                        {"min_fidelity", min_fid},
                        {"success", row_ok}});
    }
    // Weight-two control: beyond the code distance, recorded rather than raised.
    PauliString x1x2 = named_error("X1");
    x1x2 *= named_error("X2");
    double max_fid = 0;
    double min_fid = 1;
    std::size_t corrected = 0;
    for (std::size_t s = 0; s < states; s++) {
        std::mt19937_64 rng = trial_rng(seed, k++);
        QubitState psi = random_qubit_state(rng);
        double xi = random_angle(rng);
        TrialRecord r = run_trial(psi, xi, InjectedError{x1x2, InjectionStage::PreDecode}, rng);
        max_fid = std::max(max_fid, r.fidelity);
        min_fid = std::min(min_fid, r.fidelity);
        corrected += r.success ? 1 : 0;
        rep.records.push_back(r);
    }
    fold(rep);
    bool weight2_fails = min_fid <= 0.99;
    rep.details = {{"rows", rows},
                   {"states_per_row", states},
                   {"single_errors_corrected", rows_ok},
                   {"weight2", {{"error", "X1X2"},
                                {"pauli", x1x2.str()},
                                {"corrected_trials", corrected},
                                {"min_fidelity", min_fid},
                                {"max_fidelity", max_fid},
                                {"failure_observed", weight2_fails}}},
                   {"hop_two_qubit_gates", two_qubit_gate_count(build_hop_unitary())},
                   {"teleport_two_qubit_gates", two_qubit_gate_count(build_teleport_unitary())}};
    rep.passed = rows_ok && weight2_fails;
    return rep;
}

PauliString FailureOracle::pattern(std::size_t index) {
    static const char letters[] = {'I', 'X', 'Y', 'Z'};
    PauliString p(CODE_QUBITS);
    for (std::size_t q = 0; q < CODE_QUBITS; q++) {
        std::size_t digit = (index >> (2 * (CODE_QUBITS - 1 - q))) & 3;
        p.set(q, letters[digit]);
    }
    return p;
}

std::size_t FailureOracle::weight(std::size_t index) {
    std::size_t w = 0;
    for (std::size_t q = 0; q < CODE_QUBITS; q++) {
        w += ((index >> (2 * q)) & 3) != 0 ? 1 : 0;
    }
    return w;
}

double FailureOracle::failure_fraction(std::size_t w) const {
    std::size_t total = 0;
    std::size_t failed = 0;
    for (std::size_t i = 0; i < fails.size(); i++) {
        if (weight(i) == w) {
            total++;
            failed += fails[i];
        }
    }
    return total ? static_cast<double>(failed) / static_cast<double>(total) : 0;
}

double FailureOracle::failure_probability(double p) const {
    double q = 0;
    for (std::size_t w = 0; w <= CODE_QUBITS; w++) {
        double binom = std::tgamma(CODE_QUBITS + 1.0) / (std::tgamma(w + 1.0) * std::tgamma(CODE_QUBITS - w + 1.0));
        q += binom * std::pow(p, static_cast<double>(w)) * std::pow(1 - p, static_cast<double>(CODE_QUBITS - w)) *
             failure_fraction(w);
    }
    return q;
}

double FailureOracle::weight2_estimate(double p) const {
    double at_least_two = 1 - std::pow(1 - p, 5.0) - 5 * p * std::pow(1 - p, 4.0);
    return at_least_two * failure_fraction(2);
}

json FailureOracle::to_json() const {
    json fr = json::array();
    for (std::size_t w = 0; w <= CODE_QUBITS; w++) {
        fr.push_back(failure_fraction(w));
    }
    return {{"patterns", fails.size()}, {"failure_fraction_by_weight", fr}};
}

const FailureOracle &failure_oracle() {
    static const FailureOracle oracle = [] {
        FailureOracle o;
        o.fails.assign(std::size_t{1} << (2 * CODE_QUBITS), 0);
        // A generic input: any uncorrected logical Pauli lowers the fidelity.
        QubitState psi = QubitState{amp_t{0.6, 0.1}, amp_t{0.3, 0.7}}.normalized();
        const double xi = 0.9;
        for (std::size_t i = 0; i < o.fails.size(); i++) {
            std::optional<InjectedError> err;
            if (i != 0) {
                err = InjectedError{FailureOracle::pattern(i), InjectionStage::PreDecode};
            }
            TeleportReport r = encoded_teleport(psi, xi, err, uint8_t{0}, nullptr);
            o.fails[i] = r.fidelity < SUCCESS_FIDELITY ? 1 : 0;
        }
        return o;
    }();
    return oracle;
}

RunReport run_depolarizing(double p, std::size_t trials, uint64_t seed, unsigned threads) {
    ErrorModel model = ErrorModel::depolarizing(p);
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    RunReport rep;
    rep.kind = "depolarizing";
    rep.seed = seed;
    rep.records.resize(trials);
    parallel_for(trials, threads, [&](std::size_t k) {
        std::mt19937_64 rng = trial_rng(seed, k);
        QubitState psi = random_qubit_state(rng);
        double xi = random_angle(rng);
        std::uniform_real_distribution<double> u(0, 1);
        std::uniform_int_distribution<int> which(0, 2);
        PauliString e(CODE_QUBITS);
        for (std::size_t q = 0; q < CODE_QUBITS; q++) {
            if (u(rng) < p) {
                e.set(q, "XYZ"[which(rng)]);
            }
        }
        std::optional<InjectedError> err;
        if (!e.is_identity()) {
            err = InjectedError{e, InjectionStage::PreDecode};
        }
        rep.records[k] = run_trial(psi, xi, err, rng);
    });
    fold(rep);

    const FailureOracle &oracle = failure_oracle();
    std::size_t failures = rep.trials - rep.successes;
    std::size_t low = 0;
    std::size_t low_ok = 0;
    std::vector<std::size_t> by_weight(CODE_QUBITS + 1, 0);
    for (const TrialRecord &r : rep.records) {
        by_weight[r.weight]++;
        if (r.weight <= 1) {
            low++;
            low_ok += r.success ? 1 : 0;
        }
    }
    double n = static_cast<double>(rep.trials);
    double predicted = oracle.failure_probability(p);
    double rate = static_cast<double>(failures) / n;
    double sigma = std::sqrt(predicted * (1 - predicted) / n);
    // A rate within five standard deviations, or within one trial when the prediction is tiny.
    bool consistent = std::abs(rate - predicted) <= 5 * sigma + 1 / n;
    rep.details = {{"error_model", model.to_json()},
                   {"failures", failures},
                   {"failure_rate", rate},
                   {"predicted_failure_rate", predicted},
                   {"weight2_estimate", oracle.weight2_estimate(p)},
                   {"sigma", sigma},
                   {"within_5_sigma", consistent},
                   {"weight_le1_trials", low},
                   {"weight_le1_successes", low_ok},
                   {"weight_le1_all_corrected", low == low_ok},
                   {"trials_by_weight", by_weight},
                   {"oracle", oracle.to_json()}};
    rep.passed = consistent && low == low_ok;
    return rep;
}

RunReport run_error_model(const ErrorModel &model, std::size_t trials, uint64_t seed) {
    model.validate();
    if (model.kind == ErrorKind::Depolarizing) {
        return run_depolarizing(model.p, trials, seed);
    }
    if (model.kind == ErrorKind::ExhaustiveSinglePauli) {
        return run_exhaustive_correction_sweep(seed, trials);
    }
    RunReport rep;
    rep.kind = model.kind == ErrorKind::Targeted ? "targeted" : "noiseless";
    rep.seed = seed;
    for (std::size_t k = 0; k < trials; k++) {
        std::mt19937_64 rng = trial_rng(seed, k);
        QubitState psi = random_qubit_state(rng);
        double xi = random_angle(rng);
        std::optional<InjectedError> err;
        if (model.kind == ErrorKind::Targeted) {
            err = InjectedError{model.pauli, model.stage};
        }
        rep.records.push_back(run_trial(psi, xi, err, rng));
    }
    fold(rep);
    rep.details = {{"error_model", model.to_json()}};
    rep.passed = true;
    return rep;
}

QubitState computation_oracle(const std::vector<double> &xis, QubitState psi) {
    psi = psi.normalized();
    const double r = 1 / std::sqrt(2.0);
    for (double xi : xis) {
        amp_t b = std::polar(1.0, xi) * psi.beta;
        psi = QubitState{r * (psi.alpha + b), r * (psi.alpha - b)};
    }
    return psi;
}

RunReport run_two_column_computation(const std::vector<double> &xis, QubitState psi, uint64_t seed,
                                     const std::vector<uint8_t> &forced_m) {
    if (xis.empty()) {
        throw std::invalid_argument("a computation needs at least one hop");
    }
    if (!forced_m.empty() && forced_m.size() != xis.size()) {
        throw std::invalid_argument("forced outcomes must list one bit per hop");
    }
    psi = psi.normalized();
    RunReport rep;
    rep.kind = "compute";
    rep.seed = seed;
    std::mt19937_64 rng = trial_rng(seed, 0);
    StateVector reg = encode(psi.alpha, psi.beta);
    LogicalFrame frame;
    json hops = json::array();
    for (std::size_t k = 0; k < xis.size(); k++) {
        double xi = frame.adapt(xis[k]);
        std::optional<uint8_t> forced;
        if (!forced_m.empty()) {
            forced = forced_m[k];
        }
        HopResult hop = teleport_hop(reg, -xi, std::nullopt, forced, &rng);
        frame = frame.after_hop(hop.m);
        reg = hop.output;
        hops.push_back({{"hop", k},
                        {"column", k % 2 ? "A" : "B"},
                        {"xi", xis[k]},
                        {"applied_xi", xi},
                        {"m", hop.m},
                        {"syndrome", hop.syndrome.str()},
                        {"frame_x", frame.x},
                        {"frame_z", frame.z}});
        TrialRecord r;
        r.injected = PauliString(CODE_QUBITS).str();
        r.syndrome = hop.syndrome;
        r.m = hop.m;
        rep.records.push_back(r);
    }
    // Undo the outstanding byproduct X^x Z^z on the logical qubit.
    if (frame.x) {
        reg.apply(logical_x());
    }
    if (frame.z) {
        reg.apply(logical_z());
    }
    QubitState want = computation_oracle(xis, psi);
    double fid = fidelity(reg, logical_state(want.alpha, want.beta));
    for (TrialRecord &r : rep.records) {
        r.fidelity = fid;
        r.success = fid >= 1 - 1e-9;
    }
    fold(rep);
    rep.details = {{"hops", hops},
                   {"final_fidelity", fid},
                   {"final_frame", {{"x", frame.x}, {"z", frame.z}}},
                   {"hop_two_qubit_gates", two_qubit_gate_count(build_hop_unitary())}};
    rep.passed = fid >= 1 - 1e-9;
    return rep;
}

}  // namespace qecc1wqc
