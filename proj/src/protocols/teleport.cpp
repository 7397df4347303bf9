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

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qecc1wqc/protocols.hpp"

namespace qecc1wqc {

namespace {

constexpr std::size_t kHopQubits = 2 * CODE_QUBITS;

PauliString widen(const PauliString &p, std::size_t n, std::size_t offset) {
    PauliString out(n);
    out.set_phase(p.phase());
    for (std::size_t q = 0; q < p.num_qubits(); q++) {
        out.set_bits(offset + q, p.x(q), p.z(q));
    }
    return out;
}

std::vector<uint32_t> range(uint32_t first, uint32_t count) {
    std::vector<uint32_t> v(count);
    std::iota(v.begin(), v.end(), first);
    return v;
}

// X^m H Rz(xi) applied to psi.
QubitState teleported(QubitState psi, double xi, uint8_t m) {
    const double r = 1 / std::sqrt(2.0);
    amp_t b = std::polar(1.0, xi) * psi.beta;
    QubitState out{r * (psi.alpha + b), r * (psi.alpha - b)};
    if (m) {
        std::swap(out.alpha, out.beta);
    }
    return out;
}

}  // namespace

const char *stage_name(InjectionStage s) {
    return s == InjectionStage::PreDecode ? "pre_decode" : "post_encode";
}

InjectionStage stage_from_name(const std::string &name) {
    if (name == "pre_decode") {
        return InjectionStage::PreDecode;
    }
    if (name == "post_encode") {
        return InjectionStage::PostEncode;
    }
    throw std::invalid_argument("unknown injection stage \"" + name + "\" (expected pre_decode or post_encode)");
}

Circuit build_hop_unitary() {
    Circuit c(kHopQubits);
    c.append(Gate::h(5));
    c.append(ghz_on(kHopQubits, 0, 5));
    c.append(encoder_on(kHopQubits, 1));
    c.append(decoder_on(kHopQubits, 0));
    return c;
}

Circuit build_teleport_unitary() {
    Circuit c = encoder_on(kHopQubits, 0);
    c.append(build_hop_unitary());
    return c;
}

HopResult teleport_hop(const StateVector &encoded, double measure_angle, const std::optional<InjectedError> &error,
                       std::optional<uint8_t> forced_m, std::mt19937_64 *rng) {
    if (encoded.num_qubits() != CODE_QUBITS) {
        throw std::invalid_argument("teleport_hop expects a five-qubit encoded register");
    }
    std::optional<PauliString> wide;
    if (error.has_value()) {
        if (error->pauli.num_qubits() != CODE_QUBITS) {
            throw std::invalid_argument("injected error must act on the five qubits of register A");
        }
        wide = widen(error->pauli, kHopQubits, 0);
    }

    StateVector s = tensor(encoded, StateVector(CODE_QUBITS));
    if (wide && error->stage == InjectionStage::PostEncode) {
        s.apply(*wide);
    }
    s.apply(Gate::h(5));
    s.apply_gates(ghz_on(kHopQubits, 0, 5));
    s.apply_gates(encoder_on(kHopQubits, 1));
    if (wide && error->stage == InjectionStage::PreDecode) {
        s.apply(*wide);
    }
    s.apply_gates(decoder_on(kHopQubits, 0));

    HopResult r;
    for (uint32_t q = 1; q < CODE_QUBITS; q++) {
        uint8_t bit = s.probability_one(q, MeasureBasis::Z) > 0.5 ? 1 : 0;
        s.measure_forced(q, MeasureBasis::Z, bit);
        r.syndrome.bits = (uint8_t)((r.syndrome.bits << 1) | bit);
    }
    r.correction = correction_for(r.syndrome);
    s.apply(widen(r.correction, kHopQubits, 0));

    std::vector<uint32_t> keep = range(5, 5);
    keep.insert(keep.begin(), 0);
    r.pre_measurement = s.extract(keep);

    MeasurementRecord rec = s.measure(0, MeasureBasis::XY, measure_angle, forced_m, rng);
    r.m = rec.outcome;
    std::vector<uint32_t> out = range(5, 5);
    r.output = s.extract(out);
    return r;
}

TeleportReport encoded_teleport(QubitState psi, double xi, const std::optional<InjectedError> &error,
                                std::optional<uint8_t> forced_m, std::mt19937_64 *rng) {
    psi = psi.normalized();
    TeleportReport rep;
    rep.xi = xi;
    rep.measured_angle = -xi;
    rep.injected = error;
    rep.hop_two_qubit_gates = two_qubit_gate_count(build_hop_unitary());
    rep.full_two_qubit_gates = two_qubit_gate_count(build_teleport_unitary());

    std::mt19937_64 fallback(0);
    HopResult hop = teleport_hop(encode(psi.alpha, psi.beta), -xi, error, forced_m, rng ? rng : &fallback);
    rep.m = hop.m;
    rep.syndrome = hop.syndrome;
    rep.correction = hop.correction;

    QubitState want = teleported(psi, xi, hop.m);
    rep.fidelity = fidelity(hop.output, logical_state(want.alpha, want.beta));

    StateVector zero_branch = tensor(StateVector::from_symbols("0"), logical_plus());
    StateVector one_branch = tensor(StateVector::from_symbols("1"), logical_minus());
    std::vector<amp_t> v(zero_branch.amplitudes().size());
    for (std::size_t i = 0; i < v.size(); i++) {
        v[i] = psi.alpha * zero_branch.amplitude(i) + psi.beta * one_branch.amplitude(i);
    }
    rep.intermediate_fidelity = fidelity(hop.pre_measurement, StateVector::from_amplitudes(6, std::move(v)));
    return rep;
}

nlohmann::json TeleportReport::to_json() const {
    nlohmann::json j{{"xi", xi},
                     {"measured_angle", measured_angle},
                     {"m", m},
                     {"syndrome", syndrome.str()},
                     {"correction", correction.str()},
                     {"fidelity", fidelity},
                     {"intermediate_fidelity", intermediate_fidelity},
                     {"hop_two_qubit_gates", hop_two_qubit_gates},
                     {"full_two_qubit_gates", full_two_qubit_gates}};
    if (injected) {
        j["injected"] = {{"pauli", injected->pauli.str()}, {"stage", stage_name(injected->stage)}};
    } else {
        j["injected"] = nullptr;
    }
    return j;
}

PushThroughReport push_through_check(std::size_t random_inputs, uint64_t seed) {
    const std::size_t n = kHopQubits;
    Circuit lhs(n);
    lhs.append(Gate::h(5)).append(ghz_on(n, 0, 5)).append(encoder_on(n, 1));
    Circuit rhs = cross_cz(n, 0, 1);
    rhs.append(pentagon_on(n, 1));

    std::vector<StateVector> inputs = {StateVector::from_symbols("+++++")};
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d;
    for (std::size_t k = 0; k < random_inputs; k++) {
        std::vector<amp_t> v(32);
        for (amp_t &a : v) {
            a = {d(rng), d(rng)};
        }
        inputs.push_back(StateVector::from_amplitudes(CODE_QUBITS, std::move(v)));
    }

    PushThroughReport rep;
    rep.min_fidelity = 1;
    double control_min = 1;
    for (const StateVector &in : inputs) {
        StateVector a = tensor(in, StateVector(CODE_QUBITS));
        a.apply_gates(lhs);
        StateVector b = tensor(in, StateVector::from_symbols("+++++"));
        b.apply_gates(rhs);
        rep.control_fidelities.push_back(fidelity(a, b));
        b.apply(logical_z_on(n, 1));
        rep.fidelities.push_back(fidelity(a, b));
        rep.min_fidelity = std::min(rep.min_fidelity, rep.fidelities.back());
        control_min = std::min(control_min, rep.control_fidelities.back());
    }
    rep.passed = rep.min_fidelity >= 1 - 1e-9;
    rep.control_failed = control_min < 1 - 1e-9;
    return rep;
}

nlohmann::json PushThroughReport::to_json() const {
    return {{"fidelities", fidelities},
            {"min_fidelity", min_fidelity},
            {"passed", passed},
            {"control_fidelities", control_fidelities},
            {"control_failed", control_failed}};
}

}  // namespace qecc1wqc
