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

#include "qecc1wqc/circuit_json.hpp"

#include <stdexcept>

namespace qecc1wqc {

using nlohmann::json;

namespace {

const char *basis_name(MeasureBasis b) {
    switch (b) {
        case MeasureBasis::Z:
            return "Z";
        case MeasureBasis::X:
            return "X";
        case MeasureBasis::XY:
            return "XY";
    }
    return "?";
}

MeasureBasis basis_from_name(const std::string &s) {
    if (s == "Z") {
        return MeasureBasis::Z;
    }
    if (s == "X") {
        return MeasureBasis::X;
    }
    if (s == "XY") {
        return MeasureBasis::XY;
    }
    throw std::invalid_argument("unknown measurement basis \"" + s + "\"");
}

}  // namespace

json circuit_to_json(const Circuit &c) {
    json ops = json::array();
    for (const Instruction &ins : c.instructions()) {
        if (const Gate *g = std::get_if<Gate>(&ins)) {
            json op{{"g", gate_kind_name(g->kind)}};
            if (g->is_two_qubit()) {
                op["t"] = {g->targets[0], g->targets[1]};
            } else {
                op["t"] = {g->targets[0]};
            }
            if (g->kind == GateKind::Rz) {
                op["xi"] = g->angle;
            }
            ops.push_back(std::move(op));
        } else if (const Measure *m = std::get_if<Measure>(&ins)) {
            json body{{"q", m->qubit}, {"basis", basis_name(m->basis)}, {"slot", m->slot}};
            if (m->basis == MeasureBasis::XY) {
                body["xi"] = m->angle;
            }
            ops.push_back(json{{"m", std::move(body)}});
        } else {
            const CorrectIf &cif = std::get<CorrectIf>(ins);
            ops.push_back(json{{"cif", {{"slot", cif.slot}, {"pauli", cif.pauli.str()}}}});
        }
    }
    return json{{"n", c.num_qubits()}, {"ops", std::move(ops)}};
}

Circuit circuit_from_json(const json &j) {
    try {
        Circuit c(j.at("n").get<std::size_t>());
        for (const json &op : j.at("ops")) {
            if (op.contains("g")) {
                GateKind kind = gate_kind_from_name(op.at("g").get<std::string>());
                const json &t = op.at("t");
                std::size_t want = kind == GateKind::CZ ? 2 : 1;
                if (t.size() != want) {
                    throw std::invalid_argument("gate " + op.at("g").get<std::string>() + " needs " +
                                                std::to_string(want) + " targets");
                }
                uint32_t a = t[0].get<uint32_t>();
                switch (kind) {
                    case GateKind::CZ:
                        c.append(Gate::cz(a, t[1].get<uint32_t>()));
                        break;
                    case GateKind::Rz:
                        c.append(Gate::rz(a, op.at("xi").get<double>()));
                        break;
                    default:
                        c.append(Gate{kind, {a, a}, 0});
                }
            } else if (op.contains("m")) {
                const json &m = op.at("m");
                MeasureBasis basis = basis_from_name(m.at("basis").get<std::string>());
                double xi = basis == MeasureBasis::XY ? m.at("xi").get<double>() : 0.0;
                c.measure(m.at("q").get<uint32_t>(), basis, m.at("slot").get<uint32_t>(), xi);
            } else if (op.contains("cif")) {
                const json &cif = op.at("cif");
                c.correct_if(cif.at("slot").get<uint32_t>(),
                             PauliString::from_text(cif.at("pauli").get<std::string>()));
            } else {
                throw std::invalid_argument("op is neither a gate, a measurement, nor a correction: " + op.dump());
            }
        }
        c.validate();
        return c;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed circuit JSON: ") + e.what());
    }
}

}  // namespace qecc1wqc
