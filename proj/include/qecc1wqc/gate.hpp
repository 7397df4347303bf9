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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qecc1wqc/pauli.hpp"

namespace qecc1wqc {

enum class GateKind : uint8_t { H, X, Y, Z, S, Rz, CZ };

/// Rz(xi) = diag(e^{-i xi/2}, e^{i xi/2}). Angles within this distance of a
/// multiple of pi/2 count as Clifford.
inline constexpr double kCliffordAngleTolerance = 1e-12;

struct Gate {
    GateKind kind = GateKind::H;
    std::array<uint32_t, 2> targets{0, 0};
    double angle = 0;

    static Gate h(uint32_t q) {
        return {GateKind::H, {q, q}, 0};
    }
    static Gate x(uint32_t q) {
        return {GateKind::X, {q, q}, 0};
    }
    static Gate y(uint32_t q) {
        return {GateKind::Y, {q, q}, 0};
    }
    static Gate z(uint32_t q) {
        return {GateKind::Z, {q, q}, 0};
    }
    static Gate s(uint32_t q) {
        return {GateKind::S, {q, q}, 0};
    }
    /// Throws std::invalid_argument for non-finite angles.
    static Gate rz(uint32_t q, double xi);
    /// Throws std::invalid_argument when a == b.
    static Gate cz(uint32_t a, uint32_t b);

    bool is_two_qubit() const {
        return kind == GateKind::CZ;
    }
    uint32_t arity() const {
        return is_two_qubit() ? 2 : 1;
    }

    /// Rz counts as Clifford when xi is a multiple of pi/2 (within tolerance).
    bool is_clifford() const;

    /// For Clifford Rz: xi / (pi/2) reduced mod 4, so Rz acts like S^k up to
    /// global phase. Empty for non-Clifford angles.
    std::optional<int> quarter_turns() const;

    std::string name() const;

    friend bool operator==(const Gate &a, const Gate &b) = default;
};

/// "H", "X", "Y", "Z", "S", "RZ", "CZ". Throws std::invalid_argument otherwise.
GateKind gate_kind_from_name(std::string_view name);
std::string_view gate_kind_name(GateKind kind);

/// g p g^dagger. Throws std::invalid_argument for non-Clifford gates and
/// std::out_of_range for targets outside p.
PauliString conjugate_pauli(const PauliString &p, const Gate &g);

/// p <- g p g^dagger.
void conjugate_in_place(PauliString &p, const Gate &g);

}  // namespace qecc1wqc
