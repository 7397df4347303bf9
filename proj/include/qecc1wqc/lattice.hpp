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

#include <compare>
#include <functional>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qecc1wqc/circuit.hpp"
#include "qecc1wqc/frame.hpp"
#include "qecc1wqc/gate.hpp"
#include "qecc1wqc/tableau.hpp"

namespace qecc1wqc {

enum class Axis : uint8_t { Horizontal, Vertical };
enum class CellRole : uint8_t { Inactive, Data, Ancilla };

/// "H"/"horizontal" or "V"/"vertical". Throws std::invalid_argument otherwise.
Axis axis_from_name(std::string_view name);
const char *axis_name(Axis a);
CellRole role_from_name(std::string_view name);
const char *role_name(CellRole r);

struct CellRC {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const CellRC &, const CellRC &) = default;
    std::string str() const;
};

/// Initial content of a cell. Symbols: '0', '1', '+', '-', or 'p' for an arbitrary input carried
/// by a maximally entangled reference qubit outside the grid.
struct CellSpec {
    CellRC rc;
    CellRole role = CellRole::Inactive;
    char init = '0';
    std::optional<int> label;
};

struct Step {
    enum class Kind : uint8_t { Prepare, GlobalCZ, MeasureX, Local, Relabel };
    Kind kind = Kind::GlobalCZ;
    Axis axis = Axis::Horizontal;
    std::vector<std::pair<CellRC, char>> prepare;
    std::vector<CellRC> measure;
    /// Applied in list order.
    std::vector<std::pair<CellRC, GateKind>> local;
    std::vector<std::pair<int, CellRC>> relabel;
};

/// Reference circuit a schedule must reproduce, by builder name, with per-label input symbols.
struct TargetSpec {
    std::string circuit;
    std::string inputs;
};

struct Schedule {
    std::string name;
    int rows = 0;
    int cols = 0;
    std::vector<CellSpec> cells;
    std::vector<Step> steps;
    std::optional<TargetSpec> target;
    /// Optional labelled groups of data labels (used for region-separation checks).
    std::vector<std::pair<std::string, std::vector<int>>> regions;

    /// Throws std::invalid_argument on malformed input.
    static Schedule from_json(const nlohmann::json &j);
    nlohmann::json to_json() const;

    std::size_t global_cz_count() const;
};

struct OpCountReport {
    std::size_t global_cz = 0;
    std::size_t measured_ancillae = 0;
    std::size_t local_layers = 0;
    std::size_t prepare_layers = 0;

    nlohmann::json to_json() const;
};

struct CellMeasurement {
    CellRC cell;
    /// Raw outcome on the simulated state.
    uint8_t outcome = 0;
    /// Outcome after removing the byproduct frame's effect.
    uint8_t frame_outcome = 0;
    bool deterministic = false;
};

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;
    /// Non-data cells still entangled with something at the end of the run.
    std::vector<CellRC> leftover;

    nlohmann::json to_json() const;
};

/// Outcome source for X measurements: forced values when the callback returns one, otherwise
/// bits from the generator.
struct OutcomePolicy {
    std::mt19937_64 *rng = nullptr;
    std::function<std::optional<uint8_t>(CellRC, std::size_t index)> forced;
};

/// 2D grid of qubits driven by global CZ layers, preparations, X measurements and local gates.
/// A byproduct frame tracks the Pauli difference between the simulated state and the reference
/// branch in which every measurement returned 0.
class Lattice {
   public:
    Lattice(int rows, int cols, const std::vector<CellSpec> &cells);
    explicit Lattice(const Schedule &s) : Lattice(s.rows, s.cols, s.cells) {
    }

    int rows() const {
        return rows_;
    }
    int cols() const {
        return cols_;
    }
    CellRole role(CellRC rc) const;
    std::optional<int> label_at(CellRC rc) const;
    /// Throws std::out_of_range for unknown labels.
    CellRC cell_of(int label) const;
    std::vector<int> labels() const;
    std::size_t num_refs() const {
        return refs_.size();
    }
    uint32_t qubit(CellRC rc) const;

    /// CZ on every adjacent pair of non-inactive cells along the axis.
    void global_cz(Axis axis);
    /// Resets the cell and prepares '0', '1', '+' or '-'. Throws std::domain_error when the cell is
    /// entangled and std::invalid_argument for inactive cells or bad symbols.
    void prepare(CellRC rc, char symbol);
    /// X measurement with byproduct bookkeeping. Returns the raw outcome.
    /// A forced outcome applies only when the result is random.
    uint8_t measure_x(CellRC rc, std::optional<uint8_t> forced, std::mt19937_64 *rng);
    void local(CellRC rc, GateKind g);
    /// Moves a data label to another cell (after a teleporting measurement).
    void relabel(int label, CellRC rc);
    /// Applies CZ along a path of cells (u, interior..., v), X-measures the interior and resets
    /// it. Throws std::invalid_argument when the interior length is odd or the path is not a chain
    /// of adjacent cells.
    void distant_cz(const std::vector<CellRC> &path, const OutcomePolicy &policy);

    void run(const Step &step, const OutcomePolicy &policy);
    void run(const Schedule &s, const OutcomePolicy &policy);

    const Tableau &tableau() const {
        return tab_;
    }
    const ByproductFrame &frame() const {
        return frame_;
    }
    /// Simulated state with the frame removed.
    Tableau corrected_tableau() const;
    const std::vector<CellMeasurement> &measurements() const {
        return log_;
    }
    const OpCountReport &counts() const {
        return counts_;
    }

    /// Non-data cells that are still entangled after frame correction.
    std::vector<CellRC> entangled_ancillae() const;
    /// Frame-corrected state of the data cells (by label) followed by the reference qubits of
    /// the arbitrary inputs. Throws std::domain_error while an ancilla is still entangled.
    Tableau data_tableau() const;
    /// Compares data_tableau() with `target` applied to `inputs` (one symbol per data label out of
    /// 0, 1, +, - and p for an arbitrary input carried by a reference qubit).
    VerifyResult verify(const Circuit &target, std::string_view inputs) const;

   private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<CellRole> roles_;
    std::vector<int> labels_;  // -1 when none
    std::vector<uint8_t> zero_;  // cell known to be exactly |0>
    std::vector<std::pair<int, uint32_t>> refs_;  // (input label, reference qubit)
    Tableau tab_;
    ByproductFrame frame_;
    std::vector<CellMeasurement> log_;
    OpCountReport counts_;

    std::size_t index(CellRC rc) const;
    void apply_cz(uint32_t a, uint32_t b);
    void apply_local(uint32_t q, GateKind g);
};

/// Circuit by name: e1_star, pentagon, ghz6, logical_physical, hop, horseshoe, lcs2_sequential.
Circuit target_circuit(const std::string &name);

/// Directory holding the shipped schedule files.
std::string schedule_dir();
Schedule load_schedule(const std::string &name_or_path);

std::vector<std::string> named_schedules();

struct ScheduleRun {
    Schedule schedule;
    Lattice lattice;
    OpCountReport counts;
};

/// Runs a named schedule (E1_lattice, E2_lattice, GHZ6_lattice, LP_full, horseshoe_lattice,
/// hop_simultaneous, hop_sequential, LCS2_lattice) or a schedule file with random outcomes from `seed`.
ScheduleRun run_named_schedule(const std::string &name_or_path, uint64_t seed = 1);

/// Runs the schedule and checks it against its embedded target (or the given one).
VerifyResult verify_schedule(const std::string &name_or_path, const std::optional<TargetSpec> &target = std::nullopt,
                             uint64_t seed = 1);

struct EncodeDecodeReport {
    OpCountReport simultaneous;
    OpCountReport sequential;
    bool simultaneous_verified = false;
    bool sequential_verified = false;
    bool regions_disjoint = false;
    /// Sequential execution needs more global CZ layers.
    bool sequential_inefficient = false;
    std::string diagnostic;

    nlohmann::json to_json() const;
};

/// Full teleportation hop on the lattice: GHZ link, then encoding of B overlapped with decoding
/// of A, compared against running the same stages one after another.
EncodeDecodeReport simultaneous_encode_decode(uint64_t seed = 1);

/// Ancilla cells touched by the data labels of each region during the schedule's GlobalCZ
/// layers from `first_layer` on; true when the regions' ancilla sets are disjoint.
bool regions_disjoint(const Schedule &s, std::size_t first_layer, std::string *diagnostic = nullptr);

}  // namespace qecc1wqc
