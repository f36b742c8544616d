// Copyright 2026 The wtred Authors
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

#ifndef WTRED_QUANTUM_REDUCE_H
#define WTRED_QUANTUM_REDUCE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wtred/binary_matrix.h"
#include "wtred/css_code.h"

namespace wtred {

// ---- copying ----

enum class CopyKind { original, reduced, targeted };

struct CopyVariant {
    CopyKind kind = CopyKind::original;
    /// Targeted copying only.
    size_t targ_q_x = 0;

    static CopyVariant original() {
        return {CopyKind::original, 0};
    }
    static CopyVariant reduced() {
        return {CopyKind::reduced, 0};
    }
    static CopyVariant targeted(size_t targ_q_x) {
        return {CopyKind::targeted, targ_q_x};
    }
    /// "original", "reduced" or "targeted:<q>".
    static CopyVariant parse(const std::string &text);
    std::string str() const;
    void validate() const;
};

/// Number of copies of every qubit under the given variant.
std::vector<size_t> copy_counts(const BinaryMatrix &hx, const CopyVariant &variant);

struct CopyResult {
    CssCode code;
    /// origin[q] is the input qubit that output qubit q copies.
    std::vector<size_t> origin;
    std::vector<size_t> counts;
};

/// Copied X rows come first (each qubit's stabilizers fill its copies left to right),
/// then the weight-2 linking rows, grouped per qubit. Z rows act on every copy.
CopyResult copying(const CssCode &c, const CopyVariant &variant);

// ---- gauging ----

/// Every X row of weight w > 3 becomes w - 2 rows chained through w - 3 new qubits,
/// appended after the existing qubits in row order. Z rows pick up the new qubits needed
/// to commute again.
CssCode gauging(const CssCode &c);

// ---- thickening and choosing heights ----

struct Thickened {
    /// H_X' = (H_X (x) I | I (x) H_ell^T); H_Z' has all n_z * ell top rows.
    CssCode code;
    /// Metacheck block with thickened H_Z'^T * partial3 = 0.
    BinaryMatrix partial3;
    size_t ell;
    size_t n_z;
};

/// Tensor product of the code's chain with the length-ell repetition chain.
Thickened thicken(const CssCode &c, size_t ell);

struct HeightsSpec {
    /// 0 asks the greedy search to pick the smallest workable ell.
    size_t ell = 1;
    /// Explicit 1-based heights, one per Z row. Empty when greedy.
    std::vector<size_t> heights;
    /// Greedy mode: target for the thickened q_Z.
    std::optional<size_t> greedy_q_z;

    static HeightsSpec explicit_heights(size_t ell, std::vector<size_t> heights);
    static HeightsSpec greedy(size_t ell, size_t q_z);
    /// "greedy:<q>" or a comma separated list of heights.
    static HeightsSpec parse(size_t ell, const std::string &text);
    void validate(size_t n_z) const;
};

/// Assigns each Z row, in order, the height whose qubits end up with the lowest column
/// weight after thickening; ties go to the lowest height.
std::vector<size_t> greedy_heights(const BinaryMatrix &hz, size_t ell);

/// Keeps row heights[j] - 1 of each block h_j (x) I_ell and all of the bottom block.
/// Throws ValidationError on bad heights.
CssCode choose_heights(const Thickened &t, const std::vector<size_t> &heights);

struct HeightsResult {
    CssCode code;
    size_t ell;
    std::vector<size_t> heights;
};

HeightsResult thicken_with_heights(const CssCode &c, const HeightsSpec &spec);

// ---- coning ----

enum class Cellulation { ladder, triangulate };

/// fundamental: BFS spanning-tree cycles. minimum: shortest cycles from Horton's candidate
/// set, which spreads faces over more edges.
enum class CycleBasis { fundamental, minimum };

struct ConingOptions {
    uint64_t cycle_basis_seed = 0;
    /// Longer basis cycles get chords.
    size_t cellulate_above = 4;
    size_t num_basis_trials = 1;
    Cellulation cellulation = Cellulation::ladder;
    CycleBasis cycle_basis = CycleBasis::fundamental;
    /// Rotate or reflect each cycle before cellulating so that chords land on the vertices
    /// of lowest current degree. Off keeps every cycle in its canonical orientation.
    bool balance_chords = false;
    /// Extra thickening with X and Z exchanged, applied after coning.
    std::optional<HeightsSpec> second_thickening;

    void validate() const;
};

/// Cycle in a multigraph: edges[i] joins vertices[i] and vertices[i + 1 mod L].
struct GraphCycle {
    std::vector<size_t> vertices;
    std::vector<size_t> edges;
};

/// Fundamental cycles of a BFS spanning forest, one per non-tree edge in edge order.
/// Trial 0 uses the natural adjacency and root order; later trials shuffle both.
/// Each cycle starts at its smallest vertex and heads toward the smaller neighbor.
std::vector<GraphCycle> fundamental_cycles(
    size_t num_vertices, const std::vector<std::pair<size_t, size_t>> &edges, uint64_t seed, size_t trial);

/// Minimum-weight cycle basis: candidates are the cycles formed by one edge and two BFS
/// tree paths from a common root, kept greedily by length while independent. Later trials
/// shuffle adjacency and break length ties at random. Same orientation rule as above.
std::vector<GraphCycle> minimum_cycles(
    size_t num_vertices, const std::vector<std::pair<size_t, size_t>> &edges, uint64_t seed, size_t trial);

struct CellulatedCycle {
    /// New edges as vertex pairs; chord i gets edge id first_chord_id + i.
    std::vector<std::pair<size_t, size_t>> chords;
    /// Faces as edge id lists, replacing the original cycle.
    std::vector<std::vector<size_t>> faces;
};

/// ladder: chords v_j - v_{L-1-j} for j = 1..ceil((L-4)/2), faces of size 4 (last one 3 or 4).
/// triangulate: chords v_0 - v_j for j = 2..L-2, all faces triangles.
CellulatedCycle cellulate_cycle(const GraphCycle &cycle, size_t first_chord_id, Cellulation mode);

struct ConeEdge {
    /// X row responsible for the edge; NO_ROW for chords.
    size_t x_row;
    size_t a;
    size_t b;
    static constexpr size_t NO_ROW = SIZE_MAX;
};

/// The sectors built for one coned Z row.
struct ConeBlock {
    size_t z_row = 0;
    /// Vertices: the row's support, ascending.
    std::vector<size_t> qubits;
    /// Overlap edges in X row order, then chords.
    std::vector<ConeEdge> edges;
    std::vector<std::vector<size_t>> faces;
    size_t trial = 0;

    /// edges x vertices.
    BinaryMatrix d1() const;
    /// faces x edges.
    BinaryMatrix d0() const;
    /// n x vertices.
    BinaryMatrix f1(size_t n) const;
    /// n_x x edges.
    BinaryMatrix f0(size_t n_x) const;

    /// Largest new Z stabilizer (vertex degree plus the original qubit).
    size_t w_z() const;
    /// Largest new-qubit X degree.
    size_t q_x() const;
    /// Largest new X stabilizer.
    size_t w_x() const;
};

/// Throws UnreasonableCodeError if some Z logical lives inside the support of row z_row.
void check_reasonable(const CssCode &c, size_t z_row);

ConeBlock cone_block(const CssCode &c, size_t z_row, const ConingOptions &opts, size_t trial);

/// Mapping cone of the block sectors into the code's chain. New qubits come first, then the
/// old ones; new X rows (faces) come first; vertex rows replace the coned Z rows at the top.
CssCode assemble_cone(const CssCode &c, const std::vector<ConeBlock> &blocks);

struct ConeResult {
    CssCode code;
    std::vector<ConeBlock> blocks;
};

/// Cones every row in reduce_set. Over the basis trials, first the largest w_z any block is
/// forced to have is minimized, then each block independently minimizes (q_x, w_x, size).
ConeResult coning(const CssCode &c, const std::vector<size_t> &reduce_set, const ConingOptions &opts);

// ---- pipeline ----

struct PipelineOptions {
    CopyVariant copy = CopyVariant::original();
    HeightsSpec heights = HeightsSpec::greedy(0, 3);
    ConingOptions coning;
    /// Z rows heavier than this are coned.
    size_t cone_above = 5;
};

struct PipelineStage {
    std::string name;
    CssCode code;
};

struct PipelineResult {
    std::vector<PipelineStage> stages;
    size_t ell = 1;
    std::vector<size_t> heights;
    std::vector<ConeBlock> blocks;

    const CssCode &final_code() const {
        return stages.back().code;
    }
};

/// copying, gauging, thickening with heights, coning, and the optional second thickening.
PipelineResult full_pipeline(const CssCode &c, const PipelineOptions &opts);

/// JSON object with keys copy, ell, heights, cone_seed, cone_trials, cellulate_above,
/// cellulation, second_ell, second_heights. Missing keys keep their defaults.
PipelineOptions parse_pipeline_options(const std::string &json_text);
std::string pipeline_options_json(const PipelineOptions &opts);

}  // namespace wtred

#endif
