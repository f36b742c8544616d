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

#ifndef WTRED_TANNER_H
#define WTRED_TANNER_H

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wtred/binary_matrix.h"
#include "wtred/css_code.h"

namespace wtred {

enum class CheckType { untyped, x, z };

/// Bipartite multigraph between variable nodes and typed check nodes.
class TannerGraph {
   public:
    explicit TannerGraph(size_t num_variables) : num_variables_(num_variables) {
    }

    static TannerGraph from_css(const CssCode &c);
    static TannerGraph from_classical(const BinaryMatrix &h);

    /// Adds a check; a variable may be listed more than once (parallel edges).
    void add_check(CheckType type, const std::vector<size_t> &variables);

    size_t num_variables() const {
        return num_variables_;
    }
    size_t num_checks() const {
        return types_.size();
    }
    CheckType check_type(size_t c) const {
        return types_[c];
    }
    /// (variable, multiplicity) pairs, variables ascending.
    const std::vector<std::pair<size_t, size_t>> &check_neighbors(size_t c) const {
        return checks_[c];
    }
    size_t num_edges() const;

   private:
    size_t num_variables_;
    std::vector<CheckType> types_;
    std::vector<std::vector<std::pair<size_t, size_t>>> checks_;
};

struct CycleCounts {
    size_t x_only = 0;
    size_t z_only = 0;
    size_t cross = 0;
    /// Cycles through an untyped check.
    size_t untyped = 0;

    size_t total() const {
        return x_only + z_only + cross + untyped;
    }
    bool operator==(const CycleCounts &other) const = default;
};

/// 4-cycles: for every pair of checks with t two-paths between them, C(t, 2).
CycleCounts count_4cycles(const TannerGraph &g);

/// Only the 4-cycles whose two variables copy the same original variable.
CycleCounts count_split_4cycles(const TannerGraph &g, const std::vector<size_t> &origin);

/// Closed form for copying: a qubit in c Z rows split into s copies adds C(s,2) C(c,2) Z-only
/// and c (s - 1) X-Z cycles.
CycleCounts copying_cycle_formula(const BinaryMatrix &hz, const std::vector<size_t> &counts);

/// Shortest cycle length, or nullopt for a forest. With only_type set, checks of other types
/// are dropped first. Parallel edges count as cycles of length 2.
std::optional<size_t> girth(const TannerGraph &g, std::optional<CheckType> only_type = std::nullopt);

/// Graphviz rendering: variables as circles, X checks open squares, Z checks filled squares.
std::string to_dot(const TannerGraph &g);

}  // namespace wtred

#endif
