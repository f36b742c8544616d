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

#ifndef WTRED_CLASSICAL_REDUCE_H
#define WTRED_CLASSICAL_REDUCE_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wtred/binary_matrix.h"
#include "wtred/ring.h"

namespace wtred {

struct ReductionOptions {
    bool compressed = false;
    /// Shuffle the f-block columns of every reduced row and column independently.
    bool permute = false;
    uint64_t seed = 0;
    size_t row_threshold = 3;
    size_t col_threshold = 3;
    /// Base matrices only: allow a heavy polynomial entry to be spread one monomial per row.
    bool split_entries = false;

    void validate() const;
};

/// Rows heavier than the threshold become the rows of (f | 0 | R), where f carries the
/// original support (identity, or weight-2 first and last rows when compressed) and R is the
/// bidiagonal repetition block on new columns appended at the right.
BinaryMatrix reduce_rows(const BinaryMatrix &h, const ReductionOptions &opts);

/// reduce_rows, then the same on the transpose (with col_threshold), transposed back.
BinaryMatrix reduce_full(const BinaryMatrix &h, const ReductionOptions &opts);

/// Column-only reduction: rows are never split.
BinaryMatrix reduce_cols(const BinaryMatrix &h, const ReductionOptions &opts);

struct BaseReduction {
    BaseMatrix matrix;
    /// One message per row or column whose lifted weight could not be brought under the threshold.
    std::vector<std::string> diagnostics;
};

/// Quasi-cyclic analogue of reduce_rows. Row weight is the lifted weight (sum of entry weights).
/// Each nonzero entry gets its own row; entries of weight above one are moved to the ends of
/// the chain where the repetition block contributes a single 1.
BaseReduction reduce_base_rows(const BaseMatrix &a, const ReductionOptions &opts);
BaseReduction reduce_base_full(const BaseMatrix &a, const ReductionOptions &opts);

}  // namespace wtred

#endif
