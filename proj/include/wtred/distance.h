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

#ifndef WTRED_DISTANCE_H
#define WTRED_DISTANCE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "wtred/binary_matrix.h"

namespace wtred {

/// What is known about a minimum distance: an interval [lower, upper], or infinity
/// for a zero-dimensional code. Exact when lower == upper.
class Distance {
   public:
    static Distance exact(size_t d);
    static Distance at_least(size_t lower);
    static Distance bounds(size_t lower, std::optional<size_t> upper);
    static Distance infinite();

    bool is_infinite() const {
        return infinite_;
    }
    bool is_exact() const {
        return !infinite_ && upper_.has_value() && *upper_ == lower_;
    }
    size_t lower() const {
        return lower_;
    }
    std::optional<size_t> upper() const {
        return upper_;
    }
    /// The exact value, if known.
    std::optional<size_t> value() const;
    /// "7", "<=10", ">=3", "3..10" or "inf".
    std::string str() const;

    bool operator==(const Distance &other) const;

   private:
    size_t lower_ = 1;
    std::optional<size_t> upper_;
    bool infinite_ = false;
};

/// Componentwise minimum of two distance intervals; infinity is the identity.
Distance min(const Distance &a, const Distance &b);

/// Number of (w-1)-subsets visited when searching all weights up to max_weight.
double weight_search_cost(size_t n, size_t max_weight);

/// Finds a vector v of weight exactly w with checks * v = 0 and, when logicals is non-null,
/// logicals * v != 0. Without logicals, v only needs to be nonzero.
bool has_weight(const BinaryMatrix &checks, const BinaryMatrix *logicals, size_t w);

/// Smallest weight in [1, max_weight] admitting such a v.
std::optional<size_t> min_weight_search(const BinaryMatrix &checks, const BinaryMatrix *logicals, size_t max_weight);

/// Minimum weight over the nonzero span of the generator rows (Gray-code walk).
/// Returns nullopt for an empty generator set.
std::optional<size_t> span_min_weight(const BinaryMatrix &generators);

/// Randomized information-set search: per trial, permute columns, row reduce the generators,
/// and keep the lightest row or sum of two rows. With logicals, only vectors having
/// logicals * v != 0 count. Deterministic for a fixed seed and independent of thread count.
std::optional<size_t> info_set_upper(
    const BinaryMatrix &generators, const BinaryMatrix *logicals, size_t trials, uint64_t seed);

}  // namespace wtred

#endif
