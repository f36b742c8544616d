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

#ifndef WTRED_LINEAR_CODE_H
#define WTRED_LINEAR_CODE_H

#include <cstddef>
#include <cstdint>
#include <string>

#include "wtred/binary_matrix.h"
#include "wtred/distance.h"
#include "wtred/ring.h"

namespace wtred {

/// Classical code {v : h v^T = 0}; h may have redundant rows.
class LinearCode {
   public:
    explicit LinearCode(BinaryMatrix h);

    const BinaryMatrix &h() const {
        return h_;
    }
    size_t n() const {
        return h_.cols();
    }
    size_t k() const {
        return k_;
    }
    /// Rows form a basis of the code.
    BinaryMatrix generator() const;

   private:
    BinaryMatrix h_;
    size_t k_;
};

struct CodeParams {
    size_t n = 0;
    size_t k = 0;
    Distance d = Distance::at_least(1);
    std::string str() const;
};

/// Exact search up to `budget`. Returns the exact distance when some nonzero codeword has
/// weight <= budget, Distance::at_least(budget + 1) otherwise, and Distance::infinite()
/// when k = 0. Picks the cheaper of support enumeration and span enumeration (k <= 28).
Distance min_distance_exact(const LinearCode &c, size_t budget);

/// Randomized information-set bound; Distance::infinite() when k = 0.
Distance min_distance_upper(const LinearCode &c, size_t trials, uint64_t seed);

/// Exact if the search is affordable, else the randomized bound.
struct ClassicalDistanceOptions {
    size_t budget = SIZE_MAX;
    double max_work = 4e9;
    size_t trials = 200;
    uint64_t seed = 0;
};
Distance classical_distance(const LinearCode &c, const ClassicalDistanceOptions &opts = {});
CodeParams code_params(const LinearCode &c, const ClassicalDistanceOptions &opts = {});

/// (ell - 1) x ell parity checks of the repetition code; ell = 1 gives a 0 x 1 matrix.
BinaryMatrix repetition_check(size_t ell);

LinearCode code_from_base(const BaseMatrix &a);

}  // namespace wtred

#endif
