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

#include "wtred/linear_code.h"

#include <cmath>

#include "wtred/errors.h"

namespace wtred {

LinearCode::LinearCode(BinaryMatrix h) : h_(std::move(h)), k_(h_.cols() - rank(h_)) {
}

BinaryMatrix LinearCode::generator() const {
    return kernel_basis(h_);
}

std::string CodeParams::str() const {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + d.str() + "]";
}

static double span_cost(size_t k) {
    return k <= 28 ? std::ldexp(1.0, (int)k) : INFINITY;
}

Distance min_distance_exact(const LinearCode &c, size_t budget) {
    if (budget == 0) {
        throw ValidationError("distance budget must be at least 1");
    }
    if (c.k() == 0) {
        return Distance::infinite();
    }
    size_t limit = std::min(budget, c.n());
    double by_weight = weight_search_cost(c.n(), limit);
    if (span_cost(c.k()) < by_weight) {
        size_t d = *span_min_weight(c.generator());
        return d <= budget ? Distance::exact(d) : Distance::at_least(budget + 1);
    }
    auto d = min_weight_search(c.h(), nullptr, limit);
    if (d) {
        return Distance::exact(*d);
    }
    return Distance::at_least(budget + 1);
}

Distance min_distance_upper(const LinearCode &c, size_t trials, uint64_t seed) {
    if (c.k() == 0) {
        return Distance::infinite();
    }
    auto u = info_set_upper(c.generator(), nullptr, std::max<size_t>(trials, 1), seed);
    return Distance::bounds(1, *u);
}

Distance classical_distance(const LinearCode &c, const ClassicalDistanceOptions &opts) {
    if (c.k() == 0) {
        return Distance::infinite();
    }
    if (span_cost(c.k()) <= opts.max_work) {
        size_t d = *span_min_weight(c.generator());
        return Distance::exact(d);
    }
    Distance upper = min_distance_upper(c, opts.trials, opts.seed);
    size_t u = *upper.upper();
    // Everything below the bound can be ruled out exhaustively when that is cheap.
    size_t reach = 0;
    while (reach + 1 < u && reach + 1 <= opts.budget && weight_search_cost(c.n(), reach + 1) <= opts.max_work) {
        reach++;
    }
    if (reach == 0) {
        return upper;
    }
    auto d = min_weight_search(c.h(), nullptr, reach);
    if (d) {
        return Distance::exact(*d);
    }
    if (reach + 1 == u) {
        return Distance::exact(u);
    }
    return Distance::bounds(reach + 1, u);
}

CodeParams code_params(const LinearCode &c, const ClassicalDistanceOptions &opts) {
    return CodeParams{c.n(), c.k(), classical_distance(c, opts)};
}

BinaryMatrix repetition_check(size_t ell) {
    if (ell == 0) {
        throw ValidationError("repetition length must be at least 1");
    }
    BinaryMatrix h(ell - 1, ell);
    for (size_t i = 0; i + 1 < ell; i++) {
        h.set(i, i);
        h.set(i, i + 1);
    }
    return h;
}

LinearCode code_from_base(const BaseMatrix &a) {
    return LinearCode(lift_matrix(a));
}

}  // namespace wtred
