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

#include "wtred/classical_reduce.h"

#include <random>

#include "wtred/errors.h"

namespace wtred {

void ReductionOptions::validate() const {
    if (row_threshold < 3 || col_threshold < 3) {
        throw ValidationError("reduction thresholds below 3 are not supported");
    }
}

namespace {

template <typename T>
void shuffle_in_place(std::vector<T> &v, std::mt19937_64 &rng) {
    for (size_t i = v.size(); i > 1; i--) {
        std::swap(v[i - 1], v[rng() % i]);
    }
}

// Splits an ordered support into the rows of f.
template <typename T>
std::vector<std::vector<T>> group_support(const std::vector<T> &s, bool compressed) {
    std::vector<std::vector<T>> groups;
    size_t w = s.size();
    if (compressed && w >= 4) {
        groups.push_back({s[0], s[1]});
        for (size_t i = 2; i + 2 < w; i++) {
            groups.push_back({s[i]});
        }
        groups.push_back({s[w - 2], s[w - 1]});
    } else {
        for (const auto &e : s) {
            groups.push_back({e});
        }
    }
    return groups;
}

uint64_t column_pass_seed(uint64_t seed) {
    return seed ^ 0xc2b2ae3d27d4eb4fULL;
}

BinaryMatrix reduce_rows_impl(const BinaryMatrix &h, bool compressed, bool permute, uint64_t seed, size_t threshold) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<size_t>> old_part;
    std::vector<std::vector<size_t>> new_part;
    size_t added = 0;
    for (size_t r = 0; r < h.rows(); r++) {
        std::vector<size_t> s = h.row_support(r);
        if (s.size() <= threshold) {
            old_part.push_back(s);
            new_part.push_back({});
            continue;
        }
        if (permute) {
            shuffle_in_place(s, rng);
        }
        auto groups = group_support(s, compressed);
        size_t g = groups.size();
        for (size_t i = 0; i < g; i++) {
            std::vector<size_t> fresh;
            if (i > 0) {
                fresh.push_back(added + i - 1);
            }
            if (i + 1 < g) {
                fresh.push_back(added + i);
            }
            old_part.push_back(groups[i]);
            new_part.push_back(fresh);
        }
        added += g - 1;
    }
    BinaryMatrix out(old_part.size(), h.cols() + added);
    for (size_t r = 0; r < old_part.size(); r++) {
        for (size_t c : old_part[r]) {
            out.set(r, c);
        }
        for (size_t c : new_part[r]) {
            out.set(r, h.cols() + c);
        }
    }
    return out;
}

struct BaseEntry {
    size_t col;
    RingElement value;
};

size_t group_weight(const std::vector<BaseEntry> &g) {
    size_t w = 0;
    for (const auto &e : g) {
        w += e.value.weight();
    }
    return w;
}

bool layout_fits(const std::vector<std::vector<BaseEntry>> &groups, size_t threshold) {
    size_t g = groups.size();
    if (g < 2) {
        return false;
    }
    for (size_t i = 0; i < g; i++) {
        size_t rep = (i == 0 || i + 1 == g) ? 1 : 2;
        if (group_weight(groups[i]) + rep > threshold) {
            return false;
        }
    }
    return true;
}

std::vector<BaseEntry> heavy_to_ends(const std::vector<BaseEntry> &s) {
    std::vector<BaseEntry> heavy;
    std::vector<BaseEntry> light;
    for (const auto &e : s) {
        (e.value.weight() > 1 ? heavy : light).push_back(e);
    }
    if (heavy.empty() || heavy.size() > 2) {
        return s;
    }
    std::vector<BaseEntry> out;
    out.push_back(heavy[0]);
    out.insert(out.end(), light.begin(), light.end());
    if (heavy.size() == 2) {
        out.push_back(heavy[1]);
    }
    return out;
}

std::vector<BaseEntry> split_monomials(const std::vector<BaseEntry> &s, size_t ell) {
    std::vector<BaseEntry> out;
    for (const auto &e : s) {
        for (size_t x : e.value.exponents()) {
            out.push_back({e.col, RingElement::monomial(ell, x)});
        }
    }
    return out;
}

BaseReduction reduce_base_rows_impl(
    const BaseMatrix &a, const ReductionOptions &opts, uint64_t seed, size_t threshold, const char *what) {
    std::mt19937_64 rng(seed);
    size_t ell = a.ell();
    std::vector<std::vector<BaseEntry>> old_part;
    std::vector<std::vector<size_t>> new_part;
    std::vector<std::string> diagnostics;
    size_t added = 0;
    for (size_t r = 0; r < a.rows(); r++) {
        std::vector<BaseEntry> s;
        for (size_t c = 0; c < a.cols(); c++) {
            if (!a.at(r, c).is_zero()) {
                s.push_back({c, a.at(r, c)});
            }
        }
        if (a.row_weight(r) <= threshold) {
            old_part.push_back(s);
            new_part.push_back({});
            continue;
        }
        if (opts.permute) {
            shuffle_in_place(s, rng);
        }
        bool compressed = opts.compressed && s.size() >= 4;
        auto groups = group_support(s, compressed);
        if (!layout_fits(groups, threshold)) {
            auto moved = group_support(heavy_to_ends(s), compressed);
            if (layout_fits(moved, threshold) || !opts.split_entries) {
                groups = moved;
            }
        }
        if (!layout_fits(groups, threshold) && opts.split_entries) {
            auto pieces = split_monomials(s, ell);
            groups = group_support(pieces, opts.compressed && pieces.size() >= 4);
        }
        if (!layout_fits(groups, threshold)) {
            diagnostics.push_back(
                std::string("irreducible entry: ") + what + " " + std::to_string(r) + " keeps weight above " +
                std::to_string(threshold));
        }
        size_t g = groups.size();
        for (size_t i = 0; i < g; i++) {
            std::vector<size_t> fresh;
            if (i > 0) {
                fresh.push_back(added + i - 1);
            }
            if (i + 1 < g) {
                fresh.push_back(added + i);
            }
            old_part.push_back(groups[i]);
            new_part.push_back(fresh);
        }
        added += g > 0 ? g - 1 : 0;
    }
    BaseMatrix out(old_part.size(), a.cols() + added, ell);
    for (size_t r = 0; r < old_part.size(); r++) {
        for (const auto &e : old_part[r]) {
            out.set(r, e.col, out.at(r, e.col) + e.value);
        }
        for (size_t c : new_part[r]) {
            out.set(r, a.cols() + c, RingElement::one(ell));
        }
    }
    return {out, diagnostics};
}

}  // namespace

BinaryMatrix reduce_rows(const BinaryMatrix &h, const ReductionOptions &opts) {
    opts.validate();
    return reduce_rows_impl(h, opts.compressed, opts.permute, opts.seed, opts.row_threshold);
}

BinaryMatrix reduce_cols(const BinaryMatrix &h, const ReductionOptions &opts) {
    opts.validate();
    return reduce_rows_impl(h.transpose(), opts.compressed, opts.permute, column_pass_seed(opts.seed), opts.col_threshold)
        .transpose();
}

BinaryMatrix reduce_full(const BinaryMatrix &h, const ReductionOptions &opts) {
    return reduce_cols(reduce_rows(h, opts), opts);
}

BaseReduction reduce_base_rows(const BaseMatrix &a, const ReductionOptions &opts) {
    opts.validate();
    return reduce_base_rows_impl(a, opts, opts.seed, opts.row_threshold, "row");
}

BaseReduction reduce_base_full(const BaseMatrix &a, const ReductionOptions &opts) {
    opts.validate();
    BaseReduction rows = reduce_base_rows_impl(a, opts, opts.seed, opts.row_threshold, "row");
    BaseReduction cols = reduce_base_rows_impl(
        rows.matrix.transpose_layout(), opts, column_pass_seed(opts.seed), opts.col_threshold, "column");
    BaseReduction out{cols.matrix.transpose_layout(), rows.diagnostics};
    out.diagnostics.insert(out.diagnostics.end(), cols.diagnostics.begin(), cols.diagnostics.end());
    return out;
}

}  // namespace wtred
