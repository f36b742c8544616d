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

#include "wtred/distance.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_map>

#include "wtred/errors.h"
#include "wtred/parallel.h"

namespace wtred {

Distance Distance::exact(size_t d) {
    Distance r;
    r.lower_ = d;
    r.upper_ = d;
    return r;
}

Distance Distance::at_least(size_t lower) {
    Distance r;
    r.lower_ = lower;
    return r;
}

Distance Distance::bounds(size_t lower, std::optional<size_t> upper) {
    if (upper.has_value() && *upper < lower) {
        throw ValidationError("distance upper bound below lower bound");
    }
    Distance r;
    r.lower_ = lower;
    r.upper_ = upper;
    return r;
}

Distance Distance::infinite() {
    Distance r;
    r.infinite_ = true;
    r.lower_ = std::numeric_limits<size_t>::max();
    return r;
}

std::optional<size_t> Distance::value() const {
    if (is_exact()) {
        return lower_;
    }
    return std::nullopt;
}

std::string Distance::str() const {
    if (infinite_) {
        return "inf";
    }
    if (is_exact()) {
        return std::to_string(lower_);
    }
    if (!upper_.has_value()) {
        return ">=" + std::to_string(lower_);
    }
    if (lower_ <= 1) {
        return "<=" + std::to_string(*upper_);
    }
    return std::to_string(lower_) + ".." + std::to_string(*upper_);
}

bool Distance::operator==(const Distance &other) const {
    return infinite_ == other.infinite_ && lower_ == other.lower_ && upper_ == other.upper_;
}

Distance min(const Distance &a, const Distance &b) {
    if (a.is_infinite()) {
        return b;
    }
    if (b.is_infinite()) {
        return a;
    }
    size_t lower = std::min(a.lower(), b.lower());
    std::optional<size_t> upper;
    if (a.upper() && b.upper()) {
        upper = std::min(*a.upper(), *b.upper());
    } else if (a.upper()) {
        upper = a.upper();
    } else if (b.upper()) {
        upper = b.upper();
    }
    // An upper bound from one side caps the minimum even if the other side is open.
    if (upper && *upper < lower) {
        lower = *upper;
    }
    return Distance::bounds(lower, upper);
}

double weight_search_cost(size_t n, size_t max_weight) {
    double total = 0;
    double binom = 1;  // C(n, w - 1)
    for (size_t w = 1; w <= max_weight && w <= n; w++) {
        total += binom;
        binom = binom * (double)(n - (w - 1)) / (double)w;
    }
    return total;
}

namespace {

uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// Columns of the check matrix and of the logical matrix, each packed as words.
// Every column also gets a linear 64-bit hash of its syndrome, so the hash of a sum of
// columns is the XOR of their hashes.
struct ColumnTable {
    size_t n = 0;
    size_t syn_words = 0;
    size_t log_words = 0;
    std::vector<uint64_t> syn;
    std::vector<uint64_t> log;
    std::vector<uint64_t> key;
    // Open addressing over distinct keys; each slot owns a run of `grouped`.
    uint64_t mask = 0;
    std::vector<uint64_t> slot_key;
    std::vector<uint32_t> slot_begin;
    std::vector<uint32_t> slot_count;
    std::vector<uint32_t> grouped;

    const uint64_t *syn_col(size_t j) const {
        return syn.data() + j * syn_words;
    }
    const uint64_t *log_col(size_t j) const {
        return log.data() + j * log_words;
    }
    // Returns the slot holding h, or SIZE_MAX.
    size_t find(uint64_t h) const {
        size_t i = mix64(h) & mask;
        while (slot_count[i] != 0) {
            if (slot_key[i] == h) {
                return i;
            }
            i = (i + 1) & mask;
        }
        return SIZE_MAX;
    }
};

ColumnTable build_columns(const BinaryMatrix &checks, const BinaryMatrix *logicals) {
    ColumnTable t;
    t.n = checks.cols();
    BinaryMatrix ct = checks.transpose();
    t.syn_words = ct.stride();
    t.syn.assign(ct.rows() * t.syn_words, 0);
    for (size_t j = 0; j < ct.rows(); j++) {
        std::copy(ct.row_data(j), ct.row_data(j) + t.syn_words, t.syn.data() + j * t.syn_words);
    }
    if (logicals != nullptr) {
        BinaryMatrix lt = logicals->transpose();
        t.log_words = lt.stride();
        t.log.assign(lt.rows() * t.log_words, 0);
        for (size_t j = 0; j < lt.rows(); j++) {
            std::copy(lt.row_data(j), lt.row_data(j) + t.log_words, t.log.data() + j * t.log_words);
        }
    }
    std::vector<uint64_t> row_key(checks.rows());
    for (size_t r = 0; r < row_key.size(); r++) {
        row_key[r] = mix64(r + 0x243f6a8885a308d3ULL);
    }
    t.key.assign(t.n, 0);
    for (size_t j = 0; j < t.n; j++) {
        for (size_t r : ct.row_support(j)) {
            t.key[j] ^= row_key[r];
        }
    }
    size_t cap = 1;
    while (cap < 2 * t.n + 2) {
        cap <<= 1;
    }
    t.mask = cap - 1;
    t.slot_key.assign(cap, 0);
    t.slot_begin.assign(cap, 0);
    t.slot_count.assign(cap, 0);
    std::vector<size_t> slot_of(t.n);
    for (size_t j = 0; j < t.n; j++) {
        size_t i = mix64(t.key[j]) & t.mask;
        while (t.slot_count[i] != 0 && t.slot_key[i] != t.key[j]) {
            i = (i + 1) & t.mask;
        }
        t.slot_key[i] = t.key[j];
        t.slot_count[i]++;
        slot_of[j] = i;
    }
    uint32_t begin = 0;
    for (size_t i = 0; i < cap; i++) {
        t.slot_begin[i] = begin;
        begin += t.slot_count[i];
    }
    t.grouped.assign(t.n, 0);
    std::vector<uint32_t> fill(cap, 0);
    for (size_t j = 0; j < t.n; j++) {
        size_t i = slot_of[j];
        t.grouped[t.slot_begin[i] + fill[i]++] = (uint32_t)j;
    }
    return t;
}

struct Searcher {
    const ColumnTable &t;
    bool need_logical;
    const std::atomic<bool> &stop;
    std::vector<uint64_t> hash;
    std::vector<uint64_t> log;
    std::vector<size_t> chosen;
    std::vector<uint64_t> scratch;

    // Looks for a last column j >= after completing the chosen columns to a valid vector.
    bool finish(size_t depth, size_t after) {
        size_t slot = t.find(hash[depth]);
        if (slot == SIZE_MAX) {
            return false;
        }
        const uint64_t *al = log.data() + depth * t.log_words;
        bool have_syndrome = false;
        for (uint32_t k = 0; k < t.slot_count[slot]; k++) {
            size_t j = t.grouped[t.slot_begin[slot] + k];
            if (j < after) {
                continue;
            }
            if (!have_syndrome) {
                scratch.assign(t.syn_words, 0);
                for (size_t d = 0; d < depth; d++) {
                    const uint64_t *c = t.syn_col(chosen[d]);
                    for (size_t w = 0; w < t.syn_words; w++) {
                        scratch[w] ^= c[w];
                    }
                }
                have_syndrome = true;
            }
            if (!std::equal(scratch.begin(), scratch.end(), t.syn_col(j))) {
                continue;
            }
            if (!need_logical) {
                return true;
            }
            const uint64_t *l = t.log_col(j);
            for (size_t w = 0; w < t.log_words; w++) {
                if (l[w] != al[w]) {
                    return true;
                }
            }
        }
        return false;
    }

    // Chooses `remaining` more columns from [start, n) before the final lookup.
    bool dfs(size_t depth, size_t start, size_t remaining) {
        if (remaining == 0) {
            return finish(depth, start);
        }
        const uint64_t *al = log.data() + depth * t.log_words;
        uint64_t *nl = log.data() + (depth + 1) * t.log_words;
        for (size_t j = start; j + remaining < t.n; j++) {
            if (stop.load(std::memory_order_relaxed)) {
                return false;
            }
            chosen[depth] = j;
            hash[depth + 1] = hash[depth] ^ t.key[j];
            const uint64_t *cl = t.log_col(j);
            for (size_t w = 0; w < t.log_words; w++) {
                nl[w] = al[w] ^ cl[w];
            }
            if (dfs(depth + 1, j + 1, remaining - 1)) {
                return true;
            }
        }
        return false;
    }
};

}  // namespace

static bool has_weight_in(const ColumnTable &t, bool need_logical, size_t w) {
    if (w == 0 || w > t.n) {
        return false;
    }
    std::atomic<bool> found{false};
    auto make = [&]() {
        Searcher s{t, need_logical, found, {}, {}, {}, {}};
        s.hash.assign(w + 1, 0);
        s.log.assign((w + 1) * std::max<size_t>(t.log_words, 1), 0);
        s.chosen.assign(w + 1, 0);
        return s;
    };
    if (w == 1) {
        Searcher s = make();
        return s.dfs(0, 0, 0);
    }
    // Split on the first chosen column.
    parallel_for(t.n - (w - 1), [&](size_t first, size_t) {
        if (found.load(std::memory_order_relaxed)) {
            return;
        }
        Searcher s = make();
        s.chosen[0] = first;
        s.hash[1] = t.key[first];
        const uint64_t *cl = t.log_col(first);
        std::copy(cl, cl + t.log_words, s.log.data() + t.log_words);
        if (s.dfs(1, first + 1, w - 2)) {
            found.store(true);
        }
    });
    return found.load();
}

bool has_weight(const BinaryMatrix &checks, const BinaryMatrix *logicals, size_t w) {
    if (logicals != nullptr && logicals->cols() != checks.cols()) {
        throw ValidationError("logical and check matrices differ in length");
    }
    ColumnTable t = build_columns(checks, logicals);
    return has_weight_in(t, logicals != nullptr, w);
}

std::optional<size_t> min_weight_search(const BinaryMatrix &checks, const BinaryMatrix *logicals, size_t max_weight) {
    if (logicals != nullptr && logicals->cols() != checks.cols()) {
        throw ValidationError("logical and check matrices differ in length");
    }
    ColumnTable t = build_columns(checks, logicals);
    for (size_t w = 1; w <= max_weight && w <= t.n; w++) {
        if (has_weight_in(t, logicals != nullptr, w)) {
            return w;
        }
    }
    return std::nullopt;
}

std::optional<size_t> span_min_weight(const BinaryMatrix &g) {
    size_t k = g.rows();
    if (k == 0) {
        return std::nullopt;
    }
    if (k > 40) {
        throw ValidationError("span enumeration limited to 40 generators");
    }
    size_t stride = g.stride();
    size_t top = std::min<size_t>(k, 8);
    size_t low = k - top;
    size_t chunks = size_t{1} << top;
    std::vector<size_t> best(chunks, std::numeric_limits<size_t>::max());
    parallel_for(chunks, [&](size_t c, size_t) {
        std::vector<uint64_t> acc(stride, 0);
        for (size_t b = 0; b < top; b++) {
            if ((c >> b) & 1) {
                const uint64_t *row = g.row_data(low + b);
                for (size_t w = 0; w < stride; w++) {
                    acc[w] ^= row[w];
                }
            }
        }
        size_t local = std::numeric_limits<size_t>::max();
        auto weigh = [&]() {
            size_t wt = 0;
            for (size_t w = 0; w < stride; w++) {
                wt += std::popcount(acc[w]);
            }
            return wt;
        };
        if (c != 0) {
            local = weigh();
        }
        uint64_t steps = uint64_t{1} << low;
        for (uint64_t i = 1; i < steps; i++) {
            const uint64_t *row = g.row_data((size_t)std::countr_zero(i));
            size_t wt = 0;
            for (size_t w = 0; w < stride; w++) {
                acc[w] ^= row[w];
                wt += std::popcount(acc[w]);
            }
            if (wt < local) {
                local = wt;
            }
        }
        best[c] = local;
    });
    size_t result = *std::min_element(best.begin(), best.end());
    if (result == 0) {
        // Dependent generators produce the zero vector; fall back to a basis.
        RrefResult r = rref(g);
        std::vector<size_t> keep;
        for (size_t i = 0; i < r.pivots.size(); i++) {
            keep.push_back(i);
        }
        return span_min_weight(select_rows(r.reduced, keep));
    }
    return result;
}

std::optional<size_t> info_set_upper(
    const BinaryMatrix &generators, const BinaryMatrix *logicals, size_t trials, uint64_t seed) {
    size_t n = generators.cols();
    if (generators.rows() == 0 || trials == 0) {
        return std::nullopt;
    }
    if (logicals != nullptr && logicals->cols() != n) {
        throw ValidationError("logical and generator matrices differ in length");
    }
    std::vector<size_t> best(trials, std::numeric_limits<size_t>::max());
    parallel_for(trials, [&](size_t trial, size_t) {
        std::mt19937_64 rng(mix64(seed ^ mix64(trial + 0x51ed2701ULL)));
        std::vector<size_t> perm(n);
        for (size_t i = 0; i < n; i++) {
            perm[i] = i;
        }
        // Trial 0 keeps the natural column order.
        if (trial != 0) {
            for (size_t i = n; i > 1; i--) {
                std::swap(perm[i - 1], perm[rng() % i]);
            }
        }
        RrefResult r = rref(permute_cols(generators, perm));
        size_t k = r.pivots.size();
        const BinaryMatrix &m = r.reduced;
        size_t stride = m.stride();
        size_t lw = 0;
        std::vector<uint64_t> sig;
        if (logicals != nullptr) {
            BinaryMatrix lp = permute_cols(*logicals, perm);
            BinaryMatrix s = m * lp.transpose();
            lw = s.stride();
            sig.assign(k * std::max<size_t>(lw, 1), 0);
            for (size_t i = 0; i < k; i++) {
                std::copy(s.row_data(i), s.row_data(i) + lw, sig.data() + i * lw);
            }
        }
        auto is_logical = [&](size_t a, size_t b) {
            if (logicals == nullptr) {
                return true;
            }
            for (size_t w = 0; w < lw; w++) {
                uint64_t v = sig[a * lw + w];
                if (b != SIZE_MAX) {
                    v ^= sig[b * lw + w];
                }
                if (v) {
                    return true;
                }
            }
            return false;
        };
        size_t local = std::numeric_limits<size_t>::max();
        for (size_t i = 0; i < k; i++) {
            if (is_logical(i, SIZE_MAX)) {
                local = std::min(local, m.row_weight(i));
            }
        }
        if (k <= 256) {
            for (size_t a = 0; a < k; a++) {
                const uint64_t *ra = m.row_data(a);
                for (size_t b = a + 1; b < k; b++) {
                    if (!is_logical(a, b)) {
                        continue;
                    }
                    const uint64_t *rb = m.row_data(b);
                    size_t wt = 0;
                    for (size_t w = 0; w < stride && wt < local; w++) {
                        wt += std::popcount(ra[w] ^ rb[w]);
                    }
                    local = std::min(local, wt);
                }
            }
        }
        best[trial] = local;
    });
    size_t result = *std::min_element(best.begin(), best.end());
    if (result == std::numeric_limits<size_t>::max()) {
        return std::nullopt;
    }
    return result;
}

}  // namespace wtred
