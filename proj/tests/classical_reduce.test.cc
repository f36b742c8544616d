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

#include <gtest/gtest.h>

#include "test_util.h"
#include "wtred/classical_reduce.h"
#include "wtred/css_code.h"
#include "wtred/errors.h"
#include "wtred/fixtures.h"
#include "wtred/linear_code.h"

using namespace wtred;

namespace {

const BinaryMatrix kExampleRows = M({"111100", "001111"});
const BinaryMatrix kExampleShuffled = M({"101011", "011110"});

size_t min_col_weight(const BinaryMatrix &h) {
    size_t best = SIZE_MAX;
    for (size_t c = 0; c < h.cols(); c++) {
        best = std::min(best, h.col_support(c).size());
    }
    return best;
}

size_t min_row_weight(const BinaryMatrix &h) {
    size_t best = SIZE_MAX;
    for (size_t r = 0; r < h.rows(); r++) {
        best = std::min(best, h.row_weight(r));
    }
    return best;
}

}  // namespace

TEST(ReduceRows, example_matrix) {
    BinaryMatrix h = reduce_rows(kExampleRows, {});
    EXPECT_EQ(h, M({"100000100000", "010000110000", "001000011000", "000100001000",
                    "001000000100", "000100000110", "000010000011", "000001000001"}));
    EXPECT_EQ(code_params(LinearCode(h)).str(), "[12,4,3]");
}

TEST(ReduceRows, shuffled_example_matrix) {
    BinaryMatrix h = reduce_rows(kExampleShuffled, {});
    EXPECT_EQ(h, M({"100000100000", "001000110000", "000010011000", "000001001000",
                    "010000000100", "001000000110", "000100000011", "000010000001"}));
    EXPECT_EQ(code_params(LinearCode(h)).str(), "[12,4,4]");
}

TEST(ReduceRows, light_rows_are_a_fixpoint) {
    BinaryMatrix h = M({"1101", "0110"});
    EXPECT_EQ(reduce_rows(h, {}), h);
    EXPECT_EQ(reduce_full(BinaryMatrix(3, 5), {}), BinaryMatrix(3, 5));
}

TEST(ReduceRows, compressed_shape) {
    ReductionOptions o;
    o.compressed = true;
    BinaryMatrix h = reduce_rows(M({"111111"}), o);
    // Weight 6 becomes four checks chained by a length-3 repetition block.
    EXPECT_EQ(h.rows(), 4u);
    EXPECT_EQ(h.cols(), 9u);
    EXPECT_LE(h.max_row_weight(), 3u);
    EXPECT_EQ(LinearCode(h).k(), 5u);
}

TEST(ReduceRows, permutation_only_touches_the_support) {
    ReductionOptions o;
    o.permute = true;
    for (uint64_t s = 0; s < 10; s++) {
        o.seed = s;
        BinaryMatrix h = reduce_rows(kExampleRows, o);
        EXPECT_EQ(h.cols(), 12u);
        // Summing the rows of each block recovers the original row.
        for (size_t c = 0; c < 6; c++) {
            size_t first = 0, second = 0;
            for (size_t r = 0; r < 4; r++) {
                first += h.get(r, c);
                second += h.get(r + 4, c);
            }
            EXPECT_EQ(first, kExampleRows.get(0, c));
            EXPECT_EQ(second, kExampleRows.get(1, c));
        }
        EXPECT_EQ(LinearCode(h).k(), 4u);
    }
}

TEST(ReduceOptions, thresholds_below_three_rejected) {
    ReductionOptions o;
    o.row_threshold = 2;
    EXPECT_THROW(reduce_rows(kExampleRows, o), ValidationError);
    o.row_threshold = 3;
    o.col_threshold = 1;
    EXPECT_THROW(reduce_full(kExampleRows, o), ValidationError);
}

TEST(ReduceFull, six_three_three_fixture) {
    BinaryMatrix plain = reduce_full(fixture_633(), {});
    EXPECT_EQ(code_params(LinearCode(plain)).str(), "[9,3,4]");
    EXPECT_LE(plain.max_row_weight(), 3u);
    EXPECT_LE(plain.max_col_weight(), 3u);
    CssParams p = hgp_params(plain, plain);
    EXPECT_EQ(p.n, 117u);
    EXPECT_EQ(p.k, 9u);

    ReductionOptions o;
    o.compressed = true;
    BinaryMatrix comp = reduce_full(fixture_633(), o);
    CssParams pc = hgp_params(comp, comp);
    EXPECT_EQ(pc.n, 65u);
    EXPECT_EQ(pc.k, 9u);
    EXPECT_GE(pc.d().lower(), 3u);
}

TEST(ReduceBase, quasi_cyclic_item_one) {
    BaseReduction plain = reduce_base_full(fixture_base("qc1"), {});
    LinearCode c = code_from_base(plain.matrix);
    EXPECT_EQ(c.n(), 130u);
    EXPECT_EQ(c.k(), 27u);
    EXPECT_TRUE(plain.diagnostics.empty());

    ReductionOptions o;
    o.compressed = true;
    LinearCode cc = code_from_base(reduce_base_full(fixture_base("qc1"), o).matrix);
    EXPECT_EQ(cc.n(), 78u);
    EXPECT_EQ(cc.k(), 27u);
}

TEST(ReduceBase, mixed_weight_entries) {
    ReductionOptions o;
    o.split_entries = true;
    BaseReduction r = reduce_base_full(fixture_base("qc-mixed"), o);
    LinearCode c = code_from_base(r.matrix);
    EXPECT_EQ(c.n(), 414u);
    EXPECT_EQ(c.k(), 47u);
    BinaryMatrix lifted = lift_matrix(r.matrix);
    EXPECT_LE(lifted.max_row_weight(), 3u);
    EXPECT_LE(lifted.max_col_weight(), 3u);
}

// Random parity-check matrices, exact distances on both sides.
TEST(ReductionProperties, random_suite) {
    std::mt19937_64 rng(1234);
    size_t checked = 0, case_a = 0, case_b = 0, case_comp = 0;
    while (checked < 500) {
        size_t n = 4 + rng() % 17;
        size_t rows = std::max<size_t>(1, n > 10 ? n - 10 + rng() % 4 : 1 + rng() % n);
        double density = 0.25 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
        BinaryMatrix h = random_matrix(rows, n, density, rng);
        LinearCode code(h);
        if (code.k() == 0 || code.k() > 10) {
            continue;
        }
        checked++;
        size_t d = brute_distance(h);
        SCOPED_TRACE(h.str());

        auto check = [&](const BinaryMatrix &r, size_t bound, const char *what) {
            SCOPED_TRACE(what);
            EXPECT_EQ(LinearCode(r).k(), code.k());
            EXPECT_GE(brute_distance(r), bound);
        };
        ReductionOptions plain, comp, perm;
        comp.compressed = true;
        perm.permute = true;
        perm.seed = checked;

        BinaryMatrix full = reduce_full(h, plain);
        check(full, d, "plain full");
        EXPECT_LE(full.max_row_weight(), 3u);
        EXPECT_LE(full.max_col_weight(), 3u);
        check(reduce_full(h, comp), d, "compressed full");
        check(reduce_full(h, perm), d, "permuted full");

        // d = 1 means an unchecked bit, which row splitting cannot touch.
        bool heavy_rows = min_row_weight(h) > 3 && d >= 2;
        case_a += heavy_rows;
        check(reduce_rows(h, plain), heavy_rows ? (3 * d + 1) / 2 : d, "rows only");

        size_t q = min_col_weight(h);
        bool heavy_cols = q > 3;
        case_b += heavy_cols;
        check(reduce_cols(h, plain), heavy_cols ? d * q : d, "columns only");
        case_comp += heavy_cols;
        check(reduce_cols(h, comp), heavy_cols ? d * (q - 2) : d, "compressed columns");
    }
    EXPECT_GT(case_a, 20u);
    EXPECT_EQ(brute_distance(reduce_rows(M({"111101"}), {})), 1u);
    EXPECT_GT(case_b, 5u);
    EXPECT_GT(case_comp, 5u);
}
