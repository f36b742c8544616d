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
#include "wtred/errors.h"
#include "wtred/fixtures.h"
#include "wtred/linear_code.h"

using namespace wtred;

TEST(LinearCode, dimension_is_recomputed) {
    LinearCode c(M({"110", "011", "101"}));
    EXPECT_EQ(c.n(), 3u);
    EXPECT_EQ(c.k(), 1u);
}

TEST(RepetitionCheck, shapes) {
    EXPECT_EQ(repetition_check(3), M({"110", "011"}));
    EXPECT_EQ(repetition_check(2), M({"11"}));
    EXPECT_EQ(repetition_check(1).rows(), 0u);
    EXPECT_EQ(repetition_check(1).cols(), 1u);
    EXPECT_THROW(repetition_check(0), ValidationError);
}

TEST(ExactDistance, small_codes) {
    EXPECT_EQ(min_distance_exact(LinearCode(repetition_check(5)), 10), Distance::exact(5));
    EXPECT_EQ(min_distance_exact(LinearCode(fixture_743()), 10), Distance::exact(3));
    EXPECT_EQ(min_distance_exact(LinearCode(fixture_734()), 3), Distance::at_least(4));
    EXPECT_TRUE(min_distance_exact(LinearCode(BinaryMatrix::identity(4)), 3).is_infinite());
    EXPECT_THROW(min_distance_exact(LinearCode(fixture_734()), 0), ValidationError);
}

TEST(ExactDistance, fixtures_have_advertised_parameters) {
    EXPECT_EQ(code_params(LinearCode(fixture_633())).str(), "[6,3,3]");
    EXPECT_EQ(code_params(LinearCode(fixture_743())).str(), "[7,4,3]");
    EXPECT_EQ(code_params(LinearCode(fixture_734())).str(), "[7,3,4]");
}

TEST(ExactDistance, quasi_cyclic_item_one) {
    LinearCode c = code_from_base(fixture_base("qc1"));
    EXPECT_EQ(c.n(), 52u);
    EXPECT_EQ(c.k(), 27u);
    EXPECT_EQ(min_distance_exact(c, 6), Distance::exact(6));
}

TEST(ExactDistance, agrees_with_enumeration) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 60; t++) {
        BinaryMatrix h = random_matrix(1 + rng() % 8, 6 + rng() % 10, 0.35, rng);
        LinearCode c(h);
        if (c.k() == 0) {
            continue;
        }
        size_t d = brute_distance(h);
        EXPECT_EQ(min_distance_exact(c, 30), Distance::exact(d));
        ClassicalDistanceOptions o;
        o.max_work = 10;  // forces the bounded path
        Distance b = classical_distance(c, o);
        EXPECT_LE(b.lower(), d);
        EXPECT_GE(*b.upper(), d);
    }
}

TEST(UpperBound, sandwiches_exact) {
    EXPECT_EQ(min_distance_upper(LinearCode(repetition_check(7)), 5, 99).upper(), 7u);
    EXPECT_EQ(min_distance_upper(LinearCode(fixture_743()), 100, 1).upper(), 3u);
    Distance u = min_distance_upper(code_from_base(fixture_base("qc1")), 10000, 5);
    EXPECT_LE(*u.upper(), 6u);
    EXPECT_GE(*u.upper(), 6u);
}

TEST(CodeFromBase, dimensions) {
    LinearCode c3 = code_from_base(fixture_base("qc3"));
    EXPECT_EQ(c3.n(), 28u);
    EXPECT_EQ(c3.k(), 9u);
    LinearCode z = code_from_base(BaseMatrix(1, 1, 3));
    EXPECT_EQ(z.n(), 3u);
    EXPECT_EQ(z.k(), 3u);
}

TEST(DistanceType, formatting) {
    EXPECT_EQ(Distance::exact(4).str(), "4");
    EXPECT_EQ(Distance::infinite().str(), "inf");
    EXPECT_EQ(Distance::at_least(3).str(), ">=3");
    EXPECT_EQ(Distance::bounds(1, 10).str(), "<=10");
    EXPECT_EQ(Distance::bounds(3, 10).str(), "3..10");
    EXPECT_EQ(min(Distance::exact(4), Distance::bounds(2, 9)), Distance::bounds(2, 4));
    EXPECT_EQ(min(Distance::infinite(), Distance::exact(5)), Distance::exact(5));
}
