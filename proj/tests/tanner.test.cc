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
#include "wtred/css_code.h"
#include "wtred/errors.h"
#include "wtred/fixtures.h"
#include "wtred/quantum_reduce.h"
#include "wtred/tanner.h"

using namespace wtred;

namespace {

CopyVariant random_variant(std::mt19937_64 &rng) {
    switch (rng() % 3) {
        case 0:
            return CopyVariant::original();
        case 1:
            return CopyVariant::reduced();
        default:
            return CopyVariant::targeted(3 + rng() % 2);
    }
}

}  // namespace

TEST(CycleCensus, quantum_reed_muller_copying) {
    CssCode q = qrm4();
    struct Row {
        CopyVariant v;
        size_t total;
    };
    for (const Row &row : {Row{CopyVariant::original(), 906}, Row{CopyVariant::reduced(), 564},
                           Row{CopyVariant::targeted(3), 55}}) {
        SCOPED_TRACE(row.v.str());
        CopyResult r = copying(q, row.v);
        CycleCounts split = count_split_4cycles(TannerGraph::from_css(r.code), r.origin);
        EXPECT_EQ(split.total(), row.total);
        CycleCounts formula = copying_cycle_formula(q.hz(), r.counts);
        EXPECT_EQ(split, formula);
        EXPECT_EQ(split.x_only, 0u);
    }
}

TEST(CycleCensus, formula_matches_enumeration) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; t++) {
        CssCode c = hgp(random_matrix(2 + rng() % 2, 3 + rng() % 2, 0.6, rng),
                        random_matrix(2 + rng() % 2, 3 + rng() % 2, 0.6, rng));
        CopyVariant v = random_variant(rng);
        CopyResult r = copying(c, v);
        SCOPED_TRACE(v.str());
        CycleCounts brute = enumerate_4cycles(r.code, &r.origin);
        EXPECT_EQ(count_split_4cycles(TannerGraph::from_css(r.code), r.origin), brute);
        EXPECT_EQ(copying_cycle_formula(c.hz(), r.counts), brute);
        EXPECT_EQ(count_4cycles(TannerGraph::from_css(r.code)), enumerate_4cycles(r.code, nullptr));
    }
}

TEST(CycleCensus, classical_graph_is_untyped) {
    TannerGraph g = TannerGraph::from_classical(M({"11", "11"}));
    CycleCounts c = count_4cycles(g);
    EXPECT_EQ(c.untyped, 1u);
    EXPECT_EQ(c.total(), 1u);
}

TEST(Girth, basic_graphs) {
    EXPECT_FALSE(girth(TannerGraph::from_classical(M({"110", "011"}))).has_value());
    EXPECT_EQ(girth(TannerGraph::from_classical(M({"11", "11"}))), 4u);
    EXPECT_EQ(girth(TannerGraph::from_classical(M({"110", "011", "101"}))), 6u);
    TannerGraph multi(2);
    multi.add_check(CheckType::untyped, {0, 0, 1});
    EXPECT_EQ(girth(multi), 2u);
    EXPECT_EQ(multi.num_edges(), 3u);
}

TEST(Girth, typed_subgraphs) {
    CssCode c = hgp(M({"11"}), M({"11"}));
    TannerGraph g = TannerGraph::from_css(c);
    EXPECT_EQ(girth(g), 4u);
    EXPECT_FALSE(girth(g, CheckType::x).has_value());
    EXPECT_FALSE(girth(g, CheckType::z).has_value());
}

TEST(TannerDot, renders_every_node) {
    TannerGraph g = TannerGraph::from_css(CssCode(M({"1111"}), M({"1100", "1010"})));
    std::string dot = to_dot(g);
    EXPECT_EQ(dot.rfind("graph tanner {", 0), 0u);
    for (const char *node : {"v0 ", "v3 ", "c0 ", "c2 "}) {
        EXPECT_NE(dot.find(node), std::string::npos) << node;
    }
}
