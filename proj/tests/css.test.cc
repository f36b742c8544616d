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

#include <sstream>

#include "test_util.h"
#include "wtred/classical_reduce.h"
#include "wtred/css_code.h"
#include "wtred/errors.h"
#include "wtred/fixtures.h"
#include "wtred/linear_code.h"

using namespace wtred;

namespace {

size_t dim_ker(const BinaryMatrix &h) {
    return h.cols() - rank(h);
}

// Every logical commutes with the opposite stabilizers and is outside its own stabilizer span.
void expect_valid_logicals(const CssCode &c, const LogicalBasis &l) {
    ASSERT_EQ(l.x.rows(), c.k());
    ASSERT_EQ(l.z.rows(), c.k());
    EXPECT_TRUE((c.hz() * l.x.transpose()).is_zero());
    EXPECT_TRUE((c.hx() * l.z.transpose()).is_zero());
    EXPECT_EQ(rank(vstack({c.hx(), l.x})), c.rank_x() + c.k());
    EXPECT_EQ(rank(vstack({c.hz(), l.z})), c.rank_z() + c.k());
    if (c.k() > 0) {
        EXPECT_EQ(l.x * l.z.transpose(), BinaryMatrix::identity(c.k()));
    }
}

}  // namespace

TEST(CssCode, small_example) {
    CssCode c(M({"1111"}), M({"1100", "1010"}));
    EXPECT_EQ(c.n(), 4u);
    EXPECT_EQ(c.k(), 1u);
    EXPECT_EQ(c.weights().str(), "(4,1,2,2)");
}

TEST(CssCode, anticommuting_rows_rejected) {
    EXPECT_THROW(CssCode(M({"11"}), M({"10"})), CommutationError);
    try {
        CssCode(M({"1100", "1010"}), M({"1111", "0110"}));
        FAIL();
    } catch (const CommutationError &e) {
        EXPECT_EQ(e.row_x, 0u);
        EXPECT_EQ(e.row_z, 1u);
    }
}

TEST(CssCode, quantum_reed_muller) {
    CssCode c = qrm4();
    EXPECT_EQ(c.n(), 15u);
    EXPECT_EQ(c.k(), 1u);
    EXPECT_EQ(c.weights(), (Weights{8, 4, 8, 10}));
    CssParams p = css_distance(c);
    EXPECT_EQ(p.d_x, Distance::exact(7));
    EXPECT_EQ(p.d_z, Distance::exact(3));
    LogicalBasis l = logical_basis(c);
    expect_valid_logicals(c, l);
}

TEST(Hgp, two_bit_repetition) {
    CssCode c = hgp(M({"11"}), M({"11"}));
    EXPECT_EQ(c.n(), 5u);
    EXPECT_EQ(c.k(), 1u);
    EXPECT_EQ(css_distance(c).str(), "[[5,1,2]]");
    LogicalBasis l = logical_basis(c);
    expect_valid_logicals(c, l);
    EXPECT_EQ(l.x.row_weight(0), 2u);
    EXPECT_EQ(l.z.row_weight(0), 2u);
}

TEST(Hgp, fixture_parameters) {
    EXPECT_EQ(hgp_params(fixture_633(), fixture_633()).str(), "[[45,9,3]]");
    EXPECT_EQ(hgp_params(fixture_743(), fixture_743()).str(), "[[58,16,3]]");
    EXPECT_EQ(hgp_params(fixture_734(), fixture_734()).str(), "[[65,9,4]]");
    CssParams id = hgp_params(BinaryMatrix::identity(3), BinaryMatrix::identity(3));
    EXPECT_EQ(id.k, 0u);
    EXPECT_TRUE(id.d().is_infinite());
}

TEST(Hgp, distance_search_agrees_with_formula) {
    CssCode c = hgp(fixture_633(), fixture_633());
    EXPECT_EQ(css_distance(c).d(), Distance::exact(3));
    BinaryMatrix r = reduce_full(fixture_633(), {});
    DistanceOptions o;
    o.min_only = true;
    EXPECT_EQ(css_distance(hgp(r, r), o).d(), Distance::exact(4));
    EXPECT_EQ(hgp_params(r, r).d(), Distance::exact(4));
}

TEST(Hgp, random_products_match_rank_formula) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; t++) {
        BinaryMatrix h1 = random_matrix(1 + rng() % 4, 2 + rng() % 5, 0.5, rng);
        BinaryMatrix h2 = random_matrix(1 + rng() % 4, 2 + rng() % 5, 0.5, rng);
        CssCode c = hgp(h1, h2);
        EXPECT_TRUE((c.hx() * c.hz().transpose()).is_zero());
        EXPECT_EQ(c.n(), h1.cols() * h2.cols() + h1.rows() * h2.rows());
        size_t k = dim_ker(h1) * dim_ker(h2) + dim_ker(h1.transpose()) * dim_ker(h2.transpose());
        EXPECT_EQ(c.k(), k);
        CssParams formula = hgp_params(h1, h2);
        EXPECT_EQ(formula.k, k);
        if (c.n() <= 30) {
            CssParams searched = css_distance(c);
            EXPECT_EQ(searched.d_x, formula.d_x) << h1.str() << "\n" << h2.str();
            EXPECT_EQ(searched.d_z, formula.d_z) << h1.str() << "\n" << h2.str();
        }
    }
}

TEST(LiftedProduct, quasi_cyclic_items) {
    CssCode a = lifted_product(fixture_base("qc1"));
    EXPECT_EQ(a.n(), 260u);
    EXPECT_EQ(a.k(), 58u);
    CssCode b = lifted_product(fixture_base("qc3"));
    EXPECT_EQ(b.n(), 175u);
    EXPECT_EQ(b.k(), 19u);
    DistanceOptions o;
    o.min_only = true;
    o.max_work = 1e6;
    o.trials = 200;
    Distance d = css_distance(b, o).d();
    ASSERT_TRUE(d.upper().has_value());
    EXPECT_LE(*d.upper(), 10u);
}

TEST(LiftedProduct, ell_one_is_hypergraph_product) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 20; t++) {
        BinaryMatrix h1 = random_matrix(2 + rng() % 3, 3 + rng() % 3, 0.5, rng);
        BinaryMatrix h2 = random_matrix(2 + rng() % 3, 3 + rng() % 3, 0.5, rng);
        BaseMatrix a1(h1.rows(), h1.cols(), 1), a2(h2.cols(), h2.rows(), 1);
        for (size_t r = 0; r < h1.rows(); r++) {
            for (size_t c = 0; c < h1.cols(); c++) {
                a1.set(r, c, h1.get(r, c) ? RingElement::one(1) : RingElement::zero(1));
            }
        }
        for (size_t r = 0; r < h2.rows(); r++) {
            for (size_t c = 0; c < h2.cols(); c++) {
                a2.set(c, r, h2.get(r, c) ? RingElement::one(1) : RingElement::zero(1));
            }
        }
        CssCode lp = lifted_product(a1, a2);
        CssCode direct = hgp(h1, h2);
        EXPECT_EQ(lp.hx(), direct.hx());
        EXPECT_EQ(lp.hz(), direct.hz());
    }
}

TEST(LogicalBasis, empty_when_no_logicals) {
    CssCode c(M({"11", "01"}), BinaryMatrix(0, 2));
    EXPECT_EQ(c.k(), 0u);
    LogicalBasis l = logical_basis(c);
    EXPECT_EQ(l.x.rows(), 0u);
    EXPECT_EQ(l.z.rows(), 0u);
}

TEST(LogicalBasis, random_products) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; t++) {
        CssCode c = hgp(random_matrix(3, 5, 0.5, rng), random_matrix(2, 4, 0.5, rng));
        expect_valid_logicals(c, logical_basis(c));
    }
}

TEST(CssIo, round_trip_and_chain) {
    CssCode c = qrm4();
    std::stringstream s;
    write_css(s, c);
    CssCode back = read_css(s);
    EXPECT_EQ(back.hx(), c.hx());
    EXPECT_EQ(back.hz(), c.hz());
    CssCode again = css_from_chain(css_chain(c), 1);
    EXPECT_EQ(again.hx(), c.hx());
    EXPECT_EQ(again.hz(), c.hz());
    std::stringstream bad("css\nHX\n1 2\n11\nHZ\n1 2\n10\n");
    EXPECT_THROW(read_css(bad), ValidationError);
}
