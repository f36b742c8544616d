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
#include "wtred/binary_matrix.h"
#include "wtred/errors.h"
#include "wtred/linear_code.h"

using namespace wtred;

TEST(BinaryMatrix, padding_bits_stay_zero) {
    BinaryMatrix m(3, 70);
    for (size_t r = 0; r < 3; r++) {
        for (size_t c = 0; c < 70; c++) {
            m.set(r, c);
        }
    }
    BinaryMatrix t = m.transpose().transpose();
    for (size_t r = 0; r < 3; r++) {
        EXPECT_EQ(t.row_data(r)[1] >> 6, 0u);
    }
    EXPECT_EQ(t, m);
}

TEST(BinaryMatrix, weights_match_entries) {
    std::mt19937_64 rng(1);
    BinaryMatrix m = random_matrix(13, 77, 0.3, rng);
    auto rw = m.row_weights();
    auto cw = m.col_weights();
    size_t total = 0;
    for (size_t r = 0; r < m.rows(); r++) {
        size_t w = 0;
        for (size_t c = 0; c < m.cols(); c++) {
            w += m.get(r, c);
        }
        EXPECT_EQ(rw[r], w);
        total += w;
    }
    for (size_t c = 0; c < m.cols(); c++) {
        size_t w = 0;
        for (size_t r = 0; r < m.rows(); r++) {
            w += m.get(r, c);
        }
        EXPECT_EQ(cw[c], w);
    }
    EXPECT_EQ(m.weight(), total);
}

TEST(Rank, small_cases) {
    EXPECT_EQ(rank(BinaryMatrix::identity(3)), 3u);
    EXPECT_EQ(rank(repetition_check(4)), 3u);
    EXPECT_EQ(rank(BinaryMatrix::zeros(4, 7)), 0u);
}

TEST(Rref, identity_and_duplicates) {
    auto id = rref(BinaryMatrix::identity(3));
    EXPECT_EQ(id.reduced, BinaryMatrix::identity(3));
    EXPECT_EQ(id.pivots, (std::vector<size_t>{0, 1, 2}));
    auto dup = rref(M({"11", "11"}));
    EXPECT_EQ(dup.reduced, M({"11", "00"}));
    EXPECT_EQ(dup.pivots, (std::vector<size_t>{0}));
}

TEST(Rref, transform_replays_row_operations) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; trial++) {
        BinaryMatrix m = random_matrix(20, 30, 0.4, rng);
        auto r = rref_with_transform(m);
        EXPECT_EQ(r.transform * m, r.reduced);
        EXPECT_EQ(rank(r.transform), 20u);
        EXPECT_EQ(r.pivots.size(), rank(m));
    }
}

TEST(Kernel, small_cases) {
    EXPECT_EQ(kernel_basis(BinaryMatrix::identity(3)).rows(), 0u);
    EXPECT_EQ(kernel_basis(BinaryMatrix::identity(3)).cols(), 3u);
    EXPECT_EQ(kernel_basis(repetition_check(5)), M({"11111"}));
}

TEST(Kernel, random_vectors_are_annihilated) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; trial++) {
        BinaryMatrix m = random_matrix(10, 16, 0.5, rng);
        BinaryMatrix k = kernel_basis(m);
        EXPECT_EQ(k.rows(), 16 - rank(m));
        EXPECT_TRUE((m * k.transpose()).is_zero());
        EXPECT_EQ(rank(k), k.rows());
    }
}

TEST(Kron, definition) {
    EXPECT_EQ(kron(BinaryMatrix::identity(2), BinaryMatrix::identity(3)), BinaryMatrix::identity(6));
    EXPECT_EQ(kron(M({"11"}), M({"1", "1"})), M({"11", "11"}));
    std::mt19937_64 rng(5);
    BinaryMatrix a = random_matrix(3, 4, 0.5, rng), b = random_matrix(2, 5, 0.5, rng);
    BinaryMatrix k = kron(a, b);
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 4; j++) {
            for (size_t p = 0; p < 2; p++) {
                for (size_t q = 0; q < 5; q++) {
                    EXPECT_EQ(k.get(i * 2 + p, j * 5 + q), a.get(i, j) && b.get(p, q));
                }
            }
        }
    }
}

TEST(Inverse, round_trip_and_singular) {
    std::mt19937_64 rng(11);
    int found = 0;
    while (found < 5) {
        BinaryMatrix m = random_matrix(8, 8, 0.5, rng);
        if (rank(m) < 8) {
            EXPECT_THROW(inverse(m), ValidationError);
            continue;
        }
        EXPECT_EQ(inverse(m) * m, BinaryMatrix::identity(8));
        found++;
    }
}

TEST(MatrixIo, text_and_alist_round_trip) {
    std::mt19937_64 rng(9);
    BinaryMatrix m = random_matrix(6, 11, 0.4, rng);
    std::stringstream text;
    write_text_matrix(text, m);
    EXPECT_EQ(read_text_matrix(text), m);
    std::stringstream alist;
    write_alist(alist, m);
    EXPECT_EQ(read_alist(alist), m);
}

TEST(MatrixIo, packed_rows_are_accepted) {
    std::stringstream in("2 3\n101\n0 1 1\n");
    EXPECT_EQ(read_text_matrix(in), M({"101", "011"}));
}

TEST(MatrixIo, errors_carry_positions) {
    std::stringstream bad("2 3\n101\n0 2 1\n");
    try {
        read_text_matrix(bad);
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 3u);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    std::stringstream short_input("2 3\n101\n");
    EXPECT_THROW(read_text_matrix(short_input), ParseError);
    std::stringstream too_long("1 2\n101\n");
    EXPECT_THROW(read_text_matrix(too_long), ParseError);
}
