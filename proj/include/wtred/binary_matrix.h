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

#ifndef WTRED_BINARY_MATRIX_H
#define WTRED_BINARY_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wtred {

/// Dense matrix over F2 stored row-major, one run of 64-bit words per row.
/// Bits past the last column are kept zero.
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols);

    static BinaryMatrix identity(size_t n);
    static BinaryMatrix zeros(size_t rows, size_t cols);
    /// Each string is one row of '0'/'1' characters (spaces ignored).
    static BinaryMatrix from_strings(const std::vector<std::string> &rows);
    /// Each entry lists the set columns of one row.
    static BinaryMatrix from_supports(size_t cols, const std::vector<std::vector<size_t>> &supports);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t stride() const {
        return stride_;
    }

    bool get(size_t r, size_t c) const {
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(size_t r, size_t c, bool value = true) {
        uint64_t mask = uint64_t{1} << (c & 63);
        uint64_t &w = data_[r * stride_ + (c >> 6)];
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(size_t r, size_t c) {
        data_[r * stride_ + (c >> 6)] ^= uint64_t{1} << (c & 63);
    }

    uint64_t *row_data(size_t r) {
        return data_.data() + r * stride_;
    }
    const uint64_t *row_data(size_t r) const {
        return data_.data() + r * stride_;
    }

    /// row dst ^= row src.
    void xor_row(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);

    size_t row_weight(size_t r) const;
    std::vector<size_t> row_weights() const;
    std::vector<size_t> col_weights() const;
    size_t max_row_weight() const;
    size_t max_col_weight() const;
    size_t weight() const;
    std::vector<size_t> row_support(size_t r) const;
    std::vector<size_t> col_support(size_t c) const;
    bool is_zero() const;
    bool row_is_zero(size_t r) const;

    BinaryMatrix transpose() const;
    BinaryMatrix operator*(const BinaryMatrix &other) const;
    BinaryMatrix operator+(const BinaryMatrix &other) const;
    BinaryMatrix &operator+=(const BinaryMatrix &other);
    bool operator==(const BinaryMatrix &other) const;
    bool operator!=(const BinaryMatrix &other) const {
        return !(*this == other);
    }

    /// One line per row of '0'/'1' characters.
    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

std::ostream &operator<<(std::ostream &out, const BinaryMatrix &m);

inline size_t words_for_bits(size_t bits) {
    return (bits + 63) >> 6;
}

BinaryMatrix kron(const BinaryMatrix &a, const BinaryMatrix &b);
BinaryMatrix hstack(const std::vector<BinaryMatrix> &blocks);
BinaryMatrix vstack(const std::vector<BinaryMatrix> &blocks);
BinaryMatrix block_diag(const std::vector<BinaryMatrix> &blocks);
/// Output row i is input row perm[i].
BinaryMatrix permute_rows(const BinaryMatrix &m, const std::vector<size_t> &perm);
/// Output column j is input column perm[j].
BinaryMatrix permute_cols(const BinaryMatrix &m, const std::vector<size_t> &perm);
std::vector<size_t> inverse_permutation(const std::vector<size_t> &perm);
BinaryMatrix submatrix(const BinaryMatrix &m, const std::vector<size_t> &rows, const std::vector<size_t> &cols);
BinaryMatrix select_rows(const BinaryMatrix &m, const std::vector<size_t> &rows);

size_t rank(const BinaryMatrix &m);

struct RrefResult {
    BinaryMatrix reduced;
    std::vector<size_t> pivots;
};
RrefResult rref(const BinaryMatrix &m);

/// Like rref, also returning the invertible T with T * m == reduced.
struct RrefWithTransform {
    BinaryMatrix reduced;
    std::vector<size_t> pivots;
    BinaryMatrix transform;
};
RrefWithTransform rref_with_transform(const BinaryMatrix &m);

/// Rows form a basis of {v : m v^T = 0}.
BinaryMatrix kernel_basis(const BinaryMatrix &m);

/// Inverse of a square invertible matrix; throws ValidationError if singular.
BinaryMatrix inverse(const BinaryMatrix &m);

/// Incrementally built row-echelon basis used for span membership tests.
class EchelonBasis {
   public:
    explicit EchelonBasis(size_t cols);
    /// Reduces v in place against the stored rows.
    void reduce(uint64_t *v) const;
    bool contains(const uint64_t *v) const;
    /// Returns true if v was independent and has been added.
    bool add(const uint64_t *v);
    void add_rows(const BinaryMatrix &m);
    size_t size() const {
        return pivots_.size();
    }
    size_t cols() const {
        return cols_;
    }

   private:
    size_t cols_;
    size_t stride_;
    std::vector<uint64_t> rows_;
    std::vector<size_t> pivots_;
};

BinaryMatrix read_text_matrix(std::istream &in);
void write_text_matrix(std::ostream &out, const BinaryMatrix &m);
BinaryMatrix read_alist(std::istream &in);
void write_alist(std::ostream &out, const BinaryMatrix &m);
/// Reads a matrix file, choosing alist when the path ends in ".alist".
BinaryMatrix load_matrix(const std::string &path);
void save_matrix(const std::string &path, const BinaryMatrix &m);

}  // namespace wtred

#endif
