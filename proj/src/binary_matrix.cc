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

#include "wtred/binary_matrix.h"

#include <bit>
#include <fstream>
#include <sstream>

#include "token_reader.h"
#include "wtred/errors.h"

namespace wtred {

BinaryMatrix::BinaryMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), data_(rows * words_for_bits(cols), 0) {
}

BinaryMatrix BinaryMatrix::identity(size_t n) {
    BinaryMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

BinaryMatrix BinaryMatrix::zeros(size_t rows, size_t cols) {
    return BinaryMatrix(rows, cols);
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string> &rows) {
    std::vector<std::string> cleaned;
    for (const auto &r : rows) {
        std::string s;
        for (char ch : r) {
            if (ch == '0' || ch == '1') {
                s.push_back(ch);
            } else if (ch != ' ' && ch != '\t') {
                throw ValidationError(std::string("bad matrix character '") + ch + "'");
            }
        }
        cleaned.push_back(std::move(s));
    }
    size_t cols = cleaned.empty() ? 0 : cleaned[0].size();
    BinaryMatrix m(cleaned.size(), cols);
    for (size_t r = 0; r < cleaned.size(); r++) {
        if (cleaned[r].size() != cols) {
            throw ValidationError("ragged matrix rows");
        }
        for (size_t c = 0; c < cols; c++) {
            if (cleaned[r][c] == '1') {
                m.set(r, c);
            }
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_supports(size_t cols, const std::vector<std::vector<size_t>> &supports) {
    BinaryMatrix m(supports.size(), cols);
    for (size_t r = 0; r < supports.size(); r++) {
        for (size_t c : supports[r]) {
            if (c >= cols) {
                throw ValidationError("support index out of range");
            }
            m.set(r, c);
        }
    }
    return m;
}

void BinaryMatrix::xor_row(size_t dst, size_t src) {
    uint64_t *d = row_data(dst);
    const uint64_t *s = row_data(src);
    for (size_t w = 0; w < stride_; w++) {
        d[w] ^= s[w];
    }
}

void BinaryMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    uint64_t *x = row_data(a);
    uint64_t *y = row_data(b);
    for (size_t w = 0; w < stride_; w++) {
        std::swap(x[w], y[w]);
    }
}

size_t BinaryMatrix::row_weight(size_t r) const {
    size_t total = 0;
    const uint64_t *p = row_data(r);
    for (size_t w = 0; w < stride_; w++) {
        total += std::popcount(p[w]);
    }
    return total;
}

std::vector<size_t> BinaryMatrix::row_weights() const {
    std::vector<size_t> out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        out[r] = row_weight(r);
    }
    return out;
}

std::vector<size_t> BinaryMatrix::col_weights() const {
    std::vector<size_t> out(cols_, 0);
    for (size_t r = 0; r < rows_; r++) {
        const uint64_t *p = row_data(r);
        for (size_t w = 0; w < stride_; w++) {
            uint64_t bits = p[w];
            while (bits) {
                out[(w << 6) + std::countr_zero(bits)]++;
                bits &= bits - 1;
            }
        }
    }
    return out;
}

size_t BinaryMatrix::max_row_weight() const {
    size_t best = 0;
    for (size_t r = 0; r < rows_; r++) {
        best = std::max(best, row_weight(r));
    }
    return best;
}

size_t BinaryMatrix::max_col_weight() const {
    size_t best = 0;
    for (size_t w : col_weights()) {
        best = std::max(best, w);
    }
    return best;
}

size_t BinaryMatrix::weight() const {
    size_t total = 0;
    for (uint64_t w : data_) {
        total += std::popcount(w);
    }
    return total;
}

std::vector<size_t> BinaryMatrix::row_support(size_t r) const {
    std::vector<size_t> out;
    const uint64_t *p = row_data(r);
    for (size_t w = 0; w < stride_; w++) {
        uint64_t bits = p[w];
        while (bits) {
            out.push_back((w << 6) + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<size_t> BinaryMatrix::col_support(size_t c) const {
    std::vector<size_t> out;
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            out.push_back(r);
        }
    }
    return out;
}

bool BinaryMatrix::is_zero() const {
    for (uint64_t w : data_) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool BinaryMatrix::row_is_zero(size_t r) const {
    const uint64_t *p = row_data(r);
    for (size_t w = 0; w < stride_; w++) {
        if (p[w]) {
            return false;
        }
    }
    return true;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        const uint64_t *p = row_data(r);
        for (size_t w = 0; w < stride_; w++) {
            uint64_t bits = p[w];
            while (bits) {
                out.set((w << 6) + std::countr_zero(bits), r);
                bits &= bits - 1;
            }
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::operator*(const BinaryMatrix &other) const {
    if (cols_ != other.rows_) {
        throw ValidationError("matrix product shape mismatch");
    }
    BinaryMatrix out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        const uint64_t *p = row_data(r);
        uint64_t *dst = out.row_data(r);
        for (size_t w = 0; w < stride_; w++) {
            uint64_t bits = p[w];
            while (bits) {
                const uint64_t *src = other.row_data((w << 6) + std::countr_zero(bits));
                for (size_t k = 0; k < out.stride_; k++) {
                    dst[k] ^= src[k];
                }
                bits &= bits - 1;
            }
        }
    }
    return out;
}

BinaryMatrix &BinaryMatrix::operator+=(const BinaryMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw ValidationError("matrix sum shape mismatch");
    }
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] ^= other.data_[i];
    }
    return *this;
}

BinaryMatrix BinaryMatrix::operator+(const BinaryMatrix &other) const {
    BinaryMatrix out = *this;
    out += other;
    return out;
}

bool BinaryMatrix::operator==(const BinaryMatrix &other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string BinaryMatrix::str() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            s.push_back(get(r, c) ? '1' : '0');
        }
        s.push_back('\n');
    }
    return s;
}

std::ostream &operator<<(std::ostream &out, const BinaryMatrix &m) {
    return out << m.rows() << "x" << m.cols() << "\n" << m.str();
}

BinaryMatrix kron(const BinaryMatrix &a, const BinaryMatrix &b) {
    BinaryMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j : a.row_support(i)) {
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l : b.row_support(k)) {
                    out.set(i * b.rows() + k, j * b.cols() + l);
                }
            }
        }
    }
    return out;
}

BinaryMatrix hstack(const std::vector<BinaryMatrix> &blocks) {
    if (blocks.empty()) {
        return BinaryMatrix();
    }
    size_t rows = blocks[0].rows();
    size_t cols = 0;
    for (const auto &b : blocks) {
        if (b.rows() != rows) {
            throw ValidationError("hstack row count mismatch");
        }
        cols += b.cols();
    }
    BinaryMatrix out(rows, cols);
    size_t offset = 0;
    for (const auto &b : blocks) {
        for (size_t r = 0; r < rows; r++) {
            for (size_t c : b.row_support(r)) {
                out.set(r, offset + c);
            }
        }
        offset += b.cols();
    }
    return out;
}

BinaryMatrix vstack(const std::vector<BinaryMatrix> &blocks) {
    if (blocks.empty()) {
        return BinaryMatrix();
    }
    size_t cols = blocks[0].cols();
    size_t rows = 0;
    for (const auto &b : blocks) {
        if (b.cols() != cols) {
            throw ValidationError("vstack column count mismatch");
        }
        rows += b.rows();
    }
    BinaryMatrix out(rows, cols);
    size_t offset = 0;
    for (const auto &b : blocks) {
        for (size_t r = 0; r < b.rows(); r++) {
            std::copy(b.row_data(r), b.row_data(r) + b.stride(), out.row_data(offset + r));
        }
        offset += b.rows();
    }
    return out;
}

BinaryMatrix block_diag(const std::vector<BinaryMatrix> &blocks) {
    size_t rows = 0;
    size_t cols = 0;
    for (const auto &b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    BinaryMatrix out(rows, cols);
    size_t r0 = 0;
    size_t c0 = 0;
    for (const auto &b : blocks) {
        for (size_t r = 0; r < b.rows(); r++) {
            for (size_t c : b.row_support(r)) {
                out.set(r0 + r, c0 + c);
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

static void check_permutation(const std::vector<size_t> &perm, size_t n) {
    if (perm.size() != n) {
        throw ValidationError("permutation has wrong length");
    }
    std::vector<bool> seen(n, false);
    for (size_t p : perm) {
        if (p >= n || seen[p]) {
            throw ValidationError("not a permutation");
        }
        seen[p] = true;
    }
}

BinaryMatrix permute_rows(const BinaryMatrix &m, const std::vector<size_t> &perm) {
    check_permutation(perm, m.rows());
    return select_rows(m, perm);
}

BinaryMatrix permute_cols(const BinaryMatrix &m, const std::vector<size_t> &perm) {
    check_permutation(perm, m.cols());
    std::vector<size_t> rows(m.rows());
    for (size_t r = 0; r < rows.size(); r++) {
        rows[r] = r;
    }
    return submatrix(m, rows, perm);
}

std::vector<size_t> inverse_permutation(const std::vector<size_t> &perm) {
    check_permutation(perm, perm.size());
    std::vector<size_t> inv(perm.size());
    for (size_t i = 0; i < perm.size(); i++) {
        inv[perm[i]] = i;
    }
    return inv;
}

BinaryMatrix submatrix(const BinaryMatrix &m, const std::vector<size_t> &rows, const std::vector<size_t> &cols) {
    BinaryMatrix out(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i] >= m.rows()) {
            throw ValidationError("row index out of range");
        }
        for (size_t j = 0; j < cols.size(); j++) {
            if (cols[j] >= m.cols()) {
                throw ValidationError("column index out of range");
            }
            if (m.get(rows[i], cols[j])) {
                out.set(i, j);
            }
        }
    }
    return out;
}

BinaryMatrix select_rows(const BinaryMatrix &m, const std::vector<size_t> &rows) {
    BinaryMatrix out(rows.size(), m.cols());
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i] >= m.rows()) {
            throw ValidationError("row index out of range");
        }
        std::copy(m.row_data(rows[i]), m.row_data(rows[i]) + m.stride(), out.row_data(i));
    }
    return out;
}

// Leftmost pivot column, first nonzero row at or below the current pivot row.
// When full is false only rows below the pivot are cleared.
template <bool TRACK>
static std::vector<size_t> eliminate(BinaryMatrix &m, BinaryMatrix *t, bool full) {
    std::vector<size_t> pivots;
    size_t r = 0;
    size_t stride = m.stride();
    for (size_t c = 0; c < m.cols() && r < m.rows(); c++) {
        size_t word = c >> 6;
        uint64_t mask = uint64_t{1} << (c & 63);
        size_t found = m.rows();
        for (size_t i = r; i < m.rows(); i++) {
            if (m.row_data(i)[word] & mask) {
                found = i;
                break;
            }
        }
        if (found == m.rows()) {
            continue;
        }
        m.swap_rows(r, found);
        if constexpr (TRACK) {
            t->swap_rows(r, found);
        }
        const uint64_t *pr = m.row_data(r);
        for (size_t i = full ? 0 : r + 1; i < m.rows(); i++) {
            if (i == r) {
                continue;
            }
            uint64_t *pi = m.row_data(i);
            if (pi[word] & mask) {
                for (size_t w = word; w < stride; w++) {
                    pi[w] ^= pr[w];
                }
                if constexpr (TRACK) {
                    t->xor_row(i, r);
                }
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

size_t rank(const BinaryMatrix &m) {
    BinaryMatrix copy = m;
    return eliminate<false>(copy, nullptr, false).size();
}

RrefResult rref(const BinaryMatrix &m) {
    RrefResult out{m, {}};
    out.pivots = eliminate<false>(out.reduced, nullptr, true);
    return out;
}

RrefWithTransform rref_with_transform(const BinaryMatrix &m) {
    RrefWithTransform out{m, {}, BinaryMatrix::identity(m.rows())};
    out.pivots = eliminate<true>(out.reduced, &out.transform, true);
    return out;
}

BinaryMatrix kernel_basis(const BinaryMatrix &m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : r.pivots) {
        is_pivot[p] = true;
    }
    size_t free_count = m.cols() - r.pivots.size();
    BinaryMatrix out(free_count, m.cols());
    size_t row = 0;
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        out.set(row, f);
        for (size_t i = 0; i < r.pivots.size(); i++) {
            if (r.reduced.get(i, f)) {
                out.set(row, r.pivots[i]);
            }
        }
        row++;
    }
    return out;
}

BinaryMatrix inverse(const BinaryMatrix &m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("inverse of a non-square matrix");
    }
    RrefWithTransform r = rref_with_transform(m);
    if (r.pivots.size() != m.rows()) {
        throw ValidationError("matrix is singular");
    }
    return r.transform;
}

EchelonBasis::EchelonBasis(size_t cols) : cols_(cols), stride_(words_for_bits(cols)) {
}

void EchelonBasis::reduce(uint64_t *v) const {
    for (size_t i = 0; i < pivots_.size(); i++) {
        size_t p = pivots_[i];
        if ((v[p >> 6] >> (p & 63)) & 1) {
            const uint64_t *row = rows_.data() + i * stride_;
            for (size_t w = p >> 6; w < stride_; w++) {
                v[w] ^= row[w];
            }
        }
    }
}

bool EchelonBasis::contains(const uint64_t *v) const {
    std::vector<uint64_t> tmp(v, v + stride_);
    reduce(tmp.data());
    for (uint64_t w : tmp) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool EchelonBasis::add(const uint64_t *v) {
    std::vector<uint64_t> tmp(v, v + stride_);
    reduce(tmp.data());
    for (size_t w = 0; w < stride_; w++) {
        if (tmp[w]) {
            size_t p = (w << 6) + std::countr_zero(tmp[w]);
            pivots_.push_back(p);
            rows_.insert(rows_.end(), tmp.begin(), tmp.end());
            return true;
        }
    }
    return false;
}

void EchelonBasis::add_rows(const BinaryMatrix &m) {
    if (m.cols() != cols_) {
        throw ValidationError("row length mismatch");
    }
    for (size_t r = 0; r < m.rows(); r++) {
        add(m.row_data(r));
    }
}

BinaryMatrix read_text_matrix(std::istream &in) {
    TokenReader tr(in);
    return read_text_matrix(tr);
}

BinaryMatrix read_text_matrix(TokenReader &tr) {
    size_t rows = tr.expect_count("row count");
    size_t cols = tr.expect_count("column count");
    BinaryMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        size_t c = 0;
        while (c < cols) {
            std::string t = tr.expect("matrix entry");
            // Accept both "0 1 1" and packed "011" rows.
            for (char ch : t) {
                if (ch != '0' && ch != '1') {
                    tr.fail(std::string("bad matrix entry '") + t + "'");
                }
                if (c >= cols) {
                    tr.fail("row " + std::to_string(r) + " is longer than " + std::to_string(cols) + " columns");
                }
                if (ch == '1') {
                    m.set(r, c);
                }
                c++;
            }
        }
    }
    return m;
}

void write_text_matrix(std::ostream &out, const BinaryMatrix &m) {
    out << m.rows() << " " << m.cols() << "\n";
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (c) {
                out << ' ';
            }
            out << (m.get(r, c) ? '1' : '0');
        }
        out << "\n";
    }
}

BinaryMatrix read_alist(std::istream &in) {
    TokenReader tr(in);
    size_t n = tr.expect_count("column count");
    size_t m = tr.expect_count("row count");
    size_t max_col = tr.expect_count("max column weight");
    size_t max_row = tr.expect_count("max row weight");
    std::vector<size_t> col_w(n);
    std::vector<size_t> row_w(m);
    for (auto &w : col_w) {
        w = tr.expect_count("column weight");
        if (w > max_col) {
            tr.fail("column weight exceeds declared maximum");
        }
    }
    for (auto &w : row_w) {
        w = tr.expect_count("row weight");
        if (w > max_row) {
            tr.fail("row weight exceeds declared maximum");
        }
    }
    BinaryMatrix out(m, n);
    // Column lists may or may not be zero padded to the maximum weight.
    auto read_list = [&](size_t weight, size_t max_weight, size_t limit, auto &&emit) {
        size_t got = 0;
        while (got < weight) {
            size_t v = tr.expect_count("index");
            if (v == 0) {
                continue;
            }
            if (v > limit) {
                tr.fail("index " + std::to_string(v) + " out of range");
            }
            emit(v - 1);
            got++;
        }
        for (size_t pad = weight; pad < max_weight; pad++) {
            std::string t;
            if (tr.peek(t) && t == "0") {
                tr.next(t);
            } else {
                break;
            }
        }
    };
    for (size_t c = 0; c < n; c++) {
        read_list(col_w[c], max_col, m, [&](size_t r) {
            out.set(r, c);
        });
    }
    for (size_t r = 0; r < m; r++) {
        size_t line = tr.line();
        std::vector<size_t> cols;
        read_list(row_w[r], max_row, n, [&](size_t c) {
            cols.push_back(c);
        });
        for (size_t c : cols) {
            if (!out.get(r, c)) {
                throw ParseError("row list disagrees with column lists", line, 1);
            }
        }
    }
    return out;
}

void write_alist(std::ostream &out, const BinaryMatrix &m) {
    auto rw = m.row_weights();
    auto cw = m.col_weights();
    size_t max_r = 0;
    size_t max_c = 0;
    for (size_t w : rw) {
        max_r = std::max(max_r, w);
    }
    for (size_t w : cw) {
        max_c = std::max(max_c, w);
    }
    out << m.cols() << " " << m.rows() << "\n" << max_c << " " << max_r << "\n";
    auto emit_weights = [&](const std::vector<size_t> &ws) {
        for (size_t i = 0; i < ws.size(); i++) {
            out << (i ? " " : "") << ws[i];
        }
        out << "\n";
    };
    emit_weights(cw);
    emit_weights(rw);
    BinaryMatrix t = m.transpose();
    auto emit_lists = [&](const BinaryMatrix &src, size_t pad_to) {
        for (size_t i = 0; i < src.rows(); i++) {
            auto s = src.row_support(i);
            for (size_t j = 0; j < pad_to; j++) {
                out << (j ? " " : "") << (j < s.size() ? s[j] + 1 : 0);
            }
            out << "\n";
        }
    };
    emit_lists(t, max_c);
    emit_lists(m, max_r);
}

static bool ends_with(const std::string &s, const std::string &suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

BinaryMatrix load_matrix(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open " + path);
    }
    return ends_with(path, ".alist") ? read_alist(in) : read_text_matrix(in);
}

void save_matrix(const std::string &path, const BinaryMatrix &m) {
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot write " + path);
    }
    if (ends_with(path, ".alist")) {
        write_alist(out, m);
    } else {
        write_text_matrix(out, m);
    }
}

}  // namespace wtred
