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

#include "wtred/ring.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "token_reader.h"
#include "wtred/errors.h"

namespace wtred {

RingElement::RingElement(size_t ell) : coeffs_(ell, 0) {
    if (ell == 0) {
        throw ValidationError("lift size must be at least 1");
    }
}

RingElement::RingElement(size_t ell, std::vector<uint8_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (ell == 0 || coeffs_.size() != ell) {
        throw ValidationError("coefficient vector length must equal the lift size");
    }
    for (auto &c : coeffs_) {
        c &= 1;
    }
}

RingElement RingElement::zero(size_t ell) {
    return RingElement(ell);
}

RingElement RingElement::one(size_t ell) {
    return monomial(ell, 0);
}

RingElement RingElement::monomial(size_t ell, size_t exponent) {
    RingElement g(ell);
    g.coeffs_[exponent % ell] = 1;
    return g;
}

RingElement RingElement::parse(const std::string &text, size_t ell) {
    RingElement g(ell);
    std::string s;
    for (char ch : text) {
        if (!std::isspace((unsigned char)ch)) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw ValidationError("empty polynomial");
    }
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t end = s.find('+', pos);
        if (end == std::string::npos) {
            end = s.size();
        }
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) {
            throw ValidationError("bad polynomial '" + text + "'");
        }
        if (term == "0") {
            // contributes nothing
        } else if (term == "1") {
            g.coeffs_[0] ^= 1;
        } else if (term == "x") {
            g.coeffs_[1 % ell] ^= 1;
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            std::string e = term.substr(2);
            if (!e.empty() && e.front() == '{' && e.back() == '}') {
                e = e.substr(1, e.size() - 2);
            }
            if (e.empty() || e.size() > 12) {
                throw ValidationError("bad exponent in '" + text + "'");
            }
            size_t exponent = 0;
            for (char ch : e) {
                if (!std::isdigit((unsigned char)ch)) {
                    throw ValidationError("bad exponent in '" + text + "'");
                }
                exponent = exponent * 10 + (size_t)(ch - '0');
            }
            g.coeffs_[exponent % ell] ^= 1;
        } else {
            throw ValidationError("bad polynomial term '" + term + "'");
        }
        pos = end + 1;
    }
    return g;
}

size_t RingElement::weight() const {
    size_t w = 0;
    for (auto c : coeffs_) {
        w += c;
    }
    return w;
}

bool RingElement::is_zero() const {
    return weight() == 0;
}

std::vector<size_t> RingElement::exponents() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < coeffs_.size(); i++) {
        if (coeffs_[i]) {
            out.push_back(i);
        }
    }
    return out;
}

RingElement RingElement::operator+(const RingElement &other) const {
    if (ell() != other.ell()) {
        throw ValidationError("lift size mismatch");
    }
    RingElement out = *this;
    for (size_t i = 0; i < coeffs_.size(); i++) {
        out.coeffs_[i] ^= other.coeffs_[i];
    }
    return out;
}

RingElement RingElement::operator*(const RingElement &other) const {
    if (ell() != other.ell()) {
        throw ValidationError("lift size mismatch");
    }
    size_t n = ell();
    RingElement out(n);
    for (size_t i = 0; i < n; i++) {
        if (!coeffs_[i]) {
            continue;
        }
        for (size_t j = 0; j < n; j++) {
            out.coeffs_[(i + j) % n] ^= other.coeffs_[j];
        }
    }
    return out;
}

RingElement RingElement::transpose() const {
    size_t n = ell();
    RingElement out(n);
    for (size_t i = 0; i < n; i++) {
        out.coeffs_[i] = coeffs_[(n - i) % n];
    }
    return out;
}

std::string RingElement::str() const {
    std::string s;
    for (size_t e : exponents()) {
        if (!s.empty()) {
            s += "+";
        }
        if (e == 0) {
            s += "1";
        } else if (e == 1) {
            s += "x";
        } else {
            s += "x^" + std::to_string(e);
        }
    }
    return s.empty() ? "0" : s;
}

BaseMatrix::BaseMatrix(size_t rows, size_t cols, size_t ell)
    : rows_(rows), cols_(cols), ell_(ell), entries_(rows * cols, RingElement(ell)) {
}

BaseMatrix BaseMatrix::identity(size_t n, size_t ell) {
    BaseMatrix m(n, n, ell);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, RingElement::one(ell));
    }
    return m;
}

BaseMatrix BaseMatrix::from_strings(size_t ell, const std::vector<std::vector<std::string>> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    BaseMatrix m(rows.size(), cols, ell);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw ValidationError("ragged base matrix rows");
        }
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, RingElement::parse(rows[r][c], ell));
        }
    }
    return m;
}

BaseMatrix BaseMatrix::from_binary(const BinaryMatrix &b, size_t ell) {
    BaseMatrix m(b.rows(), b.cols(), ell);
    for (size_t r = 0; r < b.rows(); r++) {
        for (size_t c : b.row_support(r)) {
            m.set(r, c, RingElement::one(ell));
        }
    }
    return m;
}

void BaseMatrix::set(size_t r, size_t c, RingElement value) {
    if (value.ell() != ell_) {
        throw ValidationError("entry lift size differs from matrix lift size");
    }
    entries_[r * cols_ + c] = std::move(value);
}

size_t BaseMatrix::row_weight(size_t r) const {
    size_t w = 0;
    for (size_t c = 0; c < cols_; c++) {
        w += at(r, c).weight();
    }
    return w;
}

size_t BaseMatrix::col_weight(size_t c) const {
    size_t w = 0;
    for (size_t r = 0; r < rows_; r++) {
        w += at(r, c).weight();
    }
    return w;
}

size_t BaseMatrix::row_entry_count(size_t r) const {
    size_t n = 0;
    for (size_t c = 0; c < cols_; c++) {
        n += !at(r, c).is_zero();
    }
    return n;
}

BaseMatrix BaseMatrix::operator*(const BaseMatrix &other) const {
    if (cols_ != other.rows_ || ell_ != other.ell_) {
        throw ValidationError("base matrix product shape mismatch");
    }
    BaseMatrix out(rows_, other.cols_, ell_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < other.cols_; j++) {
            RingElement acc(ell_);
            for (size_t k = 0; k < cols_; k++) {
                if (!at(i, k).is_zero() && !other.at(k, j).is_zero()) {
                    acc = acc + at(i, k) * other.at(k, j);
                }
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

bool BaseMatrix::operator==(const BaseMatrix &other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && ell_ == other.ell_ && entries_ == other.entries_;
}

BaseMatrix BaseMatrix::transpose_layout() const {
    BaseMatrix out(cols_, rows_, ell_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.set(c, r, at(r, c));
        }
    }
    return out;
}

std::string BaseMatrix::str() const {
    std::ostringstream out;
    write_base_matrix(out, *this);
    return out.str();
}

BinaryMatrix lift_element(const RingElement &g) {
    size_t n = g.ell();
    BinaryMatrix out(n, n);
    for (size_t e : g.exponents()) {
        for (size_t j = 0; j < n; j++) {
            out.set((e + j) % n, j);
        }
    }
    return out;
}

BinaryMatrix lift_matrix(const BaseMatrix &a) {
    size_t l = a.ell();
    BinaryMatrix out(a.rows() * l, a.cols() * l);
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            for (size_t e : a.at(r, c).exponents()) {
                for (size_t j = 0; j < l; j++) {
                    out.set(r * l + (e + j) % l, c * l + j);
                }
            }
        }
    }
    return out;
}

BaseMatrix ring_transpose(const BaseMatrix &a) {
    BaseMatrix out(a.cols(), a.rows(), a.ell());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out.set(c, r, a.at(r, c).transpose());
        }
    }
    return out;
}

BaseMatrix base_kron(const BaseMatrix &a, const BaseMatrix &b) {
    if (a.ell() != b.ell()) {
        throw ValidationError("lift size mismatch");
    }
    BaseMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.ell());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            if (a.at(i, j).is_zero()) {
                continue;
            }
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    if (!b.at(k, l).is_zero()) {
                        out.set(i * b.rows() + k, j * b.cols() + l, a.at(i, j) * b.at(k, l));
                    }
                }
            }
        }
    }
    return out;
}

BaseMatrix base_hstack(const std::vector<BaseMatrix> &blocks) {
    if (blocks.empty()) {
        return BaseMatrix();
    }
    size_t cols = 0;
    for (const auto &b : blocks) {
        if (b.rows() != blocks[0].rows() || b.ell() != blocks[0].ell()) {
            throw ValidationError("base hstack shape mismatch");
        }
        cols += b.cols();
    }
    BaseMatrix out(blocks[0].rows(), cols, blocks[0].ell());
    size_t offset = 0;
    for (const auto &b : blocks) {
        for (size_t r = 0; r < b.rows(); r++) {
            for (size_t c = 0; c < b.cols(); c++) {
                out.set(r, offset + c, b.at(r, c));
            }
        }
        offset += b.cols();
    }
    return out;
}

BaseMatrix read_base_matrix(std::istream &in) {
    TokenReader tr(in);
    size_t rows = tr.expect_count("row count");
    size_t cols = tr.expect_count("column count");
    size_t ell = tr.expect_count("lift size");
    if (ell == 0) {
        tr.fail("lift size must be at least 1");
    }
    BaseMatrix a(rows, cols, ell);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            std::string t = tr.expect("polynomial entry");
            try {
                a.set(r, c, RingElement::parse(t, ell));
            } catch (const ParseError &) {
                throw;
            } catch (const ValidationError &e) {
                tr.fail(e.what());
            }
        }
    }
    return a;
}

void write_base_matrix(std::ostream &out, const BaseMatrix &a) {
    out << a.rows() << " " << a.cols() << " " << a.ell() << "\n";
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out << (c ? " " : "") << a.at(r, c).str();
        }
        out << "\n";
    }
}

BaseMatrix load_base_matrix(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open " + path);
    }
    return read_base_matrix(in);
}

}  // namespace wtred
