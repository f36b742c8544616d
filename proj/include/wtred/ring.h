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

#ifndef WTRED_RING_H
#define WTRED_RING_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wtred/binary_matrix.h"

namespace wtred {

/// Element of F2[x]/(x^ell - 1); coeffs[i] is the coefficient of x^i.
class RingElement {
   public:
    RingElement() = default;
    explicit RingElement(size_t ell);
    RingElement(size_t ell, std::vector<uint8_t> coeffs);

    static RingElement zero(size_t ell);
    static RingElement one(size_t ell);
    static RingElement monomial(size_t ell, size_t exponent);
    /// Parses "0", "1", "x", "x^3", "1+x^3+x^7". Exponents are reduced mod ell.
    static RingElement parse(const std::string &text, size_t ell);

    size_t ell() const {
        return coeffs_.size();
    }
    bool coeff(size_t i) const {
        return coeffs_[i] != 0;
    }
    const std::vector<uint8_t> &coeffs() const {
        return coeffs_;
    }
    size_t weight() const;
    bool is_zero() const;
    std::vector<size_t> exponents() const;

    RingElement operator+(const RingElement &other) const;
    RingElement operator*(const RingElement &other) const;
    bool operator==(const RingElement &other) const {
        return coeffs_ == other.coeffs_;
    }
    bool operator!=(const RingElement &other) const {
        return coeffs_ != other.coeffs_;
    }
    /// g0 + g_{ell-1} x + ... + g1 x^{ell-1}.
    RingElement transpose() const;
    std::string str() const;

   private:
    std::vector<uint8_t> coeffs_;
};

/// Matrix with entries in F2[x]/(x^ell - 1).
class BaseMatrix {
   public:
    BaseMatrix() = default;
    BaseMatrix(size_t rows, size_t cols, size_t ell);

    static BaseMatrix identity(size_t n, size_t ell);
    /// Entries given as polynomial strings, row-major.
    static BaseMatrix from_strings(size_t ell, const std::vector<std::vector<std::string>> &rows);
    static BaseMatrix from_binary(const BinaryMatrix &m, size_t ell);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t ell() const {
        return ell_;
    }
    const RingElement &at(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    void set(size_t r, size_t c, RingElement value);

    /// Sum of coefficient weights along a row / column: the lifted row / column weight.
    size_t row_weight(size_t r) const;
    size_t col_weight(size_t c) const;
    size_t row_entry_count(size_t r) const;

    BaseMatrix operator*(const BaseMatrix &other) const;
    bool operator==(const BaseMatrix &other) const;
    bool operator!=(const BaseMatrix &other) const {
        return !(*this == other);
    }
    /// Plain rearrangement: entry (i, j) moves to (j, i) unchanged.
    BaseMatrix transpose_layout() const;
    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t ell_ = 1;
    std::vector<RingElement> entries_;
};

/// The ell x ell circulant whose first column holds the coefficients of g.
BinaryMatrix lift_element(const RingElement &g);
BinaryMatrix lift_matrix(const BaseMatrix &a);
/// Transposes the layout and every entry, so lift(ring_transpose(a)) = lift(a)^T.
BaseMatrix ring_transpose(const BaseMatrix &a);
BaseMatrix base_kron(const BaseMatrix &a, const BaseMatrix &b);
BaseMatrix base_hstack(const std::vector<BaseMatrix> &blocks);

/// Header "rows cols ell" then row-major polynomial tokens.
BaseMatrix read_base_matrix(std::istream &in);
void write_base_matrix(std::ostream &out, const BaseMatrix &a);
BaseMatrix load_base_matrix(const std::string &path);

}  // namespace wtred

#endif
