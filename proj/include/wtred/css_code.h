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

#ifndef WTRED_CSS_CODE_H
#define WTRED_CSS_CODE_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "wtred/binary_matrix.h"
#include "wtred/chain_complex.h"
#include "wtred/distance.h"
#include "wtred/linear_code.h"
#include "wtred/ring.h"

namespace wtred {

struct Weights {
    size_t w_x = 0;
    size_t q_x = 0;
    size_t w_z = 0;
    size_t q_z = 0;

    /// "(w_x,q_x,w_z,q_z)"
    std::string str() const;
    bool operator==(const Weights &other) const = default;
};

/// CSS code with X checks hx and Z checks hz acting on the same n qubits.
class CssCode {
   public:
    /// Throws CommutationError naming the first anticommuting pair.
    CssCode(BinaryMatrix hx, BinaryMatrix hz);

    const BinaryMatrix &hx() const {
        return hx_;
    }
    const BinaryMatrix &hz() const {
        return hz_;
    }
    size_t n() const {
        return hx_.cols();
    }
    size_t k() const {
        return n() - rank_x_ - rank_z_;
    }
    size_t rank_x() const {
        return rank_x_;
    }
    size_t rank_z() const {
        return rank_z_;
    }
    const Weights &weights() const {
        return weights_;
    }
    /// Same code with the roles of X and Z exchanged.
    CssCode swapped() const;

   private:
    BinaryMatrix hx_;
    BinaryMatrix hz_;
    size_t rank_x_;
    size_t rank_z_;
    Weights weights_;
};

struct CssParams {
    size_t n = 0;
    size_t k = 0;
    /// Minimum weight of an X logical (resp. Z logical); infinite when k = 0.
    Distance d_x = Distance::infinite();
    Distance d_z = Distance::infinite();
    Weights weights;

    Distance d() const {
        return min(d_x, d_z);
    }
    /// "[[n,k,d]]"
    std::string str() const;
};

/// H_X = (H1 (x) I_n2 | I_m1 (x) H2^T), H_Z = (I_n1 (x) H2 | H1^T (x) I_m2).
CssCode hgp(const BinaryMatrix &h1, const BinaryMatrix &h2);

/// Parameters of hgp(h1, h2) from the four classical codes alone.
/// Z logicals come from ker H1 (needs k2 > 0) and ker H2^T (needs k1^T > 0);
/// X logicals from ker H2 (needs k1 > 0) and ker H1^T (needs k2^T > 0).
CssParams hgp_params(const BinaryMatrix &h1, const BinaryMatrix &h2, const ClassicalDistanceOptions &opts = {});

/// A_X = (A1 (x) I_m2 | I_m1 (x) A2), A_Z = (I_n1 (x) A2^T | A1^T (x) I_n2), then lifted.
CssCode lifted_product(const BaseMatrix &a1, const BaseMatrix &a2);
/// LP(A, A^T).
CssCode lifted_product(const BaseMatrix &a);

struct LogicalBasis {
    BinaryMatrix x;
    BinaryMatrix z;
};

/// k X logicals and k Z logicals with x * z^T = I.
LogicalBasis logical_basis(const CssCode &c);

struct DistanceOptions {
    /// Largest weight enumerated exhaustively.
    size_t budget = SIZE_MAX;
    /// Cap on subsets visited by exhaustive enumeration, per side.
    double max_work = 2e9;
    size_t trials = 200;
    uint64_t seed = 0;
    /// Stop once min(d_x, d_z) is settled; the larger side is then only bounded.
    bool min_only = false;
};

CssParams css_distance(const CssCode &c, const DistanceOptions &opts = {});

/// C_2 -> C_1 -> C_0 with dims (rows of hz, n, rows of hx), boundaries hz^T and hx.
ChainComplex css_chain(const CssCode &c);
/// Reads boundaries 2 and 1 of a complex back as (H_Z^T, H_X).
CssCode css_from_chain(const ChainComplex &c, int middle_degree);

/// "css" header line, then "HX" and "HZ" each followed by a text matrix.
CssCode read_css(std::istream &in);
void write_css(std::ostream &out, const CssCode &c);
CssCode load_css(const std::string &path);
void save_css(const std::string &path, const CssCode &c);

}  // namespace wtred

#endif
