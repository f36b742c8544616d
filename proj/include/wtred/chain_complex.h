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

#ifndef WTRED_CHAIN_COMPLEX_H
#define WTRED_CHAIN_COMPLEX_H

#include <cstddef>
#include <map>
#include <vector>

#include "wtred/binary_matrix.h"

namespace wtred {

/// Bounded chain complex over F2 with spaces C_lo, ..., C_hi.
/// Spaces outside that range are zero, as are the boundaries touching them.
class ChainComplex {
   public:
    ChainComplex() = default;
    /// dims[i] is dim C_{lowest + i}; maps[i] is the boundary C_{lowest + i + 1} -> C_{lowest + i}.
    /// Throws ValidationError on shape mismatch or when a composite of boundaries is nonzero.
    ChainComplex(int lowest_degree, std::vector<size_t> dims, std::vector<BinaryMatrix> maps);
    /// Dimensions taken from the maps; maps[0] ends in degree lowest_degree.
    static ChainComplex from_maps(int lowest_degree, std::vector<BinaryMatrix> maps);

    int lowest_degree() const {
        return lowest_;
    }
    int highest_degree() const {
        return lowest_ + (int)dims_.size() - 1;
    }
    bool empty() const {
        return dims_.empty();
    }
    size_t dim(int degree) const;
    /// C_degree -> C_{degree - 1}, shape dim(degree - 1) x dim(degree).
    BinaryMatrix boundary(int degree) const;

   private:
    int lowest_ = 0;
    std::vector<size_t> dims_;
    std::vector<BinaryMatrix> maps_;
};

/// Degree-preserving map f_i : A_i -> B_i. Missing components are zero.
class ChainMap {
   public:
    /// Throws ValidationError on bad shapes and ChainMapError on a non-commuting square.
    ChainMap(ChainComplex source, ChainComplex target, std::map<int, BinaryMatrix> components);

    const ChainComplex &source() const {
        return source_;
    }
    const ChainComplex &target() const {
        return target_;
    }
    /// Shape target.dim(degree) x source.dim(degree).
    BinaryMatrix component(int degree) const;

   private:
    ChainComplex source_;
    ChainComplex target_;
    std::map<int, BinaryMatrix> components_;
};

size_t homology_dim(const ChainComplex &c, int degree);

/// Total complex. Within each degree n the summands A_i (x) B_j with i + j = n are ordered
/// by decreasing i, and each summand uses the kron basis order.
ChainComplex tensor_product(const ChainComplex &a, const ChainComplex &b);

/// cone_i = A_i (+) B_{i+1} with boundary [[dA_i, 0], [f_i, dB_{i+1}]].
ChainComplex mapping_cone(const ChainMap &f);

/// F2^{ell-1} -> F2^ell in degrees 1 and 0, boundary H^T of the repetition code.
ChainComplex repetition_chain(size_t ell);

struct KunnethLevel {
    int degree;
    size_t product_dim;
    size_t expected_dim;
    bool pass;
};

struct KunnethReport {
    std::vector<KunnethLevel> levels;
    bool all_pass() const;
};

KunnethReport kunneth_check(const ChainComplex &a, const ChainComplex &b);

}  // namespace wtred

#endif
