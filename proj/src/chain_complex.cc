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

#include "wtred/chain_complex.h"

#include <algorithm>
#include <string>

#include "wtred/errors.h"
#include "wtred/linear_code.h"

namespace wtred {

ChainComplex::ChainComplex(int lowest_degree, std::vector<size_t> dims, std::vector<BinaryMatrix> maps)
    : lowest_(lowest_degree), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.empty() ? !maps_.empty() : maps_.size() + 1 != dims_.size()) {
        throw ValidationError("chain complex needs exactly one boundary between consecutive spaces");
    }
    for (size_t i = 0; i < maps_.size(); i++) {
        if (maps_[i].rows() != dims_[i] || maps_[i].cols() != dims_[i + 1]) {
            throw ValidationError(
                "boundary into degree " + std::to_string(lowest_ + (int)i) + " has the wrong shape");
        }
    }
    for (size_t i = 0; i + 1 < maps_.size(); i++) {
        if (!(maps_[i] * maps_[i + 1]).is_zero()) {
            throw ValidationError(
                "boundaries out of degrees " + std::to_string(lowest_ + (int)i + 2) + " and " +
                std::to_string(lowest_ + (int)i + 1) + " do not compose to zero");
        }
    }
}

ChainComplex ChainComplex::from_maps(int lowest_degree, std::vector<BinaryMatrix> maps) {
    if (maps.empty()) {
        throw ValidationError("from_maps needs at least one boundary");
    }
    std::vector<size_t> dims{maps[0].rows()};
    for (const auto &m : maps) {
        dims.push_back(m.cols());
    }
    return ChainComplex(lowest_degree, std::move(dims), std::move(maps));
}

size_t ChainComplex::dim(int degree) const {
    if (degree < lowest_ || degree > highest_degree()) {
        return 0;
    }
    return dims_[degree - lowest_];
}

BinaryMatrix ChainComplex::boundary(int degree) const {
    int k = degree - lowest_ - 1;
    if (k >= 0 && k < (int)maps_.size()) {
        return maps_[k];
    }
    return BinaryMatrix(dim(degree - 1), dim(degree));
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, BinaryMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    for (const auto &[deg, m] : components_) {
        if (m.rows() != target_.dim(deg) || m.cols() != source_.dim(deg)) {
            throw ValidationError("chain map component at degree " + std::to_string(deg) + " has the wrong shape");
        }
    }
    if (source_.empty() || target_.empty()) {
        return;
    }
    int lo = std::min(source_.lowest_degree(), target_.lowest_degree());
    int hi = std::max(source_.highest_degree(), target_.highest_degree());
    for (int i = lo; i <= hi + 1; i++) {
        if (target_.boundary(i) * component(i) != component(i - 1) * source_.boundary(i)) {
            throw ChainMapError(i);
        }
    }
}

BinaryMatrix ChainMap::component(int degree) const {
    auto it = components_.find(degree);
    if (it != components_.end()) {
        return it->second;
    }
    return BinaryMatrix(target_.dim(degree), source_.dim(degree));
}

size_t homology_dim(const ChainComplex &c, int degree) {
    size_t d = c.dim(degree);
    if (d == 0) {
        return 0;
    }
    return d - rank(c.boundary(degree)) - rank(c.boundary(degree + 1));
}

namespace {

// Summands (i, n - i) of total degree n, ordered by decreasing i, with their offsets.
struct Summand {
    int i;
    int j;
    size_t offset;
    size_t size;
};

std::vector<Summand> summands(const ChainComplex &a, const ChainComplex &b, int n) {
    std::vector<Summand> out;
    size_t offset = 0;
    for (int i = a.highest_degree(); i >= a.lowest_degree(); i--) {
        int j = n - i;
        size_t size = a.dim(i) * b.dim(j);
        if (j < b.lowest_degree() || j > b.highest_degree()) {
            continue;
        }
        out.push_back({i, j, offset, size});
        offset += size;
    }
    return out;
}

size_t total_size(const std::vector<Summand> &s) {
    return s.empty() ? 0 : s.back().offset + s.back().size;
}

void paste(BinaryMatrix &dst, size_t r0, size_t c0, const BinaryMatrix &src) {
    for (size_t r = 0; r < src.rows(); r++) {
        for (size_t c : src.row_support(r)) {
            dst.set(r0 + r, c0 + c);
        }
    }
}

}  // namespace

ChainComplex tensor_product(const ChainComplex &a, const ChainComplex &b) {
    if (a.empty() || b.empty()) {
        return ChainComplex();
    }
    int lo = a.lowest_degree() + b.lowest_degree();
    int hi = a.highest_degree() + b.highest_degree();
    std::vector<std::vector<Summand>> parts;
    std::vector<size_t> dims;
    for (int n = lo; n <= hi; n++) {
        parts.push_back(summands(a, b, n));
        dims.push_back(total_size(parts.back()));
    }
    std::vector<BinaryMatrix> maps;
    for (int n = lo + 1; n <= hi; n++) {
        const auto &src = parts[n - lo];
        const auto &dst = parts[n - 1 - lo];
        BinaryMatrix m(dims[n - 1 - lo], dims[n - lo]);
        for (const auto &s : src) {
            for (const auto &t : dst) {
                if (t.i == s.i - 1 && t.j == s.j) {
                    paste(m, t.offset, s.offset, kron(a.boundary(s.i), BinaryMatrix::identity(b.dim(s.j))));
                } else if (t.i == s.i && t.j == s.j - 1) {
                    paste(m, t.offset, s.offset, kron(BinaryMatrix::identity(a.dim(s.i)), b.boundary(s.j)));
                }
            }
        }
        maps.push_back(std::move(m));
    }
    return ChainComplex(lo, std::move(dims), std::move(maps));
}

ChainComplex mapping_cone(const ChainMap &f) {
    const ChainComplex &a = f.source();
    const ChainComplex &b = f.target();
    if (a.empty() && b.empty()) {
        return ChainComplex();
    }
    int lo = a.empty() ? b.lowest_degree() - 1 : b.empty() ? a.lowest_degree()
                                                           : std::min(a.lowest_degree(), b.lowest_degree() - 1);
    int hi = a.empty() ? b.highest_degree() - 1 : b.empty() ? a.highest_degree()
                                                            : std::max(a.highest_degree(), b.highest_degree() - 1);
    std::vector<size_t> dims;
    for (int i = lo; i <= hi; i++) {
        dims.push_back(a.dim(i) + b.dim(i + 1));
    }
    std::vector<BinaryMatrix> maps;
    for (int i = lo + 1; i <= hi; i++) {
        BinaryMatrix m(dims[i - 1 - lo], dims[i - lo]);
        size_t ra = a.dim(i - 1);
        size_t ca = a.dim(i);
        paste(m, 0, 0, a.boundary(i));
        paste(m, ra, 0, f.component(i));
        paste(m, ra, ca, b.boundary(i + 1));
        maps.push_back(std::move(m));
    }
    return ChainComplex(lo, std::move(dims), std::move(maps));
}

ChainComplex repetition_chain(size_t ell) {
    if (ell == 0) {
        throw ValidationError("repetition chain needs ell >= 1");
    }
    return ChainComplex(0, {ell, ell - 1}, {repetition_check(ell).transpose()});
}

bool KunnethReport::all_pass() const {
    return std::all_of(levels.begin(), levels.end(), [](const KunnethLevel &l) {
        return l.pass;
    });
}

KunnethReport kunneth_check(const ChainComplex &a, const ChainComplex &b) {
    KunnethReport report;
    if (a.empty() || b.empty()) {
        return report;
    }
    ChainComplex t = tensor_product(a, b);
    for (int k = t.lowest_degree(); k <= t.highest_degree(); k++) {
        size_t expected = 0;
        for (int i = a.lowest_degree(); i <= a.highest_degree(); i++) {
            expected += homology_dim(a, i) * homology_dim(b, k - i);
        }
        size_t got = homology_dim(t, k);
        report.levels.push_back({k, got, expected, got == expected});
    }
    return report;
}

}  // namespace wtred
