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

#include "wtred/css_code.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "token_reader.h"
#include "wtred/errors.h"

namespace wtred {

std::string Weights::str() const {
    std::ostringstream out;
    out << "(" << w_x << "," << q_x << "," << w_z << "," << q_z << ")";
    return out.str();
}

CssCode::CssCode(BinaryMatrix hx, BinaryMatrix hz) : hx_(std::move(hx)), hz_(std::move(hz)) {
    if (hx_.cols() != hz_.cols()) {
        throw ValidationError(
            "H_X has " + std::to_string(hx_.cols()) + " columns but H_Z has " + std::to_string(hz_.cols()));
    }
    BinaryMatrix overlap = hx_ * hz_.transpose();
    for (size_t r = 0; r < overlap.rows(); r++) {
        if (!overlap.row_is_zero(r)) {
            throw CommutationError(r, overlap.row_support(r)[0]);
        }
    }
    rank_x_ = rank(hx_);
    rank_z_ = rank(hz_);
    weights_ = {hx_.max_row_weight(), hx_.max_col_weight(), hz_.max_row_weight(), hz_.max_col_weight()};
}

CssCode CssCode::swapped() const {
    return CssCode(hz_, hx_);
}

std::string CssParams::str() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + d().str() + "]]";
}

CssCode hgp(const BinaryMatrix &h1, const BinaryMatrix &h2) {
    size_t m1 = h1.rows(), n1 = h1.cols();
    size_t m2 = h2.rows(), n2 = h2.cols();
    BinaryMatrix hx = hstack({kron(h1, BinaryMatrix::identity(n2)), kron(BinaryMatrix::identity(m1), h2.transpose())});
    BinaryMatrix hz = hstack({kron(BinaryMatrix::identity(n1), h2), kron(h1.transpose(), BinaryMatrix::identity(m2))});
    return CssCode(std::move(hx), std::move(hz));
}

CssParams hgp_params(const BinaryMatrix &h1, const BinaryMatrix &h2, const ClassicalDistanceOptions &opts) {
    LinearCode c1(h1), c2(h2), c1t(h1.transpose()), c2t(h2.transpose());
    CssParams p;
    p.n = h1.cols() * h2.cols() + h1.rows() * h2.rows();
    p.k = c1.k() * c2.k() + c1t.k() * c2t.k();
    // Max row weights add across the two blocks; max column weights do not.
    p.weights = {
        h1.max_row_weight() + h2.max_col_weight(),
        std::max(h1.max_col_weight(), h2.max_row_weight()),
        h2.max_row_weight() + h1.max_col_weight(),
        std::max(h2.max_col_weight(), h1.max_row_weight())};
    auto side = [&](const LinearCode &a, bool a_live, const LinearCode &b, bool b_live) {
        Distance d = Distance::infinite();
        if (a_live && a.k() > 0) {
            d = min(d, classical_distance(a, opts));
        }
        if (b_live && b.k() > 0) {
            d = min(d, classical_distance(b, opts));
        }
        return d;
    };
    p.d_z = side(c1, c2.k() > 0, c2t, c1t.k() > 0);
    p.d_x = side(c2, c1.k() > 0, c1t, c2t.k() > 0);
    return p;
}

CssCode lifted_product(const BaseMatrix &a1, const BaseMatrix &a2) {
    if (a1.ell() != a2.ell()) {
        throw ValidationError("lifted product factors use different lift sizes");
    }
    size_t ell = a1.ell();
    size_t m1 = a1.rows(), n1 = a1.cols();
    size_t m2 = a2.rows(), n2 = a2.cols();
    BaseMatrix ax = base_hstack(
        {base_kron(a1, BaseMatrix::identity(m2, ell)), base_kron(BaseMatrix::identity(m1, ell), a2)});
    BaseMatrix az = base_hstack(
        {base_kron(BaseMatrix::identity(n1, ell), ring_transpose(a2)),
         base_kron(ring_transpose(a1), BaseMatrix::identity(n2, ell))});
    return CssCode(lift_matrix(ax), lift_matrix(az));
}

CssCode lifted_product(const BaseMatrix &a) {
    return lifted_product(a, ring_transpose(a));
}

namespace {

// Rows of ker(checks) that are independent modulo rowspace(stabilizers).
BinaryMatrix coset_representatives(const BinaryMatrix &checks, const BinaryMatrix &stabilizers) {
    BinaryMatrix kernel = kernel_basis(checks);
    EchelonBasis eb(checks.cols());
    eb.add_rows(stabilizers);
    std::vector<size_t> keep;
    for (size_t r = 0; r < kernel.rows(); r++) {
        if (eb.add(kernel.row_data(r))) {
            keep.push_back(r);
        }
    }
    return select_rows(kernel, keep);
}

}  // namespace

LogicalBasis logical_basis(const CssCode &c) {
    BinaryMatrix x = coset_representatives(c.hz(), c.hx());
    BinaryMatrix z = coset_representatives(c.hx(), c.hz());
    if (x.rows() != c.k() || z.rows() != c.k()) {
        throw std::logic_error("logical basis size disagrees with k");
    }
    if (c.k() == 0) {
        return {x, z};
    }
    // Make the pairing the identity: z <- (P^-1)^T z with P = x z^T.
    BinaryMatrix p = x * z.transpose();
    z = inverse(p).transpose() * z;
    return {std::move(x), std::move(z)};
}

CssParams css_distance(const CssCode &c, const DistanceOptions &opts) {
    CssParams p;
    p.n = c.n();
    p.k = c.k();
    p.weights = c.weights();
    if (c.k() == 0) {
        return p;
    }
    if (opts.budget == 0) {
        throw ValidationError("distance budget must be at least 1");
    }
    LogicalBasis lb = logical_basis(c);
    struct Side {
        const BinaryMatrix *checks;
        const BinaryMatrix *logicals;
        std::optional<size_t> upper;
        size_t lower = 1;
        bool done = false;
    };
    // A Z logical commutes with H_X and anticommutes with some X logical.
    Side z{&c.hx(), &lb.x, {}};
    Side x{&c.hz(), &lb.z, {}};
    if (opts.trials > 0) {
        z.upper = info_set_upper(kernel_basis(c.hx()), &lb.x, opts.trials, opts.seed);
        x.upper = info_set_upper(kernel_basis(c.hz()), &lb.z, opts.trials, opts.seed ^ 0x6a09e667f3bcc909ULL);
    }
    for (size_t w = 1; w <= c.n() && w <= opts.budget; w++) {
        if (weight_search_cost(c.n(), w) > opts.max_work) {
            break;
        }
        for (Side *s : {&z, &x}) {
            if (s->done) {
                continue;
            }
            if (s->upper && w >= *s->upper) {
                s->lower = *s->upper;
                s->done = true;
            } else if (has_weight(*s->checks, s->logicals, w)) {
                s->lower = w;
                s->upper = w;
                s->done = true;
            } else {
                s->lower = w + 1;
            }
        }
        if ((z.done && x.done) || (opts.min_only && (z.done || x.done))) {
            break;
        }
    }
    p.d_z = Distance::bounds(z.lower, z.upper);
    p.d_x = Distance::bounds(x.lower, x.upper);
    return p;
}

ChainComplex css_chain(const CssCode &c) {
    return ChainComplex(0, {c.hx().rows(), c.n(), c.hz().rows()}, {c.hx(), c.hz().transpose()});
}

CssCode css_from_chain(const ChainComplex &c, int middle_degree) {
    return CssCode(c.boundary(middle_degree), c.boundary(middle_degree + 1).transpose());
}

CssCode read_css(std::istream &in) {
    TokenReader tr(in);
    if (tr.expect("header") != "css") {
        tr.fail("expected 'css' header");
    }
    if (tr.expect("block name") != "HX") {
        tr.fail("expected 'HX' block");
    }
    BinaryMatrix hx = read_text_matrix(tr);
    if (tr.expect("block name") != "HZ") {
        tr.fail("expected 'HZ' block");
    }
    BinaryMatrix hz = read_text_matrix(tr);
    std::string extra;
    if (tr.next(extra)) {
        tr.fail("unexpected trailing token '" + extra + "'");
    }
    return CssCode(std::move(hx), std::move(hz));
}

void write_css(std::ostream &out, const CssCode &c) {
    out << "css\nHX\n";
    write_text_matrix(out, c.hx());
    out << "HZ\n";
    write_text_matrix(out, c.hz());
}

CssCode load_css(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read " + path);
    }
    return read_css(in);
}

void save_css(const std::string &path, const CssCode &c) {
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot write " + path);
    }
    write_css(out, c);
}

}  // namespace wtred
