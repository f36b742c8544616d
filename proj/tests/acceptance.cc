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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "test_util.h"
#include "wtred/chain_complex.h"
#include "wtred/classical_reduce.h"
#include "wtred/css_code.h"
#include "wtred/fixtures.h"
#include "wtred/linear_code.h"
#include "wtred/quantum_reduce.h"
#include "wtred/tanner.h"

using namespace wtred;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

bool weights_le(const Weights &w, const Weights &cap) {
    return w.w_x <= cap.w_x && w.q_x <= cap.q_x && w.w_z <= cap.w_z && w.q_z <= cap.q_z;
}

Distance min_side(const CssCode &c) {
    DistanceOptions o;
    o.min_only = true;
    return css_distance(c, o).d();
}

// 1: hypergraph products of the three small fixtures.
void hgp_rows(Outcome &out) {
    struct Row {
        BinaryMatrix h;
        size_t n, k, d;
    };
    for (const Row &r : {Row{fixture_633(), 45, 9, 3}, Row{fixture_734(), 65, 9, 4}, Row{fixture_743(), 58, 16, 3}}) {
        auto t0 = std::chrono::steady_clock::now();
        CssParams p = hgp_params(r.h, r.h);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        size_t d = SIZE_MAX;
        if (LinearCode(r.h).k() > 0) {
            d = std::min(d, brute_distance(r.h));
        }
        if (LinearCode(r.h.transpose()).k() > 0) {
            d = std::min(d, brute_distance(r.h.transpose()));
        }
        out.require(p.n == r.n && p.k == r.k, "n,k of " + p.str());
        out.require(p.d() == Distance::exact(d) && d == r.d, "distance of " + p.str());
        out.require(secs < 1.0, "runtime");
        out.detail << p.str() << " ";
    }
}

// 2: classical reduction of the [6,3,3] fixture, searched over permutations.
void classical_lengths(Outcome &out) {
    for (bool compressed : {false, true}) {
        size_t want_n = compressed ? 65 : 117;
        size_t best = 0, used = 0;
        CssParams last;
        for (size_t t = 0; t < 10000 && best < 4; t++) {
            ReductionOptions o;
            o.compressed = compressed;
            o.permute = t > 0;
            o.seed = t;
            BinaryMatrix r = reduce_full(fixture_633(), o);
            last = hgp_params(r, r);
            out.require(last.n == want_n && last.k == 9, "n,k " + last.str());
            out.require(weights_le(last.weights, {6, 3, 6, 3}), "weights " + last.weights.str());
            best = std::max(best, last.d().lower());
            used = t + 1;
        }
        out.require(best >= 4, "distance");
        out.detail << (compressed ? "compressed " : "plain ") << "n=" << want_n << " best d=" << best << " after "
                   << used << " trials; ";
    }
}

// 3: distance bounds of the classical reduction on random matrices.
void reduction_suite(Outcome &out) {
    std::mt19937_64 rng(1234);
    size_t checked = 0, violations = 0, case_a = 0, case_b = 0, skipped_a = 0;
    while (checked < 500) {
        size_t n = 4 + rng() % 17;
        size_t rows = std::max<size_t>(1, n > 10 ? n - 10 + rng() % 4 : 1 + rng() % n);
        double density = 0.25 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
        BinaryMatrix h = random_matrix(rows, n, density, rng);
        size_t k = LinearCode(h).k();
        if (k == 0 || k > 10) {
            continue;
        }
        checked++;
        size_t d = brute_distance(h);
        auto check = [&](const BinaryMatrix &r, size_t bound) {
            if (LinearCode(r).k() != k || brute_distance(r) < bound) {
                violations++;
            }
        };
        ReductionOptions plain, comp, perm;
        comp.compressed = true;
        perm.permute = true;
        perm.seed = checked;
        check(reduce_full(h, plain), d);
        check(reduce_full(h, comp), d);
        check(reduce_full(h, perm), d);

        size_t min_row = SIZE_MAX, min_col = SIZE_MAX;
        for (size_t r = 0; r < h.rows(); r++) {
            min_row = std::min(min_row, h.row_weight(r));
        }
        for (size_t c = 0; c < h.cols(); c++) {
            min_col = std::min(min_col, h.col_support(c).size());
        }
        bool heavy_rows = min_row > 3 && d >= 2;
        skipped_a += min_row > 3 && d < 2;
        case_a += heavy_rows;
        check(reduce_rows(h, plain), heavy_rows ? (3 * d + 1) / 2 : d);
        bool heavy_cols = min_col > 3;
        case_b += heavy_cols;
        check(reduce_cols(h, plain), heavy_cols ? d * min_col : d);
        check(reduce_cols(h, comp), heavy_cols ? d * (min_col - 2) : d);
    }
    out.require(violations == 0, std::to_string(violations) + " violations");
    out.require(case_a > 0 && case_b > 0, "bound cases exercised");
    out.detail << checked << " matrices, case (a) " << case_a << ", case (b) " << case_b << ", d=1 excluded from (a) "
               << skipped_a << ", violations " << violations;
}

// 4: copying variants and the full pipeline on the Reed-Muller code.
void reed_muller_pipeline(Outcome &out) {
    CssCode q = qrm4();
    out.require(q.weights() == Weights{8, 4, 8, 10}, "input weights");
    struct Row {
        CopyVariant v;
        size_t copy_n, copy_d, n, d;
    };
    for (const Row &r : {Row{CopyVariant::original(), 60, 7, 724, 3}, Row{CopyVariant::reduced(), 32, 4, 512, 2},
                         Row{CopyVariant::targeted(3), 16, 3, 315, 2}}) {
        CopyResult c = copying(q, r.v);
        Distance cd = min_side(c.code);
        out.require(c.code.n() == r.copy_n && c.code.k() == 1 && cd == Distance::exact(r.copy_d),
                    "copy " + r.v.str());
        if (r.v.kind == CopyKind::original) {
            out.require(c.code.weights() == Weights{8, 3, 32, 10}, "copy weights " + c.code.weights().str());
        }
        PipelineOptions po;
        po.copy = r.v;
        po.heights = HeightsSpec::explicit_heights(3, {2, 1, 2, 1, 2, 3, 1, 3, 3, 1});
        PipelineResult p = full_pipeline(q, po);
        const CssCode &f = p.final_code();
        Distance d = min_side(f);
        out.require(f.k() == 1 && d == Distance::exact(r.d), "pipeline " + r.v.str());
        out.require(f.n() == r.n, "pipeline n " + std::to_string(f.n()) + " vs " + std::to_string(r.n));
        out.detail << r.v.str() << ": copy [[" << c.code.n() << ",1," << cd.str() << "]] final [[" << f.n() << ","
                   << f.k() << "," << d.str() << "]] " << f.weights().str() << "; ";
    }
}

// 5: 4-cycles introduced by copying.
void cycle_census(Outcome &out) {
    CssCode q = qrm4();
    struct Row {
        CopyVariant v;
        size_t total;
    };
    for (const Row &r : {Row{CopyVariant::original(), 906}, Row{CopyVariant::reduced(), 564},
                         Row{CopyVariant::targeted(3), 55}}) {
        CopyResult c = copying(q, r.v);
        size_t got = count_split_4cycles(TannerGraph::from_css(c.code), c.origin).total();
        out.require(got == r.total, r.v.str());
        out.detail << r.v.str() << "=" << got << " ";
    }
    std::mt19937_64 rng(31);
    size_t mismatches = 0;
    for (int t = 0; t < 100; t++) {
        CssCode c = hgp(random_matrix(2 + rng() % 2, 3 + rng() % 2, 0.6, rng),
                        random_matrix(2 + rng() % 2, 3 + rng() % 2, 0.6, rng));
        CopyVariant v = rng() % 2 ? CopyVariant::reduced() : CopyVariant::targeted(3 + rng() % 2);
        CopyResult r = copying(c, v);
        mismatches += !(copying_cycle_formula(c.hz(), r.counts) == enumerate_4cycles(r.code, &r.origin));
    }
    out.require(mismatches == 0, "formula vs enumeration");
    out.detail << "formula mismatches " << mismatches << "/100";
}

// 6: bit-exact worked examples.
void worked_examples(Outcome &out) {
    {
        CssCode c(M({"111000", "110011", "101110", "100001"}), M({"101001"}));
        CopyResult r = copying(c, CopyVariant::original());
        std::vector<std::string> rows = {"100010001000000000000000", "010001000000000010001000",
                                         "001000000100100001000000", "000100000000000000000100"};
        for (size_t q = 0; q < 6; q++) {
            for (size_t j = 0; j < 3; j++) {
                std::string link(24, '0');
                link[4 * q + j] = link[4 * q + j + 1] = '1';
                rows.push_back(link);
            }
        }
        out.require(r.code.hx() == M(rows) && r.code.hz() == M({"111100001111000000001111"}), "copying");
    }
    {
        CssCode g = gauging(CssCode(M({"011001100110011", "101010101010101"}),
                                    M({"000000011111111", "000111100001111", "011001100110011", "101010101010101"})));
        out.require(g.hx() == M({"0110000000000001000000000", "0000010000000001100000000",
                                 "0000001000000000110000000", "0000000001000000011000000",
                                 "0000000000100000001100000", "0000000000000110000100000",
                                 "1010000000000000000010000", "0000100000000000000011000",
                                 "0000001000000000000001100", "0000000010000000000000110",
                                 "0000000000100000000000011", "0000000000001010000000001"}) &&
                        g.hz() == M({"0000000111111110001000010", "0001111000011110100001000",
                                     "0110011001100110101011001", "1010101010101011100101010"}),
                    "gauging");
    }
    {
        Thickened t = thicken(CssCode(M({"1111"}), M({"1100", "1010"})), 3);
        bool ok = t.code.hx() == M({"10010010010010", "01001001001011", "00100100100101"}) &&
                  t.code.hz() == M({"10010000000000", "01001000000000", "00100100000000", "10000010000000",
                                    "01000001000000", "00100000100000", "11000000000010", "01100000000001",
                                    "00011000000010", "00001100000001", "00000011000010", "00000001100001",
                                    "00000000011010", "00000000001101"}) &&
                  t.partial3 == M({"1000", "1100", "0100", "0010", "0011", "0001", "1010", "0101", "1000", "0100",
                                   "0010", "0001", "0000", "0000"}) &&
                  choose_heights(t, {1, 2}).hz() == M({"10010000000000", "01000001000000", "11000000000010",
                                                       "01100000000001", "00011000000010", "00001100000001",
                                                       "00000011000010", "00000001100001", "00000000011010",
                                                       "00000000001101"});
        out.require(ok, "thickening");
    }
    {
        CssCode c(M({"1100000000", "0110000000", "0011000000", "0001100000", "0000110000", "0000011000",
                     "1000001000", "0001000100", "0000000110", "0000000011", "0000000101"}),
                  M({"1111111111"}));
        ConeResult r = coning(c, {0}, ConingOptions{});
        const ConeBlock &b = r.blocks.at(0);
        bool ok = b.d0() == M({"1000011000010", "0100100000011", "0011000000001", "0000000011100"}) &&
                  b.d1() == M({"1100000000", "0110000000", "0011000000", "0001100000", "0000110000",
                               "0000011000", "1000001000", "0001000100", "0000000110", "0000000011",
                               "0000000101", "0100010000", "0010100000"}) &&
                  b.f1(c.n()) == BinaryMatrix::identity(10) &&
                  b.f0(c.hx().rows()) == hstack({BinaryMatrix::identity(11), BinaryMatrix(11, 2)});
        out.require(ok, "coning");
    }
    {
        GraphCycle cycle{{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7}};
        CellulatedCycle t = cellulate_cycle(cycle, 8, Cellulation::triangulate);
        BinaryMatrix faces(t.faces.size(), 8 + t.chords.size());
        for (size_t f = 0; f < t.faces.size(); f++) {
            for (size_t e : t.faces[f]) {
                faces.set(f, e);
            }
        }
        out.require(faces == M({"1100000010000", "0010000011000", "0001000001100", "0000100000110",
                                "0000010000011", "0000001100001"}),
                    "octagon");
    }
    out.detail << "copying, gauging, thickening, coning, octagon";
}

// 7: chain complex identities.
void chain_suite(Outcome &out) {
    std::mt19937_64 rng(77);
    size_t kunneth_fail = 0, dd_fail = 0, cone_fail = 0;
    auto dd_zero = [&](const ChainComplex &c) {
        for (int i = c.lowest_degree() + 1; i < c.highest_degree(); i++) {
            dd_fail += !(c.boundary(i) * c.boundary(i + 1)).is_zero();
        }
    };
    for (int t = 0; t < 200; t++) {
        ChainComplex a = random_complex(rng), b = random_complex(rng);
        ChainComplex ab = tensor_product(a, b);
        dd_zero(ab);
        kunneth_fail += !kunneth_check(a, b).all_pass();
        std::map<int, BinaryMatrix> id;
        for (int i = a.lowest_degree(); i <= a.highest_degree(); i++) {
            id[i] = BinaryMatrix::identity(a.dim(i));
        }
        ChainComplex cone = mapping_cone(ChainMap(a, a, id));
        dd_zero(cone);
        for (int i = cone.lowest_degree(); i <= cone.highest_degree(); i++) {
            cone_fail += homology_dim(cone, i) != 0;
        }
    }
    CssCode q = qrm4();
    bool blocks = true;
    for (size_t ell : {2u, 3u, 4u}) {
        ChainComplex t = tensor_product(css_chain(q), repetition_chain(ell));
        dd_zero(t);
        BinaryMatrix h = repetition_check(ell);
        BinaryMatrix il = BinaryMatrix::identity(ell), il1 = BinaryMatrix::identity(ell - 1);
        size_t nx = q.hx().rows(), nz = q.hz().rows();
        BinaryMatrix hx = hstack({kron(q.hx(), il), kron(BinaryMatrix::identity(nx), h.transpose())});
        BinaryMatrix hz = vstack({hstack({kron(q.hz(), il), BinaryMatrix(nz * ell, nx * (ell - 1))}),
                                  hstack({kron(BinaryMatrix::identity(q.n()), h), kron(q.hx().transpose(), il1)})});
        blocks = blocks && t.boundary(1) == hx && t.boundary(2).transpose() == hz;
    }
    out.require(dd_fail == 0, "boundary composites");
    out.require(kunneth_fail == 0, "Kunneth");
    out.require(cone_fail == 0, "identity cone");
    out.require(blocks, "thickening blocks");
    out.detail << "200 pairs; Kunneth failures " << kunneth_fail << ", nonzero composites " << dd_fail
               << ", identity-cone homology " << cone_fail;
}

// 8: lifted products.
void lifted_products(Outcome &out) {
    struct Row {
        std::string base;
        size_t n, k, table_bound;
    };
    for (const Row &r : {Row{"qc1", 260, 58, 6}, Row{"qc3", 175, 19, 10}}) {
        CssCode c = lifted_product(fixture_base(r.base));
        out.require(c.n() == r.n && c.k() == r.k, r.base + " n,k");
        DistanceOptions o;
        o.min_only = true;
        o.trials = 2000;
        o.max_work = 1e6;
        Distance d = css_distance(c, o).d();
        out.detail << r.base << " [[" << c.n() << "," << c.k() << "," << d.str() << "]]";
        if (d.upper() && *d.upper() <= r.table_bound) {
            out.detail << " within table bound " << r.table_bound << "; ";
        } else {
            out.detail << " looser than table bound " << r.table_bound << " after " << o.trials << " trials; ";
        }
    }
    Distance d = min_distance_exact(code_from_base(fixture_base("qc1")), 6);
    out.require(d == Distance::exact(6), "classical item 1 distance");
    out.detail << "classical qc1 d=" << d.str();
}

// 9: quantum reduction of the [[45,9,3]] product.
void quantum_vs_classical(Outcome &out) {
    CssCode code = hgp(fixture_633(), fixture_633());
    PipelineOptions po;
    po.copy = CopyVariant::reduced();
    po.heights = HeightsSpec::greedy(0, 3);
    po.coning.num_basis_trials = 100;
    po.coning.cycle_basis = CycleBasis::minimum;
    po.coning.balance_chords = true;
    PipelineResult r = full_pipeline(code, po);
    const CssCode &f = r.final_code();
    out.require(f.k() == 9, "k");
    out.require(weights_le(f.weights(), {6, 6, 6, 3}), "weights " + f.weights().str());
    out.require(f.n() * 2 >= 2892 && f.n() <= 2 * 2892, "n within factor 2");
    DistanceOptions o;
    o.min_only = true;
    o.trials = 10;
    Distance d = css_distance(f, o).d();
    out.require(d.is_exact() && d.lower() >= 3, "exact d >= 3");
    out.detail << "[[" << f.n() << "," << f.k() << "," << d.str() << "]] " << f.weights().str() << " ell=" << r.ell;
}

}  // namespace

int main() {
    std::vector<std::pair<int, std::function<void(Outcome &)>>> criteria = {
        {1, hgp_rows},    {2, classical_lengths}, {3, reduction_suite},   {4, reed_muller_pipeline},
        {5, cycle_census}, {6, worked_examples},  {7, chain_suite},       {8, lifted_products},
        {9, quantum_vs_classical}};
    int failures = 0;
    for (auto &[id, fn] : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn(o);
        } catch (const std::exception &e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d: %s (%.2fs) %s\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.str().c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
