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

#include "wtred/tables.h"

#include <cstdio>
#include <sstream>

#include "wtred/classical_reduce.h"
#include "wtred/css_code.h"
#include "wtred/errors.h"
#include "wtred/fixtures.h"
#include "wtred/linear_code.h"
#include "wtred/quantum_reduce.h"

namespace wtred {

const char *version() {
    return "0.1.0";
}

std::vector<std::string> table_ids() {
    return {"t1", "t3", "t4"};
}

namespace {

bool full(const TableOptions &o) {
    return o.scale == TableScale::full;
}

std::string rate(size_t k, size_t n) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", n == 0 ? 0.0 : (double)k / (double)n);
    return buf;
}

std::string cell(const std::string &s) {
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

struct Csv {
    std::ostringstream out;

    void row(const std::vector<std::string> &cells) {
        for (size_t i = 0; i < cells.size(); i++) {
            out << (i ? "," : "") << cell(cells[i]);
        }
        out << "\n";
    }
};

std::string header(const std::string &id, const TableOptions &o) {
    return std::string("# wtred ") + version() + " table=" + id + " scale=" + (full(o) ? "full" : "desk") +
           " seed=" + std::to_string(o.seed) + "\n";
}

// Single number used to rank candidates; the upper bound when the value is not pinned down.
size_t rank_key(const Distance &d) {
    if (d.is_infinite()) {
        return SIZE_MAX;
    }
    if (auto u = d.upper()) {
        return *u;
    }
    return d.lower();
}

// "d1" or "d1->d2" with the unpermuted value first.
std::string arrow(const Distance &first, const Distance &best) {
    if (rank_key(best) > rank_key(first)) {
        return first.str() + "->" + best.str();
    }
    return first.str();
}

std::string classical_cell(size_t n, size_t k, const std::string &d) {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + d + "]";
}

std::string quantum_cell(size_t n, size_t k, const std::string &d) {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + d + "]]";
}

struct Candidate {
    Distance first = Distance::at_least(1);
    Distance best = Distance::at_least(1);
    uint64_t best_seed = 0;
    bool exact = true;
};

// ---- t1: classical reduction of HGP inputs ----

void table1(Csv &csv, const TableOptions &o) {
    size_t trials = o.perm_trials ? o.perm_trials : (full(o) ? 10000 : 200);
    csv.row({"C(H)", "HGP(H)", "R", "HGP(H~)", "R", "HGP(H~c)", "R", "exact", "perm_trials", "best_seed_plain",
             "best_seed_compressed", "seed"});
    for (const auto &name : matrix_fixture_names()) {
        BinaryMatrix h = fixture_matrix(name);
        bool exact = true;
        CodeParams base = code_params(LinearCode(h));
        CssParams p = hgp_params(h, h);
        exact = exact && base.d.is_exact() && p.d().is_exact();
        std::vector<std::string> cells{base.str(), p.str(), rate(p.k, p.n)};
        std::vector<std::string> seeds;
        for (bool compressed : {false, true}) {
            Candidate cand;
            size_t n = 0, k = 0;
            for (size_t t = 0; t < trials; t++) {
                ReductionOptions ro;
                ro.compressed = compressed;
                ro.permute = t > 0;
                ro.seed = o.seed + t;
                BinaryMatrix r = reduce_full(h, ro);
                CssParams q = hgp_params(r, r);
                n = q.n;
                k = q.k;
                Distance d = q.d();
                cand.exact = cand.exact && d.is_exact();
                if (t == 0) {
                    cand.first = cand.best = d;
                    cand.best_seed = ro.seed;
                } else if (rank_key(d) > rank_key(cand.best)) {
                    cand.best = d;
                    cand.best_seed = ro.seed;
                }
            }
            exact = exact && cand.exact;
            cells.push_back(quantum_cell(n, k, arrow(cand.first, cand.best)));
            cells.push_back(rate(k, n));
            seeds.push_back(std::to_string(cand.best_seed));
        }
        cells.push_back(exact ? "1" : "0");
        cells.push_back(std::to_string(trials));
        cells.insert(cells.end(), seeds.begin(), seeds.end());
        cells.push_back(std::to_string(o.seed));
        csv.row(cells);
    }
}

// ---- t3: quantum reduction of HGP codes ----

void table3(Csv &csv, const TableOptions &o) {
    size_t trials = o.cone_trials ? o.cone_trials : (full(o) ? 100 : 20);
    csv.row({"C(H)", "HGP(H)", "R", "(wX,qX,wZ,qZ)", "HGP~(H)", "R", "(wX~,qX~,wZ~,qZ~)", "exact", "ell",
             "cone_trials", "distance_trials", "seed"});
    for (const auto &name : matrix_fixture_names()) {
        BinaryMatrix h = fixture_matrix(name);
        CodeParams base = code_params(LinearCode(h));
        CssCode code = hgp(h, h);
        CssParams p = hgp_params(h, h);

        PipelineOptions po;
        po.copy = CopyVariant::reduced();
        po.heights = HeightsSpec::greedy(0, 3);
        po.coning.cycle_basis_seed = o.seed;
        po.coning.num_basis_trials = trials;
        po.coning.cycle_basis = CycleBasis::minimum;
        po.coning.balance_chords = true;
        PipelineResult r = full_pipeline(code, po);
        const CssCode &out = r.final_code();

        DistanceOptions dopt;
        dopt.min_only = true;
        dopt.seed = o.seed;
        dopt.trials = full(o) ? 200 : 10;
        dopt.max_work = full(o) ? 2e9 : 1e7;
        CssParams q = css_distance(out, dopt);
        bool exact = base.d.is_exact() && p.d().is_exact() && q.d().is_exact();
        csv.row({base.str(), p.str(), rate(p.k, p.n), code.weights().str(), q.str(), rate(q.k, q.n),
                 out.weights().str(), exact ? "1" : "0", std::to_string(r.ell), std::to_string(trials),
                 std::to_string(dopt.trials), std::to_string(o.seed)});
    }
}

// ---- t4: classical reduction of lifted products ----

struct LpColumns {
    std::string classical;
    std::string quantum;
    std::string r;
    bool exact;
};

Distance lp_distance(const CssCode &c, const TableOptions &o, size_t trials) {
    if (trials == 0) {
        return Distance::at_least(1);
    }
    DistanceOptions dopt;
    dopt.min_only = true;
    dopt.seed = o.seed;
    dopt.trials = trials;
    dopt.max_work = full(o) ? 1e8 : 1e6;
    return css_distance(c, dopt).d();
}

size_t lp_trials(size_t n, const TableOptions &o) {
    if (full(o)) {
        return 50;
    }
    return n <= 2500 ? 3 : 0;
}

std::string lp_cell(size_t n, size_t k, const Distance &d, size_t trials) {
    return quantum_cell(n, k, trials == 0 ? "-" : d.str());
}

LpColumns reduced_columns(const BaseMatrix &a, bool compressed, size_t perms, const TableOptions &o,
                          const ClassicalDistanceOptions &copt) {
    Candidate cand;
    BaseMatrix best_matrix;
    for (size_t t = 0; t < perms; t++) {
        ReductionOptions ro;
        ro.compressed = compressed;
        ro.permute = t > 0;
        ro.seed = o.seed + t;
        BaseReduction red = reduce_base_full(a, ro);
        Distance d = classical_distance(code_from_base(red.matrix), copt);
        cand.exact = cand.exact && d.is_exact();
        if (t == 0 || rank_key(d) > rank_key(cand.best)) {
            if (t == 0) {
                cand.first = d;
            }
            cand.best = d;
            cand.best_seed = ro.seed;
            best_matrix = red.matrix;
        }
    }
    LinearCode lc = code_from_base(best_matrix);
    CssCode lp = lifted_product(best_matrix);
    size_t trials = lp_trials(lp.n(), o);
    Distance d = lp_distance(lp, o, trials);
    return LpColumns{classical_cell(lc.n(), lc.k(), arrow(cand.first, cand.best)),
                     lp_cell(lp.n(), lp.k(), d, trials), rate(lp.k(), lp.n()), cand.exact && d.is_exact()};
}

void table4(Csv &csv, const TableOptions &o) {
    size_t perms = o.perm_trials ? o.perm_trials : (full(o) ? 10 : 2);
    ClassicalDistanceOptions copt;
    copt.seed = o.seed;
    copt.trials = full(o) ? 200 : 20;
    copt.max_work = full(o) ? 4e9 : 1e7;
    csv.row({"C(A)", "LP(A)", "R", "C(A~)", "LP(A~)", "R", "C(A~c)", "LP(A~c)", "R", "exact", "perm_trials",
             "seed"});
    for (const char *name : {"qc1", "qc3", "qc4", "qc5", "qc2"}) {
        BaseMatrix a = fixture_base(name);
        CodeParams base = code_params(code_from_base(a), copt);
        CssCode lp = lifted_product(a);
        size_t trials = lp_trials(lp.n(), o);
        Distance d = lp_distance(lp, o, trials);
        LpColumns plain = reduced_columns(a, false, perms, o, copt);
        LpColumns comp = reduced_columns(a, true, perms, o, copt);
        bool exact = base.d.is_exact() && d.is_exact() && plain.exact && comp.exact;
        csv.row({base.str(), lp_cell(lp.n(), lp.k(), d, trials), rate(lp.k(), lp.n()), plain.classical,
                 plain.quantum, plain.r, comp.classical, comp.quantum, comp.r, exact ? "1" : "0",
                 std::to_string(perms), std::to_string(o.seed)});
    }
}

}  // namespace

std::string table_csv(const std::string &id, const TableOptions &opts) {
    Csv csv;
    if (id == "t1") {
        table1(csv, opts);
    } else if (id == "t3") {
        table3(csv, opts);
    } else if (id == "t4") {
        table4(csv, opts);
    } else if (id == "t7" || id == "t8" || id == "t2" || id == "t5" || id == "t6") {
        throw ValidationError("table " + id + " is not reproducible here: simulation and extended tables are out of scope");
    } else {
        throw ValidationError("unknown table id '" + id + "' (expected t1, t3 or t4)");
    }
    return header(id, opts) + csv.out.str();
}

}  // namespace wtred
