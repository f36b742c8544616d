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

// Command-line front end: build, reduce, analyze and regenerate tables.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wtred/classical_reduce.h"
#include "wtred/css_code.h"
#include "wtred/errors.h"
#include "wtred/fixtures.h"
#include "wtred/linear_code.h"
#include "wtred/quantum_reduce.h"
#include "wtred/ring.h"
#include "wtred/tables.h"
#include "wtred/tanner.h"

using nlohmann::json;
using namespace wtred;

namespace {

struct Settings {
    // input: exactly one of these
    std::string matrix;
    std::string base;
    std::string fixture;
    std::string code;
    std::string construction = "none";
    uint64_t seed = 0;

    // distance
    bool no_distance = false;
    size_t trials = 200;
    double max_work = 2e9;
    size_t budget = 0;
    bool min_only = false;

    std::string out;
    std::string report;

    // reduce
    std::string method = "plain";
    size_t perm_trials = 1;
    size_t row_threshold = 3;
    size_t col_threshold = 3;
    std::string pipeline;
    std::string copy = "original";
    size_t ell = 0;
    std::string heights = "greedy:3";
    size_t cone_trials = 1;
    std::string cellulation = "ladder";
    std::string cycle_basis = "fundamental";
    bool balance_chords = false;
    size_t cone_above = 5;

    // cycles
    bool girth = false;

    // tables
    std::string table;
    std::string scale = "desk";
};

json effective_config(const std::string &command, const Settings &s) {
    json j;
    j["command"] = command;
    j["matrix"] = s.matrix;
    j["base"] = s.base;
    j["fixture"] = s.fixture;
    j["code"] = s.code;
    j["construction"] = s.construction;
    j["seed"] = s.seed;
    if (command == "build" || command == "distance" || command == "reduce") {
        j["no_distance"] = s.no_distance;
        j["trials"] = s.trials;
        j["max_work"] = s.max_work;
        j["budget"] = s.budget;
        j["min_only"] = s.min_only;
    }
    if (command == "reduce") {
        j["method"] = s.method;
        j["perm_trials"] = s.perm_trials;
        j["row_threshold"] = s.row_threshold;
        j["col_threshold"] = s.col_threshold;
        j["pipeline"] = s.pipeline;
        j["copy"] = s.copy;
        j["ell"] = s.ell;
        j["heights"] = s.heights;
        j["cone_trials"] = s.cone_trials;
        j["cellulation"] = s.cellulation;
        j["cycle_basis"] = s.cycle_basis;
        j["balance_chords"] = s.balance_chords;
        j["cone_above"] = s.cone_above;
    }
    if (command == "cycles") {
        j["girth"] = s.girth;
    }
    if (command == "tables") {
        j["table"] = s.table;
        j["scale"] = s.scale;
    }
    return j;
}

uint64_t fnv1a(const std::string &text) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(uint64_t v) {
    std::ostringstream ss;
    ss << std::hex;
    ss.width(16);
    ss.fill('0');
    ss << v;
    return ss.str();
}

json provenance(const std::string &command, const Settings &s) {
    json j;
    j["tool"] = "wtred";
    j["version"] = version();
    j["command"] = command;
    j["config_hash"] = hex64(fnv1a(effective_config(command, s).dump()));
    j["seed"] = s.seed;
    return j;
}

// ---- input ----

struct Input {
    std::optional<BinaryMatrix> matrix;
    std::optional<BaseMatrix> base;
    std::optional<CssCode> code;
};

Input read_input(const Settings &s) {
    int given = !s.matrix.empty() + !s.base.empty() + !s.fixture.empty() + !s.code.empty();
    if (given != 1) {
        throw ValidationError("exactly one of --matrix, --base, --fixture, --code is required");
    }
    Input in;
    if (!s.matrix.empty()) {
        in.matrix = load_matrix(s.matrix);
    } else if (!s.base.empty()) {
        in.base = load_base_matrix(s.base);
    } else if (!s.code.empty()) {
        in.code = load_css(s.code);
    } else {
        const auto mats = matrix_fixture_names();
        const auto bases = base_fixture_names();
        if (std::find(mats.begin(), mats.end(), s.fixture) != mats.end()) {
            in.matrix = fixture_matrix(s.fixture);
        } else if (std::find(bases.begin(), bases.end(), s.fixture) != bases.end()) {
            in.base = fixture_base(s.fixture);
        } else {
            in.code = fixture_code(s.fixture);
        }
    }
    if (in.matrix && (in.matrix->rows() == 0 || in.matrix->cols() == 0)) {
        throw ValidationError("input matrix is empty");
    }
    if (in.base && (in.base->rows() == 0 || in.base->cols() == 0)) {
        throw ValidationError("input base matrix is empty");
    }
    return in;
}

BinaryMatrix classical_of(const Input &in) {
    if (in.matrix) {
        return *in.matrix;
    }
    if (in.base) {
        return lift_matrix(*in.base);
    }
    throw ValidationError("this command needs a classical input (--matrix, --base or a matrix fixture)");
}

std::optional<CssCode> construct(const Input &in, const std::string &construction) {
    if (construction == "none") {
        if (in.code) {
            return in.code;
        }
        return std::nullopt;
    }
    if (in.code) {
        throw ValidationError("--construction " + construction + " needs a classical input, not a CSS code");
    }
    if (construction == "hgp") {
        BinaryMatrix h = classical_of(in);
        return hgp(h, h);
    }
    if (construction == "lp") {
        BaseMatrix a = in.base ? *in.base : BaseMatrix::from_binary(*in.matrix, 1);
        return lifted_product(a);
    }
    throw ValidationError("unknown construction '" + construction + "' (expected hgp, lp or none)");
}

CssCode require_code(const Input &in, const Settings &s) {
    auto c = construct(in, s.construction);
    if (!c) {
        throw ValidationError("this command needs a CSS code: pass --code, a code fixture, or --construction");
    }
    return *c;
}

// ---- reports ----

json distance_json(const Distance &d) {
    json j;
    j["value"] = d.str();
    j["exact"] = d.is_exact();
    if (d.is_infinite()) {
        j["lower"] = nullptr;
        j["upper"] = nullptr;
    } else {
        j["lower"] = d.lower();
        j["upper"] = d.upper() ? json(*d.upper()) : json(nullptr);
    }
    return j;
}

json weights_json(const Weights &w) {
    return json{{"w_x", w.w_x}, {"q_x", w.q_x}, {"w_z", w.w_z}, {"q_z", w.q_z}};
}

DistanceOptions distance_options(const Settings &s) {
    DistanceOptions o;
    o.budget = s.budget == 0 ? SIZE_MAX : s.budget;
    o.max_work = s.max_work;
    o.trials = s.trials;
    o.seed = s.seed;
    o.min_only = s.min_only;
    return o;
}

ClassicalDistanceOptions classical_options(const Settings &s) {
    ClassicalDistanceOptions o;
    o.budget = s.budget == 0 ? SIZE_MAX : s.budget;
    o.max_work = s.max_work;
    o.trials = s.trials;
    o.seed = s.seed;
    return o;
}

json code_json(const CssCode &c, const Settings &s, bool with_distance) {
    json j;
    j["n"] = c.n();
    j["k"] = c.k();
    j["weights"] = weights_json(c.weights());
    j["weights_str"] = c.weights().str();
    if (with_distance) {
        CssParams p = css_distance(c, distance_options(s));
        j["d_x"] = distance_json(p.d_x);
        j["d_z"] = distance_json(p.d_z);
        j["d"] = distance_json(p.d());
        j["params"] = p.str();
    }
    return j;
}

json classical_json(const BinaryMatrix &h, const Settings &s, bool with_distance) {
    LinearCode lc(h);
    json j;
    j["n"] = lc.n();
    j["k"] = lc.k();
    j["checks"] = h.rows();
    j["max_row_weight"] = h.max_row_weight();
    j["max_col_weight"] = h.max_col_weight();
    if (with_distance) {
        CodeParams p = code_params(lc, classical_options(s));
        j["d"] = distance_json(p.d);
        j["params"] = p.str();
    }
    return j;
}

void emit(const Settings &s, const json &report) {
    std::string text = report.dump(2) + "\n";
    if (s.report.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(s.report);
    if (!f) {
        throw ValidationError("cannot write report '" + s.report + "'");
    }
    f << text;
}

void save_base(const std::string &path, const BaseMatrix &a) {
    std::ofstream f(path);
    if (!f) {
        throw ValidationError("cannot write '" + path + "'");
    }
    write_base_matrix(f, a);
}

// ---- commands ----

void cmd_build(const Settings &s) {
    Input in = read_input(s);
    CssCode c = require_code(in, s);
    if (!s.out.empty()) {
        save_css(s.out, c);
    }
    json r = provenance("build", s);
    r["construction"] = s.construction;
    r["code"] = code_json(c, s, !s.no_distance);
    if (!s.out.empty()) {
        r["output"] = s.out;
    }
    emit(s, r);
}

void cmd_params(const Settings &s) {
    Input in = read_input(s);
    json r = provenance("params", s);
    auto c = construct(in, s.construction);
    if (c) {
        r["code"] = code_json(*c, s, false);
    } else {
        r["classical"] = classical_json(classical_of(in), s, false);
    }
    emit(s, r);
}

void cmd_distance(const Settings &s) {
    Input in = read_input(s);
    json r = provenance("distance", s);
    auto c = construct(in, s.construction);
    if (c) {
        r["code"] = code_json(*c, s, true);
    } else {
        r["classical"] = classical_json(classical_of(in), s, true);
    }
    r["trials"] = s.trials;
    r["max_work"] = s.max_work;
    emit(s, r);
}

// Key used to pick the best permutation trial: larger is better.
size_t distance_key(const Distance &d) {
    if (d.is_infinite()) {
        return SIZE_MAX;
    }
    return d.upper() ? *d.upper() : d.lower();
}

void reduce_classical(const Settings &s, const Input &in, json &r) {
    if (in.code) {
        throw ValidationError("classical reduction needs a classical input");
    }
    if (s.perm_trials == 0) {
        throw ValidationError("--perm-trials must be at least 1");
    }
    ReductionOptions base_opts;
    base_opts.compressed = s.method == "compressed";
    base_opts.row_threshold = s.row_threshold;
    base_opts.col_threshold = s.col_threshold;
    base_opts.validate();
    bool use_hgp = s.construction == "hgp";
    if (s.construction == "lp" && !in.base) {
        throw ValidationError("--construction lp with classical reduction needs a base matrix input");
    }

    std::optional<Distance> first, best;
    uint64_t best_seed = s.seed;
    std::optional<BinaryMatrix> best_matrix;
    std::optional<BaseMatrix> best_base;
    std::vector<std::string> diagnostics;
    for (size_t t = 0; t < s.perm_trials; t++) {
        ReductionOptions ro = base_opts;
        ro.permute = t > 0;
        ro.seed = s.seed + t;
        BinaryMatrix m;
        std::optional<BaseMatrix> b;
        if (in.base) {
            BaseReduction red = reduce_base_full(*in.base, ro);
            if (t == 0) {
                diagnostics = red.diagnostics;
            }
            b = red.matrix;
            m = lift_matrix(red.matrix);
        } else {
            m = reduce_full(*in.matrix, ro);
        }
        Distance d = Distance::at_least(1);
        if (!s.no_distance) {
            d = use_hgp ? hgp_params(m, m, classical_options(s)).d() : classical_distance(LinearCode(m), classical_options(s));
        }
        if (!best || distance_key(d) > distance_key(*best)) {
            best = d;
            best_seed = ro.seed;
            best_matrix = m;
            best_base = b;
        }
        if (t == 0) {
            first = d;
        }
    }

    BinaryMatrix before = classical_of(in);
    r["before"] = classical_json(before, s, false);
    r["after"] = classical_json(*best_matrix, s, false);
    r["k_preserved"] = LinearCode(before).k() == LinearCode(*best_matrix).k();
    r["noop"] = *best_matrix == before;
    r["diagnostics"] = diagnostics;
    json trials;
    trials["count"] = s.perm_trials;
    trials["metric"] = use_hgp ? "hgp distance" : "classical distance";
    trials["best_seed"] = best_seed;
    if (!s.no_distance) {
        trials["first"] = distance_json(*first);
        trials["best"] = distance_json(*best);
    }
    r["permutation_trials"] = trials;

    auto c_before = construct(in, s.construction);
    if (c_before) {
        CssCode c_after = use_hgp ? hgp(*best_matrix, *best_matrix) : lifted_product(*best_base);
        r["code_before"] = code_json(*c_before, s, false);
        r["code_after"] = code_json(c_after, s, false);
        if (!s.no_distance && use_hgp) {
            r["code_after"]["d"] = distance_json(*best);
        }
    }
    if (!s.out.empty()) {
        if (best_base) {
            save_base(s.out, *best_base);
        } else {
            save_matrix(s.out, *best_matrix);
        }
        r["output"] = s.out;
    }
}

PipelineOptions pipeline_from(const Settings &s) {
    if (!s.pipeline.empty()) {
        std::ifstream f(s.pipeline);
        if (!f) {
            throw ValidationError("cannot read pipeline config '" + s.pipeline + "'");
        }
        std::stringstream ss;
        ss << f.rdbuf();
        return parse_pipeline_options(ss.str());
    }
    json j;
    j["copy"] = s.copy;
    j["ell"] = s.ell;
    j["heights"] = s.heights;
    j["cone_seed"] = s.seed;
    j["cone_trials"] = s.cone_trials;
    j["cellulation"] = s.cellulation;
    j["cycle_basis"] = s.cycle_basis;
    j["balance_chords"] = s.balance_chords;
    j["cone_above"] = s.cone_above;
    return parse_pipeline_options(j.dump());
}

void reduce_quantum(const Settings &s, const Input &in, json &r) {
    CssCode c = require_code(in, s);
    PipelineOptions po = pipeline_from(s);
    PipelineResult res = full_pipeline(c, po);
    r["pipeline"] = json::parse(pipeline_options_json(po));
    json stages = json::array();
    for (const auto &st : res.stages) {
        json j = code_json(st.code, s, false);
        j["stage"] = st.name;
        stages.push_back(j);
    }
    r["stages"] = stages;
    r["ell"] = res.ell;
    r["heights"] = res.heights;
    r["coned_rows"] = res.blocks.size();
    r["before"] = code_json(c, s, false);
    r["after"] = code_json(res.final_code(), s, !s.no_distance);
    r["k_preserved"] = res.final_code().k() == c.k();
    r["noop"] = res.final_code().hx() == c.hx() && res.final_code().hz() == c.hz();
    if (!s.out.empty()) {
        save_css(s.out, res.final_code());
        r["output"] = s.out;
    }
}

void cmd_reduce(const Settings &s) {
    Input in = read_input(s);
    json r = provenance("reduce", s);
    r["method"] = s.method;
    if (s.method == "plain" || s.method == "compressed") {
        reduce_classical(s, in, r);
    } else if (s.method == "quantum") {
        reduce_quantum(s, in, r);
    } else {
        throw ValidationError("unknown method '" + s.method + "' (expected plain, compressed or quantum)");
    }
    emit(s, r);
}

json counts_json(const CycleCounts &c) {
    return json{{"x_only", c.x_only}, {"z_only", c.z_only}, {"cross", c.cross}, {"untyped", c.untyped},
                {"total", c.total()}};
}

json girth_json(const std::optional<size_t> &g) {
    return g ? json(*g) : json(nullptr);
}

TannerGraph tanner_of(const Input &in, const Settings &s) {
    auto c = construct(in, s.construction);
    return c ? TannerGraph::from_css(*c) : TannerGraph::from_classical(classical_of(in));
}

void cmd_cycles(const Settings &s) {
    Input in = read_input(s);
    TannerGraph g = tanner_of(in, s);
    json r = provenance("cycles", s);
    r["variables"] = g.num_variables();
    r["checks"] = g.num_checks();
    r["edges"] = g.num_edges();
    r["four_cycles"] = counts_json(count_4cycles(g));
    if (s.girth) {
        r["girth"] = girth_json(girth(g));
        r["girth_x"] = girth_json(girth(g, CheckType::x));
        r["girth_z"] = girth_json(girth(g, CheckType::z));
    }
    emit(s, r);
}

void cmd_export_dot(const Settings &s) {
    Input in = read_input(s);
    std::string dot = to_dot(tanner_of(in, s));
    if (s.out.empty()) {
        std::cout << dot;
        return;
    }
    std::ofstream f(s.out);
    if (!f) {
        throw ValidationError("cannot write '" + s.out + "'");
    }
    f << dot;
}

void cmd_tables(const Settings &s) {
    TableOptions o;
    if (s.scale == "desk") {
        o.scale = TableScale::desk;
    } else if (s.scale == "full") {
        o.scale = TableScale::full;
    } else {
        throw ValidationError("unknown scale '" + s.scale + "' (expected desk or full)");
    }
    o.seed = s.seed;
    o.perm_trials = s.perm_trials == 1 ? 0 : s.perm_trials;
    o.cone_trials = s.cone_trials == 1 ? 0 : s.cone_trials;
    std::string csv = table_csv(s.table, o);
    if (s.out.empty()) {
        std::cout << csv;
        return;
    }
    std::ofstream f(s.out);
    if (!f) {
        throw ValidationError("cannot write '" + s.out + "'");
    }
    f << csv;
}

// ---- argument handling ----

void add_input(CLI::App *cmd, Settings &s) {
    cmd->add_option("--matrix", s.matrix, "parity-check matrix file (text or .alist)");
    cmd->add_option("--base", s.base, "quasi-cyclic base matrix file");
    cmd->add_option("--fixture", s.fixture, "named fixture: 633, 734, 743, qc1..qc5, qrm4, hgp-633, lp-qc1");
    cmd->add_option("--code", s.code, "CSS code file");
    cmd->add_option("--construction", s.construction, "hgp, lp or none");
    cmd->add_option("--seed", s.seed, "random seed");
    cmd->add_option("--report", s.report, "write the JSON report here instead of stdout");
}

void add_distance(CLI::App *cmd, Settings &s) {
    cmd->add_flag("--no-distance", s.no_distance, "skip distance computation");
    cmd->add_option("--trials", s.trials, "information-set trials for upper bounds");
    cmd->add_option("--max-work", s.max_work, "cap on subsets enumerated by exact search");
    cmd->add_option("--budget", s.budget, "largest weight searched exhaustively (0: no limit)");
    cmd->add_flag("--min-only", s.min_only, "stop once min(d_x, d_z) is settled");
}

// Turns a JSON config object into flags placed before the user's own, so that later
// command-line values win under the take-last policy.
// Keys naming an option of another subcommand are skipped; unknown keys are rejected.
std::vector<std::string> config_args(const std::string &path, CLI::App &app, CLI::App *cmd) {
    std::ifstream f(path);
    if (!f) {
        throw ValidationError("cannot read config '" + path + "'");
    }
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception &e) {
        throw ValidationError(std::string("bad config: ") + e.what());
    }
    if (!j.is_object()) {
        throw ValidationError("config must be a JSON object");
    }
    std::vector<std::string> args;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string flag = "--" + it.key();
        std::replace(flag.begin() + 2, flag.end(), '_', '-');
        if (cmd->get_option_no_throw(flag) == nullptr) {
            bool elsewhere = false;
            for (auto *other : app.get_subcommands({})) {
                elsewhere = elsewhere || other->get_option_no_throw(flag) != nullptr;
            }
            if (!elsewhere) {
                throw ValidationError("unknown config key '" + it.key() + "'");
            }
            continue;
        }
        const json &v = it.value();
        if (v.is_boolean()) {
            if (v.get<bool>()) {
                args.push_back(flag);
            }
        } else if (v.is_string()) {
            args.push_back(flag);
            args.push_back(v.get<std::string>());
        } else if (v.is_number() || v.is_array()) {
            args.push_back(flag);
            args.push_back(v.is_array() ? "" : v.dump());
            if (v.is_array()) {
                std::string csv;
                for (const auto &e : v) {
                    csv += (csv.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
                }
                args.back() = csv;
            }
        } else {
            throw ValidationError("config key '" + it.key() + "' has an unsupported value");
        }
    }
    return args;
}

int run(int argc, char **argv) {
    Settings s;
    CLI::App app{"wtred: weight reduction for CSS quantum LDPC codes"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version()));
    app.footer("All subcommands accept --config FILE (JSON object keyed by long option names).");

    auto *build = app.add_subcommand("build", "construct a CSS code and report its parameters");
    add_input(build, s);
    add_distance(build, s);
    build->add_option("--out", s.out, "write the CSS code here");

    auto *reduce = app.add_subcommand("reduce", "weight-reduce a classical matrix or a CSS code");
    add_input(reduce, s);
    add_distance(reduce, s);
    reduce->add_option("--out", s.out, "write the reduced matrix or code here");
    reduce->add_option("--method", s.method, "plain, compressed or quantum");
    reduce->add_option("--perm-trials", s.perm_trials, "classical: number of permutation trials");
    reduce->add_option("--row-threshold", s.row_threshold, "classical: largest row weight kept as is");
    reduce->add_option("--col-threshold", s.col_threshold, "classical: largest column weight kept as is");
    reduce->add_option("--pipeline", s.pipeline, "quantum: pipeline options JSON file");
    reduce->add_option("--copy", s.copy, "quantum: original, reduced or targeted:Q");
    reduce->add_option("--ell", s.ell, "quantum: thickening length (0 searches for the smallest)");
    reduce->add_option("--heights", s.heights, "quantum: greedy:Q or comma-separated heights");
    reduce->add_option("--cone-trials", s.cone_trials, "quantum: cycle-basis trials per coned row");
    reduce->add_option("--cellulation", s.cellulation, "quantum: ladder or triangulate");
    reduce->add_option("--cycle-basis", s.cycle_basis, "quantum: fundamental or minimum");
    reduce->add_flag("--balance-chords", s.balance_chords, "quantum: place chords on the least loaded vertices");
    reduce->add_option("--cone-above", s.cone_above, "quantum: cone Z rows heavier than this");

    auto *params = app.add_subcommand("params", "report n, k and stabilizer weights");
    add_input(params, s);

    auto *distance = app.add_subcommand("distance", "exact or bounded minimum distance");
    add_input(distance, s);
    add_distance(distance, s);

    auto *cycles = app.add_subcommand("cycles", "Tanner graph 4-cycle census");
    add_input(cycles, s);
    cycles->add_flag("--girth", s.girth, "also report girths");

    auto *dot = app.add_subcommand("export-dot", "Tanner graph in Graphviz format");
    add_input(dot, s);
    dot->add_option("--out", s.out, "write here instead of stdout");

    auto *tables = app.add_subcommand("tables", "regenerate a parameter table as CSV");
    tables->add_option("table", s.table, "t1, t3 or t4")->required();
    tables->add_option("--scale", s.scale, "desk or full");
    tables->add_option("--seed", s.seed, "random seed");
    tables->add_option("--perm-trials", s.perm_trials, "override permutation trials");
    tables->add_option("--cone-trials", s.cone_trials, "override cycle-basis trials");
    tables->add_option("--out", s.out, "write here instead of stdout");

    // Expand --config before CLI11 sees the arguments.
    std::vector<std::string> raw(argv + 1, argv + argc);
    std::vector<std::string> expanded;
    std::string config_path;
    for (size_t i = 0; i < raw.size(); i++) {
        if (raw[i] == "--config" && i + 1 < raw.size()) {
            config_path = raw[++i];
        } else if (raw[i].rfind("--config=", 0) == 0) {
            config_path = raw[i].substr(9);
        } else {
            expanded.push_back(raw[i]);
        }
    }
    if (!config_path.empty() && !expanded.empty()) {
        CLI::App *cmd = nullptr;
        for (auto *sub : app.get_subcommands({})) {
            cmd = sub->get_name() == expanded[0] ? sub : cmd;
        }
        if (cmd == nullptr) {
            throw ValidationError("unknown subcommand '" + expanded[0] + "'");
        }
        auto from_config = config_args(config_path, app, cmd);
        expanded.insert(expanded.begin() + 1, from_config.begin(), from_config.end());
    }

    std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*build) {
        cmd_build(s);
    } else if (*reduce) {
        cmd_reduce(s);
    } else if (*params) {
        cmd_params(s);
    } else if (*distance) {
        cmd_distance(s);
    } else if (*cycles) {
        cmd_cycles(s);
    } else if (*dot) {
        cmd_export_dot(s);
    } else if (*tables) {
        cmd_tables(s);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
