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

#include "wtred/tanner.h"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "wtred/errors.h"
#include "wtred/parallel.h"

namespace wtred {

TannerGraph TannerGraph::from_css(const CssCode &c) {
    TannerGraph g(c.n());
    for (size_t r = 0; r < c.hx().rows(); r++) {
        g.add_check(CheckType::x, c.hx().row_support(r));
    }
    for (size_t r = 0; r < c.hz().rows(); r++) {
        g.add_check(CheckType::z, c.hz().row_support(r));
    }
    return g;
}

TannerGraph TannerGraph::from_classical(const BinaryMatrix &h) {
    TannerGraph g(h.cols());
    for (size_t r = 0; r < h.rows(); r++) {
        g.add_check(CheckType::untyped, h.row_support(r));
    }
    return g;
}

void TannerGraph::add_check(CheckType type, const std::vector<size_t> &variables) {
    std::map<size_t, size_t> mult;
    for (size_t v : variables) {
        if (v >= num_variables_) {
            throw ValidationError("check refers to variable " + std::to_string(v) + " of " + std::to_string(num_variables_));
        }
        mult[v]++;
    }
    types_.push_back(type);
    checks_.emplace_back(mult.begin(), mult.end());
}

size_t TannerGraph::num_edges() const {
    size_t e = 0;
    for (const auto &c : checks_) {
        for (auto [v, m] : c) {
            e += m;
        }
    }
    return e;
}

namespace {

void tally(CycleCounts &out, CheckType a, CheckType b, size_t cycles) {
    if (a == CheckType::untyped || b == CheckType::untyped) {
        out.untyped += cycles;
    } else if (a != b) {
        out.cross += cycles;
    } else if (a == CheckType::x) {
        out.x_only += cycles;
    } else {
        out.z_only += cycles;
    }
}

size_t choose2(size_t t) {
    return t * (t - (t > 0)) / 2;
}

// Calls visit(b, group, paths) for every check b > a, summing 2-paths per group.
template <typename GroupOf>
CycleCounts count_with_groups(const TannerGraph &g, GroupOf group_of) {
    size_t nc = g.num_checks();
    std::vector<std::vector<std::pair<size_t, size_t>>> var_checks(g.num_variables());
    for (size_t c = 0; c < nc; c++) {
        for (auto [v, m] : g.check_neighbors(c)) {
            var_checks[v].push_back({c, m});
        }
    }
    size_t workers = std::max<size_t>(1, std::min(thread_count(), nc));
    std::vector<CycleCounts> partial(workers);
    parallel_for(nc, [&](size_t a, size_t worker) {
        std::unordered_map<uint64_t, size_t> paths;
        for (auto [v, ma] : g.check_neighbors(a)) {
            uint64_t grp = group_of(v);
            for (auto [b, mb] : var_checks[v]) {
                if (b > a) {
                    paths[(uint64_t)b * 0x100000000ULL + grp] += ma * mb;
                }
            }
        }
        CycleCounts &out = partial[worker];
        for (auto [key, t] : paths) {
            size_t b = key >> 32;
            tally(out, g.check_type(a), g.check_type(b), choose2(t));
        }
    });
    CycleCounts total;
    for (const auto &p : partial) {
        total.x_only += p.x_only;
        total.z_only += p.z_only;
        total.cross += p.cross;
        total.untyped += p.untyped;
    }
    return total;
}

}  // namespace

CycleCounts count_4cycles(const TannerGraph &g) {
    return count_with_groups(g, [](size_t) {
        return uint64_t{0};
    });
}

CycleCounts count_split_4cycles(const TannerGraph &g, const std::vector<size_t> &origin) {
    if (origin.size() != g.num_variables()) {
        throw ValidationError("origin map does not cover every variable");
    }
    // A split cycle's two variables differ but share an origin, so it is a pair of
    // distinct 2-paths inside one origin group minus the pairs that reuse a variable.
    CycleCounts grouped = count_with_groups(g, [&](size_t v) {
        return (uint64_t)origin[v];
    });
    CycleCounts same_var = count_with_groups(g, [](size_t v) {
        return (uint64_t)v + 1;
    });
    CycleCounts out;
    out.x_only = grouped.x_only - same_var.x_only;
    out.z_only = grouped.z_only - same_var.z_only;
    out.cross = grouped.cross - same_var.cross;
    out.untyped = grouped.untyped - same_var.untyped;
    return out;
}

CycleCounts copying_cycle_formula(const BinaryMatrix &hz, const std::vector<size_t> &counts) {
    if (counts.size() != hz.cols()) {
        throw ValidationError("copy counts do not match the number of qubits");
    }
    std::vector<size_t> c = hz.col_weights();
    CycleCounts out;
    for (size_t q = 0; q < counts.size(); q++) {
        size_t s = counts[q];
        out.z_only += choose2(s) * choose2(c[q]);
        out.cross += c[q] * (s - 1);
    }
    return out;
}

std::optional<size_t> girth(const TannerGraph &g, std::optional<CheckType> only_type) {
    size_t nv = g.num_variables();
    size_t nodes = nv + g.num_checks();
    std::vector<std::vector<size_t>> adj(nodes);
    for (size_t c = 0; c < g.num_checks(); c++) {
        if (only_type && g.check_type(c) != *only_type) {
            continue;
        }
        for (auto [v, m] : g.check_neighbors(c)) {
            if (m > 1) {
                return 2;
            }
            adj[v].push_back(nv + c);
            adj[nv + c].push_back(v);
        }
    }
    const size_t NONE = SIZE_MAX;
    size_t best = NONE;
    std::vector<size_t> dist(nodes, NONE), parent(nodes, NONE);
    for (size_t s = 0; s < nodes && best > 4; s++) {
        if (adj[s].empty()) {
            continue;
        }
        std::vector<size_t> touched{s};
        dist[s] = 0;
        std::deque<size_t> queue{s};
        while (!queue.empty()) {
            size_t u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best) {
                break;
            }
            for (size_t w : adj[u]) {
                if (dist[w] == NONE) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push_back(w);
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
        for (size_t t : touched) {
            dist[t] = NONE;
            parent[t] = NONE;
        }
    }
    if (best == NONE) {
        return std::nullopt;
    }
    return best;
}

std::string to_dot(const TannerGraph &g) {
    std::ostringstream out;
    out << "graph tanner {\n";
    for (size_t v = 0; v < g.num_variables(); v++) {
        out << "  v" << v << " [shape=circle, label=\"" << v << "\"];\n";
    }
    for (size_t c = 0; c < g.num_checks(); c++) {
        out << "  c" << c << " [shape=square, label=\"\"";
        switch (g.check_type(c)) {
            case CheckType::x:
                out << ", style=solid";
                break;
            case CheckType::z:
                out << ", style=filled, fillcolor=black";
                break;
            case CheckType::untyped:
                out << ", style=dashed";
                break;
        }
        out << "];\n";
    }
    for (size_t c = 0; c < g.num_checks(); c++) {
        for (auto [v, m] : g.check_neighbors(c)) {
            for (size_t i = 0; i < m; i++) {
                out << "  c" << c << " -- v" << v << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace wtred
