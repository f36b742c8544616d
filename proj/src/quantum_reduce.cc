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

#include "wtred/quantum_reduce.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"
#include "wtred/chain_complex.h"
#include "wtred/errors.h"
#include "wtred/linear_code.h"
#include "wtred/parallel.h"

namespace wtred {

namespace {

uint64_t splitmix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

template <typename T>
void shuffle_in_place(std::vector<T> &v, std::mt19937_64 &rng) {
    for (size_t i = v.size(); i > 1; i--) {
        std::swap(v[i - 1], v[rng() % i]);
    }
}

}  // namespace

// ---- copying ----

CopyVariant CopyVariant::parse(const std::string &text) {
    if (text == "original") {
        return original();
    }
    if (text == "reduced") {
        return reduced();
    }
    const std::string prefix = "targeted:";
    if (text.rfind(prefix, 0) == 0) {
        try {
            size_t pos = 0;
            unsigned long t = std::stoul(text.substr(prefix.size()), &pos);
            if (pos + prefix.size() == text.size()) {
                CopyVariant v = targeted(t);
                v.validate();
                return v;
            }
        } catch (const std::logic_error &) {
        }
    }
    throw ValidationError("unknown copy variant '" + text + "' (expected original, reduced or targeted:<q>)");
}

std::string CopyVariant::str() const {
    switch (kind) {
        case CopyKind::original:
            return "original";
        case CopyKind::reduced:
            return "reduced";
        case CopyKind::targeted:
            return "targeted:" + std::to_string(targ_q_x);
    }
    return "?";
}

void CopyVariant::validate() const {
    if (kind == CopyKind::targeted && targ_q_x < 3) {
        throw ValidationError("targeted copying needs a target column weight of at least 3");
    }
    if (kind != CopyKind::targeted && targ_q_x != 0) {
        throw ValidationError("only targeted copying takes a target column weight");
    }
}

std::vector<size_t> copy_counts(const BinaryMatrix &hx, const CopyVariant &variant) {
    variant.validate();
    std::vector<size_t> w = hx.col_weights();
    std::vector<size_t> counts(w.size(), 1);
    size_t q = std::max<size_t>(1, hx.max_col_weight());
    size_t t = variant.targ_q_x;
    for (size_t i = 0; i < w.size(); i++) {
        switch (variant.kind) {
            case CopyKind::original:
                counts[i] = q;
                break;
            case CopyKind::reduced:
                counts[i] = std::max<size_t>(1, w[i]);
                break;
            case CopyKind::targeted:
                if (w[i] > t) {
                    // Two ends taking t - 1 edges each, middles taking t - 2.
                    size_t rest = w[i] > 2 * (t - 1) ? w[i] - 2 * (t - 1) : 0;
                    counts[i] = 2 + (rest + t - 3) / (t - 2);
                }
                break;
        }
    }
    return counts;
}

CopyResult copying(const CssCode &c, const CopyVariant &variant) {
    const BinaryMatrix &hx = c.hx();
    const BinaryMatrix &hz = c.hz();
    size_t n = c.n();
    std::vector<size_t> counts = copy_counts(hx, variant);
    std::vector<size_t> offset(n + 1, 0);
    for (size_t i = 0; i < n; i++) {
        offset[i + 1] = offset[i] + counts[i];
    }
    size_t total = offset[n];
    size_t links = total - n;

    BinaryMatrix out_x(hx.rows() + links, total);
    std::vector<size_t> used(n, 0);
    size_t t = variant.targ_q_x;
    for (size_t r = 0; r < hx.rows(); r++) {
        for (size_t i : hx.row_support(r)) {
            size_t j = used[i]++;
            if (counts[i] == 1) {
                j = 0;
            } else if (variant.kind == CopyKind::targeted) {
                // Walk the capacities t-1, t-2, ..., t-2, t-1.
                size_t k = 0;
                size_t acc = t - 1;
                while (j >= acc) {
                    k++;
                    acc += (k + 1 == counts[i]) ? t - 1 : t - 2;
                }
                j = k;
            }
            out_x.set(r, offset[i] + j);
        }
    }
    size_t row = hx.rows();
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j + 1 < counts[i]; j++, row++) {
            out_x.set(row, offset[i] + j);
            out_x.set(row, offset[i] + j + 1);
        }
    }

    BinaryMatrix out_z(hz.rows(), total);
    for (size_t r = 0; r < hz.rows(); r++) {
        for (size_t i : hz.row_support(r)) {
            for (size_t j = offset[i]; j < offset[i + 1]; j++) {
                out_z.set(r, j);
            }
        }
    }

    std::vector<size_t> origin(total);
    for (size_t i = 0; i < n; i++) {
        std::fill(origin.begin() + offset[i], origin.begin() + offset[i + 1], i);
    }
    return {CssCode(std::move(out_x), std::move(out_z)), std::move(origin), std::move(counts)};
}

// ---- gauging ----

CssCode gauging(const CssCode &c) {
    const BinaryMatrix &hx = c.hx();
    const BinaryMatrix &hz = c.hz();
    size_t n = c.n();
    struct Gauged {
        std::vector<size_t> support;
        size_t base;
    };
    std::vector<std::vector<size_t>> x_rows;
    std::vector<Gauged> gauged;
    size_t extra = 0;
    for (size_t r = 0; r < hx.rows(); r++) {
        std::vector<size_t> s = hx.row_support(r);
        size_t w = s.size();
        if (w <= 3) {
            x_rows.push_back(s);
            continue;
        }
        size_t b = n + extra;
        extra += w - 3;
        gauged.push_back({s, b});
        // {s0, s1, b}, {s_{m+1}, b+m-1, b+m}, ..., {s_{w-2}, s_{w-1}, b+w-4}.
        x_rows.push_back({s[0], s[1], b});
        for (size_t m = 1; m + 3 < w; m++) {
            x_rows.push_back({s[m + 1], b + m - 1, b + m});
        }
        x_rows.push_back({s[w - 2], s[w - 1], b + w - 4});
    }
    size_t total = n + extra;
    BinaryMatrix out_x = BinaryMatrix::from_supports(total, x_rows);
    BinaryMatrix out_z(hz.rows(), total);
    for (size_t r = 0; r < hz.rows(); r++) {
        std::copy(hz.row_data(r), hz.row_data(r) + hz.stride(), out_z.row_data(r));
        for (const auto &g : gauged) {
            // New qubit m-1 anticommutes with the product of new X rows 0..m-1.
            bool parity = hz.get(r, g.support[0]);
            for (size_t m = 1; m + 2 < g.support.size(); m++) {
                parity ^= hz.get(r, g.support[m]);
                if (parity) {
                    out_z.set(r, g.base + m - 1);
                }
            }
        }
    }
    return CssCode(std::move(out_x), std::move(out_z));
}

// ---- thickening ----

Thickened thicken(const CssCode &c, size_t ell) {
    if (ell == 0) {
        throw ValidationError("thickening needs ell >= 1");
    }
    ChainComplex t = tensor_product(css_chain(c), repetition_chain(ell));
    BinaryMatrix hx = t.boundary(1);
    BinaryMatrix hz = t.boundary(2).transpose();
    BinaryMatrix p3 = t.boundary(3);

    size_t n = c.n(), nx = c.hx().rows(), nz = c.hz().rows();
    BinaryMatrix rep = repetition_check(ell);
    BinaryMatrix il = BinaryMatrix::identity(ell);
    BinaryMatrix il1 = BinaryMatrix::identity(ell - 1);
    BinaryMatrix hx_direct = hstack({kron(c.hx(), il), kron(BinaryMatrix::identity(nx), rep.transpose())});
    BinaryMatrix hz_direct = vstack(
        {hstack({kron(c.hz(), il), BinaryMatrix(nz * ell, nx * (ell - 1))}),
         hstack({kron(BinaryMatrix::identity(n), rep), kron(c.hx().transpose(), il1)})});
    BinaryMatrix p3_direct =
        vstack({kron(BinaryMatrix::identity(nz), rep.transpose()), kron(c.hz().transpose(), il1)});
    if (hx != hx_direct || hz != hz_direct || p3 != p3_direct) {
        throw std::logic_error("thickened matrices disagree with the tensor product");
    }
    return {CssCode(std::move(hx), std::move(hz)), std::move(p3), ell, nz};
}

HeightsSpec HeightsSpec::explicit_heights(size_t ell, std::vector<size_t> heights) {
    HeightsSpec s;
    s.ell = ell;
    s.heights = std::move(heights);
    return s;
}

HeightsSpec HeightsSpec::greedy(size_t ell, size_t q_z) {
    HeightsSpec s;
    s.ell = ell;
    s.greedy_q_z = q_z;
    return s;
}

HeightsSpec HeightsSpec::parse(size_t ell, const std::string &text) {
    const std::string prefix = "greedy:";
    try {
        if (text.rfind(prefix, 0) == 0) {
            return greedy(ell, std::stoul(text.substr(prefix.size())));
        }
        std::vector<size_t> hs;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            hs.push_back(std::stoul(item));
        }
        return explicit_heights(ell, hs);
    } catch (const std::logic_error &) {
        throw ValidationError("bad heights '" + text + "' (expected greedy:<q> or a comma separated list)");
    }
}

void HeightsSpec::validate(size_t n_z) const {
    if (greedy_q_z) {
        if (!heights.empty()) {
            throw ValidationError("heights cannot be both greedy and explicit");
        }
        return;
    }
    if (ell == 0) {
        throw ValidationError("explicit heights need ell >= 1");
    }
    if (heights.size() != n_z) {
        throw ValidationError(
            "expected " + std::to_string(n_z) + " heights, got " + std::to_string(heights.size()));
    }
    for (size_t j = 0; j < heights.size(); j++) {
        if (heights[j] < 1 || heights[j] > ell) {
            throw ValidationError(
                "height " + std::to_string(heights[j]) + " of Z row " + std::to_string(j) + " is outside 1.." +
                std::to_string(ell));
        }
    }
}

namespace {

size_t rep_col_weight(size_t ell, size_t t) {
    if (ell == 1) {
        return 0;
    }
    return (t == 0 || t + 1 == ell) ? 1 : 2;
}

// Heights plus the q_Z they lead to.
std::pair<std::vector<size_t>, size_t> greedy_with_load(const BinaryMatrix &hx, const BinaryMatrix &hz, size_t ell) {
    size_t n = hz.cols();
    std::vector<size_t> load(n * ell, 0);
    std::vector<size_t> heights;
    for (size_t j = 0; j < hz.rows(); j++) {
        std::vector<size_t> s = hz.row_support(j);
        size_t best_t = 0;
        size_t best = SIZE_MAX;
        for (size_t t = 0; t < ell; t++) {
            size_t worst = 0;
            for (size_t q : s) {
                worst = std::max(worst, load[q * ell + t]);
            }
            worst += rep_col_weight(ell, t);
            if (worst < best) {
                best = worst;
                best_t = t;
            }
        }
        for (size_t q : s) {
            load[q * ell + best_t]++;
        }
        heights.push_back(best_t + 1);
    }
    size_t q_z = 0;
    for (size_t q = 0; q < n; q++) {
        for (size_t t = 0; t < ell; t++) {
            q_z = std::max(q_z, load[q * ell + t] + rep_col_weight(ell, t));
        }
    }
    if (ell > 1) {
        q_z = std::max(q_z, hx.max_row_weight());
    }
    return {heights, q_z};
}

}  // namespace

std::vector<size_t> greedy_heights(const BinaryMatrix &hz, size_t ell) {
    if (ell == 0) {
        throw ValidationError("greedy heights need ell >= 1");
    }
    return greedy_with_load(BinaryMatrix(0, hz.cols()), hz, ell).first;
}

CssCode choose_heights(const Thickened &t, const std::vector<size_t> &heights) {
    HeightsSpec::explicit_heights(t.ell, heights).validate(t.n_z);
    std::vector<size_t> keep;
    for (size_t j = 0; j < t.n_z; j++) {
        keep.push_back(j * t.ell + heights[j] - 1);
    }
    for (size_t r = t.n_z * t.ell; r < t.code.hz().rows(); r++) {
        keep.push_back(r);
    }
    CssCode out(t.code.hx(), select_rows(t.code.hz(), keep));
    if (out.rank_z() != t.code.rank_z()) {
        throw std::logic_error("choosing heights changed the Z stabilizer group");
    }
    return out;
}

HeightsResult thicken_with_heights(const CssCode &c, const HeightsSpec &spec) {
    size_t n_z = c.hz().rows();
    spec.validate(n_z);
    if (!spec.greedy_q_z) {
        return {choose_heights(thicken(c, spec.ell), spec.heights), spec.ell, spec.heights};
    }
    size_t target = *spec.greedy_q_z;
    if (spec.ell > 0) {
        auto hs = greedy_with_load(c.hx(), c.hz(), spec.ell).first;
        return {choose_heights(thicken(c, spec.ell), hs), spec.ell, hs};
    }
    // Search for the smallest ell whose greedy heights meet the target.
    size_t cap = std::max<size_t>(n_z, 1) + 2;
    for (size_t ell = 1; ell <= cap; ell++) {
        auto [hs, q_z] = greedy_with_load(c.hx(), c.hz(), ell);
        if (q_z <= target) {
            return {choose_heights(thicken(c, ell), hs), ell, hs};
        }
    }
    throw ValidationError("no thickening up to ell = " + std::to_string(cap) + " reaches q_Z <= " + std::to_string(target));
}

// ---- coning ----

void ConingOptions::validate() const {
    if (cellulate_above < 3) {
        throw ValidationError("cellulate_above must be at least 3");
    }
}

namespace {

// Start at the smallest vertex and head toward the smaller neighbor.
void canonicalize(GraphCycle &c) {
    size_t L = c.vertices.size();
    size_t start = std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin();
    std::rotate(c.vertices.begin(), c.vertices.begin() + start, c.vertices.end());
    std::rotate(c.edges.begin(), c.edges.begin() + start, c.edges.end());
    bool flip = L > 2 ? c.vertices[L - 1] < c.vertices[1] : c.edges[L - 1] < c.edges[0];
    if (flip) {
        std::reverse(c.vertices.begin() + 1, c.vertices.end());
        std::reverse(c.edges.begin(), c.edges.end());
    }
}

using Adjacency = std::vector<std::vector<std::pair<size_t, size_t>>>;

Adjacency build_adjacency(size_t num_vertices, const std::vector<std::pair<size_t, size_t>> &edges) {
    Adjacency adj(num_vertices);
    for (size_t e = 0; e < edges.size(); e++) {
        auto [a, b] = edges[e];
        if (a >= num_vertices || b >= num_vertices || a == b) {
            throw ValidationError("bad edge " + std::to_string(e) + " in cycle basis graph");
        }
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    return adj;
}

}  // namespace

std::vector<GraphCycle> fundamental_cycles(
    size_t num_vertices, const std::vector<std::pair<size_t, size_t>> &edges, uint64_t seed, size_t trial) {
    Adjacency adj = build_adjacency(num_vertices, edges);
    std::vector<size_t> roots(num_vertices);
    for (size_t v = 0; v < num_vertices; v++) {
        roots[v] = v;
    }
    if (trial != 0) {
        std::mt19937_64 rng(splitmix(seed ^ splitmix(trial)));
        for (auto &list : adj) {
            shuffle_in_place(list, rng);
        }
        shuffle_in_place(roots, rng);
    }

    const size_t NONE = SIZE_MAX;
    std::vector<size_t> parent(num_vertices, NONE);
    std::vector<size_t> parent_edge(num_vertices, NONE);
    std::vector<size_t> depth(num_vertices, 0);
    std::vector<bool> seen(num_vertices, false);
    std::vector<bool> tree(edges.size(), false);
    for (size_t root : roots) {
        if (seen[root]) {
            continue;
        }
        seen[root] = true;
        std::deque<size_t> queue{root};
        while (!queue.empty()) {
            size_t u = queue.front();
            queue.pop_front();
            for (auto [v, e] : adj[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    parent[v] = u;
                    parent_edge[v] = e;
                    depth[v] = depth[u] + 1;
                    tree[e] = true;
                    queue.push_back(v);
                }
            }
        }
    }

    std::vector<GraphCycle> cycles;
    for (size_t e = 0; e < edges.size(); e++) {
        if (tree[e]) {
            continue;
        }
        auto [a, b] = edges[e];
        std::vector<size_t> va{a}, ea, vb{b}, eb;
        size_t x = a, y = b;
        while (x != y) {
            if (depth[x] >= depth[y]) {
                ea.push_back(parent_edge[x]);
                x = parent[x];
                va.push_back(x);
            } else {
                eb.push_back(parent_edge[y]);
                y = parent[y];
                vb.push_back(y);
            }
        }
        GraphCycle c;
        c.vertices = va;
        c.edges = ea;
        for (size_t i = vb.size() - 1; i-- > 0;) {
            c.vertices.push_back(vb[i]);
            c.edges.push_back(eb[i]);
        }
        c.edges.push_back(e);
        canonicalize(c);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

std::vector<GraphCycle> minimum_cycles(
    size_t num_vertices, const std::vector<std::pair<size_t, size_t>> &edges, uint64_t seed, size_t trial) {
    Adjacency adj = build_adjacency(num_vertices, edges);
    std::mt19937_64 rng(splitmix(seed ^ splitmix(trial)));
    if (trial != 0) {
        for (auto &list : adj) {
            shuffle_in_place(list, rng);
        }
    }
    const size_t NONE = SIZE_MAX;

    struct Candidate {
        size_t length;
        uint64_t tie;
        GraphCycle cycle;
    };
    std::vector<Candidate> candidates;
    size_t components = 0;
    std::vector<bool> reached(num_vertices, false);
    std::vector<size_t> parent(num_vertices), parent_edge(num_vertices), depth(num_vertices), branch(num_vertices);
    for (size_t x = 0; x < num_vertices; x++) {
        std::fill(parent.begin(), parent.end(), NONE);
        std::fill(parent_edge.begin(), parent_edge.end(), NONE);
        std::vector<bool> seen(num_vertices, false);
        std::vector<size_t> order{x};
        seen[x] = true;
        depth[x] = 0;
        branch[x] = NONE;
        for (size_t head = 0; head < order.size(); head++) {
            size_t u = order[head];
            for (auto [v, e] : adj[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    parent[v] = u;
                    parent_edge[v] = e;
                    depth[v] = depth[u] + 1;
                    branch[v] = u == x ? v : branch[u];
                    order.push_back(v);
                }
            }
        }
        if (!reached[x]) {
            components++;
            for (size_t v : order) {
                reached[v] = true;
            }
        }
        for (size_t e = 0; e < edges.size(); e++) {
            auto [u, v] = edges[e];
            if (!seen[u] || e == parent_edge[u] || e == parent_edge[v]) {
                continue;
            }
            // Both tree paths must leave x through different children.
            if (u != x && v != x && branch[u] == branch[v]) {
                continue;
            }
            GraphCycle c;
            std::vector<size_t> pu_v, pu_e, pv_v, pv_e;
            for (size_t y = u; y != x; y = parent[y]) {
                pu_v.push_back(y);
                pu_e.push_back(parent_edge[y]);
            }
            for (size_t y = v; y != x; y = parent[y]) {
                pv_v.push_back(y);
                pv_e.push_back(parent_edge[y]);
            }
            c.vertices.push_back(x);
            for (size_t i = pu_v.size(); i-- > 0;) {
                c.vertices.push_back(pu_v[i]);
                c.edges.push_back(pu_e[i]);
            }
            c.edges.push_back(e);
            for (size_t i = 0; i < pv_v.size(); i++) {
                c.vertices.push_back(pv_v[i]);
                c.edges.push_back(pv_e[i]);
            }
            canonicalize(c);
            uint64_t tie = trial == 0 ? 0 : rng();
            candidates.push_back({c.edges.size(), tie, std::move(c)});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate &a, const Candidate &b) {
        return std::tie(a.length, a.tie) < std::tie(b.length, b.tie);
    });

    size_t target = edges.size() + components - num_vertices;
    EchelonBasis basis(edges.size());
    std::vector<uint64_t> bits(words_for_bits(edges.size()));
    std::vector<GraphCycle> cycles;
    for (auto &cand : candidates) {
        if (cycles.size() == target) {
            break;
        }
        std::fill(bits.begin(), bits.end(), 0);
        for (size_t e : cand.cycle.edges) {
            bits[e >> 6] ^= uint64_t{1} << (e & 63);
        }
        if (basis.add(bits.data())) {
            cycles.push_back(std::move(cand.cycle));
        }
    }
    if (cycles.size() != target) {
        throw std::logic_error("candidate cycles do not span the cycle space");
    }
    return cycles;
}

CellulatedCycle cellulate_cycle(const GraphCycle &cycle, size_t first_chord_id, Cellulation mode) {
    const auto &v = cycle.vertices;
    const auto &e = cycle.edges;
    size_t L = v.size();
    CellulatedCycle out;
    if (mode == Cellulation::ladder) {
        if (L <= 4) {
            out.faces.push_back(e);
            return out;
        }
        size_t m = (L - 3) / 2;  // ceil((L - 4) / 2)
        auto chord = [&](size_t j) {
            return first_chord_id + j - 1;
        };
        for (size_t j = 1; j <= m; j++) {
            out.chords.push_back({v[j], v[L - 1 - j]});
        }
        out.faces.push_back({e[L - 1], e[0], chord(1), e[L - 2]});
        for (size_t j = 1; j < m; j++) {
            out.faces.push_back({chord(j), e[j], chord(j + 1), e[L - 2 - j]});
        }
        std::vector<size_t> last{chord(m)};
        for (size_t j = m; j + 2 + m <= L; j++) {
            last.push_back(e[j]);
        }
        out.faces.push_back(last);
        return out;
    }
    if (L <= 3) {
        out.faces.push_back(e);
        return out;
    }
    auto chord = [&](size_t j) {
        return first_chord_id + j - 2;
    };
    for (size_t j = 2; j + 2 <= L; j++) {
        out.chords.push_back({v[0], v[j]});
    }
    out.faces.push_back({e[0], e[1], chord(2)});
    for (size_t j = 2; j + 3 <= L; j++) {
        out.faces.push_back({chord(j), e[j], chord(j + 1)});
    }
    out.faces.push_back({chord(L - 2), e[L - 2], e[L - 1]});
    return out;
}

BinaryMatrix ConeBlock::d1() const {
    BinaryMatrix m(edges.size(), qubits.size());
    for (size_t i = 0; i < edges.size(); i++) {
        m.set(i, edges[i].a);
        m.set(i, edges[i].b);
    }
    return m;
}

BinaryMatrix ConeBlock::d0() const {
    BinaryMatrix m(faces.size(), edges.size());
    for (size_t f = 0; f < faces.size(); f++) {
        for (size_t e : faces[f]) {
            m.flip(f, e);
        }
    }
    return m;
}

BinaryMatrix ConeBlock::f1(size_t n) const {
    BinaryMatrix m(n, qubits.size());
    for (size_t i = 0; i < qubits.size(); i++) {
        m.set(qubits[i], i);
    }
    return m;
}

BinaryMatrix ConeBlock::f0(size_t n_x) const {
    BinaryMatrix m(n_x, edges.size());
    for (size_t i = 0; i < edges.size(); i++) {
        if (edges[i].x_row != ConeEdge::NO_ROW) {
            m.set(edges[i].x_row, i);
        }
    }
    return m;
}

size_t ConeBlock::w_z() const {
    std::vector<size_t> degree(qubits.size(), 1);
    for (const auto &e : edges) {
        degree[e.a]++;
        degree[e.b]++;
    }
    return qubits.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

size_t ConeBlock::q_x() const {
    std::vector<size_t> degree(edges.size(), 0);
    for (size_t i = 0; i < edges.size(); i++) {
        degree[i] = edges[i].x_row != ConeEdge::NO_ROW ? 1 : 0;
    }
    for (const auto &f : faces) {
        for (size_t e : f) {
            degree[e]++;
        }
    }
    return edges.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

size_t ConeBlock::w_x() const {
    size_t w = 0;
    for (const auto &f : faces) {
        w = std::max(w, f.size());
    }
    return w;
}

namespace {

void check_reasonable_with(const CssCode &c, size_t z_row, const EchelonBasis &stabilizers) {
    std::vector<size_t> support = c.hz().row_support(z_row);
    std::vector<size_t> all_rows(c.hx().rows());
    for (size_t r = 0; r < all_rows.size(); r++) {
        all_rows[r] = r;
    }
    // Z operators inside the row's support that commute with every X check.
    BinaryMatrix kernel = kernel_basis(submatrix(c.hx(), all_rows, support));
    BinaryMatrix v(1, c.n());
    for (size_t r = 0; r < kernel.rows(); r++) {
        v = BinaryMatrix(1, c.n());
        std::vector<size_t> witness;
        for (size_t i : kernel.row_support(r)) {
            v.set(0, support[i]);
            witness.push_back(support[i]);
        }
        if (!stabilizers.contains(v.row_data(0))) {
            throw UnreasonableCodeError(z_row, witness);
        }
    }
}

uint64_t block_seed(uint64_t seed, size_t z_row) {
    return splitmix(seed ^ splitmix(z_row + 0x2545f4914f6cdd1dULL));
}

}  // namespace

void check_reasonable(const CssCode &c, size_t z_row) {
    if (z_row >= c.hz().rows()) {
        throw ValidationError("Z row " + std::to_string(z_row) + " does not exist");
    }
    EchelonBasis eb(c.n());
    eb.add_rows(c.hz());
    check_reasonable_with(c, z_row, eb);
}

namespace {

// Among all rotations and reflections, the one whose chords raise the busiest endpoint least,
// then the smallest total endpoint degree, then the first found.
GraphCycle least_loaded_orientation(const GraphCycle &cyc, const std::vector<size_t> &degree, Cellulation mode) {
    size_t L = cyc.vertices.size();
    GraphCycle best = cyc;
    std::pair<size_t, size_t> best_key{SIZE_MAX, SIZE_MAX};
    for (int reflect = 0; reflect < 2; reflect++) {
        for (size_t r = 0; r < L; r++) {
            GraphCycle c;
            for (size_t i = 0; i < L; i++) {
                if (!reflect) {
                    c.vertices.push_back(cyc.vertices[(r + i) % L]);
                    c.edges.push_back(cyc.edges[(r + i) % L]);
                } else {
                    // Walk backwards: vertex r - i, then the edge joining it to r - i - 1.
                    c.vertices.push_back(cyc.vertices[(r + L - i) % L]);
                    c.edges.push_back(cyc.edges[(r + 2 * L - i - 1) % L]);
                }
            }
            CellulatedCycle cel = cellulate_cycle(c, 0, mode);
            size_t worst = 0, total = 0;
            std::map<size_t, size_t> extra;
            for (auto [a, b] : cel.chords) {
                extra[a]++;
                extra[b]++;
            }
            for (auto [v, k] : extra) {
                worst = std::max(worst, degree[v] + k);
                total += degree[v] + k;
            }
            std::pair<size_t, size_t> key{worst, total};
            if (key < best_key) {
                best_key = key;
                best = std::move(c);
            }
        }
    }
    return best;
}

}  // namespace

ConeBlock cone_block(const CssCode &c, size_t z_row, const ConingOptions &opts, size_t trial) {
    opts.validate();
    if (z_row >= c.hz().rows()) {
        throw ValidationError("Z row " + std::to_string(z_row) + " does not exist");
    }
    ConeBlock block;
    block.z_row = z_row;
    block.trial = trial;
    block.qubits = c.hz().row_support(z_row);
    std::vector<size_t> position(c.n(), SIZE_MAX);
    for (size_t i = 0; i < block.qubits.size(); i++) {
        position[block.qubits[i]] = i;
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t r = 0; r < c.hx().rows(); r++) {
        std::vector<size_t> overlap;
        for (size_t q : c.hx().row_support(r)) {
            if (position[q] != SIZE_MAX) {
                overlap.push_back(position[q]);
            }
        }
        if (overlap.size() % 2) {
            throw std::logic_error("odd overlap between commuting stabilizers");
        }
        for (size_t i = 0; i < overlap.size(); i += 2) {
            block.edges.push_back({r, overlap[i], overlap[i + 1]});
            pairs.push_back({overlap[i], overlap[i + 1]});
        }
    }
    uint64_t seed = block_seed(opts.cycle_basis_seed, z_row);
    auto cycles = opts.cycle_basis == CycleBasis::minimum ? minimum_cycles(block.qubits.size(), pairs, seed, trial)
                                                          : fundamental_cycles(block.qubits.size(), pairs, seed, trial);
    std::vector<size_t> degree(block.qubits.size(), 0);
    for (const auto &e : block.edges) {
        degree[e.a]++;
        degree[e.b]++;
    }
    for (const auto &cyc : cycles) {
        if (cyc.edges.size() <= opts.cellulate_above) {
            block.faces.push_back(cyc.edges);
            continue;
        }
        GraphCycle oriented = opts.balance_chords ? least_loaded_orientation(cyc, degree, opts.cellulation) : cyc;
        CellulatedCycle cel = cellulate_cycle(oriented, block.edges.size(), opts.cellulation);
        for (auto [a, b] : cel.chords) {
            degree[a]++;
            degree[b]++;
        }
        for (auto [a, b] : cel.chords) {
            block.edges.push_back({ConeEdge::NO_ROW, a, b});
        }
        for (auto &f : cel.faces) {
            block.faces.push_back(std::move(f));
        }
    }
    return block;
}

CssCode assemble_cone(const CssCode &c, const std::vector<ConeBlock> &blocks) {
    size_t n = c.n();
    size_t n_x = c.hx().rows();
    std::vector<bool> coned(c.hz().rows(), false);
    std::vector<BinaryMatrix> d1s, d0s, f1s, f0s;
    for (const auto &b : blocks) {
        if (b.z_row >= coned.size() || coned[b.z_row]) {
            throw ValidationError("Z row " + std::to_string(b.z_row) + " is coned twice or does not exist");
        }
        coned[b.z_row] = true;
        d1s.push_back(b.d1());
        d0s.push_back(b.d0());
        f1s.push_back(b.f1(n));
        f0s.push_back(b.f0(n_x));
    }
    std::vector<size_t> remaining;
    for (size_t r = 0; r < coned.size(); r++) {
        if (!coned[r]) {
            remaining.push_back(r);
        }
    }
    BinaryMatrix d1 = block_diag(d1s);
    BinaryMatrix d0 = block_diag(d0s);
    size_t nq = d1.cols(), ne = d1.rows(), nf = d0.rows();
    if (blocks.empty()) {
        d0 = BinaryMatrix(0, 0);
    }
    ChainComplex a(-1, {nf, ne, nq}, {d0, d1});
    ChainComplex b(0, {n_x, n, remaining.size()}, {c.hx(), select_rows(c.hz(), remaining).transpose()});
    std::map<int, BinaryMatrix> comps;
    comps[1] = blocks.empty() ? BinaryMatrix(n, 0) : hstack(f1s);
    comps[0] = blocks.empty() ? BinaryMatrix(n_x, 0) : hstack(f0s);
    ChainComplex cone = mapping_cone(ChainMap(a, b, comps));
    return CssCode(cone.boundary(0), cone.boundary(1).transpose());
}

namespace {

ConeResult cone_without_second(const CssCode &c, const std::vector<size_t> &reduce_set, const ConingOptions &opts) {
    opts.validate();
    EchelonBasis eb(c.n());
    eb.add_rows(c.hz());
    std::vector<bool> seen(c.hz().rows(), false);
    for (size_t z : reduce_set) {
        if (z >= seen.size() || seen[z]) {
            throw ValidationError("Z row " + std::to_string(z) + " is listed twice or does not exist");
        }
        seen[z] = true;
        check_reasonable_with(c, z, eb);
    }
    size_t trials = std::max<size_t>(1, opts.num_basis_trials);
    size_t nb = reduce_set.size();
    std::vector<ConeBlock> candidates(nb * trials);
    parallel_for(nb * trials, [&](size_t job, size_t) {
        candidates[job] = cone_block(c, reduce_set[job / trials], opts, job % trials);
    });

    // The worst block decides w_Z; below that, each block picks freely.
    size_t w_bound = 0;
    for (size_t b = 0; b < nb; b++) {
        size_t best = SIZE_MAX;
        for (size_t t = 0; t < trials; t++) {
            best = std::min(best, candidates[b * trials + t].w_z());
        }
        w_bound = std::max(w_bound, best);
    }
    std::vector<ConeBlock> chosen;
    for (size_t b = 0; b < nb; b++) {
        size_t pick = SIZE_MAX;
        std::tuple<size_t, size_t, size_t> best{SIZE_MAX, SIZE_MAX, SIZE_MAX};
        for (size_t t = 0; t < trials; t++) {
            const ConeBlock &cb = candidates[b * trials + t];
            if (cb.w_z() > w_bound) {
                continue;
            }
            std::tuple<size_t, size_t, size_t> key{cb.q_x(), cb.w_x(), cb.edges.size()};
            if (key < best) {
                best = key;
                pick = t;
            }
        }
        chosen.push_back(std::move(candidates[b * trials + pick]));
    }
    CssCode code = assemble_cone(c, chosen);
    return {std::move(code), std::move(chosen)};
}

CssCode second_thickening(const CssCode &c, const HeightsSpec &spec) {
    return thicken_with_heights(c.swapped(), spec).code.swapped();
}

}  // namespace

ConeResult coning(const CssCode &c, const std::vector<size_t> &reduce_set, const ConingOptions &opts) {
    ConeResult r = cone_without_second(c, reduce_set, opts);
    if (opts.second_thickening) {
        r.code = second_thickening(r.code, *opts.second_thickening);
    }
    return r;
}

// ---- pipeline ----

PipelineResult full_pipeline(const CssCode &c, const PipelineOptions &opts) {
    PipelineResult out;
    out.stages.push_back({"input", c});
    CopyResult copied = copying(c, opts.copy);
    out.stages.push_back({"copying", copied.code});
    out.stages.push_back({"gauging", gauging(copied.code)});
    HeightsResult h = thicken_with_heights(out.stages.back().code, opts.heights);
    out.ell = h.ell;
    out.heights = h.heights;
    out.stages.push_back({"thickening", h.code});
    std::vector<size_t> targets;
    for (size_t r = 0; r < h.code.hz().rows(); r++) {
        if (h.code.hz().row_weight(r) > opts.cone_above) {
            targets.push_back(r);
        }
    }
    ConeResult cone = cone_without_second(h.code, targets, opts.coning);
    out.blocks = std::move(cone.blocks);
    out.stages.push_back({"coning", cone.code});
    if (opts.coning.second_thickening) {
        out.stages.push_back(
            {"second thickening", second_thickening(out.stages.back().code, *opts.coning.second_thickening)});
    }
    for (const auto &s : out.stages) {
        if (s.code.k() != c.k()) {
            throw std::logic_error("stage '" + s.name + "' changed the number of logical qubits");
        }
    }
    return out;
}

namespace {

HeightsSpec heights_from_json(const nlohmann::json &j, size_t ell) {
    if (!j.contains("heights")) {
        return HeightsSpec::explicit_heights(ell, std::vector<size_t>(0));
    }
    const auto &h = j.at("heights");
    if (h.is_string()) {
        return HeightsSpec::parse(ell, h.get<std::string>());
    }
    return HeightsSpec::explicit_heights(ell, h.get<std::vector<size_t>>());
}

nlohmann::json heights_to_json(const HeightsSpec &h) {
    nlohmann::json j;
    j["ell"] = h.ell;
    if (h.greedy_q_z) {
        j["heights"] = "greedy:" + std::to_string(*h.greedy_q_z);
    } else {
        j["heights"] = h.heights;
    }
    return j;
}

}  // namespace

PipelineOptions parse_pipeline_options(const std::string &json_text) {
    PipelineOptions o;
    try {
        nlohmann::json j = nlohmann::json::parse(json_text);
        if (!j.is_object()) {
            throw ValidationError("pipeline config must be a JSON object");
        }
        static const std::vector<std::string> known{
            "copy", "ell", "heights", "cone_seed", "cone_trials", "cellulate_above", "cellulation", "cone_above",
            "cycle_basis", "balance_chords", "second_thickening"};
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
                throw ValidationError("unknown pipeline config key '" + it.key() + "'");
            }
        }
        if (j.contains("copy")) {
            o.copy = CopyVariant::parse(j.at("copy").get<std::string>());
        }
        size_t ell = j.value("ell", size_t{1});
        o.heights = heights_from_json(j, ell);
        if (!j.contains("heights")) {
            o.heights = HeightsSpec::greedy(ell, 3);
        }
        o.coning.cycle_basis_seed = j.value("cone_seed", uint64_t{0});
        o.coning.num_basis_trials = j.value("cone_trials", size_t{1});
        o.coning.cellulate_above = j.value("cellulate_above", size_t{4});
        o.cone_above = j.value("cone_above", size_t{5});
        std::string cel = j.value("cellulation", std::string("ladder"));
        if (cel == "ladder") {
            o.coning.cellulation = Cellulation::ladder;
        } else if (cel == "triangulate") {
            o.coning.cellulation = Cellulation::triangulate;
        } else {
            throw ValidationError("unknown cellulation '" + cel + "'");
        }
        o.coning.balance_chords = j.value("balance_chords", false);
        std::string basis = j.value("cycle_basis", std::string("fundamental"));
        if (basis == "fundamental") {
            o.coning.cycle_basis = CycleBasis::fundamental;
        } else if (basis == "minimum") {
            o.coning.cycle_basis = CycleBasis::minimum;
        } else {
            throw ValidationError("unknown cycle basis '" + basis + "'");
        }
        if (j.contains("second_thickening") && !j.at("second_thickening").is_null()) {
            const auto &s = j.at("second_thickening");
            o.coning.second_thickening = heights_from_json(s, s.value("ell", size_t{1}));
        }
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("bad pipeline config: ") + e.what());
    }
    o.copy.validate();
    o.coning.validate();
    return o;
}

std::string pipeline_options_json(const PipelineOptions &o) {
    nlohmann::json j;
    j["copy"] = o.copy.str();
    nlohmann::json h = heights_to_json(o.heights);
    j["ell"] = h["ell"];
    j["heights"] = h["heights"];
    j["cone_seed"] = o.coning.cycle_basis_seed;
    j["cone_trials"] = o.coning.num_basis_trials;
    j["cellulate_above"] = o.coning.cellulate_above;
    j["cellulation"] = o.coning.cellulation == Cellulation::ladder ? "ladder" : "triangulate";
    j["cone_above"] = o.cone_above;
    j["cycle_basis"] = o.coning.cycle_basis == CycleBasis::minimum ? "minimum" : "fundamental";
    j["balance_chords"] = o.coning.balance_chords;
    j["second_thickening"] = o.coning.second_thickening ? heights_to_json(*o.coning.second_thickening) : nullptr;
    return j.dump();
}

}  // namespace wtred
