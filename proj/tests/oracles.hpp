#pragma once

// Brute-force reference implementations and input generators, used only by
// the tests. Each oracle recomputes its answer by direct search, with no
// code shared with the library, so the production algorithms have something
// genuinely independent to agree with.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "strucnet/graph.hpp"

namespace oracle {

// Largest number of allowed positions hit by any full permutation. Every
// partial matching extends to a permutation, so this equals the structural
// rank. Factorial cost: keep n <= 8.
inline int perm_rank(const strucnet::StructurePattern& p) {
    if (p.rows() != p.cols()) throw std::invalid_argument("perm_rank: square patterns only");
    const int n = p.rows();
    if (n > 8) throw std::invalid_argument("perm_rank: n > 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = 0;
    do {
        int hits = 0;
        for (int i = 0; i < n; ++i)
            if (p.is_allowed(i, perm[static_cast<std::size_t>(i)])) ++hits;
        best = std::max(best, hits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Same quantity by dynamic programming over column subsets: dp[mask] is the
// best matching of the first r rows into the column set mask. O(n^2 2^n),
// good to n = 16 and an independent cross-check of perm_rank.
inline int bitmask_rank(const strucnet::StructurePattern& p) {
    if (p.rows() != p.cols()) throw std::invalid_argument("bitmask_rank: square patterns only");
    const int n = p.rows();
    if (n > 16) throw std::invalid_argument("bitmask_rank: n > 16");
    const std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1u);
    std::vector<int> dp(full + 1u, 0), next(full + 1u, 0);
    for (int i = 0; i < n; ++i) {
        next = dp;  // row i may stay unmatched
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            for (int j = 0; j < n; ++j) {
                if (mask & (1u << j)) continue;
                if (!p.is_allowed(i, j)) continue;
                next[mask | (1u << j)] = std::max(next[mask | (1u << j)], dp[mask] + 1);
            }
        }
        dp.swap(next);
    }
    return *std::max_element(dp.begin(), dp.end());
}

// Whether some permutation hits every row, i.e. a cycle cover exists.
// Backtracking over rows with used-column pruning; fine to n ~ 12.
inline bool cover_exists(const strucnet::StructureGraph& g) {
    const strucnet::StructurePattern p = strucnet::pattern_of(g);
    const int n = p.rows();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto place = [&](auto&& self, int row) -> bool {
        if (row == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<std::size_t>(j)] || !p.is_allowed(row, j)) continue;
            used[static_cast<std::size_t>(j)] = 1;
            if (self(self, row + 1)) return true;
            used[static_cast<std::size_t>(j)] = 0;
        }
        return false;
    };
    return place(place, 0);
}

// Column-deletion null test on top of perm_rank: node j is null iff the
// graph is deficient and dropping column j leaves the rank unchanged.
inline std::vector<int> null_nodes(const strucnet::StructureGraph& g) {
    const strucnet::StructurePattern p = strucnet::pattern_of(g);
    const int n = p.rows();
    const int rank = perm_rank(p);
    std::vector<int> nulls;
    if (rank == n) return nulls;
    for (int j = 0; j < n; ++j)
        if (perm_rank(p.without_column(j)) == rank) nulls.push_back(j);
    return nulls;
}

struct MinimaxSearch {
    int deficiency = 0;        // max over subsets B of |B| - |B->|
    std::vector<int> bottle;   // the smallest subset attaining it (empty if deficiency 0)
};

// Exhaustive subset search for the minimax bottleneck. Ties on deficiency
// break to the fewest nodes, then the lexicographically smallest index set;
// supermodularity of the deficiency makes the smallest attainer unique.
inline MinimaxSearch minimax_search(const strucnet::StructureGraph& g) {
    const int n = g.size();
    if (n > 20) throw std::invalid_argument("minimax_search: n > 20");
    std::vector<std::uint32_t> succ(static_cast<std::size_t>(n), 0);
    for (auto [from, to] : g.edges()) succ[static_cast<std::size_t>(from)] |= 1u << to;
    MinimaxSearch best;
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t fw = 0;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) fw |= succ[static_cast<std::size_t>(v)];
        const int def = std::popcount(mask) - std::popcount(fw);
        if (def > best.deficiency ||
            (def == best.deficiency && def > 0 &&
             std::popcount(mask) < static_cast<int>(best.bottle.size()))) {
            best.deficiency = def;
            best.bottle.clear();
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) best.bottle.push_back(v);
        }
    }
    return best;
}

// Strictly layered graph: layers of profile[k] nodes, complete bidirectional
// coupling between adjacent layers and no other edges. Labels "1".."N" in
// layer order.
inline strucnet::StructureGraph layered_graph(const std::vector<int>& profile) {
    int n = 0;
    for (int k : profile) {
        if (k < 1) throw std::invalid_argument("layered_graph: layer sizes must be >= 1");
        n += k;
    }
    std::vector<std::string> labels;
    for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    std::vector<strucnet::Edge> edges;
    int base = 0;
    for (std::size_t k = 0; k + 1 < profile.size(); ++k) {
        const int a = profile[k], b = profile[k + 1];
        for (int u = base; u < base + a; ++u)
            for (int v = base + a; v < base + a + b; ++v) {
                edges.emplace_back(u, v);
                edges.emplace_back(v, u);
            }
        base += a;
    }
    return strucnet::StructureGraph(std::move(labels), std::move(edges));
}

// Random graph on n nodes (n drawn uniformly from [1, max_n] when n == 0),
// each ordered pair - self-loops included - present independently with
// probability p. Labels "1".."n".
inline strucnet::StructureGraph random_graph(std::mt19937_64& rng, int n = 0, int max_n = 10,
                                             double p = 0.3) {
    if (n == 0) n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    std::vector<std::string> labels;
    for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    std::bernoulli_distribution flip(p);
    std::vector<strucnet::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return strucnet::StructureGraph(std::move(labels), std::move(edges));
}

// Checks that `cover` is a family of directed cycles of g covering every
// node exactly once. Returns an empty string on success, else a reason.
inline std::string check_cover(const strucnet::StructureGraph& g,
                               const std::vector<std::vector<int>>& cycles) {
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    for (const auto& cycle : cycles) {
        if (cycle.empty()) return "empty cycle";
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const int v = cycle[k];
            if (v < 0 || v >= g.size()) return "node out of range";
            if (seen[static_cast<std::size_t>(v)]) return "node covered twice";
            seen[static_cast<std::size_t>(v)] = 1;
            const int w = cycle[(k + 1) % cycle.size()];
            if (!g.has_edge(v, w))
                return "missing edge " + g.label(v) + " -> " + g.label(w);
        }
    }
    for (int v = 0; v < g.size(); ++v)
        if (!seen[static_cast<std::size_t>(v)]) return "node " + g.label(v) + " uncovered";
    return "";
}

// Node indices for a list of labels; throws on an unknown label so tests
// fail loudly on fixture drift.
inline std::vector<int> ids(const strucnet::StructureGraph& g,
                            const std::vector<std::string>& labels) {
    std::vector<int> out;
    for (const auto& l : labels) {
        const int v = g.index_of(l);
        if (v < 0) throw std::invalid_argument("ids: unknown label " + l);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
