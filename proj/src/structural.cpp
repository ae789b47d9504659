#include "strucnet/structural.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace strucnet {

namespace {

constexpr int kFree = -1;

/// Hopcroft-Karp state over rows 0..m-1 and columns 0..n-1.
struct HopcroftKarp {
    const std::vector<std::vector<int>>& adj;  // per row, ascending columns
    std::vector<int> match_row, match_col, dist;

    explicit HopcroftKarp(const std::vector<std::vector<int>>& adjacency, int cols)
        : adj(adjacency),
          match_row(adjacency.size(), kFree),
          match_col(cols, kFree),
          dist(adjacency.size(), 0) {}

    bool bfs() {
        constexpr int inf = std::numeric_limits<int>::max();
        std::queue<int> q;
        for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
            if (match_row[u] == kFree) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = inf;
            }
        }
        bool reached_free_col = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = match_col[v];
                if (w == kFree) {
                    reached_free_col = true;
                } else if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return reached_free_col;
    }

    bool dfs(int u) {
        for (int v : adj[u]) {
            int w = match_col[v];
            if (w == kFree || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_row[u] = v;
                match_col[v] = u;
                return true;
            }
        }
        dist[u] = std::numeric_limits<int>::max();
        return false;
    }

    void run() {
        while (bfs())
            for (int u = 0; u < static_cast<int>(adj.size()); ++u)
                if (match_row[u] == kFree) dfs(u);
    }
};

}  // namespace

Matching max_matching(const StructurePattern& p) {
    std::vector<std::vector<int>> adj(p.rows());
    for (auto [i, j] : p.allowed()) adj[i].push_back(j);  // allowed() is sorted, so each row ascends

    HopcroftKarp hk(adj, p.cols());
    hk.run();

    Matching m;
    for (int u = 0; u < p.rows(); ++u)
        if (hk.match_row[u] != kFree) m.pairs.emplace_back(u, hk.match_row[u]);
    return m;
}

int structural_rank(const StructurePattern& p) { return max_matching(p).size(); }

int structural_rank(const StructureGraph& g) { return structural_rank(pattern_of(g)); }

int deficiency(const StructureGraph& g) { return g.size() - structural_rank(g); }

std::optional<CycleCover> cycle_cover(const StructureGraph& g) {
    const int n = g.size();
    Matching m = max_matching(pattern_of(g));
    if (m.size() < n) return std::nullopt;

    // Perfect matching read as a permutation: pair (i, j) makes i the
    // successor of j, and each orbit is a cycle of g.
    std::vector<int> successor(n, kFree);
    for (auto [i, j] : m.pairs) successor[j] = i;

    CycleCover cover;
    std::vector<char> visited(n, 0);
    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        std::vector<int> cycle;
        for (int v = start; !visited[v]; v = successor[v]) {
            visited[v] = 1;
            cycle.push_back(v);
        }
        cover.cycles.push_back(std::move(cycle));
    }
    return cover;
}

std::vector<int> null_nodes(const StructureGraph& g) {
    const StructurePattern p = pattern_of(g);
    const int n = g.size();
    const int rank = structural_rank(p);
    if (rank == n) return {};

    std::vector<int> nodes;
    for (int j = 0; j < n; ++j)
        if (structural_rank(p.without_column(j)) == rank) nodes.push_back(j);
    return nodes;
}

}  // namespace strucnet
