#include "strucnet/bottleneck.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "strucnet/structural.hpp"

namespace strucnet {

namespace {

constexpr int kExhaustiveSearchLimit = 20;  // subset search is 2^N, fine up to here

Bottleneck make_bottleneck(const StructureGraph& g, std::vector<int> bottle) {
    Bottleneck b;
    b.neck = forward_set(g, bottle);
    b.deficiency = static_cast<int>(bottle.size() - b.neck.size());
    b.bottle = std::move(bottle);
    return b;
}

}  // namespace

std::optional<Bottleneck> minimax_bottleneck(const StructureGraph& g) {
    const int m_star = deficiency(g);
    if (m_star == 0) return std::nullopt;
    Bottleneck b = make_bottleneck(g, null_nodes(g));
    if (b.deficiency != m_star)
        throw std::logic_error("minimax bottleneck does not reach the total deficiency");
    return b;
}

BottleneckQuery bottleneck_exists(const StructureGraph& g, int m) {
    if (m < 1) throw std::invalid_argument("bottleneck order must be >= 1");
    const int n = g.size();
    const int m_star = deficiency(g);
    BottleneckQuery q;
    q.exists = m <= m_star;
    if (!q.exists) return q;

    if (n <= kExhaustiveSearchLimit) {
        // Out-neighborhoods as bitmasks; scan subsets in ascending mask
        // order so the witness is deterministic.
        std::vector<std::uint32_t> out_mask(n, 0);
        for (auto [from, to] : g.edges()) out_mask[from] |= 1u << to;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::uint32_t fwd = 0;
            for (std::uint32_t rest = mask; rest;) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                fwd |= out_mask[v];
            }
            if (std::popcount(mask) - std::popcount(fwd) == m) {
                std::vector<int> bottle;
                for (int v = 0; v < n; ++v)
                    if (mask & (1u << v)) bottle.push_back(v);
                q.witness = make_bottleneck(g, std::move(bottle));
                return q;
            }
        }
        throw std::logic_error("deficiency promises a bottleneck the subset search missed");
    }
    if (m == m_star) q.witness = minimax_bottleneck(g);
    return q;
}

std::vector<Edge> single_edge_fixes(const StructureGraph& g) {
    const int n = g.size();
    const int m_star = deficiency(g);
    if (m_star == 0) throw std::invalid_argument("graph is already cycle coverable");

    const std::vector<int> bottle = null_nodes(g);
    const std::vector<int> neck = forward_set(g, bottle);
    std::vector<char> in_neck(n, 0);
    for (int v : neck) in_neck[v] = 1;

    std::vector<Edge> fixes;
    for (int u : bottle) {
        for (int v = 0; v < n; ++v) {
            if (in_neck[v] || g.has_edge(u, v)) continue;
            // The candidate must beat every other maximum bottleneck too,
            // so confirm the rank actually moves before keeping it.
            if (deficiency(g.with_edge({u, v})) == m_star - 1) fixes.emplace_back(u, v);
        }
    }
    std::sort(fixes.begin(), fixes.end());
    return fixes;
}

RepairPlan repair(const StructureGraph& g) {
    RepairPlan plan;
    StructureGraph current = g;
    int remaining = deficiency(current);
    plan.deficiency_trace.push_back(remaining);
    while (remaining > 0) {
        const auto fixes = single_edge_fixes(current);
        if (fixes.empty()) throw std::logic_error("deficient graph with no single-edge fix");
        const Edge pick = *std::min_element(
            fixes.begin(), fixes.end(), [&](const Edge& a, const Edge& b) {
                return std::pair(current.label(a.first), current.label(a.second)) <
                       std::pair(current.label(b.first), current.label(b.second));
            });
        current = current.with_edge(pick);
        plan.additions.push_back(pick);
        remaining = deficiency(current);
        plan.deficiency_trace.push_back(remaining);
    }
    return plan;
}

std::optional<Bottleneck> backward_bottleneck(const StructureGraph& g) {
    return minimax_bottleneck(transpose(g));
}

}  // namespace strucnet
