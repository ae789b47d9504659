#pragma once

#include <optional>
#include <vector>

#include "strucnet/graph.hpp"

namespace strucnet {

/** An m-bottleneck: a set of nodes feeding strictly fewer successors.
 *  Invariants: neck == forward_set(g, bottle) and
 *  deficiency == |bottle| - |neck| > 0.
 */
struct Bottleneck {
    std::vector<int> bottle;
    std::vector<int> neck;
    int deficiency = 0;
};

/** The minimax bottleneck, absent when g is cycle coverable.
 *
 *  Its bottle is exactly null_nodes(g), its neck that set's forward set,
 *  and its deficiency equals size(g) - structural_rank(g), the largest
 *  deficiency any bottleneck of g attains.
 */
std::optional<Bottleneck> minimax_bottleneck(const StructureGraph& g);

struct BottleneckQuery {
    bool exists = false;
    std::optional<Bottleneck> witness;
};

/** Whether g contains an m-bottleneck (true exactly when m is at most the
 *  total deficiency). For size(g) <= 20 a witness is located by subset
 *  search in ascending bitmask order; for larger graphs a witness is
 *  reported only at m == deficiency(g), where the minimax bottleneck
 *  serves. Requires m >= 1.
 */
BottleneckQuery bottleneck_exists(const StructureGraph& g, int m);

/** Every single edge whose addition raises the structural rank by one.
 *
 *  Candidates run from minimax bottle nodes to nodes outside the minimax
 *  neck; each candidate is kept only if re-running the matching confirms
 *  the deficiency drops (a larger bottleneck elsewhere can veto one).
 *  Sorted by (from, to). Throws std::invalid_argument on coverable input.
 */
std::vector<Edge> single_edge_fixes(const StructureGraph& g);

/// Edge additions, in order, plus the deficiency before and after each.
struct RepairPlan {
    std::vector<Edge> additions;
    std::vector<int> deficiency_trace;  // length additions.size() + 1, ends at 0
};

/** Greedy repair: while the deficiency is positive, add the fix with the
 *  lexicographically smallest labels (source first). Each step lowers the
 *  deficiency by exactly one, so the plan has deficiency(g) additions.
 */
RepairPlan repair(const StructureGraph& g);

/// Minimax bottleneck of transpose(g): the backward-time diagnosis.
std::optional<Bottleneck> backward_bottleneck(const StructureGraph& g);

}  // namespace strucnet
