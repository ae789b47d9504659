#pragma once

#include <optional>
#include <vector>

#include "strucnet/graph.hpp"

namespace strucnet {

/// Bipartite matching between pattern rows and columns.
struct Matching {
    std::vector<Position> pairs;  // sorted by row; rows and cols each used once
    int size() const { return static_cast<int>(pairs.size()); }
};

/** Maximum bipartite matching of allowed positions (Hopcroft-Karp).
 *  Deterministic: rows are scanned in ascending order and each row tries
 *  candidate columns in ascending order, so equal inputs give equal pairs.
 */
Matching max_matching(const StructurePattern& p);

/// Structural rank of a pattern: the size of a maximum matching. This is
/// the rank reached by almost every matrix carrying the pattern.
int structural_rank(const StructurePattern& p);

/// Structural rank of pattern_of(g).
int structural_rank(const StructureGraph& g);

/// size(g) - structural_rank(g); zero exactly when g is cycle coverable.
int deficiency(const StructureGraph& g);

/// Disjoint directed cycles covering every node once. Each cycle lists its
/// nodes in traversal order; a self-loop is a one-node cycle.
struct CycleCover {
    std::vector<std::vector<int>> cycles;
};

/** A cycle cover of g, or absent when structural_rank(g) < size(g).
 *
 *  Built from a perfect matching of pattern_of(g): the matched pair (i, j)
 *  says j precedes i, so reading the matching as a permutation and
 *  splitting it into orbits yields the cycles. Cycles start at their
 *  smallest node and are listed by that node, ascending.
 */
std::optional<CycleCover> cycle_cover(const StructureGraph& g);

/** Nodes whose coordinate is nonzero in some kernel vector of almost
 *  every matrix carrying pattern_of(g); empty when g is coverable.
 *
 *  Combinatorial rule: with positive deficiency, node j qualifies exactly
 *  when deleting column j leaves the structural rank unchanged (the
 *  column is then generically a combination of the remaining ones).
 */
std::vector<int> null_nodes(const StructureGraph& g);

}  // namespace strucnet
