#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strucnet {

/// Directed edge (from, to), 0-based node indices. An edge u -> v means
/// "the equation attached to v may depend on the variable attached to u".
using Edge = std::pair<int, int>;

/// Position (row, col) in a structure pattern.
using Position = std::pair<int, int>;

/** Immutable directed dependency graph over labelled nodes.
 *
 *  Node identity is the string label; indices follow construction order.
 *  The edge set is kept sorted and duplicate-free; self-loops are allowed.
 */
class StructureGraph {
public:
    StructureGraph(std::vector<std::string> labels, std::vector<Edge> edges);

    int size() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int from, int to) const;

    /// Index of `label`, or -1 when the graph has no such node.
    int index_of(std::string_view label) const;
    const std::string& label(int v) const { return labels_.at(v); }

    /// Copy of this graph with one extra edge. Throws if the edge exists.
    StructureGraph with_edge(Edge e) const;

    bool operator==(const StructureGraph&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;  // sorted by (from, to)
};

/** Set of matrix positions where a structured matrix may be nonzero.
 *  All other entries are identically zero.
 */
class StructurePattern {
public:
    StructurePattern(int rows, int cols, std::vector<Position> allowed);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Position>& allowed() const { return allowed_; }

    bool is_allowed(int i, int j) const;

    /// Same shape with every position in column j dropped. Keeping the
    /// column (as an all-zero one) leaves ranks and indices comparable.
    StructurePattern without_column(int j) const;

    StructurePattern transposed() const;

    bool operator==(const StructurePattern&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Position> allowed_;  // sorted by (row, col)
};

/// Square pattern of g: position (i, j) is allowed iff g has the edge j -> i.
StructurePattern pattern_of(const StructureGraph& g);

/// Graph with every edge reversed; labels unchanged.
StructureGraph transpose(const StructureGraph& g);

/** Rewrites a shared subexpression as its own node.
 *
 *  A new node `new_label` is appended with incoming edges from every
 *  support node, a self-loop, and outgoing edges to every target; the
 *  direct support -> target edges are removed. Every target must
 *  currently receive an edge from every support node.
 */
StructureGraph expand_shared(const StructureGraph& g,
                             const std::vector<int>& support,
                             const std::vector<int>& targets,
                             const std::string& new_label);

/// All nodes reachable from `bottle` by one edge (the set written B->).
std::vector<int> forward_set(const StructureGraph& g, const std::vector<int>& bottle);

}  // namespace strucnet
