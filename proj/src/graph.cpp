#include "strucnet/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace strucnet {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

StructureGraph::StructureGraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
    require(!labels_.empty(), "graph needs at least one node");
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_) {
        require(!l.empty(), "node labels must be nonempty");
        require(seen.insert(l).second, "duplicate node label");
    }
    const int n = size();
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        auto [from, to] = edges_[k];
        require(from >= 0 && from < n && to >= 0 && to < n, "edge endpoint out of range");
        require(k == 0 || edges_[k] != edges_[k - 1], "duplicate edge");
    }
}

bool StructureGraph::has_edge(int from, int to) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

int StructureGraph::index_of(std::string_view label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

StructureGraph StructureGraph::with_edge(Edge e) const {
    if (has_edge(e.first, e.second)) throw std::invalid_argument("edge already present");
    auto edges = edges_;
    edges.push_back(e);
    return StructureGraph(labels_, std::move(edges));
}

StructurePattern::StructurePattern(int rows, int cols, std::vector<Position> allowed)
    : rows_(rows), cols_(cols), allowed_(std::move(allowed)) {
    require(rows_ >= 0 && cols_ >= 0, "pattern shape must be nonnegative");
    std::sort(allowed_.begin(), allowed_.end());
    allowed_.erase(std::unique(allowed_.begin(), allowed_.end()), allowed_.end());
    for (auto [i, j] : allowed_)
        require(i >= 0 && i < rows_ && j >= 0 && j < cols_, "pattern position out of range");
}

bool StructurePattern::is_allowed(int i, int j) const {
    return std::binary_search(allowed_.begin(), allowed_.end(), Position{i, j});
}

StructurePattern StructurePattern::without_column(int j) const {
    if (j < 0 || j >= cols_) throw std::invalid_argument("column index out of range");
    std::vector<Position> kept;
    kept.reserve(allowed_.size());
    for (auto p : allowed_)
        if (p.second != j) kept.push_back(p);
    return StructurePattern(rows_, cols_, std::move(kept));
}

StructurePattern StructurePattern::transposed() const {
    std::vector<Position> flipped;
    flipped.reserve(allowed_.size());
    for (auto [i, j] : allowed_) flipped.emplace_back(j, i);
    return StructurePattern(cols_, rows_, std::move(flipped));
}

StructurePattern pattern_of(const StructureGraph& g) {
    std::vector<Position> allowed;
    allowed.reserve(g.edges().size());
    for (auto [from, to] : g.edges()) allowed.emplace_back(to, from);
    return StructurePattern(g.size(), g.size(), std::move(allowed));
}

StructureGraph transpose(const StructureGraph& g) {
    std::vector<Edge> reversed;
    reversed.reserve(g.edges().size());
    for (auto [from, to] : g.edges()) reversed.emplace_back(to, from);
    return StructureGraph(g.labels(), std::move(reversed));
}

StructureGraph expand_shared(const StructureGraph& g, const std::vector<int>& support,
                             const std::vector<int>& targets, const std::string& new_label) {
    const int n = g.size();
    auto sup = sorted_unique(support);
    auto tgt = sorted_unique(targets);
    require(!tgt.empty(), "expand_shared needs at least one target");
    require(!new_label.empty(), "new label must be nonempty");
    require(g.index_of(new_label) < 0, "new label already in use");
    for (int v : sup) require(v >= 0 && v < n, "support node out of range");
    for (int v : tgt) require(v >= 0 && v < n, "target node out of range");
    for (int t : tgt)
        for (int s : sup)
            require(g.has_edge(s, t), "every target must receive an edge from every support node");

    auto labels = g.labels();
    labels.push_back(new_label);
    const int fresh = n;

    std::set<int> tgt_set(tgt.begin(), tgt.end());
    std::set<int> sup_set(sup.begin(), sup.end());
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (!(sup_set.count(e.first) && tgt_set.count(e.second))) edges.push_back(e);
    for (int s : sup) edges.emplace_back(s, fresh);
    edges.emplace_back(fresh, fresh);
    for (int t : tgt) edges.emplace_back(fresh, t);
    return StructureGraph(std::move(labels), std::move(edges));
}

std::vector<int> forward_set(const StructureGraph& g, const std::vector<int>& bottle) {
    const int n = g.size();
    std::vector<char> in_bottle(n, 0);
    for (int v : bottle) {
        require(v >= 0 && v < n, "bottle node out of range");
        in_bottle[v] = 1;
    }
    std::vector<char> hit(n, 0);
    for (auto [from, to] : g.edges())
        if (in_bottle[from]) hit[to] = 1;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (hit[v]) out.push_back(v);
    return out;
}

}  // namespace strucnet
