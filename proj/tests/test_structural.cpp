#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "strucnet/structural.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace strucnet;
using testutil::fixture;

TEST_CASE("structural rank and deficiency of every fixture") {
    const std::map<std::string, std::pair<int, int>> expected = {
        // name -> {rank, deficiency}
        {"fig1", {2, 1}},  {"fig2", {4, 0}},  {"fig3a", {4, 1}}, {"fig3b", {5, 0}},
        {"fig5a", {1, 0}}, {"fig5b", {2, 0}}, {"fig5c", {4, 1}}, {"fig5d", {10, 3}},
        {"fig5e", {3, 4}}, {"fig6a", {20, 6}}, {"fig7a", {4, 0}}, {"fig7b", {4, 1}},
        {"example2", {4, 1}},
    };
    for (const auto& [name, value] : expected) {
        const StructureGraph g = fixture(name);
        CAPTURE(name);
        CHECK(structural_rank(g) == value.first);
        CHECK(deficiency(g) == value.second);
    }
}

TEST_CASE("max_matching returns a valid deterministic matching") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 80; ++rep) {
        const StructureGraph g = oracle::random_graph(rng);
        const StructurePattern p = pattern_of(g);
        const Matching m1 = max_matching(p);
        const Matching m2 = max_matching(p);
        CHECK(m1.pairs == m2.pairs);

        std::set<int> rows, cols;
        for (auto [i, j] : m1.pairs) {
            CHECK(p.is_allowed(i, j));
            CHECK(rows.insert(i).second);
            CHECK(cols.insert(j).second);
        }
        CHECK(std::is_sorted(m1.pairs.begin(), m1.pairs.end()));
    }
}

TEST_CASE("matching size is invariant under row and column permutations") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 60; ++rep) {
        const StructureGraph g = oracle::random_graph(rng);
        const StructurePattern p = pattern_of(g);
        const int n = p.rows();
        std::vector<int> rperm(static_cast<std::size_t>(n)), cperm(static_cast<std::size_t>(n));
        std::iota(rperm.begin(), rperm.end(), 0);
        std::iota(cperm.begin(), cperm.end(), 0);
        std::shuffle(rperm.begin(), rperm.end(), rng);
        std::shuffle(cperm.begin(), cperm.end(), rng);
        std::vector<Position> moved;
        for (auto [i, j] : p.allowed())
            moved.emplace_back(rperm[static_cast<std::size_t>(i)], cperm[static_cast<std::size_t>(j)]);
        CHECK(structural_rank(StructurePattern(n, n, std::move(moved))) == structural_rank(p));
    }
}

TEST_CASE("rank agrees with its transpose and with brute-force search") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 300; ++rep) {
        const StructureGraph g = oracle::random_graph(rng, 0, 8);
        const StructurePattern p = pattern_of(g);
        const int rank = structural_rank(p);
        CHECK(rank == structural_rank(transpose(g)));
        CHECK(rank == oracle::perm_rank(p));
        CHECK(rank == oracle::bitmask_rank(p));
    }
    // The bitmask oracle stretches past the permutation oracle's range.
    std::mt19937_64 rng2(43);
    for (int rep = 0; rep < 40; ++rep) {
        const StructureGraph g = oracle::random_graph(rng2, 0, 14);
        CHECK(structural_rank(g) == oracle::bitmask_rank(pattern_of(g)));
    }
}

TEST_CASE("cycle cover exists exactly when the rank is full") {
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 200; ++rep) {
        const StructureGraph g = oracle::random_graph(rng, 0, 12);
        const auto cover = cycle_cover(g);
        const bool full = structural_rank(g) == g.size();
        CHECK(cover.has_value() == full);
        CHECK(cover.has_value() == oracle::cover_exists(g));
        if (cover) CHECK(oracle::check_cover(g, cover->cycles) == "");
    }
}

TEST_CASE("cycle covers of the coverable fixtures") {
    for (const auto& name : testutil::graph_fixture_names()) {
        const StructureGraph g = fixture(name);
        const auto cover = cycle_cover(g);
        CAPTURE(name);
        CHECK(cover.has_value() == (deficiency(g) == 0));
        if (!cover) continue;
        CHECK(oracle::check_cover(g, cover->cycles) == "");
        // Each cycle starts at its smallest node; cycles are listed by
        // ascending start node. Together with determinism this freezes the
        // output, which the regression values below rely on.
        int prev_start = -1;
        for (const auto& cycle : cover->cycles) {
            CHECK(*std::min_element(cycle.begin(), cycle.end()) == cycle.front());
            CHECK(cycle.front() > prev_start);
            prev_start = cycle.front();
        }
    }

    auto cycles_of = [](const StructureGraph& g) { return cycle_cover(g)->cycles; };
    CHECK(cycles_of(fixture("fig5a")) == std::vector<std::vector<int>>{{0}});
    CHECK(cycles_of(fixture("fig5b")) == std::vector<std::vector<int>>{{0, 1}});
    CHECK(cycles_of(fixture("fig2")) == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    CHECK(cycles_of(fixture("fig3b")) == std::vector<std::vector<int>>{{0, 3, 2, 1, 4}});
}

TEST_CASE("null nodes of the fixtures") {
    auto nulls_by_label = [](const char* name, const std::vector<std::string>& labels) {
        const StructureGraph g = fixture(name);
        CAPTURE(name);
        CHECK(null_nodes(g) == oracle::ids(g, labels));
    };
    nulls_by_label("fig1", {"1", "2"});
    nulls_by_label("fig2", {});
    nulls_by_label("fig3a", {"1", "2", "3"});
    nulls_by_label("example2", {"1", "2", "3"});
    nulls_by_label("fig5d", {"1", "2", "3", "4", "8", "9", "10", "11"});
    nulls_by_label("fig5e", {"1", "2", "3", "4", "5", "6", "7"});
    nulls_by_label("fig7b", {"1", "2"});
    nulls_by_label("fig6a",
                   {"6", "7", "10", "12", "14", "20", "21", "22", "23", "24", "25", "26"});
}

TEST_CASE("null node properties") {
    // A node with no outgoing edge has an identically zero column, which is
    // null whenever the graph is deficient at all.
    const StructureGraph chain({"1", "2", "3"}, {{0, 1}});
    CHECK(null_nodes(chain) == std::vector<int>{1, 2});

    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 200; ++rep) {
        const StructureGraph g = oracle::random_graph(rng, 0, 8);
        const auto nulls = null_nodes(g);
        CAPTURE(rep);
        CHECK(nulls == oracle::null_nodes(g));
        if (deficiency(g) == 0) {
            CHECK(nulls.empty());
            continue;
        }
        const StructurePattern p = pattern_of(g);
        const int rank = structural_rank(p);
        for (int j : nulls) CHECK(structural_rank(p.without_column(j)) == rank);
        for (int v = 0; v < g.size(); ++v) {
            const bool has_out = std::any_of(g.edges().begin(), g.edges().end(),
                                             [v](Edge e) { return e.first == v; });
            if (!has_out) CHECK(std::binary_search(nulls.begin(), nulls.end(), v));
        }
    }
}

TEST_CASE("layered graphs: parity bound and the profiles behind it") {
    // For strictly layered graphs the odd/even layer split bounds the
    // deficiency from below: the odd layers' forward set is exactly the even
    // layers. The bound is NOT always attained - Hall's condition can fail
    // inside a four-layer profile, e.g. (2,1,1,2) pinches through the two
    // middle nodes - so only profiles of up to three layers get an equality
    // check here.
    std::vector<std::vector<int>> profiles;
    std::vector<int> cur;
    auto gen = [&](auto&& self) -> void {
        if (!cur.empty()) profiles.push_back(cur);
        if (cur.size() == 4) return;
        for (int k = 1; k <= 4; ++k) {
            cur.push_back(k);
            self(self);
            cur.pop_back();
        }
    };
    gen(gen);
    CHECK(profiles.size() == 4 + 16 + 64 + 256);

    for (const auto& profile : profiles) {
        const StructureGraph g = oracle::layered_graph(profile);
        int odd = 0, even = 0;
        for (std::size_t k = 0; k < profile.size(); ++k)
            (k % 2 == 0 ? odd : even) += profile[k];
        const int m = deficiency(g);
        std::string tag;
        for (int k : profile) tag += std::to_string(k) + " ";
        CAPTURE(tag);
        CHECK(m >= std::abs(odd - even));
        if (m == 0) CHECK(odd == even);
        if (profile.size() <= 3) CHECK(m == std::abs(odd - even));
        if (g.size() <= 13) CHECK(structural_rank(g) == oracle::bitmask_rank(pattern_of(g)));
    }

    CHECK(deficiency(oracle::layered_graph({4, 3, 4, 2})) == 3);  // odd 8, even 5
    // Four-layer profiles where the bound is strict:
    CHECK(deficiency(oracle::layered_graph({2, 1, 1, 2})) == 2);  // bound 0
    CHECK(deficiency(oracle::layered_graph({4, 2, 1, 3})) == 4);  // bound 0
    CHECK(deficiency(oracle::layered_graph({4, 1, 1, 2})) == 4);  // bound 2
}
