#include <doctest.h>

#include <map>
#include <random>

#include "edgeideal/enumerate.hpp"
#include "edgeideal/error.hpp"
#include "support.hpp"

using namespace edgeideal;

namespace {

bool is_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    int components = n;
    for (auto [u, v] : edges) {
        const int a = find(u), b = find(v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

bool two_colorable(int n, const std::vector<std::pair<int, int>>& edges) {
    for (std::uint64_t coloring = 0; coloring < (std::uint64_t{1} << n); ++coloring) {
        bool ok = true;
        for (auto [u, v] : edges) ok = ok && (((coloring >> u) ^ (coloring >> v)) & 1U);
        if (ok) return true;
    }
    return false;
}

// Isomorphism classes of connected bipartite graphs on exactly n vertices, by brute force.
std::set<std::uint64_t> brute_classes(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::set<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            if (mask >> e & 1U) edges.push_back(pairs[e]);
        }
        if (is_connected(n, edges) && two_colorable(n, edges)) out.insert(support::brute_canonical(n, edges));
    }
    return out;
}

bool brute_perfect_matching(const Graph& g) {
    const int n = g.vertex_count();
    if (n % 2) return false;
    const auto edges = g.edges();
    auto rec = [&](auto&& self, VertexSet used) -> bool {
        if (used.size() == n) return true;
        int v = 0;
        while (used.contains(v)) ++v;
        for (auto [a, b] : edges) {
            if ((a == v && !used.contains(b)) || (b == v && !used.contains(a))) {
                if (self(self, used | VertexSet::single(a) | VertexSet::single(b))) return true;
            }
        }
        return false;
    };
    return rec(rec, VertexSet{});
}

}  // namespace

TEST_CASE("counts of connected bipartite graphs") {
    const std::map<int, int> expected{{2, 1}, {3, 1}, {4, 3}, {5, 5}, {6, 17}, {7, 44}, {8, 182}, {9, 730}, {10, 4032}};
    std::map<int, int> counts;
    for (const auto& e : enumerate_bipartite(10)) ++counts[e.graph.vertex_count()];
    CHECK(counts == expected);
    CHECK(enumerate_bipartite(8).size() == 253);
    CHECK(enumerate_bipartite(1).empty());
    CHECK_THROWS_AS(enumerate_bipartite(kMaxEnumeratedVertices + 1), ResourceError);
}

TEST_CASE("one graph per isomorphism class") {
    for (int n = 2; n <= 6; ++n) {
        std::set<std::uint64_t> seen;
        std::size_t listed = 0;
        for (const auto& e : enumerate_bipartite(n)) {
            if (e.graph.vertex_count() != n) continue;
            ++listed;
            seen.insert(support::brute_canonical(n, e.graph.edges()));
        }
        CHECK(listed == seen.size());
        CHECK(seen == brute_classes(n));
    }
}

TEST_CASE("sides and names") {
    for (const auto& e : enumerate_bipartite(9)) {
        const auto& g = e.graph;
        const auto a = e.sides.side_x.size();
        const auto b = e.sides.side_y.size();
        CHECK(a <= b);
        CHECK(a + b == static_cast<std::size_t>(g.vertex_count()));
        for (std::size_t i = 0; i < a; ++i) CHECK(g.name(e.sides.side_x[i]) == "x" + std::to_string(i + 1));
        for (std::size_t j = 0; j < b; ++j) CHECK(g.name(e.sides.side_y[j]) == "y" + std::to_string(j + 1));
        for (auto [u, v] : g.edges()) CHECK(g.name(u)[0] != g.name(v)[0]);
        CHECK(is_connected(g.vertex_count(), g.edges()));
    }
}

TEST_CASE("filters") {
    const auto all = enumerate_bipartite(8);
    std::size_t unmixed = 0, matched = 0;
    for (const auto& e : all) {
        unmixed += is_unmixed(e.graph) ? 1 : 0;
        const bool pm = brute_perfect_matching(e.graph);
        CHECK(has_perfect_matching(e.graph, e.sides) == pm);
        matched += pm ? 1 : 0;
    }
    CHECK(enumerate_bipartite(8, {false, true, false}).size() == unmixed);
    CHECK(enumerate_bipartite(8, {false, false, true}).size() == matched);
    CHECK(enumerate_bipartite(8, {true, false, false}).size() == all.size());
    for (const auto& e : enumerate_bipartite(8, {false, true, false})) CHECK(is_unmixed(e.graph));

    std::size_t visited = 0;
    for_each_bipartite(7, {}, [&](const EnumeratedGraph&) { ++visited; });
    CHECK(visited == 1 + 1 + 3 + 5 + 17 + 44);
}

TEST_CASE("all complexes") {
    const std::vector<std::size_t> expected{1, 2, 5, 19, 167, 7580};
    for (int n = 0; n <= 5; ++n) {
        const auto list = all_complexes(n);
        CHECK(list.size() == expected[static_cast<std::size_t>(n)]);
        std::set<std::vector<std::uint64_t>> distinct;
        for (const auto& d : list) {
            CHECK_FALSE(d.is_void());
            CHECK(d.ground_size() == n);
            std::vector<std::uint64_t> f;
            for (auto s : d.facets()) f.push_back(s.bits());
            distinct.insert(f);
        }
        CHECK(distinct.size() == list.size());
    }
}

TEST_CASE("random generators") {
    std::mt19937_64 a(99), b(99);
    for (int i = 0; i < 50; ++i) {
        const auto c1 = random_complex(a, 7, i % 2 == 0);
        const auto c2 = random_complex(b, 7, i % 2 == 0);
        CHECK(c1 == c2);
        CHECK_FALSE(c1.is_void());
        CHECK(static_cast<int>(c1.facets().size()) <= 8);
        if (i % 2 == 0) CHECK(is_pure(c1));
    }
    std::mt19937_64 r(5);
    const Graph g = random_bipartite(r, 3, 4, 1.0);
    CHECK(g.vertex_count() == 7);
    CHECK(g.edges().size() == 12);
    CHECK(random_bipartite(r, 3, 4, 0.0).edges().empty());
}
