#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgeideal/vertex_set.hpp"

namespace edgeideal {

/// Finite simple undirected graph with named vertices.
///
/// Vertices are identified by name; the index of a vertex is its position in
/// `names()`. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on the given names.
    explicit Graph(std::vector<std::string> names);

    /// Throws DomainError on duplicate names, loops, or out-of-range endpoints.
    /// Repeated edges collapse.
    Graph(std::vector<std::string> names, std::span<const std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    std::size_t edge_count() const;
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }

    std::optional<int> index_of(std::string_view name) const;
    /// Throws DomainError for unknown names.
    int require_index(std::string_view name) const;
    VertexSet vertex_set(std::span<const std::string> names) const;
    VertexSet vertex_set(std::initializer_list<std::string_view> names) const;
    std::vector<std::string> names_of(VertexSet s) const;

    VertexSet vertices() const { return VertexSet::range(vertex_count()); }
    VertexSet neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
    int degree(int v) const { return neighbors(v).size(); }
    bool is_independent(VertexSet s) const;

    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Induced subgraph on `keep`; vertices keep their names and relative order.
    Graph induced(VertexSet keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> names_;
    std::vector<VertexSet> adjacency_;
};

struct BipartitePartition {
    std::vector<int> side_x;
    std::vector<int> side_y;

    VertexSet x_set() const { return VertexSet::of(side_x); }
    VertexSet y_set() const { return VertexSet::of(side_y); }
    BipartitePartition swapped() const { return {side_y, side_x}; }

    friend bool operator==(const BipartitePartition&, const BipartitePartition&) = default;
};

/// Matched pairs (x, y) of vertex indices satisfying both pure-order conditions.
struct PureOrder {
    std::vector<std::pair<int, int>> pairing;

    friend bool operator==(const PureOrder&, const PureOrder&) = default;
};

/// Weakly decreasing sequence of positive integers.
class FerrersPartition {
public:
    /// Throws DomainError unless nonempty, positive and weakly decreasing.
    explicit FerrersPartition(std::vector<int> lambda);

    const std::vector<int>& lambda() const { return lambda_; }
    int parts() const { return static_cast<int>(lambda_.size()); }
    int largest() const { return lambda_.front(); }
    /// lambda_i for 1-based i, with lambda_{n+1} = 0.
    int at(int i) const { return i == parts() + 1 ? 0 : lambda_.at(static_cast<std::size_t>(i - 1)); }
    /// 1-based jump indices c_1 = 1 < ... < c_k followed by the sentinel n + 1.
    const std::vector<int>& jumps() const { return jumps_; }

private:
    std::vector<int> lambda_;
    std::vector<int> jumps_;
};

/// 2-colouring per connected component (the side holding the component's
/// smallest vertex is side_x); nullopt iff G has an odd cycle.
std::optional<BipartitePartition> bipartition(const Graph& g);

/// Throws DomainError if `s` names a vertex outside G.
VertexSet closed_neighborhood(const Graph& g, VertexSet s);

/// Induced subgraph on V(G) minus N[S]; isolated survivors are kept.
Graph delete_closed_neighborhood(const Graph& g, VertexSet s);

/// Maximal independent sets, sorted by size then lexicographically.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

/// Complements of the maximal independent sets, sorted by size then lexicographically.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);

bool is_unmixed(const Graph& g);

/// Degree of the least-degree vertex among those with positive degree.
std::optional<int> min_positive_degree(const Graph& g);

/// Checks matching and transitivity conditions of a candidate pure order.
bool is_pure_order(const Graph& g, const PureOrder& order);

/// Backtracking search over perfect matchings between the two sides of
/// bipartition(G), lexicographically least first. Requires a bipartite graph
/// with no isolated vertex (DomainError otherwise).
std::optional<PureOrder> find_pure_order(const Graph& g);

/// Same search with a caller-supplied side assignment.
std::optional<PureOrder> find_pure_order(const Graph& g, const BipartitePartition& sides);

/// Vertices x1..xn, y1..ym (m = lambda_1) with x_i ~ y_j iff j <= lambda_i.
std::pair<Graph, BipartitePartition> ferrers_graph(const FerrersPartition& lambda);

/// Vertices x1..xm, y1..yn with every cross pair adjacent.
Graph complete_bipartite(int m, int n);

}  // namespace edgeideal
