#include "edgeideal/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_set>

#include "edgeideal/error.hpp"

namespace edgeideal {

Graph::Graph(std::vector<std::string> names) : names_(std::move(names)), adjacency_(names_.size()) {
    if (names_.size() > static_cast<std::size_t>(kMaxVertices)) {
        throw ResourceError("graph has " + std::to_string(names_.size()) + " vertices; limit is " +
                            std::to_string(kMaxVertices));
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
        if (!seen.insert(n).second) throw DomainError("duplicate vertex name '" + n + "'");
    }
}

Graph::Graph(std::vector<std::string> names, std::span<const std::pair<int, int>> edges)
    : Graph(std::move(names)) {
    const int n = vertex_count();
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("loop at vertex '" + names_[static_cast<std::size_t>(u)] + "'");
        adjacency_[static_cast<std::size_t>(u)].insert(v);
        adjacency_[static_cast<std::size_t>(v)].insert(u);
    }
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto s : adjacency_) twice += static_cast<std::size_t>(s.size());
    return twice / 2;
}

std::optional<int> Graph::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

int Graph::require_index(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw DomainError("unknown vertex '" + std::string(name) + "'");
}

VertexSet Graph::vertex_set(std::span<const std::string> names) const {
    VertexSet s;
    for (const auto& n : names) s.insert(require_index(n));
    return s;
}

VertexSet Graph::vertex_set(std::initializer_list<std::string_view> names) const {
    VertexSet s;
    for (auto n : names) s.insert(require_index(n));
    return s;
}

std::vector<std::string> Graph::names_of(VertexSet s) const {
    std::vector<std::string> out;
    for (int v : s) out.push_back(name(v));
    return out;
}

bool Graph::is_independent(VertexSet s) const {
    for (int v : s) {
        if (neighbors(v).intersects(s)) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u) {
        for (int v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::induced(VertexSet keep) const {
    std::vector<std::string> names;
    for (int v : keep) names.push_back(name(v));
    Graph h(std::move(names));
    int pos = 0;
    for (int v : keep) {
        h.adjacency_[static_cast<std::size_t>(pos++)] = compress(neighbors(v) & keep, keep);
    }
    return h;
}

FerrersPartition::FerrersPartition(std::vector<int> lambda) : lambda_(std::move(lambda)) {
    if (lambda_.empty()) throw DomainError("Ferrers partition must be nonempty");
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        if (lambda_[i] <= 0) throw DomainError("Ferrers partition entries must be positive");
        if (i > 0 && lambda_[i] > lambda_[i - 1]) throw DomainError("Ferrers partition must be weakly decreasing");
    }
    jumps_.push_back(1);
    for (int i = 2; i <= parts(); ++i) {
        if (at(i) < at(i - 1)) jumps_.push_back(i);
    }
    jumps_.push_back(parts() + 1);
}

namespace {

void require_subset(const Graph& g, VertexSet s) {
    if (!g.vertices().contains(s)) throw DomainError("vertex set is not contained in V(G)");
}

}  // namespace

std::optional<BipartitePartition> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (colour[static_cast<std::size_t>(start)] != -1) continue;
        colour[static_cast<std::size_t>(start)] = 0;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : g.neighbors(u)) {
                auto& cv = colour[static_cast<std::size_t>(v)];
                const int want = 1 - colour[static_cast<std::size_t>(u)];
                if (cv == -1) {
                    cv = want;
                    queue.push(v);
                } else if (cv != want) {
                    return std::nullopt;
                }
            }
        }
    }
    BipartitePartition p;
    for (int v = 0; v < n; ++v) (colour[static_cast<std::size_t>(v)] == 0 ? p.side_x : p.side_y).push_back(v);
    return p;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
    require_subset(g, s);
    VertexSet out = s;
    for (int v : s) out |= g.neighbors(v);
    return out;
}

Graph delete_closed_neighborhood(const Graph& g, VertexSet s) {
    return g.induced(g.vertices() - closed_neighborhood(g, s));
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    // Bron-Kerbosch with pivoting on the complement graph.
    const VertexSet all = g.vertices();
    std::vector<VertexSet> out;
    std::function<void(VertexSet, VertexSet, VertexSet)> expand = [&](VertexSet r, VertexSet p, VertexSet x) {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        // non-neighbours in the complement are the neighbours in G
        const int pivot = (p | x).min();
        const VertexSet pivot_comp_nbrs = all - g.neighbors(pivot) - VertexSet::single(pivot);
        for (int v : p - pivot_comp_nbrs) {
            const VertexSet comp_nbrs = all - g.neighbors(v) - VertexSet::single(v);
            expand(r | VertexSet::single(v), p & comp_nbrs, x & comp_nbrs);
            p.erase(v);
            x.insert(v);
        }
    };
    expand(VertexSet{}, all, VertexSet{});
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
    std::vector<VertexSet> covers;
    for (auto s : maximal_independent_sets(g)) covers.push_back(g.vertices() - s);
    std::sort(covers.begin(), covers.end(), size_lex_less);
    return covers;
}

bool is_unmixed(const Graph& g) {
    const auto covers = minimal_vertex_covers(g);
    return std::all_of(covers.begin(), covers.end(), [&](VertexSet c) { return c.size() == covers.front().size(); });
}

std::optional<int> min_positive_degree(const Graph& g) {
    std::optional<int> best;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d > 0 && (!best || d < *best)) best = d;
    }
    return best;
}

bool is_pure_order(const Graph& g, const PureOrder& order) {
    const auto& p = order.pairing;
    const std::size_t n = p.size();
    VertexSet xs, ys;
    for (auto [x, y] : p) {
        if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count()) return false;
        if (!g.adjacent(x, y) || xs.contains(x) || ys.contains(y) || xs.contains(y) || ys.contains(x)) return false;
        xs.insert(x);
        ys.insert(y);
    }
    if ((xs | ys) != g.vertices()) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !g.adjacent(p[i].first, p[j].second)) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (g.adjacent(p[j].first, p[k].second) && !g.adjacent(p[i].first, p[k].second)) return false;
            }
        }
    }
    return true;
}

std::optional<PureOrder> find_pure_order(const Graph& g) {
    auto sides = bipartition(g);
    if (!sides) throw DomainError("find_pure_order requires a bipartite graph");
    return find_pure_order(g, *sides);
}

std::optional<PureOrder> find_pure_order(const Graph& g, const BipartitePartition& sides) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) throw DomainError("find_pure_order requires a graph without isolated vertices");
    }
    for (int x : sides.side_x) {
        if (g.neighbors(x).intersects(sides.x_set())) throw DomainError("side assignment is not a bipartition");
    }
    if (sides.side_x.size() != sides.side_y.size()) return std::nullopt;
    const std::size_t n = sides.side_x.size();
    std::vector<int> match(n, -1);  // match[i] = partner of side_x[i]
    VertexSet used;

    // Transitivity over triples among the first last+1 pairs that involve `last`.
    auto consistent = [&](std::size_t last) {
        for (std::size_t i = 0; i <= last; ++i) {
            for (std::size_t j = 0; j <= last; ++j) {
                if (j == i || !g.adjacent(sides.side_x[i], match[j])) continue;
                for (std::size_t k = 0; k <= last; ++k) {
                    if (k == i || k == j) continue;
                    if (i != last && j != last && k != last) continue;
                    if (g.adjacent(sides.side_x[j], match[k]) && !g.adjacent(sides.side_x[i], match[k])) return false;
                }
            }
        }
        return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t i) {
        if (i == n) return true;
        for (int y : sides.side_y) {
            if (used.contains(y) || !g.adjacent(sides.side_x[i], y)) continue;
            match[i] = y;
            used.insert(y);
            if (consistent(i) && search(i + 1)) return true;
            used.erase(y);
        }
        match[i] = -1;
        return false;
    };
    if (!search(0)) return std::nullopt;
    PureOrder order;
    for (std::size_t i = 0; i < n; ++i) order.pairing.emplace_back(sides.side_x[i], match[i]);
    return order;
}

std::pair<Graph, BipartitePartition> ferrers_graph(const FerrersPartition& lambda) {
    const int n = lambda.parts();
    const int m = lambda.largest();
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int j = 1; j <= m; ++j) names.push_back("y" + std::to_string(j));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= lambda.at(i); ++j) edges.emplace_back(i - 1, n + j - 1);
    }
    BipartitePartition sides;
    for (int i = 0; i < n; ++i) sides.side_x.push_back(i);
    for (int j = 0; j < m; ++j) sides.side_y.push_back(n + j);
    return {Graph(std::move(names), edges), std::move(sides)};
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("complete_bipartite requires positive side sizes");
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    for (int j = 1; j <= n; ++j) names.push_back("y" + std::to_string(j));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    }
    return Graph(std::move(names), edges);
}

}  // namespace edgeideal
