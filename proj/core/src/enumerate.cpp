#include "edgeideal/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "edgeideal/error.hpp"

namespace edgeideal {

namespace {

using Columns = std::vector<std::uint8_t>;

// Image of every row mask under every permutation of a rows.
std::vector<std::array<std::uint8_t, 64>> permutation_tables(int a) {
    std::vector<int> perm(static_cast<std::size_t>(a));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::array<std::uint8_t, 64>> tables;
    do {
        std::array<std::uint8_t, 64> t{};
        for (int mask = 0; mask < (1 << a); ++mask) {
            int image = 0;
            for (int r = 0; r < a; ++r) {
                if (mask >> r & 1) image |= 1 << perm[static_cast<std::size_t>(r)];
            }
            t[static_cast<std::size_t>(mask)] = static_cast<std::uint8_t>(image);
        }
        tables.push_back(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables;
}

bool connected(int a, const Columns& cols) {
    const int b = static_cast<int>(cols.size());
    std::uint32_t rows_seen = 1, cols_seen = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int j = 0; j < b; ++j) {
            if (!(cols_seen >> j & 1) && (cols[static_cast<std::size_t>(j)] & rows_seen)) {
                cols_seen |= 1u << j;
                rows_seen |= cols[static_cast<std::size_t>(j)];
                grew = true;
            }
        }
    }
    return rows_seen == (1u << a) - 1 && cols_seen == (1u << b) - 1;
}

// True when no row permutation yields a lexicographically smaller sorted
// column sequence.
bool minimal_under_rows(const Columns& cols, const std::vector<std::array<std::uint8_t, 64>>& tables) {
    Columns image(cols.size());
    for (const auto& t : tables) {
        for (std::size_t j = 0; j < cols.size(); ++j) image[j] = t[cols[j]];
        std::sort(image.begin(), image.end());
        if (image < cols) return false;
    }
    return true;
}

Columns canonical(const Columns& cols, const std::vector<std::array<std::uint8_t, 64>>& tables) {
    Columns best, image(cols.size());
    for (const auto& t : tables) {
        for (std::size_t j = 0; j < cols.size(); ++j) image[j] = t[cols[j]];
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = image;
    }
    return best;
}

Columns transpose(int a, const Columns& cols) {
    Columns out(static_cast<std::size_t>(a), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (int r = 0; r < a; ++r) {
            if (cols[j] >> r & 1) out[static_cast<std::size_t>(r)] |= static_cast<std::uint8_t>(1u << j);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

EnumeratedGraph build(int a, const Columns& cols) {
    const int b = static_cast<int>(cols.size());
    std::vector<std::string> names;
    for (int i = 1; i <= a; ++i) names.push_back("x" + std::to_string(i));
    for (int j = 1; j <= b; ++j) names.push_back("y" + std::to_string(j));
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < a; ++r) {
        for (int j = 0; j < b; ++j) {
            if (cols[static_cast<std::size_t>(j)] >> r & 1) edges.emplace_back(r, a + j);
        }
    }
    EnumeratedGraph out{Graph(std::move(names), edges), {}};
    for (int r = 0; r < a; ++r) out.sides.side_x.push_back(r);
    for (int j = 0; j < b; ++j) out.sides.side_y.push_back(a + j);
    return out;
}

bool accept(const EnumeratedGraph& e, const BipartiteFilter& filter) {
    if (filter.no_isolated) {
        for (int v = 0; v < e.graph.vertex_count(); ++v) {
            if (e.graph.degree(v) == 0) return false;
        }
    }
    if (filter.perfect_matching && !has_perfect_matching(e.graph, e.sides)) return false;
    if (filter.unmixed && !is_unmixed(e.graph)) return false;
    return true;
}

}  // namespace

void for_each_bipartite(int max_vertices, const BipartiteFilter& filter,
                        const std::function<void(const EnumeratedGraph&)>& visit) {
    if (max_vertices > kMaxEnumeratedVertices) {
        throw ResourceError("graph enumeration is limited to " + std::to_string(kMaxEnumeratedVertices) + " vertices");
    }
    for (int total = 2; total <= max_vertices; ++total) {
        for (int a = 1; 2 * a <= total; ++a) {
            const int b = total - a;
            const auto tables = permutation_tables(a);
            const int top = (1 << a) - 1;
            Columns cols(static_cast<std::size_t>(b), 1);
            // Nondecreasing column sequences with entries in [1, top].
            while (true) {
                std::uint8_t rows = 0;
                for (auto c : cols) rows |= c;
                if (rows == top && connected(a, cols) && minimal_under_rows(cols, tables) &&
                    (a != b || cols <= canonical(transpose(a, cols), tables))) {
                    const auto e = build(a, cols);
                    if (accept(e, filter)) visit(e);
                }
                int j = b - 1;
                while (j >= 0 && cols[static_cast<std::size_t>(j)] == top) --j;
                if (j < 0) break;
                const auto next = static_cast<std::uint8_t>(cols[static_cast<std::size_t>(j)] + 1);
                for (int k = j; k < b; ++k) cols[static_cast<std::size_t>(k)] = next;
            }
        }
    }
}

std::vector<EnumeratedGraph> enumerate_bipartite(int max_vertices, const BipartiteFilter& filter) {
    std::vector<EnumeratedGraph> out;
    for_each_bipartite(max_vertices, filter, [&](const EnumeratedGraph& e) { out.push_back(e); });
    return out;
}

bool has_perfect_matching(const Graph& g, const BipartitePartition& sides) {
    if (sides.side_x.size() != sides.side_y.size()) return false;
    std::vector<int> match_of_y(static_cast<std::size_t>(g.vertex_count()), -1);
    std::function<bool(int, VertexSet&)> augment = [&](int x, VertexSet& seen) {
        for (int y : g.neighbors(x)) {
            if (seen.contains(y)) continue;
            seen.insert(y);
            int& m = match_of_y[static_cast<std::size_t>(y)];
            if (m == -1 || augment(m, seen)) {
                m = x;
                return true;
            }
        }
        return false;
    };
    for (int x : sides.side_x) {
        VertexSet seen;
        if (!augment(x, seen)) return false;
    }
    return true;
}

std::vector<SimplicialComplex> all_complexes(int n) {
    std::vector<std::string> ground;
    for (int i = 1; i <= n; ++i) ground.push_back("v" + std::to_string(i));
    const int subsets = 1 << n;
    std::vector<SimplicialComplex> out;
    std::vector<VertexSet> chosen;
    std::function<void(int)> extend = [&](int next) {
        if (!chosen.empty()) out.emplace_back(ground, chosen);
        for (int s = next; s < subsets; ++s) {
            const VertexSet candidate{static_cast<std::uint64_t>(s)};
            if (std::any_of(chosen.begin(), chosen.end(),
                            [&](VertexSet f) { return f.contains(candidate) || candidate.contains(f); })) {
                continue;
            }
            chosen.push_back(candidate);
            extend(s + 1);
            chosen.pop_back();
        }
    };
    extend(0);
    return out;
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n, bool pure, int max_facets) {
    std::vector<std::string> ground;
    for (int i = 1; i <= n; ++i) ground.push_back("v" + std::to_string(i));
    std::uniform_int_distribution<int> count(1, max_facets);
    std::uniform_int_distribution<int> size(1, n);
    std::bernoulli_distribution coin(0.5);
    const int facets = count(rng);
    std::vector<VertexSet> sets;
    if (pure) {
        const int s = size(rng);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        for (int f = 0; f < facets; ++f) {
            std::shuffle(order.begin(), order.end(), rng);
            sets.push_back(VertexSet::of(std::vector<int>(order.begin(), order.begin() + s)));
        }
    } else {
        for (int f = 0; f < facets; ++f) {
            VertexSet s;
            for (int v = 0; v < n; ++v) {
                if (coin(rng)) s.insert(v);
            }
            sets.push_back(s);
        }
    }
    return SimplicialComplex::generated_by(std::move(ground), sets);
}

Graph random_bipartite(std::mt19937_64& rng, int a, int b, double p) {
    std::vector<std::string> names;
    for (int i = 1; i <= a; ++i) names.push_back("x" + std::to_string(i));
    for (int j = 1; j <= b; ++j) names.push_back("y" + std::to_string(j));
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) {
            if (coin(rng)) edges.emplace_back(i, a + j);
        }
    }
    return Graph(std::move(names), edges);
}

}  // namespace edgeideal
