#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/simplicial.hpp"

namespace edgeideal {

inline constexpr int kMaxEnumeratedVertices = 12;

struct BipartiteFilter {
    bool no_isolated = false;
    bool unmixed = false;
    bool perfect_matching = false;
};

struct EnumeratedGraph {
    Graph graph;
    BipartitePartition sides;  ///< side_x is never the larger side
};

/// Connected bipartite graphs on 2..max_vertices vertices, one per
/// isomorphism class. Vertices are named x1..xa, y1..yb with a <= b.
/// Throws ResourceError above kMaxEnumeratedVertices.
void for_each_bipartite(int max_vertices, const BipartiteFilter& filter,
                        const std::function<void(const EnumeratedGraph&)>& visit);
std::vector<EnumeratedGraph> enumerate_bipartite(int max_vertices, const BipartiteFilter& filter = {});

bool has_perfect_matching(const Graph& g, const BipartitePartition& sides);

/// Every non-void complex on the ground v1..vn (all antichains of subsets).
std::vector<SimplicialComplex> all_complexes(int n);

/// Random complex on v1..vn: between 1 and max_facets random subsets reduced
/// to their maximal members. Pure complexes draw every facet with one size.
SimplicialComplex random_complex(std::mt19937_64& rng, int n, bool pure, int max_facets = 8);

/// Random bipartite graph with `a` x-vertices and `b` y-vertices, each cross
/// pair present with probability p.
Graph random_bipartite(std::mt19937_64& rng, int a, int b, double p);

}  // namespace edgeideal
