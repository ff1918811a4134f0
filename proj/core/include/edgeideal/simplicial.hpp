#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/vertex_set.hpp"

namespace edgeideal {

/// Simplicial complex given by a ground set and its facets.
///
/// Facets form an antichain of subsets of the ground set and are stored in
/// lexicographic order. The void complex (no facets) and the empty complex
/// (the single facet {}) are different values.
class SimplicialComplex {
public:
    /// Void complex on an empty ground set.
    SimplicialComplex() = default;

    /// Throws DomainError if a facet leaves the ground set or the facets are
    /// not an antichain.
    SimplicialComplex(std::vector<std::string> ground, std::vector<VertexSet> facets);

    /// Complex generated by arbitrary faces; non-maximal ones are dropped.
    static SimplicialComplex generated_by(std::vector<std::string> ground, std::vector<VertexSet> faces);
    static SimplicialComplex simplex(std::vector<std::string> ground);
    static SimplicialComplex empty_complex(std::vector<std::string> ground);

    const std::vector<std::string>& ground() const { return ground_; }
    int ground_size() const { return static_cast<int>(ground_.size()); }
    VertexSet ground_set() const { return VertexSet::range(ground_size()); }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool contains_face(VertexSet s) const;
    /// Vertices lying in some face.
    VertexSet support() const;

    /// Every face, grouped by size: faces_by_size()[k] holds the k-element
    /// faces in colex order. Empty for the void complex.
    std::vector<std::vector<VertexSet>> faces_by_size() const;
    std::size_t face_count() const;

    std::optional<int> index_of(std::string_view name) const;
    VertexSet vertex_set(std::initializer_list<std::string_view> names) const;
    VertexSet vertex_set(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(VertexSet s) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<std::string> ground_;
    std::vector<VertexSet> facets_;
};

/// All faces of the complex generated by `facets`, grouped by size, each
/// layer in colex order.
std::vector<std::vector<VertexSet>> faces_by_size(std::span<const VertexSet> facets);

/// True when both complexes have the same faces, compared by vertex name.
/// Ground vertices lying in no face are ignored.
bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b);

/// True when every face of `a` is a face of `b` (by vertex name).
bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b);

/// Facets are the maximal independent sets; ground is V(G).
SimplicialComplex independence_complex(const Graph& g);

/// Link of a face; the result's ground is the old ground minus `face`.
/// Throws DomainError if `face` is not a face.
SimplicialComplex link(const SimplicialComplex& d, VertexSet face);

/// Faces contained in `w`; the result's ground is `w`.
SimplicialComplex restrict(const SimplicialComplex& d, VertexSet w);

/// Largest facet size minus one; -1 for the empty complex. Throws on void.
int dimension(const SimplicialComplex& d);

bool is_pure(const SimplicialComplex& d);

/// Cone with apex `apex` (a fresh ground vertex appended at the end).
SimplicialComplex cone(const SimplicialComplex& d, const std::string& apex);

struct FacetPath {
    std::vector<VertexSet> facets;
    /// min over consecutive pairs of dim(F_i ∩ F_{i+1}); nullopt for a single facet.
    std::optional<int> min_intersection_dim;
};

/// Undirected graph on a list of items with BFS helpers; shared by the facet
/// and prime forms of codimension connectivity.
class AdjacencyGraph {
public:
    explicit AdjacencyGraph(std::vector<std::vector<int>> adjacency);

    int size() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    bool connected() const;
    /// Shortest path, ties broken towards smaller indices. nullopt if unreachable.
    std::optional<std::vector<int>> shortest_path(int from, int to) const;

private:
    std::vector<std::vector<int>> adj_;
};

struct CodimConnectivity {
    int k = 0;
    int threshold = 0;  ///< minimal admissible intersection dimension (facet form) or maximal sum height (prime form)
    bool connected = false;
    AdjacencyGraph graph{{}};
};

/// Facets F, F' are adjacent when dim(F ∩ F') >= dim D - k.
CodimConnectivity connected_in_codim(const SimplicialComplex& d, int k);

/// Witness facet sequence between two facets (given by position in d.facets()).
std::optional<FacetPath> facet_path(const SimplicialComplex& d, const CodimConnectivity& c, int from, int to);

/// Text format: one facet per line; "#ground:" header lists extra ground
/// vertices; the line "{}" denotes the empty facet; other '#' lines are comments.
SimplicialComplex parse_complex(std::string_view text);
std::string write_complex(const SimplicialComplex& d);

}  // namespace edgeideal
