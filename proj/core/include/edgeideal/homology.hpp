#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgeideal/field.hpp"
#include "edgeideal/linalg.hpp"
#include "edgeideal/simplicial.hpp"

namespace edgeideal {

/// Reduced simplicial chain complex of a non-void complex.
///
/// Faces of each dimension are listed in colex order. boundary(l) maps
/// l-faces (columns) to (l-1)-faces (rows); boundary(0) is the augmentation
/// onto the single (-1)-face. Entries are the field's representatives of ±1.
struct BoundaryMatrices {
    FieldSpec field = FieldSpec::rationals();
    /// faces[l + 1] holds the l-dimensional faces, l = -1 .. dim.
    std::vector<std::vector<VertexSet>> faces;
    /// maps[l] is the boundary of the l-faces, l = 0 .. dim.
    std::vector<IntMatrix> maps;

    int top_dimension() const { return static_cast<int>(faces.size()) - 2; }
    const std::vector<VertexSet>& faces_of_dim(int l) const { return faces.at(static_cast<std::size_t>(l + 1)); }
    const IntMatrix& boundary(int l) const { return maps.at(static_cast<std::size_t>(l)); }
};

BoundaryMatrices boundary_matrices(const SimplicialComplex& d, FieldSpec field);

/// Reduced Betti numbers b_{-1}, b_0, ..., b_dim.
class BettiVector {
public:
    BettiVector() = default;
    explicit BettiVector(std::vector<std::int64_t> from_minus_one) : values_(std::move(from_minus_one)) {}

    /// Zero outside the stored range.
    std::int64_t at(int l) const {
        const int i = l + 1;
        return i < 0 || i >= static_cast<int>(values_.size()) ? 0 : values_[static_cast<std::size_t>(i)];
    }
    const std::vector<std::int64_t>& values() const { return values_; }
    bool acyclic() const;
    std::int64_t euler_characteristic() const;

    friend bool operator==(const BettiVector&, const BettiVector&) = default;

private:
    std::vector<std::int64_t> values_;
};

/// Exact ranks: Bareiss over Q, plain elimination over GF(p).
/// The empty complex {∅} gives b_{-1} = 1. Throws DomainError on void.
BettiVector reduced_betti(const SimplicialComplex& d, FieldSpec field);

/// Same computation for the complex generated by `facets` (non-empty list).
BettiVector reduced_betti(std::span<const VertexSet> facets, FieldSpec field);

/// Faces common to both complexes (same ground required).
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// One position of the reduced Mayer-Vietoris sequence.
struct ExactnessPosition {
    int degree = 0;
    char term = 'G';  ///< 'G' = H(Γ), 'S' = H(Δ1) ⊕ H(Δ2), 'D' = H(Δ1 ∪ Δ2)
    std::int64_t dimension = 0;
    std::int64_t rank_in = 0;
    std::int64_t rank_out = 0;
    bool composite_zero = true;
    bool exact() const { return composite_zero && dimension == rank_in + rank_out; }
};

struct MayerVietorisCheck {
    std::vector<ExactnessPosition> positions;
    /// The connecting map's lift landed outside C(Γ) for some cycle.
    bool lift_failed = false;
    bool exact() const;
};

/// Builds the induced maps on homology and checks exactness everywhere.
/// Throws DomainError on differing ground sets or void input.
MayerVietorisCheck mayer_vietoris(const SimplicialComplex& d1, const SimplicialComplex& d2, FieldSpec field);

bool mv_check(const SimplicialComplex& d1, const SimplicialComplex& d2, FieldSpec field);

}  // namespace edgeideal
