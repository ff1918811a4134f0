#include "edgeideal/homology.hpp"

#include <algorithm>
#include <map>

#include "edgeideal/error.hpp"

namespace edgeideal {

namespace {

std::size_t position_of(const std::vector<VertexSet>& sorted, VertexSet s) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
    return static_cast<std::size_t>(it - sorted.begin());
}

// Signed boundary from `upper` (faces of size k+1) to `lower` (faces of size k).
IntMatrix signed_boundary(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper,
                          std::int64_t minus_one) {
    IntMatrix m(lower.size(), upper.size(), 0);
    for (std::size_t c = 0; c < upper.size(); ++c) {
        int i = 0;
        for (int v : upper[c]) {
            const auto r = position_of(lower, upper[c] - VertexSet::single(v));
            m(r, c) = (i % 2 == 0) ? 1 : minus_one;
            ++i;
        }
    }
    return m;
}

}  // namespace

namespace {

BoundaryMatrices build_boundaries(std::vector<std::vector<VertexSet>> faces, FieldSpec field) {
    BoundaryMatrices b;
    b.field = field;
    b.faces = std::move(faces);
    const std::int64_t minus_one = field.is_rational() ? -1 : static_cast<std::int64_t>(field.characteristic()) - 1;
    for (std::size_t k = 1; k < b.faces.size(); ++k) b.maps.push_back(signed_boundary(b.faces[k - 1], b.faces[k], minus_one));
    return b;
}

}  // namespace

BoundaryMatrices boundary_matrices(const SimplicialComplex& d, FieldSpec field) {
    if (d.is_void()) throw DomainError("boundary matrices of the void complex are undefined");
    return build_boundaries(d.faces_by_size(), field);
}

bool BettiVector::acyclic() const {
    return std::all_of(values_.begin(), values_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t BettiVector::euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) chi += (i % 2 == 1 ? 1 : -1) * values_[i];
    return chi;
}

BettiVector reduced_betti(std::span<const VertexSet> facets, FieldSpec field) {
    if (facets.empty()) throw DomainError("homology of the void complex is undefined");
    const auto b = build_boundaries(faces_by_size(facets), field);
    const std::size_t layers = b.faces.size();  // dims -1 .. layers - 2
    std::vector<std::int64_t> ranks(layers + 1, 0);  // ranks[k]: boundary from size k to size k-1
    for (std::size_t k = 1; k < layers; ++k) ranks[k] = static_cast<std::int64_t>(rank(b.maps[k - 1], field));
    std::vector<std::int64_t> betti(layers, 0);
    for (std::size_t k = 0; k < layers; ++k) {
        betti[k] = static_cast<std::int64_t>(b.faces[k].size()) - ranks[k] - ranks[k + 1];
    }
    return BettiVector(std::move(betti));
}

BettiVector reduced_betti(const SimplicialComplex& d, FieldSpec field) {
    return reduced_betti(std::span<const VertexSet>(d.facets()), field);
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ground() != b.ground()) throw DomainError("complexes must share a ground set");
    std::vector<VertexSet> faces;
    for (auto f : a.facets()) {
        for (auto g : b.facets()) faces.push_back(f & g);
    }
    return SimplicialComplex::generated_by(a.ground(), std::move(faces));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ground() != b.ground()) throw DomainError("complexes must share a ground set");
    std::vector<VertexSet> faces = a.facets();
    faces.insert(faces.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex::generated_by(a.ground(), std::move(faces));
}

bool MayerVietorisCheck::exact() const {
    return !lift_failed && std::all_of(positions.begin(), positions.end(), [](const auto& p) { return p.exact(); });
}

namespace {

template <class Field>
class MayerVietoris {
public:
    using M = FieldMatrix<Field>;

    MayerVietoris(const Field& f, const SimplicialComplex& d1, const SimplicialComplex& d2)
        : f_(f),
          gamma_(complex_intersection(d1, d2).faces_by_size()),
          one_(d1.faces_by_size()),
          two_(d2.faces_by_size()),
          delta_(complex_union(d1, d2).faces_by_size()),
          top_(static_cast<int>(delta_.size()) - 2) {}

    MayerVietorisCheck run() {
        MayerVietorisCheck out;
        for (int l = top_; l >= -1; --l) {
            const auto hg = homology(gamma_, l);
            const auto hs = homology_sum(l);
            const auto hd = homology(delta_, l);
            const auto hd_up = homology(delta_, l + 1);
            const auto hg_down = homology(gamma_, l - 1);

            const M i_map = map_i(l);
            const M j_map = map_j(l);
            const M delta_up = map_delta(l + 1, hd_up.cycles, out.lift_failed);
            const M delta_here = map_delta(l, hd.cycles, out.lift_failed);

            const auto rank_i = induced_rank(i_map, hg, hs);
            const auto rank_j = induced_rank(j_map, hs, hd);
            const auto rank_delta_up = induced_rank(delta_up, hd_up, hg);
            const auto rank_delta_here = induced_rank(delta_here, hd, hg_down);

            ExactnessPosition g{l, 'G', hg.dim, rank_delta_up, rank_i,
                                induced_rank(multiply(f_, i_map, delta_up), hd_up, hs) == 0};
            ExactnessPosition s{l, 'S', hs.dim, rank_i, rank_j, induced_rank(multiply(f_, j_map, i_map), hg, hd) == 0};
            ExactnessPosition d{l, 'D', hd.dim, rank_j, rank_delta_here,
                                induced_rank(multiply(f_, delta_here, j_map), hs, hg_down) == 0};
            out.positions.push_back(g);
            out.positions.push_back(s);
            out.positions.push_back(d);
        }
        return out;
    }

private:
    struct Homology {
        M cycles;      // basis of Z_l, one column each
        M boundaries;  // spanning set of B_l
        std::int64_t boundary_rank = 0;
        std::int64_t dim = 0;
    };

    static const std::vector<VertexSet>& faces(const std::vector<std::vector<VertexSet>>& c, int l) {
        static const std::vector<VertexSet> none;
        const int k = l + 1;
        return k < 0 || k >= static_cast<int>(c.size()) ? none : c[static_cast<std::size_t>(k)];
    }

    M zero(std::size_t r, std::size_t c) const { return M(r, c, f_.from_int(0)); }

    M boundary(const std::vector<std::vector<VertexSet>>& c, int l) const {
        const auto& lower = faces(c, l - 1);
        const auto& upper = faces(c, l);
        return to_field(f_, signed_boundary(lower, upper, -1));
    }

    // Inclusion C(from) -> C(to), `sign` on each matched face.
    M inclusion(const std::vector<VertexSet>& from, const std::vector<VertexSet>& to, std::int64_t sign) const {
        M m = zero(to.size(), from.size());
        for (std::size_t c = 0; c < from.size(); ++c) m(position_of(to, from[c]), c) = f_.from_int(sign);
        return m;
    }

    static M transpose(const M& a) {
        M t(a.cols(), a.rows());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
        }
        return t;
    }

    M block_diag(const M& a, const M& b) const {
        M m = zero(a.rows() + b.rows(), a.cols() + b.cols());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        }
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
        }
        return m;
    }

    Homology from_boundaries(const M& out_of, const M& into) const {
        Homology h;
        h.cycles = null_space(f_, out_of);
        h.boundaries = into;
        h.boundary_rank = static_cast<std::int64_t>(field_rank(f_, into));
        h.dim = static_cast<std::int64_t>(h.cycles.cols()) - h.boundary_rank;
        return h;
    }

    Homology homology(const std::vector<std::vector<VertexSet>>& c, int l) const {
        return from_boundaries(boundary(c, l), boundary(c, l + 1));
    }

    Homology homology_sum(int l) const {
        return from_boundaries(block_diag(boundary(one_, l), boundary(two_, l)),
                               block_diag(boundary(one_, l + 1), boundary(two_, l + 1)));
    }

    M map_i(int l) const {
        const M a = inclusion(faces(gamma_, l), faces(one_, l), 1);
        const M b = inclusion(faces(gamma_, l), faces(two_, l), -1);
        M m = zero(a.rows() + b.rows(), a.cols());
        for (std::size_t c = 0; c < a.cols(); ++c) {
            for (std::size_t r = 0; r < a.rows(); ++r) m(r, c) = a(r, c);
            for (std::size_t r = 0; r < b.rows(); ++r) m(a.rows() + r, c) = b(r, c);
        }
        return m;
    }

    M map_j(int l) const {
        return hconcat(f_, inclusion(faces(one_, l), faces(delta_, l), 1), inclusion(faces(two_, l), faces(delta_, l), 1));
    }

    // Connecting map C_l(Δ) -> C_{l-1}(Γ): split off the Δ1 part and take its boundary.
    M map_delta(int l, const M& cycles, bool& lift_failed) const {
        const M project_one = transpose(inclusion(faces(one_, l), faces(delta_, l), 1));
        const M lifted = multiply(f_, boundary(one_, l), project_one);  // into C_{l-1}(Δ1)
        const M onto_gamma = transpose(inclusion(faces(gamma_, l - 1), faces(one_, l - 1), 1));
        // on cycles the lift must already live in C_{l-1}(Γ)
        const M on_cycles = multiply(f_, lifted, cycles);
        const auto& gamma_faces = faces(gamma_, l - 1);
        const auto& one_faces = faces(one_, l - 1);
        for (std::size_t r = 0; r < on_cycles.rows(); ++r) {
            if (std::binary_search(gamma_faces.begin(), gamma_faces.end(), one_faces[r])) continue;
            for (std::size_t c = 0; c < on_cycles.cols(); ++c) {
                if (!f_.is_zero(on_cycles(r, c))) lift_failed = true;
            }
        }
        return multiply(f_, onto_gamma, lifted);
    }

    std::int64_t image_rank_mod_boundaries(const M& images, const Homology& target) const {
        if (images.cols() == 0) return 0;
        const M joined = hconcat(f_, images, target.boundaries);
        return static_cast<std::int64_t>(field_rank(f_, joined)) - target.boundary_rank;
    }

    std::int64_t induced_rank(const M& map, const Homology& source, const Homology& target) const {
        return image_rank_mod_boundaries(multiply(f_, map, source.cycles), target);
    }

    const Field& f_;
    std::vector<std::vector<VertexSet>> gamma_, one_, two_, delta_;
    int top_;
};

}  // namespace

MayerVietorisCheck mayer_vietoris(const SimplicialComplex& d1, const SimplicialComplex& d2, FieldSpec field) {
    if (d1.ground() != d2.ground()) throw DomainError("Mayer-Vietoris check needs a shared ground set");
    if (d1.is_void() || d2.is_void()) throw DomainError("Mayer-Vietoris check needs non-void complexes");
    if (field.is_rational()) {
        const RationalField f;
        return MayerVietoris<RationalField>(f, d1, d2).run();
    }
    const PrimeField f(field.characteristic());
    return MayerVietoris<PrimeField>(f, d1, d2).run();
}

bool mv_check(const SimplicialComplex& d1, const SimplicialComplex& d2, FieldSpec field) {
    return mayer_vietoris(d1, d2, field).exact();
}

}  // namespace edgeideal
