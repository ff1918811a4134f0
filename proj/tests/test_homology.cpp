#include <doctest.h>

#include <random>

#include "edgeideal/enumerate.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/golden.hpp"
#include "edgeideal/homology.hpp"
#include "support.hpp"

using namespace edgeideal;
using support::complex_of;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kGF2 = FieldSpec::prime(2);

// Six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane() {
    return complex_of(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                          {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
}

SimplicialComplex sphere_boundary(int n) {
    std::vector<VertexSet> facets;
    for (int v = 0; v < n; ++v) facets.push_back(VertexSet::range(n) - VertexSet::single(v));
    return SimplicialComplex(support::names(n), facets);
}

bool composite_is_zero(const IntMatrix& a, const IntMatrix& b, std::int64_t p) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            if (p ? s % p != 0 : s != 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("boundary matrices") {
    const auto tri = complex_of(3, {{0, 1, 2}});
    const auto bm = boundary_matrices(tri, kQ);
    CHECK(bm.top_dimension() == 2);
    CHECK(bm.faces_of_dim(-1).size() == 1);
    CHECK(bm.faces_of_dim(0).size() == 3);
    CHECK(bm.faces_of_dim(1).size() == 3);
    CHECK(bm.boundary(0).rows() == 1);
    CHECK(bm.boundary(0).cols() == 3);
    CHECK(bm.boundary(2).cols() == 1);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = random_complex(rng, 3 + trial % 5, trial % 2 == 0);
        for (auto field : {kQ, kGF2, FieldSpec::prime(3)}) {
            const auto b = boundary_matrices(d, field);
            const auto p = static_cast<std::int64_t>(field.characteristic());
            for (int l = 1; l <= b.top_dimension(); ++l) {
                CHECK(composite_is_zero(b.boundary(l - 1), b.boundary(l), p));
            }
        }
    }
}

TEST_CASE("reduced Betti numbers of standard spaces") {
    CHECK(reduced_betti(SimplicialComplex::empty_complex({}), kQ) == BettiVector({1}));
    CHECK_THROWS_AS(reduced_betti(SimplicialComplex(support::names(1), {}), kQ), DomainError);
    CHECK(reduced_betti(complex_of(1, {{0}}), kQ).acyclic());
    CHECK(reduced_betti(complex_of(2, {{0}, {1}}), kQ).at(0) == 1);
    CHECK(reduced_betti(complex_of(3, {{0, 1, 2}}), kQ).acyclic());
    for (int n = 2; n <= 6; ++n) {
        const auto b = reduced_betti(sphere_boundary(n), kQ);
        for (int l = -1; l <= n - 2; ++l) CHECK(b.at(l) == (l == n - 2 ? 1 : 0));
    }
    const auto k22 = independence_complex(complete_bipartite(2, 2));
    CHECK(reduced_betti(k22, kQ).at(0) == 1);
    const auto square = complex_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(reduced_betti(square, kQ).at(1) == 1);
    CHECK(reduced_betti(square, kQ).at(0) == 0);
}

TEST_CASE("torsion separates the fields") {
    const auto rp2 = projective_plane();
    CHECK(reduced_betti(rp2, kQ).acyclic());
    CHECK(reduced_betti(rp2, FieldSpec::prime(3)).acyclic());
    const auto b2 = reduced_betti(rp2, kGF2);
    CHECK(b2.at(1) == 1);
    CHECK(b2.at(2) == 1);
    CHECK(b2.euler_characteristic() == reduced_betti(rp2, kQ).euler_characteristic());
}

TEST_CASE("Betti numbers agree with plain elimination") {
    std::mt19937_64 rng(2);
    std::vector<SimplicialComplex> complexes = all_complexes(4);
    for (int i = 0; i < 300; ++i) complexes.push_back(random_complex(rng, 5 + i % 3, i % 2 == 0));
    complexes.push_back(projective_plane());
    for (const auto& d : complexes) {
        for (long p : {0L, 2L, 3L}) {
            const auto field = p == 0 ? kQ : FieldSpec::prime(static_cast<std::uint64_t>(p));
            const auto b = reduced_betti(d, field);
            const auto naive = support::naive_betti(d, p);
            std::vector<std::int64_t> got;
            for (int l = -1; l < static_cast<int>(naive.size()) - 1; ++l) got.push_back(b.at(l));
            CHECK(got == naive);
        }
    }
}

TEST_CASE("Euler characteristic and cones") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = random_complex(rng, 3 + trial % 5, false);
        std::int64_t faces_alt = 0;
        const auto layers = d.faces_by_size();
        for (std::size_t k = 0; k < layers.size(); ++k) {
            faces_alt += (k % 2 == 0 ? -1 : 1) * static_cast<std::int64_t>(layers[k].size());
        }
        CHECK(reduced_betti(d, kQ).euler_characteristic() == faces_alt);
        CHECK(reduced_betti(d, kGF2).euler_characteristic() == faces_alt);
        CHECK(reduced_betti(cone(d, "apex"), kQ).acyclic());
    }
}

TEST_CASE("unions and intersections") {
    const auto a = complex_of(4, {{0, 1, 2}});
    const auto b = complex_of(4, {{1, 2, 3}});
    CHECK(support::facet_names(complex_intersection(a, b)) == std::set<std::set<std::string>>{{"v2", "v3"}});
    CHECK(complex_union(a, b).facets().size() == 2);
    CHECK_THROWS_AS(complex_intersection(a, complex_of(3, {{0}})), DomainError);
    const auto disjoint = complex_intersection(complex_of(4, {{0, 1}}), complex_of(4, {{2, 3}}));
    CHECK(dimension(disjoint) == -1);
}

TEST_CASE("Mayer-Vietoris exactness") {
    const auto a = complex_of(4, {{0, 1}, {1, 2}});
    const auto b = complex_of(4, {{2, 3}, {0, 3}});
    const auto mv = mayer_vietoris(a, b, kQ);
    CHECK(mv.exact());
    CHECK_FALSE(mv.lift_failed);
    bool saw_circle = false;
    for (const auto& pos : mv.positions) {
        CHECK(pos.exact());
        if (pos.term == 'D' && pos.degree == 1) saw_circle = pos.dimension == 1;
    }
    CHECK(saw_circle);
    CHECK(mv_check(projective_plane(), complex_of(6, {{0, 1, 2}}), kGF2));

    const Graph g = golden::six_by_six();
    const auto d = independence_complex(g);
    const auto x6 = g.vertex_set({"x6"});
    std::vector<VertexSet> star, deletion;
    for (auto f : d.facets()) {
        if (f.contains(x6)) star.push_back(f);
        deletion.push_back(f - x6);
    }
    const auto d1 = SimplicialComplex::generated_by(d.ground(), star);
    const auto d2 = SimplicialComplex::generated_by(d.ground(), deletion);
    CHECK(complex_union(d1, d2) == d);
    CHECK(mv_check(d1, d2, kQ));

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto d1 = random_complex(rng, 6, false, 4);
        const auto d2 = random_complex(rng, 6, false, 4);
        for (auto field : {kQ, kGF2}) CHECK(mv_check(d1, d2, field));
    }
}
