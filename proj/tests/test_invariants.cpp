#include <doctest.h>

#include <random>

#include "edgeideal/edge_list.hpp"
#include "edgeideal/enumerate.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/golden.hpp"
#include "edgeideal/invariants.hpp"
#include "support.hpp"

using namespace edgeideal;
using support::complex_of;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kGF2 = FieldSpec::prime(2);

using NameLists = std::set<std::vector<std::string>>;

NameLists as_set(const std::vector<std::vector<std::string>>& lists) {
    NameLists out;
    for (auto l : lists) {
        std::sort(l.begin(), l.end());
        out.insert(l);
    }
    return out;
}

// beta_{i,W} from plain elimination on every restriction, with no pruning.
std::map<std::pair<int, std::uint64_t>, std::int64_t> naive_table(const SimplicialComplex& d, long p) {
    std::map<std::pair<int, std::uint64_t>, std::int64_t> out;
    const int n = d.ground_size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const VertexSet w{bits};
        std::vector<VertexSet> faces;
        for (auto f : d.facets()) faces.push_back(f & w);
        const auto b = support::naive_betti(SimplicialComplex::generated_by(d.ground(), faces), p);
        for (std::size_t k = 0; k < b.size(); ++k) {
            const int l = static_cast<int>(k) - 1;
            const int i = w.size() - l - 1;
            if (b[k] != 0) out[{i, bits}] = b[k];
        }
    }
    return out;
}

std::map<std::pair<int, std::uint64_t>, std::int64_t> table_of(const BettiTable& t) {
    std::map<std::pair<int, std::uint64_t>, std::int64_t> out;
    for (const auto& e : t.entries()) out[{e.i, e.w.bits()}] = e.value;
    return out;
}

std::vector<FerrersPartition> partitions_in_box(int parts, int largest) {
    std::vector<FerrersPartition> out;
    std::vector<int> lambda(static_cast<std::size_t>(parts));
    auto rec = [&](auto&& self, int i, int cap) -> void {
        if (i == parts) {
            out.emplace_back(lambda);
            return;
        }
        for (int v = (i == 0 ? largest : 1); v <= cap; ++v) {
            lambda[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, largest);
    return out;
}

std::vector<SimplicialComplex> sample_complexes(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SimplicialComplex> out;
    for (int i = 0; i < count; ++i) out.push_back(random_complex(rng, 6 + i % 2, i % 3 == 0));
    return out;
}

}  // namespace

TEST_CASE("Stanley-Reisner ideals") {
    const auto k22 = stanley_reisner(independence_complex(complete_bipartite(2, 2)));
    CHECK(k22.generators.size() == 4);
    for (auto g : k22.generators) CHECK(g.size() == 2);
    CHECK(stanley_reisner(SimplicialComplex::simplex(support::names(3))).generators.empty());
    CHECK(stanley_reisner(independence_complex(golden::four_by_four())).generators.size() == 13);
    CHECK_THROWS_AS(stanley_reisner(SimplicialComplex(support::names(2), {})), DomainError);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = random_complex(rng, 3 + trial % 5, false);
        std::vector<std::uint64_t> expected;
        const int n = d.ground_size();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const VertexSet s{bits};
            if (d.contains_face(s)) continue;
            bool minimal = true;
            for (int v : s) minimal = minimal && d.contains_face(s - VertexSet::single(v));
            if (minimal) expected.push_back(bits);
        }
        std::vector<std::uint64_t> got;
        for (auto g : stanley_reisner(d).generators) got.push_back(g.bits());
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("minimal primes and height") {
    CHECK(minimal_primes(independence_complex(golden::four_by_four())).by_name() == as_set(golden::four_by_four_primes()));
    CHECK(minimal_primes(independence_complex(golden::six_by_six())).by_name() == as_set(golden::six_by_six_primes()));
    const auto full = minimal_primes(SimplicialComplex::simplex(support::names(3)));
    REQUIRE(full.primes.size() == 1);
    CHECK(full.primes.front().empty());
    CHECK(height(independence_complex(golden::four_by_four())) == 4);
    CHECK(height(independence_complex(golden::six_by_six())) == 6);
    CHECK(height(independence_complex(parse_graph("x y"))) == 1);
    CHECK_THROWS_AS(height(SimplicialComplex(support::names(2), {})), DomainError);

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = random_bipartite(rng, 1 + trial % 4, 1 + trial % 5, 0.5);
        std::set<std::uint64_t> covers;
        for (auto s : support::brute_force_mis(g)) covers.insert((VertexSet::range(g.vertex_count()) - s).bits());
        std::set<std::uint64_t> got;
        const auto primes = minimal_primes(independence_complex(g));
        for (auto p : primes.primes) got.insert(p.bits());
        CHECK(got == covers);
        CHECK(std::is_sorted(primes.primes.begin(), primes.primes.end(), lex_less));
    }
}

TEST_CASE("Hochster Betti tables") {
    SUBCASE("small examples") {
        const auto simplex = hochster_betti(SimplicialComplex::simplex(support::names(3)), kQ);
        REQUIRE(simplex.entries().size() == 1);
        CHECK(simplex.at(0, VertexSet{}) == 1);

        const auto edge = independence_complex(parse_graph("x y"));
        const auto t = hochster_betti(edge, kQ);
        CHECK(t.at(1, edge.ground_set()) == 1);
        CHECK(t.projective_dimension() == 1);

        const auto k22 = hochster_betti(independence_complex(complete_bipartite(2, 2)), kQ);
        const auto graded = k22.graded();
        CHECK(graded.at({0, 0}) == 1);
        CHECK(graded.at({1, 2}) == 4);
        CHECK(graded.at({2, 3}) == 4);
        CHECK(graded.at({3, 4}) == 1);
        CHECK(graded.size() == 4);
        CHECK(k22.projective_dimension() == 3);
    }

    SUBCASE("agrees with plain elimination on every restriction") {
        std::vector<SimplicialComplex> complexes = all_complexes(4);
        for (const auto& d : sample_complexes(120, 41)) complexes.push_back(d);
        for (const auto& d : complexes) {
            CHECK(table_of(hochster_betti(d, kQ)) == naive_table(d, 0));
            CHECK(table_of(hochster_betti(d, kGF2)) == naive_table(d, 2));
        }
    }

    SUBCASE("alternating sums count faces") {
        for (const auto& d : sample_complexes(60, 43)) {
            const auto t = hochster_betti(d, kQ);
            const int n = d.ground_size();
            std::map<std::uint64_t, std::int64_t> by_w;
            for (const auto& e : t.entries()) by_w[e.w.bits()] += (e.i % 2 == 0 ? 1 : -1) * e.value;
            std::map<std::uint64_t, std::int64_t> expected;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
                const VertexSet w{bits};
                std::int64_t s = 0;
                for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
                    const VertexSet f{sub};
                    if (d.contains_face(f)) s += ((w.size() - f.size()) % 2 == 0 ? 1 : -1);
                    if (sub == 0) break;
                }
                if (s != 0) expected[bits] = s;
            }
            std::erase_if(by_w, [](const auto& kv) { return kv.second == 0; });
            CHECK(by_w == expected);
        }
    }

    SUBCASE("parallel sweep gives the same table") {
        const auto d = independence_complex(golden::six_by_six());
        CHECK(hochster_betti(d, kQ, {24, 1}).entries() == hochster_betti(d, kQ, {24, 4}).entries());
    }

    SUBCASE("guards") {
        CHECK_THROWS_AS(hochster_betti(SimplicialComplex(support::names(2), {}), kQ), DomainError);
        CHECK_THROWS_AS(hochster_betti(complex_of(6, {{0, 1}}), kQ, {5, 1}), ResourceError);
        CHECK_THROWS_AS(hochster_betti(SimplicialComplex::simplex(support::names(25)), kQ), ResourceError);
    }
}

TEST_CASE("depth against the skeleton criterion") {
    std::vector<SimplicialComplex> complexes;
    const auto all4 = all_complexes(4);
    complexes.insert(complexes.end(), all4.begin(), all4.end());
    std::mt19937_64 rng(47);
    for (int i = 0; i < 80; ++i) complexes.push_back(random_complex(rng, 5 + i % 2, i % 2 == 0, 5));
    complexes.push_back(independence_complex(complete_bipartite(2, 2)));
    for (const auto& d : complexes) {
        for (auto field : {kQ, kGF2}) CHECK(depth(d, field) == support::skeleton_depth(d, field));
    }
}

TEST_CASE("dimension, depth and classification examples") {
    const auto six = independence_complex(golden::six_by_six());
    CHECK(krull_dim(six) == 6);
    CHECK(depth(six, kQ) == 4);
    const auto six_report = classify(golden::six_by_six(), kQ);
    CHECK_FALSE(six_report.is_ACM);
    CHECK(six_report.is_unmixed);
    CHECK(six_report.codim2_connected);

    const auto edge = classify(parse_graph("x y"), kQ);
    CHECK(edge.krull_dim == 1);
    CHECK(edge.depth == 1);
    CHECK(edge.is_CM);
    CHECK(edge.min_positive_degree == 1);

    const auto k22 = classify(complete_bipartite(2, 2), kQ);
    CHECK(k22.krull_dim == 2);
    CHECK(k22.depth == 1);
    CHECK(k22.is_ACM);
    CHECK_FALSE(k22.is_CM);

    const auto empty = classify(Graph(support::names(3)), kQ);
    CHECK(empty.is_CM);
    CHECK(empty.proj_dim == 0);
    CHECK_FALSE(empty.min_positive_degree);

    const auto points = complex_of(2, {{0}, {1}});
    CHECK(reisner_cm(points, kQ));
    CHECK(reisner_cm(SimplicialComplex::simplex(support::names(4)), kQ));
    CHECK_FALSE(reisner_cm(independence_complex(complete_bipartite(2, 2)), kQ));
    CHECK_THROWS_AS(reisner_cm(SimplicialComplex(support::names(2), {}), kQ), DomainError);
}

TEST_CASE("report identities") {
    std::vector<SimplicialComplex> complexes = all_complexes(4);
    for (const auto& d : sample_complexes(200, 53)) complexes.push_back(d);
    for (const auto& d : complexes) {
        const auto r = classify(d, kQ);
        CHECK(r.krull_dim + r.height == r.n_vars);
        CHECK(r.depth + r.proj_dim == r.n_vars);
        CHECK(r.is_CM == (r.depth == r.krull_dim));
        CHECK(r.is_ACM == (r.depth >= r.krull_dim - 1));
        CHECK((!r.is_CM || r.is_ACM));
        CHECK(r.is_unmixed == is_pure(d));
        CHECK(r.codim2_connected == connected_in_codim(d, 2).connected);
    }
}

TEST_CASE("Reisner criterion") {
    SUBCASE("agrees with the link oracle") {
        std::vector<SimplicialComplex> complexes = all_complexes(5);
        for (const auto& d : sample_complexes(300, 59)) complexes.push_back(d);
        for (std::size_t i = 0; i < complexes.size(); ++i) {
            const auto& d = complexes[i];
            CHECK(reisner_cm(d, kQ) == support::naive_reisner(d, kQ));
            if (i % 7 == 0) CHECK(reisner_cm(d, kGF2) == support::naive_reisner(d, kGF2));
        }
    }
    SUBCASE("agrees with depth equal to dimension") {
        for (const auto& d : sample_complexes(300, 61)) {
            for (auto field : {kQ, kGF2}) CHECK(reisner_cm(d, field) == (depth(d, field) == krull_dim(d)));
        }
    }
}

TEST_CASE("prime-form connectivity") {
    const auto four = independence_complex(golden::four_by_four());
    const auto primes = minimal_primes(four);
    const auto c = connected_in_codim_ideal(primes, height(four), 2);
    CHECK(c.connected);
    CHECK(c.threshold == 6);
    CHECK_FALSE(connected_in_codim_ideal(primes, height(four), 0).connected);

    const auto six = independence_complex(golden::six_by_six());
    CHECK(connected_in_codim_ideal(minimal_primes(six), 6, 2).connected);

    PrimeSet single{{"a", "b"}, {VertexSet::of({0})}};
    for (int k = 0; k < 4; ++k) CHECK(connected_in_codim_ideal(single, 1, k).connected);
}

TEST_CASE("Ferrers closed forms") {
    SUBCASE("examples") {
        const auto f = ferrers_invariants(FerrersPartition({4, 4, 3, 2}));
        CHECK(f.height == 4);
        CHECK(f.proj_dim == 5);
        CHECK_FALSE(f.unmixed);
        std::vector<std::vector<std::string>> relabeled;
        for (const auto& p : f.primes.by_name()) {
            std::vector<std::string> q;
            for (const auto& v : p) q.push_back(v[0] == 'x' ? "x" + std::to_string(5 - std::stoi(v.substr(1))) : v);
            relabeled.push_back(q);
        }
        CHECK(as_set(relabeled) == as_set(golden::four_by_four_primes()));

        const auto stair = ferrers_invariants(FerrersPartition({3, 2, 1}));
        CHECK(stair.height == 3);
        CHECK(stair.proj_dim == 3);
        CHECK(stair.unmixed);

        const auto f331 = ferrers_invariants(FerrersPartition({3, 3, 1}));
        CHECK(f331.height == 3);
        CHECK(f331.proj_dim == 4);
        CHECK(f331.unmixed);
        const auto r331 = classify(ferrers_graph(FerrersPartition({3, 3, 1})).first, kQ);
        CHECK(r331.is_ACM);
        CHECK_FALSE(r331.is_CM);

        const auto f4441 = ferrers_invariants(FerrersPartition({4, 4, 4, 1}));
        CHECK(f4441.unmixed);
        CHECK_FALSE(connected_in_codim_ideal(f4441.primes, f4441.height, 2).connected);
        CHECK_FALSE(classify(ferrers_graph(FerrersPartition({4, 4, 4, 1})).first, kQ).is_ACM);
    }

    SUBCASE("match Hochster for n + lambda_1 <= 10") {
        int count = 0;
        for (int n = 1; n <= 9; ++n) {
            for (int m = 1; n + m <= 10; ++m) {
                for (const auto& lambda : partitions_in_box(n, m)) {
                    const auto f = ferrers_invariants(lambda);
                    const auto d = independence_complex(ferrers_graph(lambda).first);
                    CHECK(f.height == height(d));
                    CHECK(f.proj_dim == proj_dim(d, kQ));
                    CHECK(f.primes.by_name() == minimal_primes(d).by_name());
                    CHECK(f.unmixed == is_pure(d));
                    ++count;
                }
            }
        }
        CHECK(count == 511);
    }
}
