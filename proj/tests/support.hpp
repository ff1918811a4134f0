#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/linalg.hpp"
#include "edgeideal/simplicial.hpp"

namespace support {

using namespace edgeideal;

inline std::vector<std::string> names(int n, const std::string& prefix = "v") {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

inline SimplicialComplex complex_of(int n, std::vector<std::vector<int>> facets) {
    std::vector<VertexSet> sets;
    for (const auto& f : facets) sets.push_back(VertexSet::of(f));
    return SimplicialComplex::generated_by(names(n), sets);
}

inline std::set<std::set<std::string>> face_names(const SimplicialComplex& d) {
    std::set<std::set<std::string>> out;
    for (const auto& layer : d.faces_by_size()) {
        for (auto f : layer) {
            auto n = d.names_of(f);
            out.insert({n.begin(), n.end()});
        }
    }
    return out;
}

inline std::set<std::set<std::string>> facet_names(const SimplicialComplex& d) {
    std::set<std::set<std::string>> out;
    for (auto f : d.facets()) {
        auto n = d.names_of(f);
        out.insert({n.begin(), n.end()});
    }
    return out;
}

// Maximal independent sets by checking every subset.
inline std::vector<VertexSet> brute_force_mis(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> independent;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        if (g.is_independent(VertexSet{bits})) independent.push_back(VertexSet{bits});
    }
    std::vector<VertexSet> out;
    for (auto s : independent) {
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            if (!s.contains(v) && g.is_independent(s | VertexSet::single(v))) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

// Rank over Q by plain Gaussian elimination in GMP rationals.
inline std::size_t naive_rank_q(const IntMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = static_cast<long>(m(r, c));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t naive_rank_p(const IntMatrix& m, long p) {
    std::vector<std::vector<long>> a(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = ((m(r, c) % p) + p) % p;
    }
    auto power = [p](long b, long e) {
        long x = 1;
        for (; e; e >>= 1, b = b * b % p) {
            if (e & 1) x = x * b % p;
        }
        return x;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        const long inv = power(a[rank][c], p - 2);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const long f = a[r][c] * inv % p;
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Reduced Betti numbers from explicit chain groups, computed with the naive ranks.
inline std::vector<std::int64_t> naive_betti(const SimplicialComplex& d, long p = 0) {
    const auto faces = d.faces_by_size();
    std::vector<std::int64_t> ranks(faces.size() + 1, 0);
    for (std::size_t k = 1; k < faces.size(); ++k) {
        IntMatrix m(faces[k - 1].size(), faces[k].size(), 0);
        for (std::size_t c = 0; c < faces[k].size(); ++c) {
            int sign = 1;
            for (int v : faces[k][c]) {
                const auto lower = faces[k][c] - VertexSet::single(v);
                const auto r = std::find(faces[k - 1].begin(), faces[k - 1].end(), lower) - faces[k - 1].begin();
                m(static_cast<std::size_t>(r), c) = sign;
                sign = -sign;
            }
        }
        ranks[k] = static_cast<std::int64_t>(p == 0 ? naive_rank_q(m) : naive_rank_p(m, p));
    }
    std::vector<std::int64_t> betti(faces.size());
    for (std::size_t k = 0; k < faces.size(); ++k) {
        betti[k] = static_cast<std::int64_t>(faces[k].size()) - ranks[k] - ranks[k + 1];
    }
    return betti;
}

// Reisner test written directly from the link definition, without the library's link().
inline bool naive_reisner(const SimplicialComplex& d, FieldSpec field) {
    const long p = field.is_rational() ? 0 : static_cast<long>(field.characteristic());
    for (const auto& layer : d.faces_by_size()) {
        for (auto face : layer) {
            std::vector<VertexSet> lk;
            for (auto f : d.facets()) {
                if (f.contains(face)) lk.push_back(f - face);
            }
            const auto sub = SimplicialComplex::generated_by(d.ground(), lk);
            const auto b = naive_betti(sub, p);
            const int dim = static_cast<int>(b.size()) - 2;
            for (int i = -1; i < dim; ++i) {
                if (b[static_cast<std::size_t>(i + 1)] != 0) return false;
            }
        }
    }
    return true;
}

// (i)-skeleton: faces of dimension <= i.
inline SimplicialComplex skeleton(const SimplicialComplex& d, int i) {
    std::vector<VertexSet> faces;
    for (const auto& layer : d.faces_by_size()) {
        for (auto f : layer) {
            if (f.size() <= i + 1) faces.push_back(f);
        }
    }
    return SimplicialComplex::generated_by(d.ground(), faces);
}

// depth k[Δ] = 1 + max{ i : the i-skeleton is Cohen-Macaulay }.
inline int skeleton_depth(const SimplicialComplex& d, FieldSpec field) {
    int best = -1;
    const int dim = dimension(d);
    for (int i = -1; i <= dim; ++i) {
        if (naive_reisner(skeleton(d, i), field)) best = i;
    }
    return 1 + best;
}

// Canonical string of a small graph: minimum adjacency bit string over all vertex permutations.
inline std::uint64_t brute_canonical(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (auto [u, v] : edges) {
            int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
            if (a > b) std::swap(a, b);
            code |= std::uint64_t{1} << (a * n + b);
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace support
