#include "edgeideal/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "edgeideal/error.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/parallel.hpp"

namespace edgeideal {

namespace {

void require_nonvoid(const SimplicialComplex& d, const char* what) {
    if (d.is_void()) throw DomainError(std::string(what) + " of the void complex is undefined");
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), size_lex_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (auto s : sets) {
        if (std::none_of(kept.begin(), kept.end(), [&](VertexSet k) { return s.contains(k); })) kept.push_back(s);
    }
    return kept;
}

}  // namespace

IdealPresentation stanley_reisner(const SimplicialComplex& d) {
    require_nonvoid(d, "Stanley-Reisner ideal");
    std::vector<VertexSet> transversals{VertexSet{}};
    for (auto f : d.facets()) {
        const VertexSet complement = d.ground_set() - f;
        std::vector<VertexSet> next;
        for (auto t : transversals) {
            if (t.intersects(complement)) {
                next.push_back(t);
            } else {
                for (int v : complement) next.push_back(t | VertexSet::single(v));
            }
        }
        transversals = minimal_sets(std::move(next));
    }
    return {d.ground(), std::move(transversals)};
}

std::vector<int> PrimeSet::heights() const {
    std::vector<int> h;
    for (auto p : primes) h.push_back(p.size());
    return h;
}

std::set<std::vector<std::string>> PrimeSet::by_name() const {
    std::set<std::vector<std::string>> out;
    for (auto p : primes) {
        std::vector<std::string> names;
        for (int v : p) names.push_back(variables.at(static_cast<std::size_t>(v)));
        std::sort(names.begin(), names.end());
        out.insert(std::move(names));
    }
    return out;
}

PrimeSet minimal_primes(const SimplicialComplex& d) {
    require_nonvoid(d, "minimal primes");
    PrimeSet p{d.ground(), {}};
    for (auto f : d.facets()) p.primes.push_back(d.ground_set() - f);
    std::sort(p.primes.begin(), p.primes.end(), lex_less);
    return p;
}

int height(const SimplicialComplex& d) {
    return d.ground_size() - (dimension(d) + 1);
}

BettiTable::BettiTable(std::vector<std::string> variables, std::vector<Entry> entries)
    : variables_(std::move(variables)), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return a.w != b.w ? a.w < b.w : a.i < b.i;
    });
}

std::int64_t BettiTable::at(int i, VertexSet w) const {
    for (const auto& e : entries_) {
        if (e.i == i && e.w == w) return e.value;
    }
    return 0;
}

std::map<std::pair<int, int>, std::int64_t> BettiTable::graded() const {
    std::map<std::pair<int, int>, std::int64_t> out;
    for (const auto& e : entries_) out[{e.i, e.w.size()}] += e.value;
    return out;
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& e : entries_) pd = std::max(pd, e.i);
    return pd;
}

BettiTable hochster_betti(const SimplicialComplex& d, FieldSpec field, const HochsterOptions& options) {
    require_nonvoid(d, "Betti table");
    const int n = d.ground_size();
    if (n > options.max_ground) {
        throw ResourceError("Hochster sweep over " + std::to_string(n) + " variables exceeds the limit of " +
                            std::to_string(options.max_ground));
    }
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::vector<BettiTable::Entry>> per_subset(subsets);
    parallel_for(subsets, options.jobs, [&](std::size_t bits) {
        const VertexSet w{bits};
        if (w.empty()) {
            per_subset[bits].push_back({0, w, 1});
            return;
        }
        std::vector<VertexSet> faces;
        faces.reserve(d.facets().size());
        VertexSet apexes = w;
        for (auto f : d.facets()) {
            faces.push_back(f & w);
            apexes &= f;
        }
        if (!apexes.empty()) return;  // cone: acyclic
        std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
        std::vector<VertexSet> facets;
        for (auto f : faces) {
            if (std::none_of(facets.begin(), facets.end(), [&](VertexSet g) { return g.contains(f); })) facets.push_back(f);
        }
        const auto betti = reduced_betti(std::span<const VertexSet>(facets), field);
        const auto& values = betti.values();
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (values[k] == 0) continue;
            const int l = static_cast<int>(k) - 1;
            per_subset[bits].push_back({w.size() - l - 1, w, values[k]});
        }
    });
    std::vector<BettiTable::Entry> entries;
    for (auto& e : per_subset) entries.insert(entries.end(), e.begin(), e.end());
    return BettiTable(d.ground(), std::move(entries));
}

int proj_dim(const SimplicialComplex& d, FieldSpec field, const HochsterOptions& options) {
    return hochster_betti(d, field, options).projective_dimension();
}

int depth(const SimplicialComplex& d, FieldSpec field, const HochsterOptions& options) {
    return d.ground_size() - proj_dim(d, field, options);
}

int krull_dim(const SimplicialComplex& d) { return dimension(d) + 1; }

Report classify(const SimplicialComplex& d, FieldSpec field, const HochsterOptions& options) {
    Report r;
    r.field = field;
    r.n_vars = d.ground_size();
    r.height = height(d);
    r.krull_dim = krull_dim(d);
    r.proj_dim = proj_dim(d, field, options);
    r.depth = r.n_vars - r.proj_dim;
    r.is_CM = r.depth == r.krull_dim;
    r.is_ACM = r.proj_dim <= r.height + 1;
    if (r.is_ACM != (r.depth >= r.krull_dim - 1)) throw std::logic_error("aCM tests disagree");
    r.is_unmixed = is_pure(d);
    r.codim2_connected = connected_in_codim(d, 2).connected;
    return r;
}

Report classify(const Graph& g, FieldSpec field, const HochsterOptions& options) {
    Report r = classify(independence_complex(g), field, options);
    r.min_positive_degree = min_positive_degree(g);
    return r;
}

bool reisner_cm(const SimplicialComplex& d, FieldSpec field) {
    require_nonvoid(d, "Reisner criterion");
    for (const auto& layer : d.faces_by_size()) {
        for (auto face : layer) {
            std::vector<VertexSet> facets;
            for (auto f : d.facets()) {
                if (f.contains(face)) facets.push_back(f - face);
            }
            int dim = -1;
            for (auto f : facets) dim = std::max(dim, f.size() - 1);
            if (dim <= 0) continue;  // nothing below dimension 0 except b_{-1}, which needs a void link
            const auto betti = reduced_betti(std::span<const VertexSet>(facets), field);
            for (int i = -1; i < dim; ++i) {
                if (betti.at(i) != 0) return false;
            }
        }
    }
    return true;
}

CodimConnectivity connected_in_codim_ideal(const PrimeSet& primes, int ht_ideal, int k) {
    if (primes.primes.empty()) throw DomainError("prime set must be nonempty");
    if (k < 0) throw DomainError("codimension must be non-negative");
    const int threshold = ht_ideal + k;
    const auto& p = primes.primes;
    std::vector<std::vector<int>> adj(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if ((p[i] | p[j]).size() <= threshold) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
        }
    }
    CodimConnectivity c{k, threshold, false, AdjacencyGraph(std::move(adj))};
    c.connected = c.graph.connected();
    return c;
}

FerrersInvariants ferrers_invariants(const FerrersPartition& lambda) {
    const int n = lambda.parts();
    const int m = lambda.largest();
    FerrersInvariants out;
    int lo = n, hi = 0;
    for (int j = 1; j <= n; ++j) {
        lo = std::min(lo, lambda.at(j) + j - 1);
        hi = std::max(hi, lambda.at(j) + j - 1);
    }
    out.height = lo;  // lo already capped by n
    out.proj_dim = hi;
    for (int i = 1; i <= n; ++i) out.primes.variables.push_back("x" + std::to_string(i));
    for (int j = 1; j <= m; ++j) out.primes.variables.push_back("y" + std::to_string(j));
    for (int c : lambda.jumps()) {
        VertexSet p;
        for (int i = 1; i < c; ++i) p.insert(i - 1);
        for (int j = 1; j <= lambda.at(c); ++j) p.insert(n + j - 1);
        out.primes.primes.push_back(p);
        out.prime_heights.push_back(p.size());
    }
    out.unmixed = std::all_of(out.prime_heights.begin(), out.prime_heights.end(),
                              [&](int h) { return h == out.prime_heights.front(); });
    return out;
}

}  // namespace edgeideal
