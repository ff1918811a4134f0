#include "edgeideal/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "edgeideal/edge_list.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/golden.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/parallel.hpp"

namespace edgeideal {

namespace {

struct ItemOutcome {
    std::size_t checked = 0;
    std::size_t vacuous = 0;
    std::vector<std::string> failures;
    std::map<std::string, std::size_t> tallies;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs fn over [0, n) in parallel and merges outcomes in index order.
void sweep(VerificationResult& r, std::size_t n, int jobs, const std::function<void(std::size_t, ItemOutcome&)>& fn) {
    std::vector<ItemOutcome> outcomes(n);
    parallel_for(n, jobs, [&](std::size_t i) { fn(i, outcomes[i]); });
    std::map<std::string, std::size_t> tallies;
    for (auto& o : outcomes) {
        r.checked += o.checked;
        r.vacuous += o.vacuous;
        for (auto& f : o.failures) r.counterexamples.push_back(std::move(f));
        for (const auto& [k, v] : o.tallies) tallies[k] += v;
    }
    for (const auto& [k, v] : tallies) r.notes.push_back(k + ": " + std::to_string(v));
}

VerificationResult start(const std::string& id, std::string family) {
    VerificationResult r;
    r.id = id;
    r.family = std::move(family);
    return r;
}

std::string flag(bool b) { return b ? "true" : "false"; }

std::string serialize(const Graph& g, const std::optional<BipartitePartition>& sides, const std::string& reason) {
    return "# " + reason + "\n" + write_edge_list(g, sides);
}

bool acm(const Graph& g, FieldSpec field) { return classify(g, field).is_ACM; }

Graph remove_vertices(const Graph& g, VertexSet s) { return g.induced(g.vertices() - s); }

std::set<std::string> name_set(const Graph& g, VertexSet s) {
    const auto names = g.names_of(s);
    return {names.begin(), names.end()};
}

std::set<std::set<std::string>> facet_names(const SimplicialComplex& d) {
    std::set<std::set<std::string>> out;
    for (auto f : d.facets()) {
        const auto names = d.names_of(f);
        out.insert({names.begin(), names.end()});
    }
    return out;
}

}  // namespace

std::string GraphFamily::description() const {
    return "connected bipartite graphs on at most " + std::to_string(max_vertices) + " vertices, up to isomorphism (" +
           std::to_string(members.size()) + " graphs, field " + field.name() + ")";
}

GraphFamily build_family(const CheckOptions& options) {
    GraphFamily family;
    family.max_vertices = options.max_vertices;
    family.field = options.field;
    auto graphs = enumerate_bipartite(options.max_vertices);
    family.members.resize(graphs.size());
    parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
        auto& m = family.members[i];
        m.graph = std::move(graphs[i].graph);
        m.sides = std::move(graphs[i].sides);
        m.report = classify(m.graph, options.field);
    });
    return family;
}

// ---------------------------------------------------------------- labelings

bool verify_labeling(const Graph& g, const Labeling& labeling) {
    const std::size_t n = labeling.pairs.size();
    VertexSet seen;
    for (auto [x, y] : labeling.pairs) {
        if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count()) return false;
        if (seen.contains(x) || seen.contains(y) || x == y) return false;
        seen.insert(x);
        seen.insert(y);
    }
    if (seen != g.vertices()) return false;
    auto xs = [&](std::size_t i) { return labeling.pairs[i].first; };
    auto ys = [&](std::size_t j) { return labeling.pairs[j].second; };
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.adjacent(xs(i), ys(i))) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (g.adjacent(xs(i), ys(j)) && i > j + 1) return false;
            if (g.adjacent(xs(i), xs(j)) || g.adjacent(ys(i), ys(j))) return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!g.adjacent(xs(i), ys(j))) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (g.adjacent(xs(j), ys(k)) && !g.adjacent(xs(i), ys(k))) return false;
            }
        }
    }
    return true;
}

namespace {

std::optional<Labeling> search_labeling(const Graph& g, const BipartitePartition& sides) {
    const std::size_t n = sides.side_x.size();
    if (sides.side_y.size() != n) return std::nullopt;
    std::vector<int> px, py;  // x and y at each position
    VertexSet used;
    std::optional<Labeling> found;

    std::function<bool()> place = [&]() -> bool {
        const std::size_t t = px.size();
        if (t == n) {
            Labeling l;
            for (std::size_t i = 0; i < n; ++i) l.pairs.emplace_back(px[i], py[i]);
            if (!verify_labeling(g, l)) return false;
            found = std::move(l);
            return true;
        }
        for (int x : sides.side_x) {
            if (used.contains(x)) continue;
            // x goes to position t, so it may only see y_j with j >= t - 1.
            bool ok = true;
            for (std::size_t j = 0; j + 1 < t && ok; ++j) ok = !g.adjacent(x, py[j]);
            if (!ok) continue;
            for (int y : g.neighbors(x)) {
                if (used.contains(y)) continue;
                px.push_back(x);
                py.push_back(y);
                used.insert(x);
                used.insert(y);
                bool viable = true;
                // Unplaced x-vertices will sit at position t + 1 or later.
                for (int other : sides.side_x) {
                    if (used.contains(other)) continue;
                    for (std::size_t j = 0; j < t && viable; ++j) viable = !g.adjacent(other, py[j]);
                }
                // Condition (iii) on triples touching the new position.
                for (std::size_t a = 0; a <= t && viable; ++a) {
                    for (std::size_t b = 0; b <= t && viable; ++b) {
                        if (!g.adjacent(px[a], py[b])) continue;
                        for (std::size_t c = 0; c <= t && viable; ++c) {
                            if (a != t && b != t && c != t) continue;
                            if (g.adjacent(px[b], py[c]) && !g.adjacent(px[a], py[c])) viable = false;
                        }
                    }
                }
                if (viable && place()) return true;
                used.erase(x);
                used.erase(y);
                px.pop_back();
                py.pop_back();
            }
        }
        return false;
    };
    place();
    return found;
}

void require_labeling_input(const Graph& g) {
    if (!bipartition(g)) throw DomainError("labeling requires a bipartite graph");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) throw DomainError("labeling requires a graph without isolated vertices");
    }
    if (!is_unmixed(g)) throw DomainError("labeling requires an unmixed graph");
}

}  // namespace

std::optional<Labeling> find_labeling(const Graph& g) {
    require_labeling_input(g);
    return search_labeling(g, *bipartition(g));
}

std::optional<Labeling> check_T12(const Graph& g, FieldSpec field) {
    require_labeling_input(g);
    if (!acm(g, field)) throw DomainError("labeling check requires an aCM graph");
    return search_labeling(g, *bipartition(g));
}

// ---------------------------------------------------------------- checks

VerificationResult check_L1(const CheckOptions& options) {
    Stopwatch clock;
    auto r = start("L1", "K_{m,n} and K_{n,m} for 1 <= n <= m <= " + std::to_string(options.max_l1));
    for (int m = 1; m <= options.max_l1; ++m) {
        for (int n = 1; n <= m; ++n) {
            for (auto [a, b] : {std::pair{m, n}, std::pair{n, m}}) {
                const Graph g = complete_bipartite(a, b);
                const bool is_acm = acm(g, options.field);
                ++r.checked;
                if (is_acm != (m <= 2)) {
                    r.counterexamples.push_back(serialize(g, std::nullopt,
                                                          "K_{" + std::to_string(a) + "," + std::to_string(b) +
                                                              "}: aCM=" + flag(is_acm)));
                }
            }
        }
    }
    r.elapsed_seconds = clock.seconds();
    return r;
}

VerificationResult check_T3(const GraphFamily& family, const CheckOptions& options) {
    Stopwatch clock;
    auto r = start("T3", family.description());
    sweep(r, family.members.size(), options.jobs, [&](std::size_t i, ItemOutcome& o) {
        const auto& m = family.members[i];
        const auto& rep = m.report;
        if (!rep.is_ACM || !rep.min_positive_degree) {
            ++o.vacuous;
            return;
        }
        ++o.checked;
        if (*rep.min_positive_degree > 2) {
            o.failures.push_back(serialize(m.graph, m.sides,
                                           "aCM with minimum degree " + std::to_string(*rep.min_positive_degree)));
        }
    });
    r.elapsed_seconds = clock.seconds();
    return r;
}

namespace {

VerificationResult check_corollary(const std::string& id, int degree, const GraphFamily& family,
                                   const CheckOptions& options) {
    Stopwatch clock;
    auto r = start(id, family.description());
    sweep(r, family.members.size(), options.jobs, [&](std::size_t i, ItemOutcome& o) {
        const auto& m = family.members[i];
        bool any = false;
        if (m.report.is_ACM) {
            for (int u = 0; u < m.graph.vertex_count(); ++u) {
                if (m.graph.degree(u) != degree) continue;
                any = true;
                ++o.checked;
                const Graph rest = remove_vertices(m.graph, m.graph.neighbors(u));
                if (!acm(rest, options.field)) {
                    o.failures.push_back(
                        serialize(m.graph, m.sides, "deleting the neighbours of " + m.graph.name(u) + " is not aCM"));
                }
            }
        }
        if (!any) ++o.vacuous;
    });
    r.elapsed_seconds = clock.seconds();
    return r;
}

}  // namespace

VerificationResult check_cor1(const GraphFamily& family, const CheckOptions& options) {
    return check_corollary("COR1", 1, family, options);
}

VerificationResult check_cor2(const GraphFamily& family, const CheckOptions& options) {
    return check_corollary("COR2", 2, family, options);
}

VerificationResult check_T4(const GraphFamily& family, const CheckOptions& options) {
    Stopwatch clock;
    auto r = start("T4", family.description());
    sweep(r, family.members.size(), options.jobs, [&](std::size_t i, ItemOutcome& o) {
        const auto& m = family.members[i];
        const Graph& g = m.graph;
        bool any = false;
        for (int x = 0; x < g.vertex_count(); ++x) {
            if (g.degree(x) != 1) continue;
            const int y = g.neighbors(x).min();
            const bool h = acm(delete_closed_neighborhood(g, VertexSet::single(x)), options.field);
            const bool k = acm(delete_closed_neighborhood(g, VertexSet::single(y)), options.field);
            const bool holds = (h && k) == m.report.is_ACM;
            if (!m.report.is_unmixed) {
                ++o.tallies[holds ? "mixed instances where the equivalence holds"
                                  : "mixed instances where the equivalence fails"];
                continue;
            }
            any = true;
            ++o.checked;
            if (!holds) {
                o.failures.push_back(serialize(g, m.sides,
                                               "x=" + g.name(x) + ": H aCM=" + flag(h) + ", K aCM=" + flag(k) +
                                                   ", G aCM=" + flag(m.report.is_ACM)));
            }
        }
        if (!any) ++o.vacuous;
    });
    r.elapsed_seconds = clock.seconds();
    return r;
}

VerificationResult check_T5(const GraphFamily& family, const CheckOptions& options) {
    Stopwatch clock;
    auto r = start("T5", family.description() + ", plus the 6x6 example");
    sweep(r, family.members.size(), options.jobs, [&](std::size_t i, ItemOutcome& o) {
        const auto& m = family.members[i];
        const Graph& g = m.graph;
        bool any = false;
        if (m.report.is_unmixed) {
            for (int x = 0; x < g.vertex_count(); ++x) {
                if (g.degree(x) != 2) continue;
                const Report h = classify(delete_closed_neighborhood(g, VertexSet::single(x)), options.field);
                const Report k = classify(delete_closed_neighborhood(g, g.neighbors(x)), options.field);
                if (!h.is_ACM || !k.is_CM) continue;
                any = true;
                ++o.checked;
                if (!m.report.is_ACM) {
                    o.failures.push_back(serialize(g, m.sides, "x=" + g.name(x) + ": H aCM, K CM, G not aCM"));
                }
            }
        }
        if (!any) ++o.vacuous;
    });

    const Graph g = golden::six_by_six();
    const Report gr = classify(g, options.field);
    const Report h = classify(delete_closed_neighborhood(g, g.vertex_set({"x6"})), options.field);
    const Report k = classify(delete_closed_neighborhood(g, g.vertex_set({"y5", "y6"})), options.field);
    const golden::SixBySixFacts facts;
    ++r.checked;
    if (h.is_ACM != facts.h_acm || k.is_ACM != facts.k_acm || k.is_CM != facts.k_cm || gr.is_ACM != facts.acm) {
        r.counterexamples.push_back(serialize(g, std::nullopt,
                                              "6x6 example: H aCM=" + flag(h.is_ACM) + ", K aCM=" + flag(k.is_ACM) +
                                                  ", K CM=" + flag(k.is_CM) + ", G aCM=" + flag(gr.is_ACM)));
    }
    r.elapsed_seconds = clock.seconds();
    return r;
}

VerificationResult check_T2(const CheckOptions& options) {
    Stopwatch clock;
    auto r = start("T2", "all complexes on at most " + std::to_string(options.exhaustive_complex_n) + " vertices and " +
                             std::to_string(options.random_complexes) + " random complexes on 6-7 vertices");
    std::vector<SimplicialComplex> complexes;
    for (int n = 0; n <= options.exhaustive_complex_n; ++n) {
        auto batch = all_complexes(n);
        complexes.insert(complexes.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    }
    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < options.random_complexes; ++i) {
        complexes.push_back(random_complex(rng, 6 + i % 2, (i / 2) % 2 == 0));
    }
    sweep(r, complexes.size(), options.jobs, [&](std::size_t i, ItemOutcome& o) {
        const auto& d = complexes[i];
        if (d.facets().size() > 1 && connected_in_codim(d, 1).connected && !is_pure(d)) {
            ++o.tallies["codim-1 connected but not pure"];
        }
        if (dimension(d) < 2) {
            ++o.vacuous;
            return;
        }
        const Report rep = classify(d, options.field);
        if (!rep.is_ACM) {
            ++o.vacuous;
            return;
        }
        ++o.checked;
        if (!rep.codim2_connected) o.failures.push_back("# aCM but not connected in codimension two\n" + write_complex(d));
    });
    r.elapsed_seconds = clock.seconds();
    return r;
}

VerificationResult check_T12_family(const GraphFamily& family, const CheckOptions& options) {
    Stopwatch clock;
    auto r = start("T12", family.description() + ", both side orientations, plus the 6x6 example");
    sweep(r, family.members.size(), options.jobs, [&](std::size_t i, ItemOutcome& o) {
        const auto& m = family.members[i];
        if (!m.report.is_unmixed || !m.report.is_ACM) {
            ++o.vacuous;
            return;
        }
        for (const auto& sides : {m.sides, m.sides.swapped()}) {
            ++o.checked;
            const auto l = search_labeling(m.graph, sides);
            if (!l || !verify_labeling(m.graph, *l)) {
                o.failures.push_back(serialize(m.graph, sides, "unmixed aCM graph without a valid labeling"));
            }
        }
    });

    const Graph g = golden::six_by_six();
    Labeling identity;
    for (int t = 1; t <= 6; ++t) {
        identity.pairs.emplace_back(g.require_index("x" + std::to_string(t)), g.require_index("y" + std::to_string(t)));
    }
    const auto searched = find_labeling(g);
    ++r.checked;
    if (!verify_labeling(g, identity) || !searched || !verify_labeling(g, *searched) || acm(g, options.field)) {
        r.counterexamples.push_back(serialize(g, std::nullopt, "6x6 example: expected a labeling and no aCM"));
    }
    r.elapsed_seconds = clock.seconds();
    return r;
}

VerificationResult check_ferrers(const CheckOptions& options) {
    Stopwatch clock;
    const int cap = options.ferrers_max_n;
    auto r = start("FERRERS", "partitions with n <= " + std::to_string(cap) + " parts and lambda_1 <= " +
                                  std::to_string(cap));
    std::vector<std::vector<int>> partitions;
    std::vector<int> current;
    std::function<void(int)> extend = [&](int bound) {
        if (!current.empty()) partitions.push_back(current);
        if (static_cast<int>(current.size()) == cap) return;
        for (int v = 1; v <= bound; ++v) {
            current.push_back(v);
            extend(v);
            current.pop_back();
        }
    };
    extend(cap);
    std::sort(partitions.begin(), partitions.end());
    sweep(r, partitions.size(), options.jobs, [&](std::size_t i, ItemOutcome& o) {
        const FerrersPartition lambda(partitions[i]);
        std::string label = "lambda =";
        for (int v : lambda.lambda()) label += " " + std::to_string(v);
        const auto fi = ferrers_invariants(lambda);
        const auto [g, sides] = ferrers_graph(lambda);
        const auto d = independence_complex(g);
        const Report rep = classify(d, options.field);
        ++o.checked;
        std::vector<std::string> problems;
        if (fi.height != rep.height) problems.push_back("height");
        if (fi.proj_dim != rep.proj_dim) problems.push_back("projective dimension");
        if (fi.primes.by_name() != minimal_primes(d).by_name()) problems.push_back("primes");
        if (fi.unmixed != rep.is_unmixed) problems.push_back("unmixedness");
        if (fi.unmixed) {
            ++o.tallies["unmixed partitions"];
            const bool codim2 = connected_in_codim_ideal(fi.primes, fi.height, 2).connected;
            if (rep.is_ACM != codim2) problems.push_back("aCM versus codimension two");
            const auto& c = lambda.jumps();
            bool jumps_ok = true;
            for (std::size_t t = 0; t + 1 < c.size(); ++t) {
                if (lambda.at(c[t]) - lambda.at(c[t + 1]) > 2 || c[t + 1] - c[t] > 2) jumps_ok = false;
            }
            if (jumps_ok != codim2) problems.push_back("jump characterization");
        }
        if (!problems.empty()) {
            std::string msg = "# " + label + ": mismatch in";
            for (const auto& p : problems) msg += " " + p;
            o.failures.push_back(msg + "\n" + write_edge_list(g, sides));
        }
    });
    r.elapsed_seconds = clock.seconds();
    return r;
}

VerificationResult check_L2(const GraphFamily& family, const CheckOptions& options) {
    Stopwatch clock;
    auto r = start("L2", family.description() + ", unmixed members, every vertex");
    sweep(r, family.members.size(), options.jobs, [&](std::size_t i, ItemOutcome& o) {
        const auto& m = family.members[i];
        if (!m.report.is_unmixed) {
            ++o.vacuous;
            return;
        }
        const auto d = independence_complex(m.graph);
        for (int v = 0; v < m.graph.vertex_count(); ++v) {
            ++o.checked;
            if (!is_subcomplex(link(d, m.graph.neighbors(v)), link(d, VertexSet::single(v)))) {
                o.failures.push_back(serialize(m.graph, m.sides, "link of N(" + m.graph.name(v) + ") not inside link of " +
                                                                     m.graph.name(v)));
            }
        }
    });
    r.elapsed_seconds = clock.seconds();
    return r;
}

namespace {

struct PureOrderView {
    std::vector<std::pair<int, int>> pairing;
    std::map<int, int> partner;  // y -> x
};

std::vector<PureOrderView> orientations(const ClassifiedGraph& m) {
    std::vector<PureOrderView> out;
    for (const auto& sides : {m.sides, m.sides.swapped()}) {
        const auto order = find_pure_order(m.graph, sides);
        if (!order) continue;
        PureOrderView v{order->pairing, {}};
        for (auto [x, y] : order->pairing) v.partner[y] = x;
        out.push_back(std::move(v));
    }
    return out;
}

int min_degree_on_side(const Graph& g, const std::vector<std::pair<int, int>>& pairing) {
    int best = g.vertex_count();
    for (auto [x, y] : pairing) best = std::min(best, g.degree(x));
    return best;
}

}  // namespace

VerificationResult check_L6(const GraphFamily& family, const CheckOptions& options) {
    Stopwatch clock;
    auto r = start("L6", family.description() + ", unmixed members, both pure-order orientations");
    sweep(r, family.members.size(), options.jobs, [&](std::size_t i, ItemOutcome& o) {
        const auto& m = family.members[i];
        if (!m.report.is_unmixed) {
            ++o.vacuous;
            return;
        }
        const Graph& g = m.graph;
        const auto views = orientations(m);
        if (views.size() != 2) {
            o.failures.push_back(serialize(g, m.sides, "unmixed graph without a pure order"));
            return;
        }
        for (const auto& view : views) {
            VertexSet all_y;
            for (auto [x, y] : view.pairing) all_y.insert(y);
            const int min_deg = min_degree_on_side(g, view.pairing);
            for (auto [x, y] : view.pairing) {
                ++o.checked;
                const VertexSet nx = g.neighbors(x);
                VertexSet partners;
                for (int yy : nx) {
                    if (yy != y) partners.insert(view.partner.at(yy));
                }
                const Graph h = delete_closed_neighborhood(g, VertexSet::single(x));
                std::vector<std::string> problems;
                if (!is_unmixed(h)) problems.push_back("(i)");
                for (int p : partners) {
                    if (h.degree(h.require_index(g.name(p))) != 0) problems.push_back("(ii)");
                }
                if (g.degree(x) == min_deg) {
                    const Graph c = delete_closed_neighborhood(g, all_y - nx);
                    const VertexSet left = partners | VertexSet::single(x);
                    auto expected = name_set(g, left);
                    const auto right = name_set(g, nx);
                    expected.insert(right.begin(), right.end());
                    bool complete = name_set(c, c.vertices()) == expected;
                    for (int a : left) {
                        for (int b : nx) complete = complete && g.adjacent(a, b);
                    }
                    if (!complete) problems.push_back("(iii)");
                    for (int yy : nx) {
                        if (g.neighbors(yy) != g.neighbors(y)) problems.push_back("(iv)");
                    }
                }
                if (!problems.empty()) {
                    problems.erase(std::unique(problems.begin(), problems.end()), problems.end());
                    std::string msg = "x=" + g.name(x) + " fails";
                    for (const auto& p : problems) msg += " " + p;
                    o.failures.push_back(serialize(g, m.sides, msg));
                }
            }
        }
    });
    r.elapsed_seconds = clock.seconds();
    return r;
}

VerificationResult check_L7(const GraphFamily& family, const CheckOptions& options) {
    Stopwatch clock;
    auto r = start("L7", family.description() + ", unmixed members, minimal-degree vertices of both sides");
    sweep(r, family.members.size(), options.jobs, [&](std::size_t i, ItemOutcome& o) {
        const auto& m = family.members[i];
        if (!m.report.is_unmixed) {
            ++o.vacuous;
            return;
        }
        const Graph& g = m.graph;
        const auto facets_g = facet_names(independence_complex(g));
        for (const auto& view : orientations(m)) {
            const int min_deg = min_degree_on_side(g, view.pairing);
            for (auto [x, y] : view.pairing) {
                if (g.degree(x) != min_deg) continue;
                ++o.checked;
                const VertexSet nx = g.neighbors(x);
                VertexSet partners;
                for (int yy : nx) {
                    if (yy != y) partners.insert(view.partner.at(yy));
                }
                const Graph h = delete_closed_neighborhood(g, VertexSet::single(x));
                VertexSet drop;
                for (const auto& name : g.names_of(closed_neighborhood(g, partners))) {
                    if (auto v = h.index_of(name)) drop.insert(*v);
                }
                const Graph k = h.induced(h.vertices() - drop);
                const auto facets_h = facet_names(independence_complex(h));
                const auto facets_k = facet_names(independence_complex(k));
                const std::string xname = g.name(x);
                const auto ny = name_set(g, nx);

                bool forward = true;
                for (auto f : facets_g) {
                    if (f.count(xname)) {
                        f.erase(xname);
                        forward = forward && facets_h.count(f);
                    } else {
                        const bool has_all = std::includes(f.begin(), f.end(), ny.begin(), ny.end());
                        for (const auto& name : ny) f.erase(name);
                        forward = forward && has_all && facets_k.count(f);
                    }
                }
                if (!forward) {
                    o.failures.push_back(serialize(g, m.sides, "facet of the independence complex not decomposed at x=" + xname));
                }
                bool converse = true;
                for (auto f : facets_h) {
                    f.insert(xname);
                    converse = converse && facets_g.count(f);
                }
                for (auto f : facets_k) {
                    f.insert(ny.begin(), ny.end());
                    converse = converse && facets_g.count(f);
                }
                ++o.tallies[converse ? "instances where the converse also holds" : "instances where the converse fails"];
            }
        }
    });
    r.elapsed_seconds = clock.seconds();
    return r;
}

VerificationResult check_MV(const GraphFamily& family, const CheckOptions& options) {
    Stopwatch clock;
    auto r = start("MV", std::to_string(options.mv_splits) + " random facet splits of independence complexes from " +
                             family.description() + ", plus the split of the 6x6 example by x6 and y6");
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        if (maximal_independent_sets(family.members[i].graph).size() >= 2) candidates.push_back(i);
    }
    struct Split {
        SimplicialComplex d1, d2;
        std::string label;
    };
    std::vector<Split> splits;
    std::mt19937_64 rng(options.seed);
    for (int s = 0; s < options.mv_splits && !candidates.empty(); ++s) {
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        const auto& m = family.members[candidates[pick(rng)]];
        const auto d = independence_complex(m.graph);
        const auto& facets = d.facets();
        // A nonempty proper subset goes to D1, the rest to D2.
        std::uniform_int_distribution<std::uint64_t> mask_dist(1, (std::uint64_t{1} << facets.size()) - 2);
        const std::uint64_t mask = facets.size() < 64 ? mask_dist(rng) : 1;
        std::vector<VertexSet> f1, f2;
        for (std::size_t f = 0; f < facets.size(); ++f) (mask >> f & 1 ? f1 : f2).push_back(facets[f]);
        splits.push_back({SimplicialComplex(d.ground(), f1), SimplicialComplex(d.ground(), f2),
                          "# random split\n" + write_edge_list(m.graph, m.sides)});
    }
    {
        const Graph g = golden::six_by_six();
        const auto d = independence_complex(g);
        const int x6 = d.index_of("x6").value(), y6 = d.index_of("y6").value();
        std::vector<VertexSet> f1, f2;
        for (auto f : d.facets()) {
            if (f.contains(x6)) f1.push_back(f);
            if (f.contains(y6)) f2.push_back(f);
        }
        splits.push_back({SimplicialComplex(d.ground(), f1), SimplicialComplex(d.ground(), f2),
                          "# 6x6 example split by x6 and y6\n" + write_edge_list(g)});
    }
    sweep(r, splits.size(), options.jobs, [&](std::size_t i, ItemOutcome& o) {
        ++o.checked;
        if (!mv_check(splits[i].d1, splits[i].d2, options.field)) {
            o.failures.push_back(splits[i].label + "# D1\n" + write_complex(splits[i].d1) + "# D2\n" +
                                 write_complex(splits[i].d2));
        }
    });
    r.elapsed_seconds = clock.seconds();
    return r;
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"L1", "L2",  "L6",   "L7",   "T2",      "T3", "T4",
                                              "T5", "T12", "COR1", "COR2", "FERRERS", "MV"};
    return ids;
}

bool needs_family(const std::string& id) {
    return id != "L1" && id != "T2" && id != "FERRERS";
}

VerificationResult run_check(const std::string& id, const GraphFamily* family, const CheckOptions& options) {
    if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end()) {
        throw DomainError("unknown theorem id '" + id + "'");
    }
    if (id == "L1") return check_L1(options);
    if (id == "T2") return check_T2(options);
    if (id == "FERRERS") return check_ferrers(options);
    if (!family) throw DomainError("check " + id + " needs a graph family");
    if (id == "L2") return check_L2(*family, options);
    if (id == "L6") return check_L6(*family, options);
    if (id == "L7") return check_L7(*family, options);
    if (id == "T3") return check_T3(*family, options);
    if (id == "T4") return check_T4(*family, options);
    if (id == "T5") return check_T5(*family, options);
    if (id == "T12") return check_T12_family(*family, options);
    if (id == "COR1") return check_cor1(*family, options);
    if (id == "COR2") return check_cor2(*family, options);
    return check_MV(*family, options);
}

}  // namespace edgeideal
