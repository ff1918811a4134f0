#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "edgeideal/edge_list.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/golden.hpp"
#include "edgeideal/serialize.hpp"
#include "edgeideal_cli/cli.hpp"

namespace edgeideal::cli {

using nlohmann::json;

namespace {

constexpr int kDefaultHochsterLimit = 20;
constexpr int kDefaultSweepVertices = 10;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool looks_like_complex(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("#complex", 0) == 0 || line.rfind("#ground:", 0) == 0) return true;
    }
    return false;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string set_text(const std::vector<std::string>& names) {
    std::string s = "{";
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
    return s + "}";
}

std::string prime_text(const PrimeSet& p, std::size_t i) {
    std::string s = "(";
    bool first = true;
    for (int v : p.primes[i]) {
        s += (first ? "" : ", ") + p.variables.at(static_cast<std::size_t>(v));
        first = false;
    }
    return s + ")";
}

json names_json(const std::vector<std::string>& names) { return json(names); }

HochsterOptions hochster_options(const RunConfig& cfg) {
    HochsterOptions o;
    o.max_ground = cfg.max_n.value_or(kDefaultHochsterLimit);
    o.jobs = cfg.jobs;
    return o;
}

void render_betti(std::ostream& out, const BettiTable& t, bool detail) {
    out << "Betti numbers beta_{i,j} (i = homological degree, j = multidegree size):\n";
    for (const auto& [key, value] : t.graded()) {
        out << "  beta_{" << key.first << "," << key.second << "} = " << value << "\n";
    }
    if (detail) {
        out << "multigraded Betti numbers beta_{i,W}:\n";
        for (const auto& e : t.entries()) {
            std::vector<std::string> w;
            for (int v : e.w) w.push_back(t.variables().at(static_cast<std::size_t>(v)));
            out << "  i=" << e.i << " W=" << set_text(w) << " : " << e.value << "\n";
        }
    }
}

}  // namespace

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    const std::string text = read_input(cfg.inputs.front());
    const bool complex_input = cfg.format == "complex" || (cfg.format == "auto" && looks_like_complex(text));
    std::optional<Graph> graph;
    SimplicialComplex d;
    if (complex_input) {
        d = parse_complex(text);
    } else {
        graph = parse_graph(text);
        d = independence_complex(*graph);
    }
    const auto options = hochster_options(cfg);
    const BettiTable betti = hochster_betti(d, cfg.field, options);
    Report report = classify(d, cfg.field, options);
    if (graph) report.min_positive_degree = min_positive_degree(*graph);
    const PrimeSet primes = minimal_primes(d);
    const auto facet_form = connected_in_codim(d, cfg.codim);
    const auto prime_form = connected_in_codim_ideal(primes, report.height, cfg.codim);
    const int last = static_cast<int>(d.facets().size()) - 1;
    const auto facet_witness = facet_path(d, facet_form, 0, last);
    const auto prime_witness = prime_form.graph.shortest_path(0, static_cast<int>(primes.primes.size()) - 1);

    if (cfg.json) {
        json input = {{"kind", graph ? "graph" : "complex"}, {"vertices", d.ground_size()}};
        if (graph) input["edges"] = graph->edge_count();
        else input["facets"] = d.facets().size();
        json codim = {{"k", cfg.codim},
                      {"connected", facet_form.connected},
                      {"ideal_form_connected", prime_form.connected},
                      {"max_sum_height", prime_form.threshold}};
        json fw = nullptr, pw = nullptr;
        if (facet_witness) {
            fw = json::array();
            for (auto f : facet_witness->facets) fw.push_back(names_json(d.names_of(f)));
        }
        if (prime_witness) {
            pw = json::array();
            for (int i : *prime_witness) {
                json gens = json::array();
                for (int v : primes.primes[static_cast<std::size_t>(i)]) gens.push_back(primes.variables[static_cast<std::size_t>(v)]);
                pw.push_back(std::move(gens));
            }
        }
        codim["facet_witness"] = std::move(fw);
        codim["prime_witness"] = std::move(pw);
        json doc = {{"schema", kSchema},   {"command", "analyze"},          {"input", input},
                    {"report", to_json(report)}, {"minimal_primes", to_json(primes)},
                    {"betti", to_json(betti, cfg.verbose)}, {"codim", std::move(codim)}};
        out << dump(doc);
        return kSuccess;
    }

    out << "input: " << (graph ? "graph" : "simplicial complex") << " on " << d.ground_size() << " vertices";
    if (graph) out << ", " << graph->edge_count() << " edges";
    else out << ", " << d.facets().size() << " facets";
    out << "\nfield: " << report.field.name() << "\n";
    out << "variables " << report.n_vars << ", height " << report.height << ", dim " << report.krull_dim
        << ", depth " << report.depth << ", pd " << report.proj_dim << "\n";
    out << "Cohen-Macaulay: " << yes_no(report.is_CM) << "\n";
    out << "almost Cohen-Macaulay: " << yes_no(report.is_ACM) << "\n";
    out << "unmixed: " << yes_no(report.is_unmixed) << "\n";
    out << "connected in codimension 2: " << yes_no(report.codim2_connected) << "\n";
    if (report.min_positive_degree) out << "minimum positive degree: " << *report.min_positive_degree << "\n";
    out << "minimal primes (" << primes.primes.size() << "):\n";
    for (std::size_t i = 0; i < primes.primes.size(); ++i) {
        out << "  p" << i + 1 << " = " << prime_text(primes, i) << "  height " << primes.primes[i].size() << "\n";
    }
    render_betti(out, betti, cfg.verbose);
    out << "connected in codimension " << cfg.codim << ": " << yes_no(facet_form.connected) << "\n";
    if (prime_witness) {
        out << "  prime sequence with sum heights <= " << prime_form.threshold << ":";
        for (int i : *prime_witness) out << " p" << i + 1;
        out << "\n";
    }
    if (facet_witness) {
        out << "  facet path:";
        for (auto f : facet_witness->facets) out << " " << set_text(d.names_of(f));
        out << "\n";
    }
    return kSuccess;
}

int cmd_ferrers(const RunConfig& cfg, std::ostream& out) {
    const FerrersPartition lambda(cfg.lambda);
    const auto fi = ferrers_invariants(lambda);
    const bool codim2 = connected_in_codim_ideal(fi.primes, fi.height, 2).connected;
    const int limit = cfg.max_n.value_or(kDefaultHochsterLimit);
    const int vars = lambda.parts() + lambda.largest();
    std::optional<Report> rep;
    bool primes_agree = false;
    if (vars <= limit) {
        const auto [g, sides] = ferrers_graph(lambda);
        const auto d = independence_complex(g);
        rep = classify(d, cfg.field, hochster_options(cfg));
        primes_agree = minimal_primes(d).by_name() == fi.primes.by_name();
    }
    const bool agree = !rep || (rep->height == fi.height && rep->proj_dim == fi.proj_dim && primes_agree &&
                                rep->is_unmixed == fi.unmixed);

    if (cfg.json) {
        json cross = {{"performed", rep.has_value()}};
        if (rep) {
            cross["height"] = rep->height;
            cross["proj_dim"] = rep->proj_dim;
            cross["primes_agree"] = primes_agree;
            cross["field"] = rep->field.name();
            cross["verdict"] = agree ? "AGREE" : "DISAGREE";
        }
        json doc = {{"schema", kSchema},
                    {"command", "ferrers"},
                    {"lambda", lambda.lambda()},
                    {"jumps", lambda.jumps()},
                    {"closed_form", to_json(fi)},
                    {"is_CM", fi.proj_dim == fi.height},
                    {"is_ACM", fi.proj_dim <= fi.height + 1},
                    {"codim2_connected", codim2},
                    {"cross_check", std::move(cross)}};
        out << dump(doc);
        return agree ? kSuccess : kMismatch;
    }

    out << "lambda:";
    for (int v : lambda.lambda()) out << " " << v;
    out << "\njumps c_i:";
    for (int c : lambda.jumps()) out << " " << c;
    out << "\nheight " << fi.height << ", pd " << fi.proj_dim << "\n";
    out << "Cohen-Macaulay: " << yes_no(fi.proj_dim == fi.height) << "\n";
    out << "almost Cohen-Macaulay: " << yes_no(fi.proj_dim <= fi.height + 1) << "\n";
    out << "unmixed: " << yes_no(fi.unmixed) << "\n";
    out << "connected in codimension 2: " << yes_no(codim2) << "\n";
    out << "minimal primes (" << fi.primes.primes.size() << "):\n";
    for (std::size_t i = 0; i < fi.primes.primes.size(); ++i) {
        out << "  " << prime_text(fi.primes, i) << "  height " << fi.prime_heights[i] << "\n";
    }
    if (rep) {
        out << "Hochster cross-check over " << rep->field.name() << ": height " << rep->height << ", pd "
            << rep->proj_dim << ", primes " << (primes_agree ? "equal" : "differ") << " -> "
            << (agree ? "AGREE" : "DISAGREE") << "\n";
    } else {
        out << "Hochster cross-check skipped: " << vars << " variables exceed the limit of " << limit << "\n";
    }
    return agree ? kSuccess : kMismatch;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    std::vector<std::string> ids;
    for (const auto& id : cfg.ids) {
        if (id == "all") {
            ids.insert(ids.end(), theorem_ids().begin(), theorem_ids().end());
        } else if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end()) {
            throw DomainError("unknown statement id '" + id + "'");
        } else {
            ids.push_back(id);
        }
    }
    CheckOptions options;
    options.field = cfg.field;
    options.jobs = cfg.jobs;
    options.max_vertices = cfg.max_n.value_or(kDefaultSweepVertices);
    options.max_l1 = cfg.max_m;
    options.ferrers_max_n = cfg.ferrers_n;
    options.random_complexes = cfg.random_complexes;
    options.mv_splits = cfg.mv_splits;
    options.seed = cfg.seed;
    if (options.max_vertices > kMaxEnumeratedVertices) {
        throw ResourceError("graph sweeps are limited to " + std::to_string(kMaxEnumeratedVertices) + " vertices");
    }
    if (options.max_l1 > 5) throw ResourceError("the complete bipartite check is limited to m <= 5");
    if (options.ferrers_max_n > 8) throw ResourceError("the Ferrers check is limited to n <= 8");

    std::optional<GraphFamily> family;
    std::vector<VerificationResult> results;
    for (const auto& id : ids) {
        if (needs_family(id) && !family) family = build_family(options);
        results.push_back(run_check(id, family ? &*family : nullptr, options));
    }

    bool all_verified = true;
    for (const auto& r : results) all_verified = all_verified && r.verified();

    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        for (const auto& r : results) {
            for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
                std::ofstream file(std::filesystem::path(cfg.out_dir) / (r.id + "-" + std::to_string(i + 1) + ".txt"));
                file << r.counterexamples[i];
            }
        }
    }

    if (cfg.json) {
        json list = json::array();
        for (const auto& r : results) list.push_back(to_json(r, cfg.timing));
        out << dump({{"schema", kSchema}, {"command", "verify"}, {"field", cfg.field.name()},
                     {"results", std::move(list)}, {"verified", all_verified}});
        return all_verified ? kSuccess : kMismatch;
    }

    for (const auto& r : results) {
        out << r.id << ": " << (r.verified() ? "verified" : "COUNTEREXAMPLES FOUND") << " (" << r.checked
            << " instances checked, " << r.vacuous << " vacuous";
        if (cfg.timing) out << ", " << r.elapsed_seconds << " s";
        out << ")\n  family: " << r.family << "\n";
        for (const auto& note : r.notes) out << "  note: " << note << "\n";
        const std::size_t shown = cfg.verbose ? r.counterexamples.size() : std::min<std::size_t>(3, r.counterexamples.size());
        for (std::size_t i = 0; i < shown; ++i) out << "  counterexample:\n" << r.counterexamples[i];
        if (shown < r.counterexamples.size()) {
            out << "  ... " << r.counterexamples.size() - shown << " more (use --verbose or --out-dir)\n";
        }
    }
    return all_verified ? kSuccess : kMismatch;
}

}  // namespace edgeideal::cli
