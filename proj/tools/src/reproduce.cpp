#include <nlohmann/json.hpp>
#include <ostream>

#include "edgeideal/golden.hpp"
#include "edgeideal/serialize.hpp"
#include "edgeideal_cli/cli.hpp"

namespace edgeideal::cli {

using nlohmann::json;

namespace {

struct Check {
    std::string quantity;
    json expected;
    json actual;
};

struct Example {
    std::string name;
    std::vector<Check> checks;
    std::vector<Check> field_dependent;  // expected = value over Q, actual = value over the chosen field
};

json prime_json(const std::set<std::vector<std::string>>& primes) {
    json out = json::array();
    for (const auto& p : primes) out.push_back(p);
    return out;
}

json prime_json(const std::vector<std::vector<std::string>>& primes) {
    std::set<std::vector<std::string>> sorted;
    for (auto p : primes) {
        std::sort(p.begin(), p.end());
        sorted.insert(std::move(p));
    }
    return prime_json(sorted);
}

Example six_by_six(FieldSpec field) {
    const golden::SixBySixFacts facts;
    const Graph g = golden::six_by_six();
    const auto d = independence_complex(g);
    const Graph h = delete_closed_neighborhood(g, g.vertex_set({"x6"}));
    const Graph k = delete_closed_neighborhood(g, g.vertex_set({"y5", "y6"}));
    const auto q = FieldSpec::rationals();
    const Report rg = classify(g, q), rh = classify(h, q), rk = classify(k, q);
    const auto primes = minimal_primes(d);
    const auto codim = connected_in_codim_ideal(primes, rg.height, 2);
    Labeling identity;
    for (int t = 1; t <= 6; ++t) {
        identity.pairs.emplace_back(g.require_index("x" + std::to_string(t)), g.require_index("y" + std::to_string(t)));
    }

    Example e{"6x6 example", {}, {}};
    e.checks = {
        {"vertices", 12, g.vertex_count()},
        {"edges", 20, g.edge_count()},
        {"unmixed", facts.unmixed, is_unmixed(g)},
        {"associated primes", prime_json(golden::six_by_six_primes()), prime_json(primes.by_name())},
        {"dim R/I", facts.dim, rg.krull_dim},
        {"depth R/I", facts.depth, rg.depth},
        {"G aCM", facts.acm, rg.is_ACM},
        {"connected in codimension 2", facts.codim2, codim.connected},
        {"ht(I) + 2", facts.codim2_bound, codim.threshold},
        {"labeling (i)-(iii) for x_i ~ y_i", true, verify_labeling(g, identity)},
        {"H = G - N[x6] aCM", facts.h_acm, rh.is_ACM},
        {"K = G - N[y5,y6] aCM", facts.k_acm, rk.is_ACM},
        {"K CM", facts.k_cm, rk.is_CM},
    };
    if (!field.is_rational()) {
        const Report fg = classify(g, field), fh = classify(h, field), fk = classify(k, field);
        e.field_dependent = {
            {"depth R/I", rg.depth, fg.depth},
            {"G aCM", rg.is_ACM, fg.is_ACM},
            {"H aCM", rh.is_ACM, fh.is_ACM},
            {"K aCM", rk.is_ACM, fk.is_ACM},
            {"K CM", rk.is_CM, fk.is_CM},
        };
    }
    return e;
}

Example four_by_four(FieldSpec field) {
    const golden::FourByFourFacts facts;
    const Graph g = golden::four_by_four();
    const auto d = independence_complex(g);
    const auto primes = minimal_primes(d);
    const int ht = height(d);
    const auto codim = connected_in_codim_ideal(primes, ht, 2);
    // The stated sequence p1, p2, p3, p4 in the order listed.
    int worst = 0;
    const auto listed = golden::four_by_four_primes();
    for (std::size_t i = 0; i + 1 < listed.size(); ++i) {
        std::set<std::string> sum(listed[i].begin(), listed[i].end());
        sum.insert(listed[i + 1].begin(), listed[i + 1].end());
        worst = std::max(worst, static_cast<int>(sum.size()));
    }

    Example e{"4x4 example", {}, {}};
    e.checks = {
        {"generators of I(G)", facts.generators, stanley_reisner(d).generators.size()},
        {"associated primes", prime_json(listed), prime_json(primes.by_name())},
        {"ht(I) + 2", facts.codim2_bound, codim.threshold},
        {"consecutive sums p1..p4 within ht(I) + 2", true, worst <= codim.threshold},
        {"connected in codimension 2", facts.codim2, codim.connected},
        {"unmixed", facts.unmixed, is_unmixed(g)},
    };
    if (!field.is_rational()) {
        const Report rq = classify(g, FieldSpec::rationals()), rf = classify(g, field);
        e.field_dependent = {
            {"depth R/I", rq.depth, rf.depth},
            {"G aCM", rq.is_ACM, rf.is_ACM},
        };
    }
    return e;
}

}  // namespace

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
    const std::vector<Example> examples{six_by_six(cfg.field), four_by_four(cfg.field)};
    bool all_match = true;
    for (const auto& e : examples) {
        for (const auto& c : e.checks) all_match = all_match && c.expected == c.actual;
    }

    if (cfg.json) {
        json list = json::array();
        for (const auto& e : examples) {
            json checks = json::array();
            for (const auto& c : e.checks) {
                checks.push_back({{"quantity", c.quantity},
                                  {"expected", c.expected},
                                  {"actual", c.actual},
                                  {"match", c.expected == c.actual}});
            }
            json item = {{"name", e.name}, {"checks", std::move(checks)}};
            if (!cfg.field.is_rational()) {
                json cmp = json::array();
                for (const auto& c : e.field_dependent) {
                    cmp.push_back({{"quantity", c.quantity},
                                   {"Q", c.expected},
                                   {cfg.field.name(), c.actual},
                                   {"agree", c.expected == c.actual}});
                }
                item["field_comparison"] = std::move(cmp);
            }
            list.push_back(std::move(item));
        }
        out << dump({{"schema", kSchema},
                     {"command", "reproduce"},
                     {"field", cfg.field.name()},
                     {"examples", std::move(list)},
                     {"all_match", all_match}});
        return all_match ? kSuccess : kMismatch;
    }

    for (const auto& e : examples) {
        out << e.name << " (over Q)\n";
        for (const auto& c : e.checks) {
            const bool ok = c.expected == c.actual;
            out << "  [" << (ok ? "ok" : "MISMATCH") << "] " << c.quantity << ": expected " << c.expected.dump();
            if (!ok) out << ", got " << c.actual.dump();
            out << "\n";
        }
        if (!e.field_dependent.empty()) {
            out << "  recomputed over " << cfg.field.name() << ":\n";
            for (const auto& c : e.field_dependent) {
                out << "    " << c.quantity << ": Q " << c.expected.dump() << ", " << cfg.field.name() << " "
                    << c.actual.dump() << (c.expected == c.actual ? "" : "  (DISAGREE)") << "\n";
            }
        }
    }
    out << (all_match ? "all quantities match\n" : "some quantities do not match\n");
    return all_match ? kSuccess : kMismatch;
}

}  // namespace edgeideal::cli
