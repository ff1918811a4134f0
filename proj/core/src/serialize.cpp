#include "edgeideal/serialize.hpp"

namespace edgeideal {

using nlohmann::json;

json to_json(const Report& r) {
    return {
        {"n_vars", r.n_vars},
        {"height", r.height},
        {"krull_dim", r.krull_dim},
        {"proj_dim", r.proj_dim},
        {"depth", r.depth},
        {"is_CM", r.is_CM},
        {"is_ACM", r.is_ACM},
        {"is_unmixed", r.is_unmixed},
        {"codim2_connected", r.codim2_connected},
        {"min_positive_degree", r.min_positive_degree ? json(*r.min_positive_degree) : json(nullptr)},
        {"field", r.field.name()},
    };
}

json to_json(const BettiVector& b) {
    json out = json::array();
    for (auto v : b.values()) out.push_back(v);
    return out;
}

json to_json(const PrimeSet& p) {
    json out = json::array();
    for (auto prime : p.primes) {
        json gens = json::array();
        for (int v : prime) gens.push_back(p.variables.at(static_cast<std::size_t>(v)));
        out.push_back(std::move(gens));
    }
    return out;
}

json to_json(const BettiTable& t, bool detail) {
    json graded = json::array();
    for (const auto& [key, value] : t.graded()) graded.push_back({key.first, key.second, value});
    json out = {{"projective_dimension", t.projective_dimension()}, {"graded", std::move(graded)}};
    if (detail) {
        json entries = json::array();
        for (const auto& e : t.entries()) {
            json w = json::array();
            for (int v : e.w) w.push_back(t.variables().at(static_cast<std::size_t>(v)));
            entries.push_back({e.i, std::move(w), e.value});
        }
        out["entries"] = std::move(entries);
    }
    return out;
}

json to_json(const FerrersInvariants& f) {
    return {
        {"height", f.height},
        {"proj_dim", f.proj_dim},
        {"primes", to_json(f.primes)},
        {"prime_heights", f.prime_heights},
        {"unmixed", f.unmixed},
    };
}

json to_json(const VerificationResult& r, bool timing) {
    json out = {
        {"id", r.id},
        {"family", r.family},
        {"checked", r.checked},
        {"vacuous", r.vacuous},
        {"counterexamples", r.counterexamples},
        {"notes", r.notes},
        {"verified", r.verified()},
    };
    if (timing) out["elapsed_seconds"] = r.elapsed_seconds;
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace edgeideal
