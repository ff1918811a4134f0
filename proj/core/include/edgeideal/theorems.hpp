#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgeideal/enumerate.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/invariants.hpp"

namespace edgeideal {

/// Outcome of checking one statement over a family. An empty
/// counterexample list means "verified at this scale", nothing more.
struct VerificationResult {
    std::string id;
    std::string family;
    std::size_t checked = 0;   ///< instances where the hypothesis held
    std::size_t vacuous = 0;   ///< instances skipped because the hypothesis failed
    std::vector<std::string> counterexamples;  ///< serialized inputs
    std::vector<std::string> notes;            ///< logged observations, not assertions
    double elapsed_seconds = 0;

    bool verified() const { return counterexamples.empty(); }
};

struct CheckOptions {
    FieldSpec field = FieldSpec::rationals();
    int jobs = 1;
    int max_vertices = 10;     ///< graph sweeps
    int max_l1 = 4;            ///< K_{m,n} with n <= m <= max_l1
    int ferrers_max_n = 6;
    int exhaustive_complex_n = 5;
    int random_complexes = 10000;
    int mv_splits = 200;
    std::uint64_t seed = 0x5eedULL;
};

struct ClassifiedGraph {
    Graph graph;
    BipartitePartition sides;
    Report report;
};

/// Enumerated connected bipartite graphs, each classified once.
struct GraphFamily {
    int max_vertices = 0;
    FieldSpec field = FieldSpec::rationals();
    std::vector<ClassifiedGraph> members;

    std::string description() const;
};

GraphFamily build_family(const CheckOptions& options);

/// Labeling of an unmixed graph as matched pairs (x_t, y_t), t = 1..n.
struct Labeling {
    std::vector<std::pair<int, int>> pairs;
    friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Checks (i) pairs are edges, (ii) x_i ~ y_j implies i <= j + 1,
/// (iii) x_i ~ y_j and x_j ~ y_k imply x_i ~ y_k; also that the pairs
/// cover every vertex exactly once.
bool verify_labeling(const Graph& g, const Labeling& labeling);

/// Lexicographically least labeling satisfying (i)-(iii), if any. Throws
/// DomainError unless G is bipartite, unmixed and without isolated vertices.
std::optional<Labeling> find_labeling(const Graph& g);
/// Same, but also requires G to be aCM over `field`.
std::optional<Labeling> check_T12(const Graph& g, FieldSpec field);

VerificationResult check_L1(const CheckOptions& options);
VerificationResult check_T3(const GraphFamily& family, const CheckOptions& options);
VerificationResult check_cor1(const GraphFamily& family, const CheckOptions& options);
VerificationResult check_cor2(const GraphFamily& family, const CheckOptions& options);
VerificationResult check_T4(const GraphFamily& family, const CheckOptions& options);
VerificationResult check_T5(const GraphFamily& family, const CheckOptions& options);
VerificationResult check_T2(const CheckOptions& options);
VerificationResult check_T12_family(const GraphFamily& family, const CheckOptions& options);
VerificationResult check_ferrers(const CheckOptions& options);
VerificationResult check_L2(const GraphFamily& family, const CheckOptions& options);
VerificationResult check_L6(const GraphFamily& family, const CheckOptions& options);
VerificationResult check_L7(const GraphFamily& family, const CheckOptions& options);
VerificationResult check_MV(const GraphFamily& family, const CheckOptions& options);

/// Identifiers accepted by run_check.
const std::vector<std::string>& theorem_ids();
bool needs_family(const std::string& id);
/// Throws DomainError on an unknown id. `family` may be null when the
/// check does not use it.
VerificationResult run_check(const std::string& id, const GraphFamily* family, const CheckOptions& options);

}  // namespace edgeideal
