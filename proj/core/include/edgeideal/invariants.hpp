#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/field.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/simplicial.hpp"

namespace edgeideal {

/// Square-free monomial ideal: each generator is the set of its variables.
struct IdealPresentation {
    std::vector<std::string> variables;
    std::vector<VertexSet> generators;  ///< size, then lexicographic
};

/// Minimal nonfaces, found as the minimal transversals of the facet complements.
IdealPresentation stanley_reisner(const SimplicialComplex& d);

/// Minimal primes of I_Δ as generator sets; p_F is generated by ground ∖ F.
struct PrimeSet {
    std::vector<std::string> variables;
    std::vector<VertexSet> primes;

    std::vector<int> heights() const;
    /// Primes as sorted name lists, for comparison across variable orders.
    std::set<std::vector<std::string>> by_name() const;
};

/// One prime per facet, in lexicographic order of generator sets.
PrimeSet minimal_primes(const SimplicialComplex& d);

/// Ground size minus the largest facet size.
int height(const SimplicialComplex& d);

/// Multigraded Betti numbers of R/I_Δ, nonzero entries only.
class BettiTable {
public:
    struct Entry {
        int i = 0;
        VertexSet w;
        std::int64_t value = 0;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    BettiTable(std::vector<std::string> variables, std::vector<Entry> entries);

    const std::vector<std::string>& variables() const { return variables_; }
    /// Ordered by W (colex), then i.
    const std::vector<Entry>& entries() const { return entries_; }
    std::int64_t at(int i, VertexSet w) const;
    /// beta_{i,j} = sum over |W| = j.
    std::map<std::pair<int, int>, std::int64_t> graded() const;
    int projective_dimension() const;

private:
    std::vector<std::string> variables_;
    std::vector<Entry> entries_;
};

struct HochsterOptions {
    int max_ground = 24;
    int jobs = 1;
};

/// beta_{i,W} = dim H~_{|W|-i-1}(Δ|_W) over every W ⊆ ground. Restrictions that
/// are cones (in particular W a face) contribute nothing and are skipped.
/// Throws ResourceError above the ground-size guard, DomainError on void.
BettiTable hochster_betti(const SimplicialComplex& d, FieldSpec field, const HochsterOptions& options = {});

int proj_dim(const SimplicialComplex& d, FieldSpec field, const HochsterOptions& options = {});
/// Auslander-Buchsbaum: n - pd.
int depth(const SimplicialComplex& d, FieldSpec field, const HochsterOptions& options = {});
/// n - height = dim Δ + 1.
int krull_dim(const SimplicialComplex& d);

struct Report {
    int n_vars = 0;
    int height = 0;
    int krull_dim = 0;
    int proj_dim = 0;
    int depth = 0;
    bool is_CM = false;
    bool is_ACM = false;
    bool is_unmixed = false;
    bool codim2_connected = false;
    /// Only known when the input was a graph with at least one edge.
    std::optional<int> min_positive_degree;
    FieldSpec field = FieldSpec::rationals();

    friend bool operator==(const Report&, const Report&) = default;
};

/// Throws std::logic_error if the two aCM tests (pd <= ht + 1 and
/// depth >= dim - 1) disagree.
Report classify(const SimplicialComplex& d, FieldSpec field, const HochsterOptions& options = {});
Report classify(const Graph& g, FieldSpec field, const HochsterOptions& options = {});

/// Reisner: every link has vanishing reduced homology below its dimension.
bool reisner_cm(const SimplicialComplex& d, FieldSpec field);

/// Primes p, q adjacent when |gen(p) ∪ gen(q)| <= ht_ideal + k. The
/// threshold field holds ht_ideal + k.
CodimConnectivity connected_in_codim_ideal(const PrimeSet& primes, int ht_ideal, int k);

struct FerrersInvariants {
    int height = 0;
    int proj_dim = 0;
    /// Irredundant decomposition, one prime per jump index plus the all-x prime.
    PrimeSet primes;
    std::vector<int> prime_heights;
    bool unmixed = false;
};

/// Closed forms for the Ferrers ideal: ht = min(min_j(lambda_j + j - 1), n),
/// pd = max_j(lambda_j + j - 1). Variables are named as in ferrers_graph.
FerrersInvariants ferrers_invariants(const FerrersPartition& lambda);

}  // namespace edgeideal
