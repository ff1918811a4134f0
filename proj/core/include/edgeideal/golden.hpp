#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal::golden {

/// Unmixed 6x6 bipartite graph that is connected in codimension two, admits
/// the labeling conditions, and still is not aCM.
std::string_view six_by_six_edges();
/// Mixed 4x4 bipartite graph whose edge ideal is connected in codimension two.
std::string_view four_by_four_edges();

Graph six_by_six();
Graph four_by_four();

/// Associated primes as lists of variable names.
std::vector<std::vector<std::string>> six_by_six_primes();
std::vector<std::vector<std::string>> four_by_four_primes();

struct SixBySixFacts {
    int dim = 6;
    int depth = 4;
    bool acm = false;
    bool unmixed = true;
    bool codim2 = true;
    int codim2_bound = 8;
    bool h_acm = true;
    bool k_acm = true;
    bool k_cm = false;
};

struct FourByFourFacts {
    int generators = 13;
    bool unmixed = false;
    bool codim2 = true;
    int codim2_bound = 6;
};

}  // namespace edgeideal::golden
