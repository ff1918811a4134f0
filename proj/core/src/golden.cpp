#include "edgeideal/golden.hpp"

#include "edgeideal/edge_list.hpp"

namespace edgeideal::golden {

std::string_view six_by_six_edges() {
    return "#X: x1 x2 x3 x4 x5 x6\n"
           "#Y: y1 y2 y3 y4 y5 y6\n"
           "x1 y1\nx1 y2\nx1 y3\nx1 y4\nx1 y5\nx1 y6\n"
           "x2 y1\nx2 y2\nx2 y3\nx2 y4\nx2 y5\nx2 y6\n"
           "x3 y3\nx3 y4\n"
           "x4 y3\nx4 y4\n"
           "x5 y5\nx5 y6\n"
           "x6 y5\nx6 y6\n";
}

std::string_view four_by_four_edges() {
    return "#X: x1 x2 x3 x4\n"
           "#Y: y1 y2 y3 y4\n"
           "x1 y1\nx1 y2\n"
           "x2 y1\nx2 y2\nx2 y3\n"
           "x3 y1\nx3 y2\nx3 y3\nx3 y4\n"
           "x4 y1\nx4 y2\nx4 y3\nx4 y4\n";
}

Graph six_by_six() { return parse_graph(six_by_six_edges()); }
Graph four_by_four() { return parse_graph(four_by_four_edges()); }

std::vector<std::vector<std::string>> six_by_six_primes() {
    return {
        {"x1", "x2", "x3", "x4", "x5", "x6"},
        {"x1", "x2", "x3", "x4", "y5", "y6"},
        {"x1", "x2", "x5", "x6", "y3", "y4"},
        {"x1", "x2", "y3", "y4", "y5", "y6"},
        {"y1", "y2", "y3", "y4", "y5", "y6"},
    };
}

std::vector<std::vector<std::string>> four_by_four_primes() {
    return {
        {"x1", "x2", "x3", "x4"},
        {"x2", "x3", "x4", "y1", "y2"},
        {"x3", "x4", "y1", "y2", "y3"},
        {"y1", "y2", "y3", "y4"},
    };
}

}  // namespace edgeideal::golden
