#include "edgeideal/edge_list.hpp"

#include <sstream>
#include <unordered_map>

#include "edgeideal/error.hpp"

namespace edgeideal {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::string_view trim_left(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

}  // namespace

EdgeListDocument parse_edge_list(std::string_view text) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = index.try_emplace(name, static_cast<int>(names.size()));
        if (inserted) {
            if (names.size() >= static_cast<std::size_t>(kMaxVertices)) {
                throw ResourceError("more than " + std::to_string(kMaxVertices) + " vertices");
            }
            names.push_back(name);
        }
        return it->second;
    };

    std::vector<std::pair<int, int>> edges;
    std::vector<std::size_t> edge_lines;
    std::vector<int> forced_x, forced_y;
    bool has_x = false, has_y = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        line = trim_left(line);
        if (line.empty()) continue;
        if (line.front() == '#') {
            const bool is_x = starts_with(line, "#X:");
            const bool is_y = starts_with(line, "#Y:");
            if (!is_x && !is_y) continue;
            auto& side = is_x ? forced_x : forced_y;
            (is_x ? has_x : has_y) = true;
            for (const auto& tok : split_ws(line.substr(3))) side.push_back(intern(tok));
            continue;
        }
        auto toks = split_ws(line);
        if (toks.size() != 2) {
            throw FormatError("expected two vertex names, found " + std::to_string(toks.size()), line_no);
        }
        if (toks[0] == toks[1]) throw FormatError("loop at vertex '" + toks[0] + "'", line_no);
        const int u = intern(toks[0]);
        const int v = intern(toks[1]);
        edges.emplace_back(u, v);
        edge_lines.push_back(line_no);
    }

    EdgeListDocument doc{Graph(names, edges), std::nullopt};
    if (has_x || has_y) {
        std::vector<int> side(names.size(), -1);
        for (int v : forced_x) side[static_cast<std::size_t>(v)] = 0;
        for (int v : forced_y) {
            if (side[static_cast<std::size_t>(v)] == 0) {
                throw FormatError("vertex '" + names[static_cast<std::size_t>(v)] + "' listed on both sides");
            }
            side[static_cast<std::size_t>(v)] = 1;
        }
        for (std::size_t v = 0; v < names.size(); ++v) {
            if (side[v] == -1) throw FormatError("vertex '" + names[v] + "' missing from the #X/#Y headers");
        }
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) {
                throw FormatError("edge joins two vertices of the same side", edge_lines[e]);
            }
        }
        BipartitePartition p;
        for (std::size_t v = 0; v < names.size(); ++v) (side[v] == 0 ? p.side_x : p.side_y).push_back(static_cast<int>(v));
        doc.sides = std::move(p);
    }
    return doc;
}

Graph parse_graph(std::string_view text) { return parse_edge_list(text).graph; }

std::string write_edge_list(const Graph& g, const std::optional<BipartitePartition>& sides) {
    std::ostringstream out;
    if (sides) {
        out << "#X:";
        for (int v : sides->side_x) out << ' ' << g.name(v);
        out << "\n#Y:";
        for (int v : sides->side_y) out << ' ' << g.name(v);
        out << '\n';
    }
    for (auto [u, v] : g.edges()) out << g.name(u) << ' ' << g.name(v) << '\n';
    return out.str();
}

}  // namespace edgeideal
