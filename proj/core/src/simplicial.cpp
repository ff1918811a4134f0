#include "edgeideal/simplicial.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "edgeideal/error.hpp"

namespace edgeideal {

namespace {

void check_ground(const std::vector<std::string>& ground) {
    if (ground.size() > static_cast<std::size_t>(kMaxVertices)) {
        throw ResourceError("ground set has " + std::to_string(ground.size()) + " vertices; limit is " +
                            std::to_string(kMaxVertices));
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& n : ground) {
        if (!seen.insert(n).second) throw DomainError("duplicate ground vertex '" + n + "'");
    }
}

std::vector<VertexSet> maximal_only(std::vector<VertexSet> faces) {
    // larger sets first so each survivor only needs checking against kept ones
    std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VertexSet> kept;
    for (auto f : faces) {
        bool covered = std::any_of(kept.begin(), kept.end(), [&](VertexSet g) { return g.contains(f); });
        if (!covered) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end(), lex_less);
    return kept;
}

std::set<std::vector<std::string>> named_facets(const SimplicialComplex& d) {
    std::set<std::vector<std::string>> out;
    for (auto f : d.facets()) {
        auto names = d.names_of(f);
        std::sort(names.begin(), names.end());
        out.insert(std::move(names));
    }
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> ground, std::vector<VertexSet> facets)
    : ground_(std::move(ground)), facets_(std::move(facets)) {
    check_ground(ground_);
    const VertexSet all = ground_set();
    for (auto f : facets_) {
        if (!all.contains(f)) throw DomainError("facet is not contained in the ground set");
    }
    std::sort(facets_.begin(), facets_.end(), lex_less);
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        for (std::size_t j = 0; j < facets_.size(); ++j) {
            if (i != j && facets_[j].contains(facets_[i])) throw DomainError("facets do not form an antichain");
        }
    }
}

SimplicialComplex SimplicialComplex::generated_by(std::vector<std::string> ground, std::vector<VertexSet> faces) {
    return SimplicialComplex(std::move(ground), maximal_only(std::move(faces)));
}

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> ground) {
    const auto all = VertexSet::range(static_cast<int>(ground.size()));
    return SimplicialComplex(std::move(ground), {all});
}

SimplicialComplex SimplicialComplex::empty_complex(std::vector<std::string> ground) {
    return SimplicialComplex(std::move(ground), {VertexSet{}});
}

bool SimplicialComplex::contains_face(VertexSet s) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return f.contains(s); });
}

VertexSet SimplicialComplex::support() const {
    VertexSet s;
    for (auto f : facets_) s |= f;
    return s;
}

std::vector<std::vector<VertexSet>> faces_by_size(std::span<const VertexSet> facets) {
    if (facets.empty()) return {};
    int top = 0;
    for (auto f : facets) top = std::max(top, f.size());
    std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(top) + 1);
    std::vector<std::uint64_t> faces;
    for (auto facet : facets) {
        const std::uint64_t f = facet.bits();
        for (std::uint64_t s = f;; s = (s - 1) & f) {
            faces.push_back(s);
            if (s == 0) break;
        }
    }
    if (facets.size() > 1) {
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    }
    for (auto s : faces) by_size[static_cast<std::size_t>(std::popcount(s))].push_back(VertexSet{s});
    for (auto& layer : by_size) std::sort(layer.begin(), layer.end());
    return by_size;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const {
    return edgeideal::faces_by_size(facets_);
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t n = 0;
    for (const auto& layer : faces_by_size()) n += layer.size();
    return n;
}

std::optional<int> SimplicialComplex::index_of(std::string_view name) const {
    auto it = std::find(ground_.begin(), ground_.end(), name);
    if (it == ground_.end()) return std::nullopt;
    return static_cast<int>(it - ground_.begin());
}

VertexSet SimplicialComplex::vertex_set(std::initializer_list<std::string_view> names) const {
    VertexSet s;
    for (auto n : names) {
        auto i = index_of(n);
        if (!i) throw DomainError("unknown vertex '" + std::string(n) + "'");
        s.insert(*i);
    }
    return s;
}

VertexSet SimplicialComplex::vertex_set(const std::vector<std::string>& names) const {
    VertexSet s;
    for (const auto& n : names) {
        auto i = index_of(n);
        if (!i) throw DomainError("unknown vertex '" + n + "'");
        s.insert(*i);
    }
    return s;
}

std::vector<std::string> SimplicialComplex::names_of(VertexSet s) const {
    std::vector<std::string> out;
    for (int v : s) out.push_back(ground_.at(static_cast<std::size_t>(v)));
    return out;
}

bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void() || b.is_void()) return a.is_void() && b.is_void();
    return named_facets(a) == named_facets(b);
}

bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (auto f : a.facets()) {
        VertexSet mapped;
        for (const auto& n : a.names_of(f)) {
            auto i = b.index_of(n);
            if (!i) return false;
            mapped.insert(*i);
        }
        if (!b.contains_face(mapped)) return false;
    }
    return true;
}

SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex(g.names(), maximal_independent_sets(g));
}

SimplicialComplex link(const SimplicialComplex& d, VertexSet face) {
    if (!d.ground_set().contains(face) || !d.contains_face(face)) throw DomainError("link: set is not a face");
    const VertexSet keep = d.ground_set() - face;
    std::vector<std::string> ground;
    for (int v : keep) ground.push_back(d.ground()[static_cast<std::size_t>(v)]);
    std::vector<VertexSet> facets;
    for (auto f : d.facets()) {
        if (f.contains(face)) facets.push_back(compress(f - face, keep));
    }
    return SimplicialComplex(std::move(ground), std::move(facets));
}

SimplicialComplex restrict(const SimplicialComplex& d, VertexSet w) {
    if (!d.ground_set().contains(w)) throw DomainError("restrict: set is not contained in the ground set");
    std::vector<std::string> ground;
    for (int v : w) ground.push_back(d.ground()[static_cast<std::size_t>(v)]);
    if (d.is_void()) return SimplicialComplex(std::move(ground), {});
    std::vector<VertexSet> faces;
    for (auto f : d.facets()) faces.push_back(compress(f & w, w));
    return SimplicialComplex::generated_by(std::move(ground), std::move(faces));
}

int dimension(const SimplicialComplex& d) {
    if (d.is_void()) throw DomainError("dimension of the void complex is undefined");
    int top = 0;
    for (auto f : d.facets()) top = std::max(top, f.size());
    return top - 1;
}

bool is_pure(const SimplicialComplex& d) {
    if (d.is_void()) throw DomainError("purity of the void complex is undefined");
    const int size = d.facets().front().size();
    return std::all_of(d.facets().begin(), d.facets().end(), [&](VertexSet f) { return f.size() == size; });
}

SimplicialComplex cone(const SimplicialComplex& d, const std::string& apex) {
    auto ground = d.ground();
    ground.push_back(apex);
    const int a = d.ground_size();
    std::vector<VertexSet> facets;
    for (auto f : d.facets()) facets.push_back(f | VertexSet::single(a));
    return SimplicialComplex(std::move(ground), std::move(facets));
}

AdjacencyGraph::AdjacencyGraph(std::vector<std::vector<int>> adjacency) : adj_(std::move(adjacency)) {
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool AdjacencyGraph::connected() const {
    if (adj_.empty()) return true;
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                queue.push(v);
            }
        }
    }
    return count == adj_.size();
}

std::optional<std::vector<int>> AdjacencyGraph::shortest_path(int from, int to) const {
    if (from < 0 || to < 0 || from >= size() || to >= size()) throw DomainError("path endpoint out of range");
    std::vector<int> parent(adj_.size(), -2);
    parent[static_cast<std::size_t>(from)] = -1;
    std::queue<int> queue;
    queue.push(from);
    while (!queue.empty() && parent[static_cast<std::size_t>(to)] == -2) {
        int u = queue.front();
        queue.pop();
        for (int v : neighbors(u)) {
            if (parent[static_cast<std::size_t>(v)] == -2) {
                parent[static_cast<std::size_t>(v)] = u;
                queue.push(v);
            }
        }
    }
    if (parent[static_cast<std::size_t>(to)] == -2) return std::nullopt;
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

CodimConnectivity connected_in_codim(const SimplicialComplex& d, int k) {
    if (d.is_void()) throw DomainError("connectivity of the void complex is undefined");
    if (k < 0) throw DomainError("codimension must be non-negative");
    const int threshold = dimension(d) - k;
    const auto& facets = d.facets();
    std::vector<std::vector<int>> adj(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (std::size_t j = i + 1; j < facets.size(); ++j) {
            if ((facets[i] & facets[j]).size() - 1 >= threshold) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
        }
    }
    CodimConnectivity c{k, threshold, false, AdjacencyGraph(std::move(adj))};
    c.connected = c.graph.connected();
    return c;
}

std::optional<FacetPath> facet_path(const SimplicialComplex& d, const CodimConnectivity& c, int from, int to) {
    auto idx = c.graph.shortest_path(from, to);
    if (!idx) return std::nullopt;
    FacetPath path;
    for (int i : *idx) path.facets.push_back(d.facets().at(static_cast<std::size_t>(i)));
    for (std::size_t i = 0; i + 1 < path.facets.size(); ++i) {
        const int dim = (path.facets[i] & path.facets[i + 1]).size() - 1;
        path.min_intersection_dim = path.min_intersection_dim ? std::min(*path.min_intersection_dim, dim) : dim;
    }
    return path;
}

SimplicialComplex parse_complex(std::string_view text) {
    std::vector<std::string> ground;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = index.try_emplace(name, static_cast<int>(ground.size()));
        if (inserted) {
            if (ground.size() >= static_cast<std::size_t>(kMaxVertices)) {
                throw ResourceError("more than " + std::to_string(kMaxVertices) + " vertices");
            }
            ground.push_back(name);
        }
        return it->second;
    };
    std::vector<VertexSet> faces;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream words(line);
        std::string tok;
        if (!(words >> tok)) continue;
        if (tok.front() == '#') {
            if (tok == "#ground:") {
                while (words >> tok) intern(tok);
            } else if (tok.rfind("#ground:", 0) == 0) {
                intern(tok.substr(8));
                while (words >> tok) intern(tok);
            }
            continue;
        }
        VertexSet face;
        if (tok != "{}") {
            do {
                face.insert(intern(tok));
            } while (words >> tok);
        }
        faces.push_back(face);
    }
    return SimplicialComplex::generated_by(std::move(ground), std::move(faces));
}

std::string write_complex(const SimplicialComplex& d) {
    std::ostringstream out;
    out << "#complex\n#ground:";
    for (const auto& n : d.ground()) out << ' ' << n;
    out << '\n';
    for (auto f : d.facets()) {
        if (f.empty()) {
            out << "{}\n";
            continue;
        }
        bool first = true;
        for (const auto& n : d.names_of(f)) {
            out << (first ? "" : " ") << n;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace edgeideal
