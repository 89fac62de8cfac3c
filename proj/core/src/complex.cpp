#include "collapsar/complex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace collapsar {

namespace {

std::string face_to_string(const int* v, int arity) {
    std::string s = "{";
    for (int i = 0; i < arity; ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    s += "}";
    return s;
}

}  // namespace

Complex3 Complex3::from_facets(const std::vector<std::array<int, 4>>& raw) {
    if (raw.empty()) throw ValidationError("facet list is empty");

    // Relabel by first appearance, in input order.
    std::map<int, int> relabel;
    std::vector<Facet> facets;
    facets.reserve(raw.size());
    for (const auto& f : raw) {
        Facet g;
        for (int i = 0; i < 4; ++i) {
            const int v = f[static_cast<size_t>(i)];
            if (v <= 0)
                throw ValidationError("vertex labels must be positive, got " + std::to_string(v));
            auto [it, fresh] = relabel.try_emplace(v, static_cast<int>(relabel.size()) + 1);
            (void)fresh;
            g[static_cast<size_t>(i)] = it->second;
        }
        std::sort(g.begin(), g.end());
        if (std::adjacent_find(g.begin(), g.end()) != g.end())
            throw ValidationError("facet " + face_to_string(f.data(), 4) + " repeats a vertex");
        facets.push_back(g);
    }
    std::sort(facets.begin(), facets.end());
    if (std::adjacent_find(facets.begin(), facets.end()) != facets.end())
        throw ValidationError("duplicate facet in input");

    Complex3 c;
    c.facets_ = std::move(facets);
    c.vertex_count_ = static_cast<int>(relabel.size());
    return c;
}

Complex3 Complex3::parse(std::string_view text) {
    size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string_view::npos) throw ParseError("empty input", 1);

    std::vector<std::array<int, 4>> raw;
    if (text[pos] == '{' || text[pos] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), 1);
        }
        const nlohmann::json* arr = &j;
        if (j.is_object()) {
            if (!j.contains("facets")) throw ParseError("JSON object lacks \"facets\"", 1);
            arr = &j["facets"];
        }
        if (!arr->is_array()) throw ParseError("\"facets\" is not an array", 1);
        for (const auto& f : *arr) {
            if (!f.is_array() || f.size() != 4)
                throw ParseError("each facet must be an array of 4 integers", 1);
            std::array<int, 4> g{};
            for (int i = 0; i < 4; ++i) {
                if (!f[static_cast<size_t>(i)].is_number_integer())
                    throw ParseError("facet entries must be integers", 1);
                g[static_cast<size_t>(i)] = f[static_cast<size_t>(i)].get<int>();
            }
            raw.push_back(g);
        }
    } else {
        std::istringstream in{std::string(text)};
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::vector<long long> nums;
            std::string tok;
            while (ls >> tok) {
                try {
                    size_t used = 0;
                    const long long v = std::stoll(tok, &used);
                    if (used != tok.size()) throw std::invalid_argument(tok);
                    nums.push_back(v);
                } catch (const std::exception&) {
                    throw ParseError("non-integer token '" + tok + "'", line_no);
                }
            }
            if (nums.empty()) continue;
            if (nums.size() != 4)
                throw ParseError("expected 4 vertices per facet, got " +
                                     std::to_string(nums.size()),
                                 line_no);
            std::array<int, 4> g{};
            for (int i = 0; i < 4; ++i) {
                const long long v = nums[static_cast<size_t>(i)];
                if (v <= 0 || v > 1'000'000'000)
                    throw ParseError("vertex label out of range: " + std::to_string(v), line_no);
                g[static_cast<size_t>(i)] = static_cast<int>(v);
            }
            std::set<int> distinct(g.begin(), g.end());
            if (distinct.size() != 4) throw ParseError("facet repeats a vertex", line_no);
            raw.push_back(g);
        }
        if (raw.empty()) throw ParseError("no facets found", line_no ? line_no : 1);
    }
    return from_facets(raw);
}

std::string Complex3::to_text() const {
    std::string out;
    for (const Facet& f : facets_) {
        out += std::to_string(f[0]);
        for (int i = 1; i < 4; ++i) out += " " + std::to_string(f[static_cast<size_t>(i)]);
        out += "\n";
    }
    return out;
}

std::string Complex3::to_json_text() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Facet& f : facets_) arr.push_back({f[0], f[1], f[2], f[3]});
    nlohmann::json j;
    j["facets"] = arr;
    return j.dump();
}

FVector f_vector(const Complex3& c) {
    std::set<Edge> edges;
    std::set<Tri> tris;
    for (const Facet& f : c.facets()) {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                edges.insert({f[static_cast<size_t>(i)], f[static_cast<size_t>(j)]});
                for (int k = j + 1; k < 4; ++k)
                    tris.insert({f[static_cast<size_t>(i)], f[static_cast<size_t>(j)],
                                 f[static_cast<size_t>(k)]});
            }
    }
    return FVector{c.vertex_count(), static_cast<long long>(edges.size()),
                   static_cast<long long>(tris.size()),
                   static_cast<long long>(c.facet_count())};
}

int EdgeTable::index_of(int u, int v) const {
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return -1;
    return static_cast<int>(it - edges.begin());
}

EdgeTable edge_table(const Complex3& c) {
    std::map<Edge, int> deg;
    for (const Facet& f : c.facets())
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                ++deg[{f[static_cast<size_t>(i)], f[static_cast<size_t>(j)]}];
    EdgeTable t;
    t.edges.reserve(deg.size());
    t.degree.reserve(deg.size());
    for (const auto& [e, d] : deg) {  // std::map iterates lexicographically
        t.edges.push_back(e);
        t.degree.push_back(d);
    }
    return t;
}

int TriangleTable::index_of(const Tri& t) const {
    auto it = std::lower_bound(triangles.begin(), triangles.end(), t);
    if (it == triangles.end() || *it != t) return -1;
    return static_cast<int>(it - triangles.begin());
}

TriangleTable triangle_table(const Complex3& c) {
    std::set<Tri> tris;
    for (const Facet& f : c.facets())
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k)
                    tris.insert({f[static_cast<size_t>(i)], f[static_cast<size_t>(j)],
                                 f[static_cast<size_t>(k)]});
    TriangleTable t;
    t.triangles.assign(tris.begin(), tris.end());
    return t;
}

DualGraph::DualGraph(int node_count, std::vector<DualArc> arcs)
    : node_count_(node_count), arcs_(std::move(arcs)) {
    if (node_count_ <= 0) throw ValidationError("graph needs at least one node");
    adjacency_.assign(static_cast<size_t>(node_count_), {});
    for (size_t id = 0; id < arcs_.size(); ++id) {
        const DualArc& a = arcs_[id];
        if (a.u < 0 || a.u >= node_count_ || a.v < 0 || a.v >= node_count_)
            throw ValidationError("arc endpoint out of range");
        if (a.u == a.v) throw ValidationError("self-loop arcs are not allowed");
        adjacency_[static_cast<size_t>(a.u)].push_back(static_cast<int>(id));
        adjacency_[static_cast<size_t>(a.v)].push_back(static_cast<int>(id));
    }
}

bool DualGraph::is_connected() const {
    std::vector<char> seen(static_cast<size_t>(node_count_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int arc_id : adjacency_[static_cast<size_t>(u)]) {
            const int w = other_end(arc_id, u);
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == node_count_;
}

DualGraph dual_graph(const Complex3& c) {
    const TriangleTable tt = triangle_table(c);
    std::vector<std::vector<int>> facets_of(static_cast<size_t>(tt.size()));
    for (int fi = 0; fi < c.facet_count(); ++fi) {
        const Facet& f = c.facets()[static_cast<size_t>(fi)];
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k) {
                    const int ti = tt.index_of({f[static_cast<size_t>(i)],
                                                f[static_cast<size_t>(j)],
                                                f[static_cast<size_t>(k)]});
                    facets_of[static_cast<size_t>(ti)].push_back(fi);
                }
    }
    std::vector<DualArc> arcs;
    arcs.reserve(facets_of.size());
    for (int ti = 0; ti < tt.size(); ++ti) {
        const auto& owners = facets_of[static_cast<size_t>(ti)];
        if (owners.size() != 2)
            throw ValidationError(
                "triangle " + face_to_string(tt.triangles[static_cast<size_t>(ti)].data(), 3) +
                " lies in " + std::to_string(owners.size()) + " facets, expected 2");
        arcs.push_back({owners[0], owners[1], ti});
    }
    return DualGraph(c.facet_count(), std::move(arcs));
}

namespace {

// Is the graph given by adjacency lists a single cycle on >= 3 nodes?
bool is_single_cycle(const std::map<int, std::vector<int>>& adj) {
    if (adj.size() < 3) return false;
    for (const auto& [v, nbrs] : adj)
        if (nbrs.size() != 2) return false;
    // connectivity walk
    std::set<int> seen;
    std::vector<int> stack{adj.begin()->first};
    seen.insert(adj.begin()->first);
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : adj.at(u))
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == adj.size();
}

}  // namespace

ManifoldReport is_closed_3_manifold(const Complex3& c) {
    ManifoldReport r;

    // (a) every triangle in exactly 2 facets
    std::map<Tri, int> tri_count;
    for (const Facet& f : c.facets())
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k)
                    ++tri_count[{f[static_cast<size_t>(i)], f[static_cast<size_t>(j)],
                                 f[static_cast<size_t>(k)]}];
    r.triangles_ok = true;
    for (const auto& [t, n] : tri_count) {
        if (n != 2) {
            r.triangles_ok = false;
            r.first_failure = "triangle " + face_to_string(t.data(), 3) + " lies in " +
                              std::to_string(n) + " facets";
            break;
        }
    }

    // (b) every edge link a single cycle
    r.edge_links_ok = true;
    if (r.triangles_ok) {
        const EdgeTable et = edge_table(c);
        for (int ei = 0; ei < et.size() && r.edge_links_ok; ++ei) {
            const Edge e = et.edges[static_cast<size_t>(ei)];
            std::map<int, std::vector<int>> link;  // vertex -> adjacent link vertices
            for (const Facet& f : c.facets()) {
                if (!std::includes(f.begin(), f.end(), e.begin(), e.end())) continue;
                std::vector<int> rest;
                for (int v : f)
                    if (v != e[0] && v != e[1]) rest.push_back(v);
                link[rest[0]].push_back(rest[1]);
                link[rest[1]].push_back(rest[0]);
            }
            if (!is_single_cycle(link)) {
                r.edge_links_ok = false;
                if (r.first_failure.empty())
                    r.first_failure =
                        "edge " + face_to_string(e.data(), 2) + " link is not a single cycle";
            }
        }
    }

    // (c) every vertex link a connected closed surface with Euler characteristic 2
    r.vertex_links_ok = true;
    if (r.triangles_ok) {
        for (int v = 1; v <= c.vertex_count() && r.vertex_links_ok; ++v) {
            std::set<Tri> link_tris;
            for (const Facet& f : c.facets()) {
                if (!std::binary_search(f.begin(), f.end(), v)) continue;
                Tri t;
                int idx = 0;
                for (int w : f)
                    if (w != v) t[static_cast<size_t>(idx++)] = w;
                link_tris.insert(t);
            }
            if (link_tris.empty()) {
                r.vertex_links_ok = false;
                r.first_failure = "vertex " + std::to_string(v) + " has empty link";
                break;
            }
            std::set<int> lv;
            std::map<Edge, int> le;
            for (const Tri& t : link_tris) {
                for (int w : t) lv.insert(w);
                ++le[{t[0], t[1]}];
                ++le[{t[0], t[2]}];
                ++le[{t[1], t[2]}];
            }
            bool closed = true;
            for (const auto& [e, n] : le)
                if (n != 2) closed = false;
            // connectivity of the link over its triangles
            std::map<int, std::set<int>> vadj;
            for (const auto& [e, n] : le) {
                vadj[e[0]].insert(e[1]);
                vadj[e[1]].insert(e[0]);
            }
            std::set<int> seen;
            std::vector<int> stack{*lv.begin()};
            seen.insert(*lv.begin());
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (int w : vadj[u])
                    if (seen.insert(w).second) stack.push_back(w);
            }
            const long long chi = static_cast<long long>(lv.size()) -
                                  static_cast<long long>(le.size()) +
                                  static_cast<long long>(link_tris.size());
            if (!closed || seen.size() != lv.size() || chi != 2) {
                r.vertex_links_ok = false;
                r.first_failure =
                    "vertex " + std::to_string(v) + " link is not a 2-sphere (chi " +
                    std::to_string(chi) + (closed ? "" : ", has boundary") + ")";
            }
        }
    }

    // connectivity of the complex itself (via the 1-skeleton)
    {
        std::map<int, std::vector<int>> adj;
        for (const Facet& f : c.facets())
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    adj[f[static_cast<size_t>(i)]].push_back(f[static_cast<size_t>(j)]);
                    adj[f[static_cast<size_t>(j)]].push_back(f[static_cast<size_t>(i)]);
                }
        std::set<int> seen;
        std::vector<int> stack{1};
        seen.insert(1);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (seen.insert(w).second) stack.push_back(w);
        }
        r.connected = static_cast<int>(seen.size()) == c.vertex_count();
        if (!r.connected && r.first_failure.empty()) r.first_failure = "complex is disconnected";
    }
    return r;
}

void require_closed_connected(const Complex3& c) {
    const ManifoldReport r = is_closed_3_manifold(c);
    if (!r.pass())
        throw ValidationError("not a closed 3-manifold triangulation: " + r.first_failure);
    if (!r.connected) throw ValidationError("complex is disconnected");
}

}  // namespace collapsar
