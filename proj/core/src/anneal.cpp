#include "collapsar/anneal.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "collapsar/invariants.hpp"
#include "collapsar/rng.hpp"

namespace collapsar {

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Move14: return "1-4";
        case MoveKind::Move23: return "2-3";
        case MoveKind::Move32: return "3-2";
        case MoveKind::Move41: return "4-1";
    }
    return "?";
}

namespace {

struct MoveContext {
    std::set<Facet> facet_set;
    std::set<Tri> tri_set;
    std::set<Edge> edge_set;
    std::map<Edge, std::vector<int>> edge_facets;  // facet indices per edge
    std::map<Tri, std::vector<int>> tri_facets;
    std::map<int, std::vector<int>> vert_facets;

    explicit MoveContext(const Complex3& c) {
        for (int fi = 0; fi < c.facet_count(); ++fi) {
            const Facet& f = c.facets()[static_cast<size_t>(fi)];
            facet_set.insert(f);
            for (int i = 0; i < 4; ++i) {
                vert_facets[f[static_cast<size_t>(i)]].push_back(fi);
                for (int j = i + 1; j < 4; ++j) {
                    const Edge e{f[static_cast<size_t>(i)], f[static_cast<size_t>(j)]};
                    edge_set.insert(e);
                    edge_facets[e].push_back(fi);
                    for (int k = j + 1; k < 4; ++k) {
                        const Tri t{f[static_cast<size_t>(i)], f[static_cast<size_t>(j)],
                                    f[static_cast<size_t>(k)]};
                        tri_set.insert(t);
                        tri_facets[t].push_back(fi);
                    }
                }
            }
        }
    }
};

// Opposite vertices of the two facets sharing triangle t.
std::array<int, 2> opposite_vertices(const Complex3& c, const MoveContext& ctx, const Tri& t) {
    const auto& owners = ctx.tri_facets.at(t);
    std::array<int, 2> xy{};
    for (int s = 0; s < 2; ++s) {
        const Facet& f = c.facets()[static_cast<size_t>(owners[static_cast<size_t>(s)])];
        for (int v : f)
            if (v != t[0] && v != t[1] && v != t[2]) xy[static_cast<size_t>(s)] = v;
    }
    if (xy[0] > xy[1]) std::swap(xy[0], xy[1]);
    return xy;
}

// Link vertices of a degree-3 edge: the three vertices completing its star.
Tri edge_link_triangle(const Complex3& c, const MoveContext& ctx, const Edge& e) {
    std::set<int> link;
    for (int fi : ctx.edge_facets.at(e)) {
        const Facet& f = c.facets()[static_cast<size_t>(fi)];
        for (int v : f)
            if (v != e[0] && v != e[1]) link.insert(v);
    }
    if (link.size() != 3) throw MoveError("edge star is not a 3-cycle");
    auto it = link.begin();
    Tri t;
    t[0] = *it++;
    t[1] = *it++;
    t[2] = *it;
    return t;
}

// Link of a degree-4 vertex as a sorted 4-tuple.
Facet vertex_link_tetrahedron(const Complex3& c, const MoveContext& ctx, int w) {
    std::set<int> link;
    for (int fi : ctx.vert_facets.at(w)) {
        const Facet& f = c.facets()[static_cast<size_t>(fi)];
        for (int v : f)
            if (v != w) link.insert(v);
    }
    if (link.size() != 4) throw MoveError("vertex star is not a cone over a tetrahedron boundary");
    Facet t;
    std::copy(link.begin(), link.end(), t.begin());
    return t;
}

}  // namespace

std::vector<MoveSpec> legal_moves(const Complex3& c) {
    const MoveContext ctx(c);
    std::vector<MoveSpec> moves;

    for (const Facet& f : c.facets())
        moves.push_back({MoveKind::Move14, {f[0], f[1], f[2], f[3]}});

    for (const auto& [t, owners] : ctx.tri_facets) {
        if (owners.size() != 2) continue;
        const auto xy = opposite_vertices(c, ctx, t);
        if (!ctx.edge_set.count({xy[0], xy[1]}))
            moves.push_back({MoveKind::Move23, {t[0], t[1], t[2]}});
    }

    for (const auto& [e, owners] : ctx.edge_facets) {
        if (owners.size() != 3) continue;
        Tri link;
        try {
            link = edge_link_triangle(c, ctx, e);
        } catch (const MoveError&) {
            continue;
        }
        if (!ctx.tri_set.count(link)) moves.push_back({MoveKind::Move32, {e[0], e[1]}});
    }

    if (c.vertex_count() > 5) {
        for (const auto& [w, owners] : ctx.vert_facets) {
            if (owners.size() != 4) continue;
            Facet link;
            try {
                link = vertex_link_tetrahedron(c, ctx, w);
            } catch (const MoveError&) {
                continue;
            }
            if (!ctx.facet_set.count(link)) moves.push_back({MoveKind::Move41, {w}});
        }
    }
    return moves;
}

namespace {

// Raw (un-normalized) facet list after the move, in the labels of `c`, plus
// enough information to express the inverse move.
struct RawMove {
    std::vector<std::array<int, 4>> facets;
    MoveKind inverse_kind;
    std::vector<int> inverse_face;  // in the labels of `c` (new vertex = v+1)
};

RawMove apply_raw(const Complex3& c, const MoveSpec& m) {
    const MoveContext ctx(c);
    RawMove out;

    auto keep_all_except = [&](const std::set<int>& drop) {
        for (int fi = 0; fi < c.facet_count(); ++fi)
            if (!drop.count(fi)) {
                const Facet& f = c.facets()[static_cast<size_t>(fi)];
                out.facets.push_back({f[0], f[1], f[2], f[3]});
            }
    };

    switch (m.kind) {
        case MoveKind::Move14: {
            if (m.face.size() != 4) throw MoveError("1-4 move needs a facet location");
            Facet f{m.face[0], m.face[1], m.face[2], m.face[3]};
            std::sort(f.begin(), f.end());
            if (!ctx.facet_set.count(f)) throw MoveError("1-4 location is not a facet");
            const int w = c.vertex_count() + 1;
            std::set<int> drop;
            for (int fi = 0; fi < c.facet_count(); ++fi)
                if (c.facets()[static_cast<size_t>(fi)] == f) drop.insert(fi);
            keep_all_except(drop);
            out.facets.push_back({f[0], f[1], f[2], w});
            out.facets.push_back({f[0], f[1], f[3], w});
            out.facets.push_back({f[0], f[2], f[3], w});
            out.facets.push_back({f[1], f[2], f[3], w});
            out.inverse_kind = MoveKind::Move41;
            out.inverse_face = {w};
            break;
        }
        case MoveKind::Move23: {
            if (m.face.size() != 3) throw MoveError("2-3 move needs a triangle location");
            Tri t{m.face[0], m.face[1], m.face[2]};
            std::sort(t.begin(), t.end());
            auto it = ctx.tri_facets.find(t);
            if (it == ctx.tri_facets.end() || it->second.size() != 2)
                throw MoveError("2-3 location is not an interior triangle");
            const auto xy = opposite_vertices(c, ctx, t);
            if (ctx.edge_set.count({xy[0], xy[1]}))
                throw MoveError("2-3 move illegal: edge already present");
            std::set<int> drop(it->second.begin(), it->second.end());
            keep_all_except(drop);
            out.facets.push_back({t[0], t[1], xy[0], xy[1]});
            out.facets.push_back({t[0], t[2], xy[0], xy[1]});
            out.facets.push_back({t[1], t[2], xy[0], xy[1]});
            out.inverse_kind = MoveKind::Move32;
            out.inverse_face = {xy[0], xy[1]};
            break;
        }
        case MoveKind::Move32: {
            if (m.face.size() != 2) throw MoveError("3-2 move needs an edge location");
            Edge e{m.face[0], m.face[1]};
            std::sort(e.begin(), e.end());
            auto it = ctx.edge_facets.find(e);
            if (it == ctx.edge_facets.end() || it->second.size() != 3)
                throw MoveError("3-2 location is not a degree-3 edge");
            const Tri link = edge_link_triangle(c, ctx, e);
            if (ctx.tri_set.count(link))
                throw MoveError("3-2 move illegal: triangle already present");
            std::set<int> drop(it->second.begin(), it->second.end());
            keep_all_except(drop);
            out.facets.push_back({link[0], link[1], link[2], e[0]});
            out.facets.push_back({link[0], link[1], link[2], e[1]});
            out.inverse_kind = MoveKind::Move23;
            out.inverse_face = {link[0], link[1], link[2]};
            break;
        }
        case MoveKind::Move41: {
            if (m.face.size() != 1) throw MoveError("4-1 move needs a vertex location");
            const int w = m.face[0];
            auto it = ctx.vert_facets.find(w);
            if (it == ctx.vert_facets.end() || it->second.size() != 4)
                throw MoveError("4-1 location is not a degree-4 vertex");
            if (c.vertex_count() <= 5)
                throw MoveError("4-1 move illegal: result would have fewer than 5 vertices");
            const Facet link = vertex_link_tetrahedron(c, ctx, w);
            if (ctx.facet_set.count(link))
                throw MoveError("4-1 move illegal: tetrahedron already present");
            std::set<int> drop(it->second.begin(), it->second.end());
            keep_all_except(drop);
            out.facets.push_back({link[0], link[1], link[2], link[3]});
            out.inverse_kind = MoveKind::Move14;
            out.inverse_face = {link[0], link[1], link[2], link[3]};
            break;
        }
    }
    return out;
}

// First-appearance relabeling of a raw facet list (the same rule Complex3
// normalization applies).
std::map<int, int> normalization_map(const std::vector<std::array<int, 4>>& raw) {
    std::map<int, int> m;
    for (const auto& f : raw)
        for (int v : f) m.try_emplace(v, static_cast<int>(m.size()) + 1);
    return m;
}

}  // namespace

Complex3 apply_move(const Complex3& c, const MoveSpec& m) {
    return Complex3::from_facets(apply_raw(c, m).facets);
}

MoveOutcome apply_move_ex(const Complex3& c, const MoveSpec& m) {
    const RawMove raw = apply_raw(c, m);
    const auto relabel = normalization_map(raw.facets);
    MoveOutcome out{Complex3::from_facets(raw.facets), {raw.inverse_kind, {}}};
    for (int v : raw.inverse_face) out.inverse.face.push_back(relabel.at(v));
    if (out.inverse.face.size() >= 2)
        std::sort(out.inverse.face.begin(), out.inverse.face.end());
    return out;
}

void AnnealConfig::validate() const {
    if (max_moves < 1) throw DomainError("max_moves must be at least 1");
    if (!(cooling_factor > 0.0 && cooling_factor < 1.0))
        throw DomainError("cooling_factor must lie in (0, 1)");
    if (!(initial_temperature > 0.0)) throw DomainError("initial_temperature must be positive");
    if (!(validation_rate >= 0.0 && validation_rate <= 1.0))
        throw DomainError("validation_rate must lie in [0, 1]");
}

namespace {

// Aggregates from which the edge variance is cheap to evaluate:
// var = sum_sq/E - (6n)^2/E^2 with E = n + v edges.
struct VarianceState {
    std::map<Edge, long> degree;
    long sum_sq = 0;
    long n = 0, v = 0;

    void rebuild(const Complex3& c) {
        degree.clear();
        sum_sq = 0;
        for (const Facet& f : c.facets())
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    ++degree[{f[static_cast<size_t>(i)], f[static_cast<size_t>(j)]}];
        for (const auto& [e, d] : degree) sum_sq += d * d;
        n = c.facet_count();
        v = c.vertex_count();
    }

    static mpq_class variance_from(long sum_sq, long n, long v) {
        const long E = n + v;
        mpq_class q(sum_sq, E);
        mpq_class avg2(36 * n * n, E * E);
        q -= avg2;
        q.canonicalize();
        return q;
    }
    mpq_class variance() const { return variance_from(sum_sq, n, v); }

    long deg(int a, int b) const {
        return degree.at(a < b ? Edge{a, b} : Edge{b, a});
    }

    // Predicted variance after a proposed move, from its local degree changes.
    mpq_class predict(const Complex3& c, const MoveSpec& m) const {
        long s = sum_sq, nn = n, vv = v;
        auto raise = [&](int a, int b) { s += 2 * deg(a, b) + 1; };
        auto lower = [&](int a, int b) { s += -2 * deg(a, b) + 1; };
        switch (m.kind) {
            case MoveKind::Move14: {
                s += 4 * 9;  // four fresh degree-3 edges
                for (size_t i = 0; i < 4; ++i)
                    for (size_t j = i + 1; j < 4; ++j) raise(m.face[i], m.face[j]);
                nn += 3;
                vv += 1;
                break;
            }
            case MoveKind::Move23: {
                const MoveContext ctx(c);
                Tri t{m.face[0], m.face[1], m.face[2]};
                std::sort(t.begin(), t.end());
                const auto xy = opposite_vertices(c, ctx, t);
                s += 9;  // the fresh degree-3 edge {x,y}
                lower(t[0], t[1]);
                lower(t[0], t[2]);
                lower(t[1], t[2]);
                for (int u : t) {
                    raise(u, xy[0]);
                    raise(u, xy[1]);
                }
                nn += 1;
                break;
            }
            case MoveKind::Move32: {
                const MoveContext ctx(c);
                Edge e{m.face[0], m.face[1]};
                std::sort(e.begin(), e.end());
                const Tri link = edge_link_triangle(c, ctx, e);
                s -= 9;  // {x,y} disappears at degree 3
                raise(link[0], link[1]);
                raise(link[0], link[2]);
                raise(link[1], link[2]);
                for (int u : link) {
                    lower(u, e[0]);
                    lower(u, e[1]);
                }
                nn -= 1;
                break;
            }
            case MoveKind::Move41: {
                const MoveContext ctx(c);
                const Facet link = vertex_link_tetrahedron(c, ctx, m.face[0]);
                s -= 4 * 9;  // the four spokes disappear at degree 3
                for (size_t i = 0; i < 4; ++i)
                    for (size_t j = i + 1; j < 4; ++j) lower(link[i], link[j]);
                nn -= 3;
                vv -= 1;
                break;
            }
        }
        return variance_from(s, nn, vv);
    }
};

}  // namespace

AnnealResult anneal_edge_variance(const Complex3& c, const AnnealConfig& cfg) {
    cfg.validate();
    require_closed_connected(c);
    const bool maximize = cfg.direction == AnnealConfig::Direction::Maximize;

    Rng rng(cfg.seed);
    Rng validation_rng(mix_seed(cfg.seed, 0x76616c6964617465ull));  // independent stream

    Complex3 cur = c;
    VarianceState vs;
    vs.rebuild(cur);
    mpq_class cur_var = vs.variance();

    AnnealResult result;
    result.best_complex = cur;
    result.best_variance = cur_var;
    result.variance_trace.reserve(static_cast<size_t>(cfg.max_moves));

    double temperature = cfg.initial_temperature;
    std::uint64_t accepted = 0;

    for (std::uint64_t step = 0; step < cfg.max_moves; ++step) {
        const std::vector<MoveSpec> moves = legal_moves(cur);
        if (moves.empty()) {
            result.variance_trace.push_back(result.best_variance);
            continue;
        }
        const MoveSpec& m = moves[static_cast<size_t>(rng.below(moves.size()))];
        const mpq_class new_var = vs.predict(cur, m);

        // signed objective: lower is better when minimizing
        const mpq_class delta_q = maximize ? cur_var - new_var : new_var - cur_var;
        bool accept = delta_q <= 0;
        if (!accept) {
            const double delta = delta_q.get_d();
            accept = rng.unit_real() < std::exp(-delta / temperature);
        }

        if (accept) {
            cur = apply_move(cur, m);
            vs.rebuild(cur);
            cur_var = vs.variance();
            assert(cur_var == new_var);
            result.move_log.push_back({step, m, cur_var});

            const bool always_validate =
#ifdef NDEBUG
                false;
#else
                true;
#endif
            if (always_validate || validation_rng.unit_real() < cfg.validation_rate) {
                if (!is_closed_3_manifold(cur).pass_connected())
                    throw ValidationError("bistellar move produced an invalid complex");
            }

            ++accepted;
            if (cfg.reheat_period && accepted % cfg.reheat_period == 0)
                temperature = cfg.initial_temperature;
            else
                temperature *= cfg.cooling_factor;

            const bool better = maximize ? cur_var > result.best_variance
                                         : cur_var < result.best_variance;
            if (better) {
                result.best_variance = cur_var;
                result.best_complex = cur;
            }
        }
        result.variance_trace.push_back(result.best_variance);
    }
    return result;
}

namespace {

std::string location_string(const MoveSpec& m) {
    std::string s;
    for (size_t i = 0; i < m.face.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(m.face[i]);
    }
    return s;
}

}  // namespace

std::string AnnealResult::move_log_csv() const {
    std::ostringstream out;
    out << "step,kind,location,variance_num,variance_den\n";
    for (const LoggedMove& lm : move_log)
        out << lm.step << "," << move_kind_name(lm.move.kind) << "," << location_string(lm.move)
            << "," << lm.variance.get_num() << "," << lm.variance.get_den() << "\n";
    return out.str();
}

std::string AnnealResult::trace_csv() const {
    std::ostringstream out;
    out << "step,variance_num,variance_den\n";
    for (size_t i = 0; i < variance_trace.size(); ++i)
        out << i << "," << variance_trace[i].get_num() << "," << variance_trace[i].get_den()
            << "\n";
    return out.str();
}

}  // namespace collapsar
