#include "turan/patterns.hpp"

#include <algorithm>
#include <map>

namespace turan {

namespace {

void check_params(const PartiteHypergraph& g, const PatternParams& p) {
    if (p.r != g.r()) fail(Err::ArityMismatch, "pattern uniformity differs from host");
    if (p.r < 2 || p.s < 1 || p.t < 1)
        fail(Err::ArityMismatch, "pattern parameters must satisfy r>=2, s>=1, t>=1");
}

std::vector<VertexSet> intersect_sorted(const std::vector<VertexSet>& a,
                                        const std::vector<VertexSet>& b) {
    std::vector<VertexSet> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Lexicographically least list of t pairwise-disjoint members, or nullopt.
std::optional<std::vector<VertexSet>> lex_least_packing(const std::vector<VertexSet>& sets,
                                                        int t) {
    std::vector<VertexSet> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (static_cast<int>(chosen.size()) == t) return true;
        if (sets.size() - i < static_cast<std::size_t>(t) - chosen.size()) return false;
        for (std::size_t j = i; j < sets.size(); ++j) {
            bool ok = true;
            for (const VertexSet& c : chosen)
                if (!sets_disjoint(c, sets[j])) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(sets[j]);
            if (rec(j + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (rec(0)) return chosen;
    return std::nullopt;
}

bool edge_list_contains(const std::vector<Edge>& edges, const Edge& e) {
    return std::binary_search(edges.begin(), edges.end(), e);
}

/// Link completions of an (r-1)-set X over a plain sorted edge list.
VertexSet completions_of(const std::vector<Edge>& edges, const VertexSet& X) {
    VertexSet out;
    for (const Edge& f : edges)
        if (std::includes(f.begin(), f.end(), X.begin(), X.end()))
            out.push_back(set_difference(f, X).front());
    return out;
}

std::vector<VertexSet> link_over_edges(const std::vector<Edge>& edges, Vertex v) {
    std::vector<VertexSet> out;
    for (const Edge& f : edges)
        if (set_contains(f, v)) out.push_back(set_difference(f, {v}));
    std::sort(out.begin(), out.end());
    return out;
}

/// Core of the incremental check: an embedding using e, over a raw edge list.
std::optional<Embedding> kst_using_edge(const std::vector<Edge>& edges, int s, int t,
                                        const Edge& e) {
    std::optional<Embedding> result;
    for (std::size_t yi = 0; yi < e.size(); ++yi) {
        Vertex y = e[yi];
        VertexSet X = set_difference(e, {y});
        // Vertices w with X u {w} an edge; Y must be drawn from this pool.
        VertexSet pool = completions_of(edges, X);
        VertexSet others;
        for (Vertex w : pool)
            if (w != y) others.push_back(w);
        if (static_cast<int>(others.size()) < s - 1) continue;
        std::vector<int> pick(static_cast<std::size_t>(s - 1));
        std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
            if (idx == s - 1) {
                VertexSet Y = {y};
                for (int k = 0; k < s - 1; ++k)
                    Y.push_back(others[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])]);
                std::sort(Y.begin(), Y.end());
                // CN(Y), restricted to members disjoint from both Y and X.
                std::vector<VertexSet> cn = link_over_edges(edges, Y[0]);
                for (std::size_t i = 1; i < Y.size(); ++i)
                    cn = intersect_sorted(cn, link_over_edges(edges, Y[i]));
                std::vector<VertexSet> cand;
                for (const VertexSet& c : cn)
                    if (c != X && sets_disjoint(c, Y) && sets_disjoint(c, X))
                        cand.push_back(c);
                auto rest = lex_least_packing(cand, t - 1);
                if (!rest) return false;
                Embedding emb;
                emb.x_sets = *rest;
                emb.x_sets.push_back(X);
                std::sort(emb.x_sets.begin(), emb.x_sets.end());
                emb.y = Y;
                result = emb;
                return true;
            }
            for (int j = from; j < static_cast<int>(others.size()); ++j) {
                pick[static_cast<std::size_t>(idx)] = j;
                if (choose(idx + 1, j + 1)) return true;
            }
            return false;
        };
        if (choose(0, 0)) return result;
    }
    return std::nullopt;
}

} // namespace

std::optional<Embedding> find_kst(const PartiteHypergraph& g, const PatternParams& p) {
    check_params(g, p);
    const int s = p.s, t = p.t;
    std::optional<Embedding> found;
    VertexSet y_prefix;
    // Y-first enumeration; a prefix dies once its partial common neighborhood
    // cannot host t disjoint members.
    std::function<bool(Vertex, const std::vector<VertexSet>&)> rec =
        [&](Vertex from, const std::vector<VertexSet>& cn) -> bool {
        if (static_cast<int>(y_prefix.size()) == s) {
            std::vector<VertexSet> cand;
            for (const VertexSet& c : cn)
                if (sets_disjoint(c, y_prefix)) cand.push_back(c);
            auto packing = lex_least_packing(cand, t);
            if (!packing) return false;
            found = Embedding{*packing, y_prefix};
            return true;
        }
        for (Vertex v = from; v < g.vertex_count(); ++v) {
            std::vector<VertexSet> next =
                y_prefix.empty() ? g.link(VertexSet{v})
                                 : intersect_sorted(cn, g.link(VertexSet{v}));
            if (!has_disjoint_family(next, t)) continue;
            y_prefix.push_back(v);
            if (rec(v + 1, next)) return true;
            y_prefix.pop_back();
        }
        return false;
    };
    if (g.edge_count() == 0) return std::nullopt;
    rec(0, {});
    return found;
}

bool is_kst_free(const PartiteHypergraph& g, const PatternParams& p) {
    return !find_kst(g, p).has_value();
}

std::optional<Embedding> find_kst_using_edge(const PartiteHypergraph& g,
                                             const PatternParams& p, const Edge& e) {
    check_params(g, p);
    if (!g.contains(e)) fail(Err::UnknownEdge, "edge not present in host");
    return kst_using_edge(g.edges(), p.s, p.t, e);
}

bool has_disjoint_family(const std::vector<VertexSet>& sets, int t) {
    if (t <= 0) return true;
    std::function<bool(std::size_t, int, const VertexSet&)> rec =
        [&](std::size_t i, int need, const VertexSet& used) -> bool {
        if (need == 0) return true;
        if (sets.size() - i < static_cast<std::size_t>(need)) return false;
        for (std::size_t j = i; j < sets.size(); ++j) {
            if (!sets_disjoint(used, sets[j])) continue;
            if (rec(j + 1, need - 1, set_union(used, sets[j]))) return true;
        }
        return false;
    };
    return rec(0, t, {});
}

namespace {

std::optional<std::array<Edge, 4>> quadruple_over_edges(const std::vector<Edge>& edges) {
    std::map<Edge, std::vector<std::pair<Edge, Edge>>> by_union;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (!sets_disjoint(edges[i], edges[j])) continue;
            by_union[set_union(edges[i], edges[j])].emplace_back(edges[i], edges[j]);
        }
    for (const auto& [u, pairs] : by_union)
        if (pairs.size() >= 2)
            return std::array<Edge, 4>{pairs[0].first, pairs[0].second, pairs[1].first,
                                       pairs[1].second};
    return std::nullopt;
}

} // namespace

std::optional<std::array<Edge, 4>> find_erdos_quadruple(const PartiteHypergraph& g) {
    return quadruple_over_edges(g.edges());
}

std::optional<Embedding> kst_using_edge_raw(const std::vector<Edge>& sorted_edges, int s,
                                            int t, const Edge& e) {
    return kst_using_edge(sorted_edges, s, t, e);
}

std::optional<std::array<Edge, 4>> quadruple_using_edge_raw(
    const std::vector<Edge>& sorted_edges, const Edge& e) {
    const auto& edges = sorted_edges;
    for (const Edge& b : edges) {
        if (b == e || !sets_disjoint(e, b)) continue;
        Edge u = set_union(e, b);
        // Any r-subset C of the union with both C and U\C edges gives a
        // quadruple; C n D = {} is automatic.
        std::vector<char> mask(u.size(), 0);
        std::fill(mask.begin(), mask.begin() + static_cast<long>(e.size()), 1);
        std::sort(mask.begin(), mask.end());
        do {
            Edge c, d;
            for (std::size_t i = 0; i < u.size(); ++i)
                (mask[i] ? c : d).push_back(u[i]);
            if (c == e || c == b || d == e || d == b) continue;
            if (std::binary_search(edges.begin(), edges.end(), c) &&
                std::binary_search(edges.begin(), edges.end(), d))
                return std::array<Edge, 4>{e, b, c, d};
        } while (std::next_permutation(mask.begin(), mask.end()));
    }
    return std::nullopt;
}

std::optional<std::array<Edge, 4>> find_erdos_quadruple_using_edge(
    const PartiteHypergraph& g, const Edge& e) {
    if (!g.contains(e)) fail(Err::UnknownEdge, "edge not present in host");
    return quadruple_using_edge_raw(g.edges(), e);
}

} // namespace turan
