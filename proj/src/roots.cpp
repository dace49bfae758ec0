#include "turan/roots.hpp"

#include <algorithm>

namespace turan {

namespace {

void check_sset(const PartiteHypergraph& g, const VertexSet& S) {
    if (S.empty()) fail(Err::InvalidSet, "s-set must be nonempty");
    if (!std::is_sorted(S.begin(), S.end()) ||
        std::adjacent_find(S.begin(), S.end()) != S.end())
        fail(Err::InvalidSet, "s-set must be strictly increasing");
    for (Vertex v : S)
        if (v < 0 || v >= g.vertex_count()) fail(Err::InvalidSet, "s-set vertex out of range");
}

/// Minimum-cover search by branching on the vertices of the first uncovered
/// member; O((r-1)^k) in the cover size k.
bool cover_exists(const std::vector<VertexSet>& cn, const VertexSet& chosen, int budget) {
    const VertexSet* uncovered = nullptr;
    for (const VertexSet& c : cn) {
        if (sets_disjoint(c, chosen)) { uncovered = &c; break; }
    }
    if (!uncovered) return true;
    if (budget == 0) return false;
    for (Vertex v : *uncovered) {
        VertexSet next = set_union(chosen, {v});
        if (cover_exists(cn, next, budget - 1)) return true;
    }
    return false;
}

} // namespace

std::vector<VertexSet> common_neighborhood(const PartiteHypergraph& g, const VertexSet& S) {
    check_sset(g, S);
    std::vector<VertexSet> cn;
    bool first = true;
    for (Vertex v : S) {
        std::vector<VertexSet> lk;
        g.incidence(v).for_each([&](std::size_t i) {
            lk.push_back(set_difference(g.edges()[i], {v}));
        });
        std::sort(lk.begin(), lk.end());
        if (first) {
            cn = std::move(lk);
            first = false;
        } else {
            std::vector<VertexSet> tmp;
            std::set_intersection(cn.begin(), cn.end(), lk.begin(), lk.end(),
                                  std::back_inserter(tmp));
            cn = std::move(tmp);
        }
        if (cn.empty()) break;
    }
    return cn;
}

long long codegree(const PartiteHypergraph& g, const VertexSet& S) {
    return static_cast<long long>(common_neighborhood(g, S).size());
}

long long codegree_at(const PartiteHypergraph& g, const VertexSet& S, Vertex u) {
    if (set_contains(S, u)) fail(Err::UNotOutsideS, "u must lie outside S");
    if (u < 0 || u >= g.vertex_count()) fail(Err::InvalidSet, "u out of range");
    long long c = 0;
    for (const VertexSet& e : common_neighborhood(g, S))
        if (set_contains(e, u)) ++c;
    return c;
}

std::vector<VertexSet> greedy_matching(const std::vector<VertexSet>& cn) {
    std::vector<VertexSet> sorted = cn;
    std::sort(sorted.begin(), sorted.end());
    std::vector<VertexSet> out;
    VertexSet used;
    for (const VertexSet& c : sorted) {
        if (!sets_disjoint(used, c)) continue;
        out.push_back(c);
        used = set_union(used, c);
    }
    return out;
}

int min_cover_size(const std::vector<VertexSet>& cn) {
    if (cn.empty()) return 0;
    for (int k = 1;; ++k)
        if (cover_exists(cn, {}, k)) return k;
}

RootReport root_set(const PartiteHypergraph& g, const VertexSet& S, CoverMethod method,
                    int exact_budget) {
    RootReport rep;
    rep.subject = S;
    rep.method = method;
    std::vector<VertexSet> cn = common_neighborhood(g, S);
    rep.cn_size = static_cast<long long>(cn.size());
    rep.matching = greedy_matching(cn);

    if (method == CoverMethod::matching) {
        VertexSet roots;
        for (const VertexSet& m : rep.matching) roots = set_union(roots, m);
        rep.roots = roots;
    } else {
        if (static_cast<int>(cn.size()) > exact_budget)
            fail(Err::ExactCoverTooLarge, "common neighborhood exceeds exact-search budget");
        if (!cn.empty()) {
            int k = min_cover_size(cn);
            // Lexicographically least cover of minimum size: combination DFS
            // over the CN vertex universe, feasibility-pruned.
            VertexSet universe;
            for (const VertexSet& c : cn) universe = set_union(universe, c);
            VertexSet chosen;
            std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
                int left = k - static_cast<int>(chosen.size());
                if (left == 0) {
                    for (const VertexSet& c : cn)
                        if (sets_disjoint(c, chosen)) return false;
                    return true;
                }
                if (universe.size() - i < static_cast<std::size_t>(left)) return false;
                for (std::size_t j = i; j < universe.size(); ++j) {
                    chosen.push_back(universe[j]);
                    if (cover_exists(cn, chosen, left - 1) && rec(j + 1)) return true;
                    chosen.pop_back();
                }
                return false;
            };
            rec(0);
            rep.roots = chosen;
        }
    }

    // Cover property: every CN member must intersect the chosen roots.
    for (const VertexSet& c : cn)
        if (sets_disjoint(c, rep.roots))
            fail(Err::InvalidSet, "internal: root set is not a cover");

    for (Vertex u : rep.roots) {
        long long c = 0;
        for (const VertexSet& e : cn)
            if (set_contains(e, u)) ++c;
        rep.per_root_codegrees[u] = c;
    }
    return rep;
}

bool is_rooted_on(const PartiteHypergraph& g, const VertexSet& S, Vertex v) {
    std::vector<VertexSet> cn = common_neighborhood(g, S);
    if (cn.empty()) return false;
    std::vector<VertexSet> missed;
    bool hits = false;
    for (const VertexSet& c : cn) {
        if (set_contains(c, v)) hits = true;
        else missed.push_back(c);
    }
    if (!hits) return false;
    return 1 + min_cover_size(missed) == min_cover_size(cn);
}

} // namespace turan
