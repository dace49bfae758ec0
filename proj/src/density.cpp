#include "turan/density.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "turan/parallel.hpp"
#include "turan/roots.hpp"

namespace turan {

namespace {

int equal_part_size(const PartiteHypergraph& g) {
    if (!g.partite()) fail(Err::UnequalParts, "partite input required");
    int n = g.part_size(0);
    for (int i = 1; i < g.parts(); ++i)
        if (g.part_size(i) != n) fail(Err::UnequalParts, "parts must have equal size");
    return n;
}

double default_codegree_threshold(int n, int r, int s, double delta) {
    return std::pow(static_cast<double>(n), r - 2 - 1.0 / (s - 1) - delta);
}

/// Enumerates s-subsets of pool that contain anchor, calling fn(S).
void for_each_anchored_sset(const VertexSet& pool, Vertex anchor, int s,
                            const std::function<void(const VertexSet&)>& fn) {
    VertexSet others;
    for (Vertex w : pool)
        if (w != anchor) others.push_back(w);
    if (static_cast<int>(others.size()) < s - 1) return;
    VertexSet cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == s - 1) {
            VertexSet S = cur;
            S.push_back(anchor);
            std::sort(S.begin(), S.end());
            fn(S);
            return;
        }
        for (std::size_t j = from; j < others.size(); ++j) {
            cur.push_back(others[j]);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

void for_each_sset(const VertexSet& pool, int s,
                   const std::function<void(const VertexSet&)>& fn) {
    if (static_cast<int>(pool.size()) < s) return;
    VertexSet cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == s) {
            fn(cur);
            return;
        }
        for (std::size_t j = from; j < pool.size(); ++j) {
            cur.push_back(pool[j]);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

/// Link completions of an (r-1)-tuple, as plain vertices.
VertexSet completion_vertices(const PartiteHypergraph& g, const VertexSet& T) {
    VertexSet out;
    for (const VertexSet& b : g.link(T)) out.push_back(b.front());
    std::sort(out.begin(), out.end());
    return out;
}

Rational rat_pow(const Rational& x, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= x;
    return out;
}

long long factorial(int s) {
    long long f = 1;
    for (int i = 2; i <= s; ++i) f *= i;
    return f;
}

/// The s-sets of A(v): v in S subset N(T) with cd(S|u) above the threshold.
std::vector<VertexSet> dense_ssets_at(const PartiteHypergraph& g, const VertexSet& T,
                                      Vertex v, Vertex u, double codeg_thr, int s) {
    std::vector<VertexSet> out;
    for_each_anchored_sset(completion_vertices(g, T), v, s, [&](const VertexSet& S) {
        if (static_cast<double>(codegree_at(g, S, u)) >= codeg_thr - 1e-9)
            out.push_back(S);
    });
    return out;
}

} // namespace

DenseCheck is_delta_dense(const PartiteHypergraph& g, const VertexSet& T, Vertex v,
                          Vertex u, const DensityParams& params) {
    const int n = equal_part_size(g);
    g.validate_tuple(T);
    if (static_cast<int>(T.size()) != g.r() - 1)
        fail(Err::InvalidTuple, "T must be an (r-1)-tuple");
    if (!set_contains(T, u)) fail(Err::UNotInT, "u must lie in T");
    VertexSet completions = completion_vertices(g, T);
    if (!set_contains(completions, v)) fail(Err::VNotInLink, "v must complete T to an edge");

    DenseCheck chk;
    chk.codegree_threshold = params.codegree_threshold.value_or(
        default_codegree_threshold(n, g.r(), params.s, params.delta));
    chk.fraction_threshold = params.sset_fraction_threshold.value_or(
        std::pow(static_cast<double>(g.degree(T)), params.s - 1) / g.r());
    chk.qualifying = static_cast<long long>(
        dense_ssets_at(g, T, v, u, chk.codegree_threshold, params.s).size());
    chk.dense = static_cast<double>(chk.qualifying) >= chk.fraction_threshold - 1e-9;
    return chk;
}

ArrowCheck part_arrow(const PartiteHypergraph& h, const PartiteHypergraph& g, int i, int j,
                      const DensityParams& params) {
    if (i == j) fail(Err::SamePart, "arrow endpoints must differ");
    if (i < 0 || j < 0 || i >= g.parts() || j >= g.parts())
        fail(Err::BadPartIndex, "part index out of range");
    if (!h.is_subgraph_of(g)) fail(Err::NotSubgraph, "h must be a subgraph of g");
    for (const VertexSet& t : h.tuples(j)) {
        Vertex u = -1;
        for (Vertex w : t)
            if (g.part_of(w) == i) u = w;
        for (const VertexSet& b : h.link(t)) {
            Vertex v = b.front();
            if (!is_delta_dense(g, t, v, u, params).dense)
                return {false, std::make_pair(t, v)};
        }
    }
    return {true, std::nullopt};
}

EdgeClassification classify_edge(const PartiteHypergraph& g, const Edge& e, int target_part,
                                 const DensityParams& params) {
    const int n = equal_part_size(g);
    const int r = g.r();
    const int s = params.s;
    if (!g.contains(e)) fail(Err::EdgeNotPresent, "edge not in hypergraph");
    if (target_part < 0 || target_part >= g.parts())
        fail(Err::BadPartIndex, "target part out of range");

    EdgeClassification cls;
    cls.edge = e;
    for (Vertex v : e) {
        if (g.part_of(v) == target_part) cls.target_vertex = v;
        else cls.t_e.push_back(v);
    }

    const double small_thr = params.small_threshold.value_or(
        std::pow(static_cast<double>(n), r - 2 - 1.0 / (s - 1) - (s + 1) * params.epsilon));
    const double log2n = std::log2(std::max(2.0, static_cast<double>(n)));
    const double f0_thr = params.f0_threshold.value_or(std::pow(
        std::pow(static_cast<double>(n), 1 - 1.0 / (s - 1) - params.epsilon) /
            (params.alpha * log2n),
        s - 1));

    VertexSet pool = completion_vertices(g, cls.t_e);
    for_each_anchored_sset(pool, cls.target_vertex, s, [&](const VertexSet& S) {
        ++cls.sset_count;
        RootReport rep = root_set(g, S, CoverMethod::matching);
        // cd(S|T_e) maximizes cd(S|u) over roots u inside T_e; no root inside
        // T_e is a recorded desk-scale anomaly and counts as 0.
        long long best = -1;
        int best_part = -1;
        for (Vertex u : cls.t_e) {
            if (!set_contains(rep.roots, u)) continue;
            long long cd = rep.per_root_codegrees.at(u);
            if (cd > best) { best = cd; }
        }
        if (best < 0) {
            ++cls.root_anomalies;
            ++cls.small_count;
            return;
        }
        if (static_cast<double>(best) < small_thr) {
            ++cls.small_count;
            return;
        }
        // Index of a large pair: the smallest part whose T_e-root clears the
        // threshold.
        for (Vertex u : cls.t_e) {
            if (!set_contains(rep.roots, u)) continue;
            if (static_cast<double>(rep.per_root_codegrees.at(u)) >= small_thr) {
                best_part = g.part_of(u);
                break;
            }
        }
        ++cls.per_part_counts[best_part];
    });

    if (static_cast<double>(cls.small_count) >= f0_thr - 1e-9) return cls; // zero class
    if (cls.per_part_counts.empty()) return cls;
    int ell = cls.per_part_counts.begin()->first;
    for (const auto& [p, c] : cls.per_part_counts)
        if (c > cls.per_part_counts.at(ell)) ell = p;
    const double floor_thr =
        std::pow(static_cast<double>(g.degree(cls.t_e)), s - 1) / r;
    if (static_cast<double>(cls.per_part_counts.at(ell)) >= floor_thr - 1e-9)
        cls.source_part = ell;
    else
        cls.forced_zero = true;
    return cls;
}

ArrowSearchResult find_dense_arrow(const PartiteHypergraph& g, int target_part,
                                   const DensityParams& params, bool skip_regularity_check,
                                   int threads) {
    if (target_part < 0 || target_part >= g.parts())
        fail(Err::BadPartIndex, "target part out of range");
    if (!skip_regularity_check) {
        RegularityCertificate cert =
            verify_regularity(g, params.epsilon, params.alpha, params.s);
        if (!cert.pass())
            fail(Err::NotRegular, "input fails the bounded-degree certificate");
    }

    ArrowSearchResult res;
    res.target = target_part;

    const auto& edges = g.edges();
    std::vector<EdgeClassification> cls(edges.size());
    parallel_for(edges.size(), threads, [&](std::size_t i) {
        cls[i] = classify_edge(g, edges[i], target_part, params);
    });

    std::map<int, long long> votes;
    for (const EdgeClassification& c : cls) {
        if (c.source_part) ++votes[*c.source_part];
        else ++res.zero_count;
    }
    if (votes.empty())
        fail(Err::NoMajorityIndex,
             "every edge classified to the zero class (m = " +
                 std::to_string(res.zero_count) + ")");
    int best = votes.begin()->first;
    for (const auto& [p, c] : votes)
        if (c > votes.at(best)) best = p;
    res.source = best;

    std::vector<Edge> keep;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (cls[i].source_part && *cls[i].source_part == best) keep.push_back(edges[i]);
    PartiteHypergraph sub = g.restrict_to(keep);
    if (static_cast<double>(sub.edge_count()) <
        static_cast<double>(g.edge_count()) / g.r() - 1e-9) {
        res.diagnostic = "majority class holds " + std::to_string(sub.edge_count()) +
                         " of " + std::to_string(g.edge_count()) +
                         " edges, below the e(G)/r floor";
        return res;
    }
    RelativeRegularResult rel = relative_regular_subgraph(
        g, sub, static_cast<double>(g.r()), params.epsilon, params.alpha, params.s);
    res.subgraph = rel.graph;
    res.certificate = rel.certificate;

    DensityParams arrow_params = params;
    arrow_params.delta = (params.s + 1) * params.epsilon;
    ArrowCheck chk = part_arrow(*res.subgraph, g, best, target_part, arrow_params);
    res.arrow_verified = chk.holds;
    res.arrow_failure = chk.failure;
    if (!chk.holds) {
        res.diagnostic = "part_arrow verification failed";
        return res;
    }
    res.ok = true;
    return res;
}

DenseDigraph build_dense_digraph(const PartiteHypergraph& g, const DensityParams& params,
                                 bool skip_regularity_check, int threads) {
    DenseDigraph d;
    d.parts = g.parts();
    for (int j = 0; j < g.parts(); ++j) {
        try {
            ArrowSearchResult res =
                find_dense_arrow(g, j, params, skip_regularity_check, threads);
            if (res.ok) {
                d.arcs.push_back({res.source, j, res.subgraph->edge_count(),
                                  (params.s + 1) * params.epsilon,
                                  res.certificate.pass()});
            } else {
                d.failures[j] = res.diagnostic;
            }
        } catch (const Error& err) {
            d.failures[j] = err.what();
        }
    }
    return d;
}

PropertyCheck check_property_one(const DenseDigraph& d) {
    std::vector<int> indeg(static_cast<std::size_t>(d.parts), 0);
    for (const auto& a : d.arcs) ++indeg[static_cast<std::size_t>(a.to)];
    for (int j = 0; j < d.parts; ++j)
        if (indeg[static_cast<std::size_t>(j)] == 0) return {false, {j}};
    return {true, {}};
}

PropertyCheck check_property_two(const DenseDigraph& d) {
    for (const auto& a : d.arcs)
        for (const auto& b : d.arcs)
            if (a.to == b.from && b.to != a.from && a.from != b.from && a.to != b.to)
                return {false, {a.from, a.to, b.to}};
    return {true, {}};
}

std::vector<int> heavy_vertices(const BipartiteGraph& g, const Rational& rho) {
    if (rho <= 0 || rho > 1) fail(Err::DensityPreconditionFailed, "rho must be in (0, 1]");
    const long long e = static_cast<long long>(g.edges.size());
    if (Rational(e) < rho * g.a_size * g.b_size)
        fail(Err::DensityPreconditionFailed, "edge count below rho |A| |B|");
    std::vector<long long> deg(static_cast<std::size_t>(g.a_size), 0);
    for (const auto& [a, b] : g.edges) ++deg[static_cast<std::size_t>(a)];
    std::vector<int> out;
    for (int a = 0; a < g.a_size; ++a)
        if (Rational(deg[static_cast<std::size_t>(a)]) >= rho * g.b_size / 2)
            out.push_back(a);
    return out;
}

HeavySsetResult heavy_ssets(const BipartiteGraph& g, const Rational& rho, int s,
                            double margin) {
    if (rho <= 0 || rho > 1) fail(Err::DensityPreconditionFailed, "rho must be in (0, 1]");
    const long long e = static_cast<long long>(g.edges.size());
    if (Rational(e) < rho * g.a_size * g.b_size)
        fail(Err::DensityPreconditionFailed, "edge count below rho |A| |B|");
    if (boost::rational_cast<double>(rho * g.a_size) < margin * s)
        fail(Err::MarginTooSmall, "rho |A| below the margin multiple of s");

    std::vector<std::vector<char>> adj(
        static_cast<std::size_t>(g.a_size),
        std::vector<char>(static_cast<std::size_t>(g.b_size), 0));
    for (const auto& [a, b] : g.edges)
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;

    const Rational cutoff = rat_pow(rho, s) * g.b_size / 3;
    HeavySsetResult res;
    VertexSet pool;
    for (int a = 0; a < g.a_size; ++a) pool.push_back(a);
    for_each_sset(pool, s, [&](const VertexSet& S) {
        long long common = 0;
        for (int b = 0; b < g.b_size; ++b) {
            bool all = true;
            for (int a : S)
                if (!adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                    all = false;
                    break;
                }
            if (all) ++common;
        }
        if (Rational(common) >= cutoff)
            res.ssets.emplace_back(S.begin(), S.end());
    });
    const Rational target = rat_pow(rho * g.a_size, s) / (3 * factorial(s));
    res.guarantee_met = Rational(static_cast<long long>(res.ssets.size())) >= target;
    return res;
}

RootedSsetResult rooted_sset_search(const PartiteHypergraph& g, const VertexSet& T,
                                    const VertexSet& X, const DensityParams& params) {
    RootedSsetResult res;
    if (X.empty()) { res.guarantee_met = true; return res; }
    const int n = equal_part_size(g);
    const int s = params.s;
    g.validate_tuple(T);
    Vertex v1 = -1;
    for (Vertex w : T)
        if (g.part_of(w) == 0) v1 = w;
    if (v1 < 0) fail(Err::InvalidTuple, "T must contain a part-0 vertex");

    for (Vertex v : X)
        if (!is_delta_dense(g, T, v, v1, params).dense)
            fail(Err::DensityPreconditionFailed,
                 "X member " + std::to_string(v) + " is not delta-dense on the anchor");
    const double margin_floor =
        params.margin * std::pow(static_cast<double>(n), params.epsilon + params.delta);
    if (static_cast<double>(X.size()) < margin_floor)
        fail(Err::MarginTooSmall, "|X| below the margin multiple of n^{eps+delta}");

    const double codeg_thr = params.codegree_threshold.value_or(
        default_codegree_threshold(n, g.r(), s, params.delta));

    // A(v) per member of X, then the majority pivot u_0 over N(T).
    std::map<Vertex, VertexSet> a_of;
    for (Vertex v : X) {
        VertexSet acc;
        for (const VertexSet& S : dense_ssets_at(g, T, v, v1, codeg_thr, s))
            acc = set_union(acc, S);
        a_of[v] = acc;
    }
    Vertex u0 = -1;
    long long best_votes = -1;
    for (Vertex u : completion_vertices(g, T)) {
        long long votes = 0;
        for (Vertex v : X)
            if (set_contains(a_of[v], u)) ++votes;
        if (votes > best_votes) { best_votes = votes; u0 = u; }
    }
    res.pivot = u0;
    VertexSet xprime;
    for (Vertex v : X)
        if (set_contains(a_of[v], u0)) xprime.push_back(v);
    if (xprime.empty()) { return res; }

    std::vector<VertexSet> bsets = g.link(set_union({u0}, {v1}));
    if (bsets.empty()) return res;

    BipartiteGraph h;
    h.a_size = static_cast<int>(xprime.size());
    h.b_size = static_cast<int>(bsets.size());
    for (int a = 0; a < h.a_size; ++a)
        for (int b = 0; b < h.b_size; ++b) {
            Edge e = set_union({v1, xprime[static_cast<std::size_t>(a)]},
                               bsets[static_cast<std::size_t>(b)]);
            if (static_cast<int>(e.size()) == g.r() && g.contains(e))
                h.edges.emplace_back(a, b);
        }
    if (h.edges.empty()) return res;
    const Rational rho(static_cast<long long>(h.edges.size()),
                       static_cast<long long>(h.a_size) * h.b_size);
    HeavySsetResult heavy = heavy_ssets(h, rho, s, params.margin);

    res.constructed = static_cast<long long>(heavy.ssets.size());
    for (const auto& idxs : heavy.ssets) {
        VertexSet S;
        for (int a : idxs) S.push_back(xprime[static_cast<std::size_t>(a)]);
        std::sort(S.begin(), S.end());
        if (is_rooted_on(g, S, v1)) res.ssets.push_back(S);
    }
    const double target = std::pow(static_cast<double>(n), -s * (params.epsilon + params.delta)) *
                          std::pow(static_cast<double>(X.size()), s) /
                          (3.0 * static_cast<double>(factorial(s)) *
                           std::pow(static_cast<double>(g.r()), s));
    res.guarantee_met = static_cast<double>(res.ssets.size()) >= target - 1e-9;
    return res;
}

ReductionWitness bipartite_reduction_witness(const PartiteHypergraph& g, const VertexSet& T,
                                             const VertexSet& X, int j,
                                             const DensityParams& params) {
    if (X.empty()) fail(Err::EmptyX, "X must be nonempty");
    const int n = equal_part_size(g);
    const int r = g.r();
    const int s = params.s;
    g.validate_tuple(T);
    if (static_cast<int>(T.size()) != r - 1)
        fail(Err::InvalidTuple, "T must be an (r-1)-tuple");

    ReductionWitness w;
    w.T = T;
    for (Vertex u : T)
        if (g.part_of(u) == 0) w.v1 = u;
    if (w.v1 < 0) fail(Err::InvalidTuple, "T must contain a part-0 vertex");
    // The part T misses is where X lives.
    std::vector<char> covered(static_cast<std::size_t>(g.parts()), 0);
    for (Vertex u : T) covered[static_cast<std::size_t>(g.part_of(u))] = 1;
    int missing = 0;
    for (int p = 0; p < g.parts(); ++p)
        if (!covered[static_cast<std::size_t>(p)]) missing = p;
    if (j == 0 || j == missing || j < 0 || j >= g.parts())
        fail(Err::BadTargetPart, "target part must avoid part 0 and T's missing part");
    w.v = X.front();

    const double codeg_thr = params.codegree_threshold.value_or(
        default_codegree_threshold(n, r, s, params.delta));
    VertexSet A;
    for (const VertexSet& S : dense_ssets_at(g, T, w.v, w.v1, codeg_thr, s))
        A = set_union(A, S);
    if (A.empty()) return w;

    std::vector<VertexSet> bsets = g.link(set_union({w.v}, {w.v1}));
    // Partition B by the (r-3)-tuple left after removing the part-j vertex;
    // pick the partition class carrying the most H-edges.
    std::map<VertexSet, long long> weight;
    for (const VertexSet& b : bsets) {
        VertexSet rTuple;
        for (Vertex u : b)
            if (g.part_of(u) != j) rTuple.push_back(u);
        long long cnt = 0;
        for (Vertex a : A) {
            Edge e = set_union({w.v1, a}, b);
            if (static_cast<int>(e.size()) == r && g.contains(e)) ++cnt;
        }
        weight[rTuple] += cnt;
    }
    if (weight.empty()) return w;
    VertexSet rstar = weight.begin()->first;
    for (const auto& [rt, cnt] : weight)
        if (cnt > weight.at(rstar)) rstar = rt;
    w.R = rstar;

    // Z = N_G({v, v1} u R*) inside part j.
    VertexSet base = set_union(set_union({w.v}, {w.v1}), rstar);
    if (static_cast<int>(base.size()) == r - 1) {
        for (const VertexSet& z : g.link(base))
            if (g.part_of(z.front()) == j) w.Z.push_back(z.front());
        std::sort(w.Z.begin(), w.Z.end());
    }
    if (w.Z.empty()) return w;

    BipartiteGraph hprime;
    hprime.a_size = static_cast<int>(A.size());
    hprime.b_size = static_cast<int>(w.Z.size());
    for (int a = 0; a < hprime.a_size; ++a)
        for (int b = 0; b < hprime.b_size; ++b) {
            Edge e = set_union(set_union({w.v1, A[static_cast<std::size_t>(a)]},
                                         {w.Z[static_cast<std::size_t>(b)]}),
                               rstar);
            if (static_cast<int>(e.size()) == r && g.contains(e))
                hprime.edges.emplace_back(a, b);
        }
    if (!hprime.edges.empty()) {
        const Rational rho(static_cast<long long>(hprime.edges.size()),
                           static_cast<long long>(hprime.a_size) * hprime.b_size);
        for (int a : heavy_vertices(hprime, rho))
            w.Y.push_back(A[static_cast<std::size_t>(a)]);
    }

    for (Vertex y : w.Y) {
        VertexSet tj = set_union(set_union({w.v1, y}, rstar), {});
        long long hits = 0;
        for (Vertex z : w.Z) {
            Edge e = set_union(tj, {z});
            if (static_cast<int>(e.size()) == r && g.contains(e)) ++hits;
        }
        w.per_y_hits[y] = hits;
    }

    const double inv = 1.0 / (s - 1);
    const double nd = static_cast<double>(n);
    const double tol = 1e-9;
    w.y_size_ok = static_cast<double>(w.Y.size()) >=
                  std::pow(nd, 1 - inv - 2 * params.epsilon - params.delta) /
                          (2.0 * r * params.alpha) - tol;
    w.z_size_ok = static_cast<double>(w.Z.size()) >= std::pow(nd, 1 - inv - params.delta) - tol &&
                  static_cast<double>(w.Z.size()) <=
                      std::pow(nd, 1 - inv + params.epsilon) + tol;
    w.hits_ok = !w.Y.empty();
    const double hits_floor = std::pow(nd, 1 - inv - params.epsilon - 2 * params.delta) / 2.0;
    for (const auto& [y, h] : w.per_y_hits)
        if (static_cast<double>(h) < hits_floor - tol) w.hits_ok = false;
    return w;
}

long long count_rooted_pairs(const PartiteHypergraph& g, const VertexSet& Y,
                             const VertexSet& Z, int s) {
    if (Y.empty() || Z.empty()) return 0;
    int py = g.part_of(Y.front()), pz = g.part_of(Z.front());
    for (Vertex y : Y)
        if (g.part_of(y) != py) fail(Err::InvalidSet, "Y must lie in one part");
    for (Vertex z : Z)
        if (g.part_of(z) != pz) fail(Err::InvalidSet, "Z must lie in one part");
    if (py == pz) fail(Err::SamePart, "Y and Z must lie in distinct parts");

    long long m = 0;
    for_each_sset(Z, s, [&](const VertexSet& S) {
        RootReport rep = root_set(g, S, CoverMethod::matching);
        for (Vertex y : Y)
            if (set_contains(rep.roots, y)) ++m;
    });
    return m;
}

} // namespace turan
