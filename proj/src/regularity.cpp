#include "turan/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace turan {

namespace {

double factorial_over_power(int r) {
    double f = 1;
    for (int i = 1; i <= r; ++i) f *= static_cast<double>(i) / r;
    return f; // r!/r^r
}

int equal_part_size(const PartiteHypergraph& g) {
    if (!g.partite()) fail(Err::UnequalParts, "partite input required");
    int n = g.part_size(0);
    for (int i = 1; i < g.parts(); ++i)
        if (g.part_size(i) != n) fail(Err::UnequalParts, "parts must have equal size");
    return n;
}

/// One full deletion loop: sweep tuples in lexicographic order per part,
/// delete all edges through any tuple below its threshold, repeat until a
/// sweep deletes nothing. threshold_for(part, tuple) yields the cutoff.
template <typename ThresholdFn>
std::pair<PartiteHypergraph, DeletionTrace> deletion_loop(PartiteHypergraph h,
                                                          ThresholdFn threshold_for) {
    DeletionTrace trace;
    bool changed = true;
    while (changed && h.edge_count() > 0) {
        changed = false;
        // Collect the full batch against the sweep-start snapshot so results
        // are independent of intra-sweep scan parallelism.
        std::vector<std::pair<int, VertexSet>> victims;
        for (int i = 0; i < h.parts(); ++i)
            for (const VertexSet& t : h.tuples(i))
                if (static_cast<double>(h.degree(t)) < threshold_for(i, t))
                    victims.emplace_back(i, t);
        if (victims.empty()) break;
        std::vector<Edge> doomed;
        for (const auto& [i, t] : victims) {
            long long d = 0;
            h.edges_containing_all(t).for_each([&](std::size_t k) {
                doomed.push_back(h.edges()[k]);
                ++d;
            });
            trace.rounds.push_back({t, d});
        }
        std::sort(doomed.begin(), doomed.end());
        doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
        trace.edges_deleted += static_cast<long long>(doomed.size());
        h = h.delete_edges(doomed);
        changed = true;
    }
    return {std::move(h), std::move(trace)};
}

} // namespace

PartiteReduction partite_reduction(const PartiteHypergraph& g, std::uint64_t seed,
                                   int retries,
                                   const std::optional<std::vector<int>>& partition) {
    const int r = g.r();
    const int v = g.vertex_count();
    if (v % r != 0) fail(Err::NotDivisible, "vertex count not divisible by r");
    const int n = v / r;

    auto evaluate = [&](const std::vector<int>& part_of) {
        // part_of: old vertex -> part; relabel so part i occupies [i*n, (i+1)*n).
        std::vector<int> new_id(static_cast<std::size_t>(v), -1);
        std::vector<int> next(static_cast<std::size_t>(r), 0);
        for (int u = 0; u < v; ++u) {
            int p = part_of[static_cast<std::size_t>(u)];
            new_id[static_cast<std::size_t>(u)] = p * n + next[static_cast<std::size_t>(p)]++;
        }
        std::vector<Edge> kept;
        for (const Edge& e : g.edges()) {
            std::vector<char> seen(static_cast<std::size_t>(r), 0);
            bool transversal = true;
            for (Vertex u : e) {
                int p = part_of[static_cast<std::size_t>(u)];
                if (seen[static_cast<std::size_t>(p)]) { transversal = false; break; }
                seen[static_cast<std::size_t>(p)] = 1;
            }
            if (!transversal) continue;
            Edge mapped;
            for (Vertex u : e) mapped.push_back(new_id[static_cast<std::size_t>(u)]);
            std::sort(mapped.begin(), mapped.end());
            kept.push_back(std::move(mapped));
        }
        return std::make_pair(std::move(kept), std::move(new_id));
    };

    std::vector<int> best_part;
    std::size_t best_edges = 0;
    if (partition) {
        if (static_cast<int>(partition->size()) != v)
            fail(Err::NotDivisible, "partition must assign every vertex");
        std::vector<int> counts(static_cast<std::size_t>(r), 0);
        for (int p : *partition) {
            if (p < 0 || p >= r) fail(Err::BadPartIndex, "partition part out of range");
            ++counts[static_cast<std::size_t>(p)];
        }
        for (int c : counts)
            if (c != n) fail(Err::NotDivisible, "partition must be balanced");
        best_part = *partition;
        best_edges = evaluate(best_part).first.size();
    } else {
        std::mt19937_64 rng(seed);
        std::vector<int> labels(static_cast<std::size_t>(v));
        for (int u = 0; u < v; ++u) labels[static_cast<std::size_t>(u)] = u / n;
        for (int attempt = 0; attempt < std::max(retries, 1); ++attempt) {
            std::shuffle(labels.begin(), labels.end(), rng);
            std::size_t e = evaluate(labels).first.size();
            if (e > best_edges || best_part.empty()) {
                best_edges = e;
                best_part = labels;
            }
        }
    }

    auto [kept, new_id] = evaluate(best_part);
    PartiteReduction out{
        PartiteHypergraph::build(r, std::vector<int>(static_cast<std::size_t>(r), n),
                                 std::move(kept)),
        std::move(new_id),
        g.edge_count() == 0 ? 1.0
                            : static_cast<double>(best_edges) /
                                  static_cast<double>(g.edge_count()),
        true};
    out.met_guarantee = out.fraction >= factorial_over_power(r) - 1e-12;
    return out;
}

DyadicResult dyadic_pass(const PartiteHypergraph& g, int part) {
    if (g.edge_count() == 0) fail(Err::EmptyInput, "dyadic pass needs a nonempty hypergraph");
    if (!g.partite()) fail(Err::UnequalParts, "partite input required");
    // Degree d lands in class j = ceil(log2 d), so 2^{j-1} <= d <= 2^j and
    // degree 1 sits alone in class 0.
    std::map<int, std::vector<VertexSet>> buckets;
    std::map<int, long long> covered;
    for (const VertexSet& t : g.tuples(part)) {
        long long d = g.degree(t);
        int j = 0;
        while ((1LL << j) < d) ++j;
        buckets[j].push_back(t);
        covered[j] += d;
    }
    int best = buckets.begin()->first;
    for (const auto& [j, c] : covered)
        if (c > covered[best]) best = j;

    std::vector<Edge> kept;
    for (const VertexSet& t : buckets[best])
        g.edges_containing_all(t).for_each(
            [&](std::size_t k) { kept.push_back(g.edges()[k]); });
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return {g.restrict_to(kept), 1LL << best, best};
}

RegularityCertificate verify_regularity(const PartiteHypergraph& g, double epsilon,
                                        double alpha, int s) {
    RegularityCertificate cert;
    cert.epsilon = epsilon;
    cert.alpha = alpha;
    cert.s = s;
    cert.n = equal_part_size(g);
    cert.edge_count = g.edge_count();
    const double n = cert.n;
    const double inv = 1.0 / (s - 1);
    const double tol = 1e-9;

    cert.density_bound_ok =
        static_cast<double>(cert.edge_count) >= std::pow(n, g.r() - inv - epsilon) - tol;
    cert.degree_window_ok = true;
    cert.per_tuple_ok = true;
    for (int i = 0; i < g.parts(); ++i) {
        long long dmax = 0, dmin = 0;
        bool any = false;
        for (const VertexSet& t : g.tuples(i)) {
            long long d = g.degree(t);
            dmax = std::max(dmax, d);
            dmin = any ? std::min(dmin, d) : d;
            any = true;
        }
        cert.delta_caps.push_back(dmax);
        cert.min_degree.push_back(any ? dmin : 0);
        cert.max_degree.push_back(dmax);
        if (!any) continue; // no tuples avoid part i; conditions vacuous
        double lo = std::pow(n, 1 - inv - epsilon), hi = std::pow(n, 1 - inv + epsilon);
        if (static_cast<double>(dmax) < lo - tol || static_cast<double>(dmax) > hi + tol)
            cert.degree_window_ok = false;
        if (static_cast<double>(dmin) < static_cast<double>(dmax) / alpha - tol)
            cert.per_tuple_ok = false;
    }
    return cert;
}

RegularPipelineResult find_regular_subgraph(const PartiteHypergraph& g, double epsilon,
                                            int s, std::uint64_t seed,
                                            std::optional<double> divisor_override) {
    RegularPipelineResult out;
    PartiteHypergraph cur = g;
    if (!g.partite()) {
        PartiteReduction red = partite_reduction(g, seed);
        out.reduction_fraction = red.fraction;
        cur = std::move(red.graph);
    }
    const int r = cur.r();
    const int n = equal_part_size(cur);
    if (n < 2) fail(Err::EmptyInput, "part size must be at least 2");
    if (cur.edge_count() == 0) fail(Err::EmptyInput, "no edges after partite reduction");

    out.deltas.assign(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        DyadicResult dy = dyadic_pass(cur, i);
        out.deltas[static_cast<std::size_t>(i)] = dy.delta;
        cur = std::move(dy.graph);
    }
    out.edges_after_buckets = cur.edge_count();

    const double log2n = std::log2(static_cast<double>(n));
    const double divisor =
        divisor_override.value_or(4.0 * r * std::pow(log2n, static_cast<double>(r)));
    auto [h, trace] = deletion_loop(std::move(cur), [&](int i, const VertexSet&) {
        return static_cast<double>(out.deltas[static_cast<std::size_t>(i)]) / divisor;
    });
    out.trace = std::move(trace);
    out.graph = std::move(h);
    out.certificate = verify_regularity(out.graph, epsilon + 1.0 / std::sqrt(log2n),
                                        4.0 * r * std::pow(log2n, static_cast<double>(r)), s);
    return out;
}

RelativeRegularResult relative_regular_subgraph(const PartiteHypergraph& g,
                                                const PartiteHypergraph& g_sub, double c,
                                                double epsilon, double alpha, int s) {
    if (!g_sub.is_subgraph_of(g)) fail(Err::NotSubgraph, "g_sub must be a subgraph of g");
    if (c <= 0) fail(Err::TooFewEdges, "c must be positive");
    if (static_cast<double>(g_sub.edge_count()) <
        static_cast<double>(g.edge_count()) / c - 1e-9)
        fail(Err::TooFewEdges, "subgraph has fewer than e(g)/c edges");
    const int r = g.r();
    const int n = equal_part_size(g);

    auto [h, trace] = deletion_loop(g_sub, [&](int, const VertexSet& t) {
        return static_cast<double>(g.degree(t)) / (2.0 * c * r);
    });
    RelativeRegularResult out{std::move(h), {}, std::move(trace)};
    const double eps_out = epsilon + (n > 1 ? std::log(2 * c) / std::log(static_cast<double>(n))
                                            : 0.0);
    out.certificate = verify_regularity(out.graph, eps_out, 2 * alpha * c * r, s);
    return out;
}

} // namespace turan
