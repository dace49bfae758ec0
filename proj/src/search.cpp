#include "turan/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace turan {

namespace {

std::vector<Edge> all_rsets(int n, int r) {
    std::vector<Edge> out;
    Edge cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Edge> all_transversals(int r, int n) {
    std::vector<Edge> out;
    Edge cur(static_cast<std::size_t>(r));
    std::function<void(int)> rec = [&](int part) {
        if (part == r) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k < n; ++k) {
            cur[static_cast<std::size_t>(part)] = part * n + k;
            rec(part + 1);
        }
    };
    rec(0);
    return out;
}

using Perm = std::vector<int>;

Edge apply_perm(const Perm& p, const Edge& e) {
    Edge out;
    out.reserve(e.size());
    for (Vertex v : e) out.push_back(p[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

/// All permutations of [n] that fix the set {0, ..., r-1} (mode all), or all
/// part-structure automorphisms fixing the lex-least transversal (partite).
/// Empty result means "too many to enumerate, skip the pruning".
std::vector<Perm> first_edge_stabilizer(SearchMode mode, int r, int n, int total_vertices) {
    const std::uint64_t cap = 200'000;
    std::vector<Perm> out;
    if (mode == SearchMode::all) {
        std::uint64_t size = 1;
        for (int i = 2; i <= r; ++i) size *= static_cast<std::uint64_t>(i);
        for (int i = 2; i <= total_vertices - r; ++i) size *= static_cast<std::uint64_t>(i);
        if (size > cap) return out;
        Perm head(static_cast<std::size_t>(r)), tail(static_cast<std::size_t>(total_vertices - r));
        std::iota(head.begin(), head.end(), 0);
        std::iota(tail.begin(), tail.end(), r);
        do {
            Perm t0 = tail;
            std::sort(t0.begin(), t0.end());
            do {
                Perm p(head.begin(), head.end());
                p.insert(p.end(), t0.begin(), t0.end());
                out.push_back(p);
            } while (std::next_permutation(t0.begin(), t0.end()));
        } while (std::next_permutation(head.begin(), head.end()));
        return out;
    }
    // Partite: part permutation pi and within-part permutations fixing each
    // part's first element.
    std::uint64_t size = 1;
    for (int i = 2; i <= r; ++i) size *= static_cast<std::uint64_t>(i);
    std::uint64_t inner = 1;
    for (int i = 2; i <= n - 1; ++i) inner *= static_cast<std::uint64_t>(i);
    for (int p = 0; p < r; ++p) {
        if (size > cap) return {};
        size *= inner;
    }
    if (size > cap) return {};

    Perm part_perm(static_cast<std::size_t>(r));
    std::iota(part_perm.begin(), part_perm.end(), 0);
    do {
        // Per-part permutations of {1, ..., n-1}.
        std::vector<Perm> inner_perms;
        Perm base(static_cast<std::size_t>(n - 1));
        std::iota(base.begin(), base.end(), 1);
        std::vector<Perm> single;
        Perm b = base;
        std::sort(b.begin(), b.end());
        do single.push_back(b);
        while (std::next_permutation(b.begin(), b.end()));
        std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
        while (true) {
            Perm p(static_cast<std::size_t>(r * n));
            for (int part = 0; part < r; ++part) {
                p[static_cast<std::size_t>(part * n)] = part_perm[static_cast<std::size_t>(part)] * n;
                const Perm& sigma = single[idx[static_cast<std::size_t>(part)]];
                for (int k = 1; k < n; ++k)
                    p[static_cast<std::size_t>(part * n + k)] =
                        part_perm[static_cast<std::size_t>(part)] * n +
                        sigma[static_cast<std::size_t>(k - 1)];
            }
            out.push_back(std::move(p));
            int carry = 0;
            while (carry < r) {
                if (++idx[static_cast<std::size_t>(carry)] < single.size()) break;
                idx[static_cast<std::size_t>(carry)] = 0;
                ++carry;
            }
            if (carry == r) break;
        }
    } while (std::next_permutation(part_perm.begin(), part_perm.end()));
    return out;
}

struct Engine {
    std::vector<Edge> candidates;
    std::function<bool(const std::vector<Edge>&, const Edge&)> creates_pattern;
    SearchOptions opts;
    SearchMode mode;
    int r;
    int n;

    SearchResult result;
    std::vector<Edge> chosen; // kept lexicographically sorted
    std::vector<char> second_edge_leader;
    bool aborted = false;

    void record_if_better() {
        if (static_cast<long long>(chosen.size()) > result.value) {
            result.value = static_cast<long long>(chosen.size());
            result.witnesses.clear();
            result.witnesses.push_back(build_witness());
        }
    }

    PartiteHypergraph build_witness() const {
        std::vector<int> sizes =
            mode == SearchMode::all ? std::vector<int>{n}
                                    : std::vector<int>(static_cast<std::size_t>(r), n);
        return canonical_form(PartiteHypergraph::build(r, sizes, chosen));
    }

    void dfs(std::size_t i) {
        if (aborted) return;
        if (++result.nodes_explored > opts.node_budget) {
            aborted = true;
            result.exhaustive = false;
            return;
        }
        if (static_cast<long long>(chosen.size() + (candidates.size() - i)) <= result.value)
            return;
        if (i == candidates.size()) {
            record_if_better();
            return;
        }
        const Edge& e = candidates[i];
        bool can_include = true;
        if (chosen.size() == 1 && !second_edge_leader.empty() &&
            !second_edge_leader[i])
            can_include = false;
        if (can_include) {
            auto pos = std::lower_bound(chosen.begin(), chosen.end(), e);
            pos = chosen.insert(pos, e);
            if (!creates_pattern(chosen, e)) {
                dfs(i + 1);
            }
            chosen.erase(std::lower_bound(chosen.begin(), chosen.end(), e));
        }
        if (aborted) return;
        dfs(i + 1);
    }

    SearchResult run() {
        result.mode = mode;
        if (candidates.empty()) {
            result.value = 0;
            result.witnesses.push_back(build_witness());
            return result;
        }
        // Any nonempty graph has an isomorph whose least edge is the least
        // candidate, so the first inclusion can be pinned there.
        std::vector<Perm> stab =
            first_edge_stabilizer(mode, r, n,
                                  mode == SearchMode::all ? n : r * n);
        if (!stab.empty()) {
            std::map<Edge, std::size_t> index_of;
            for (std::size_t k = 0; k < candidates.size(); ++k)
                index_of[candidates[k]] = k;
            second_edge_leader.assign(candidates.size(), 1);
            for (std::size_t k = 1; k < candidates.size(); ++k)
                for (const Perm& p : stab)
                    if (index_of.at(apply_perm(p, candidates[k])) < k) {
                        second_edge_leader[k] = 0;
                        break;
                    }
        }
        record_if_better(); // the empty graph
        const Edge& e0 = candidates.front();
        chosen.push_back(e0);
        if (!creates_pattern(chosen, e0)) dfs(1);
        chosen.clear();
        return result;
    }
};

} // namespace

PartiteHypergraph canonical_form(const PartiteHypergraph& g) {
    const std::uint64_t cap = 5'000'000;
    const int v = g.vertex_count();
    std::vector<Edge> best = g.edges();
    bool improved = false;
    auto consider = [&](const Perm& p) {
        std::vector<Edge> mapped;
        mapped.reserve(g.edges().size());
        for (const Edge& e : g.edges()) mapped.push_back(apply_perm(p, e));
        std::sort(mapped.begin(), mapped.end());
        if (mapped < best) {
            best = std::move(mapped);
            improved = true;
        }
    };
    if (!g.partite()) {
        std::uint64_t size = 1;
        for (int i = 2; i <= v; ++i) {
            size *= static_cast<std::uint64_t>(i);
            if (size > cap) return g; // too large to canonicalize; keep as-is
        }
        Perm p(static_cast<std::size_t>(v));
        std::iota(p.begin(), p.end(), 0);
        do consider(p);
        while (std::next_permutation(p.begin(), p.end()));
    } else {
        const int r = g.parts();
        const int n = g.part_size(0);
        for (int i = 1; i < r; ++i)
            if (g.part_size(i) != n) return g; // only balanced hosts canonicalized
        std::uint64_t inner = 1;
        for (int i = 2; i <= n; ++i) inner *= static_cast<std::uint64_t>(i);
        std::uint64_t size = 1;
        for (int i = 2; i <= r; ++i) size *= static_cast<std::uint64_t>(i);
        for (int part = 0; part < r; ++part) {
            size *= inner;
            if (size > cap) return g;
        }
        std::vector<Perm> singles;
        Perm b(static_cast<std::size_t>(n));
        std::iota(b.begin(), b.end(), 0);
        do singles.push_back(b);
        while (std::next_permutation(b.begin(), b.end()));
        Perm part_perm(static_cast<std::size_t>(r));
        std::iota(part_perm.begin(), part_perm.end(), 0);
        do {
            std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
            while (true) {
                Perm p(static_cast<std::size_t>(r * n));
                for (int part = 0; part < r; ++part)
                    for (int k = 0; k < n; ++k)
                        p[static_cast<std::size_t>(part * n + k)] =
                            part_perm[static_cast<std::size_t>(part)] * n +
                            singles[idx[static_cast<std::size_t>(part)]]
                                   [static_cast<std::size_t>(k)];
                consider(p);
                int carry = 0;
                while (carry < r) {
                    if (++idx[static_cast<std::size_t>(carry)] < singles.size()) break;
                    idx[static_cast<std::size_t>(carry)] = 0;
                    ++carry;
                }
                if (carry == r) break;
            }
        } while (std::next_permutation(part_perm.begin(), part_perm.end()));
    }
    if (!improved) return g;
    return PartiteHypergraph::build(g.r(), g.part_sizes(), std::move(best));
}

SearchResult turan_exact(int n, const PatternParams& params, SearchMode mode,
                         const SearchOptions& opts) {
    if (params.r < 2 || params.s < 1 || params.t < 1)
        fail(Err::ArityMismatch, "invalid pattern parameters");
    if (n > opts.ceiling) fail(Err::CeilingExceeded, "n exceeds the configured ceiling");
    if (n < 1) fail(Err::TooSmall, "n must be positive");
    Engine eng;
    eng.mode = mode;
    eng.r = params.r;
    eng.n = n;
    eng.opts = opts;
    eng.candidates = mode == SearchMode::all ? all_rsets(n, params.r)
                                             : all_transversals(params.r, n);
    eng.creates_pattern = [params](const std::vector<Edge>& cur, const Edge& e) {
        return kst_using_edge_raw(cur, params.s, params.t, e).has_value();
    };
    return eng.run();
}

SearchResult erdos_fr_exact(int n, int r, const SearchOptions& opts) {
    if (r < 2) fail(Err::ArityMismatch, "uniformity must be at least 2");
    if (n > opts.ceiling) fail(Err::CeilingExceeded, "n exceeds the configured ceiling");
    if (n < 1) fail(Err::TooSmall, "n must be positive");
    Engine eng;
    eng.mode = SearchMode::all;
    eng.r = r;
    eng.n = n;
    eng.opts = opts;
    eng.candidates = all_rsets(n, r);
    eng.creates_pattern = [](const std::vector<Edge>& cur, const Edge& e) {
        return quadruple_using_edge_raw(cur, e).has_value();
    };
    return eng.run();
}

PartiteHypergraph construct_star(int n, int r) {
    if (n <= r) fail(Err::TooSmall, "star needs n > r");
    std::vector<Edge> edges;
    for (Edge e : all_rsets(n - 1, r - 1)) {
        Edge shifted = {0};
        for (Vertex v : e) shifted.push_back(v + 1);
        edges.push_back(shifted);
    }
    return PartiteHypergraph::build(r, {n}, std::move(edges));
}

PartiteHypergraph construct_random_maximal(int n, const PatternParams& params,
                                           std::uint64_t seed) {
    std::vector<Edge> candidates = all_rsets(n, params.r);
    std::mt19937_64 rng(seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::vector<Edge> cur;
    for (const Edge& e : candidates) {
        auto pos = std::lower_bound(cur.begin(), cur.end(), e);
        pos = cur.insert(pos, e);
        if (kst_using_edge_raw(cur, params.s, params.t, e))
            cur.erase(std::lower_bound(cur.begin(), cur.end(), e));
    }
    return PartiteHypergraph::build(params.r, {n}, std::move(cur));
}

PartiteHypergraph random_partite(int r, int n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (const Edge& e : all_transversals(r, n)) {
        // Platform-independent uniform double in [0, 1).
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < density) edges.push_back(e);
    }
    return PartiteHypergraph::build(r, std::vector<int>(static_cast<std::size_t>(r), n),
                                    std::move(edges));
}

} // namespace turan
