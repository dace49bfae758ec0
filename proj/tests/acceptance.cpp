// Acceptance gate: ten independently checkable criteria, one verdict line
// each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "turan/density.hpp"
#include "turan/patterns.hpp"
#include "turan/regularity.hpp"
#include "turan/roots.hpp"
#include "turan/search.hpp"

#ifndef FIXTURES_DIR
#define FIXTURES_DIR "fixtures"
#endif
#ifndef CLI_BIN
#define CLI_BIN "./turanlab"
#endif

using namespace turan;

namespace {

int g_failures = 0;

void verdict(int criterion, bool ok, const std::string& what) {
    std::printf("criterion %2d: %s — %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++g_failures;
}

// 1. Matching-method root sets on free hosts never exceed (t-1)(r-1).
void criterion_1() {
    const int r = 3, s = 2, t = 2, n = 12;
    long long violations = 0;
    auto start = std::chrono::steady_clock::now();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto g = construct_random_maximal(n, {r, s, t}, seed);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (root_set(g, {a, b}).roots.size() >
                    static_cast<std::size_t>((t - 1) * (r - 1)))
                    ++violations;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << "root bound |roots| <= 2 on 200 maximal free hosts, " << violations
       << " violations, " << static_cast<int>(secs) << "s";
    verdict(1, violations == 0 && secs < 120.0, os.str());
}

// 2. Set-degree bounds d(A) <= Delta n^{r-k-1}, cd(S) <= r t Delta n^{r-3}.
void criterion_2() {
    const int r = 3, s = 2, t = 2, n = 6;
    long long violations = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = random_partite(r, n, 0.2 + 0.006 * static_cast<double>(seed), seed);
        long long delta = 0;
        for (int i = 0; i < r; ++i)
            for (const auto& tup : g.tuples(i)) delta = std::max(delta, g.degree(tup));
        for (int a = 0; a < g.vertex_count(); ++a) {
            if (g.degree({a}) > delta * n) ++violations; // k = 1
            for (int b = a + 1; b < g.vertex_count(); ++b) {
                if (g.part_of(a) == g.part_of(b)) continue;
                if (g.degree({a, b}) > delta) ++violations; // k = 2
            }
        }
        if (is_kst_free(g, {r, s, t}))
            for (int a = 0; a < g.vertex_count(); ++a)
                for (int b = a + 1; b < g.vertex_count(); ++b) {
                    if (g.part_of(a) == g.part_of(b)) continue;
                    if (codegree(g, {a, b}) > r * t * delta) ++violations;
                }
    }
    verdict(2, violations == 0,
            "set-degree and codegree bounds on 100 partite instances, " +
                std::to_string(violations) + " violations");
}

// 3. heavy_vertices returns at least rho |A| / 2 vertices, exact rationals.
void criterion_3() {
    std::mt19937_64 rng(12345);
    long long violations = 0;
    auto start = std::chrono::steady_clock::now();
    for (int trial = 0; trial < 1000; ++trial) {
        BipartiteGraph g{static_cast<int>(rng() % 30 + 1), static_cast<int>(rng() % 30 + 1), {}};
        const std::uint64_t keep = rng() % 100;
        for (int a = 0; a < g.a_size; ++a)
            for (int b = 0; b < g.b_size; ++b)
                if (rng() % 100 < keep) g.edges.push_back({a, b});
        if (g.edges.empty()) continue;
        Rational rho(static_cast<long long>(g.edges.size()),
                     static_cast<long long>(g.a_size) * g.b_size);
        auto heavy = heavy_vertices(g, rho);
        if (Rational(static_cast<long long>(heavy.size())) * 2 < rho * g.a_size)
            ++violations;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    verdict(3, violations == 0 && secs < 10.0,
            "bipartite averaging on 1000 graphs, " + std::to_string(violations) +
                " violations, " + std::to_string(static_cast<int>(secs)) + "s");
}

// 4. Regularization retention and degree windows, absolute and relative.
void criterion_4() {
    const int r = 3, n = 8;
    long long violations = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const double density = 0.2 + 0.007 * static_cast<double>(seed);
        auto g = random_partite(r, n, density, seed);
        if (g.edge_count() == 0) continue;
        auto res = find_regular_subgraph(g, 0.1, 3, seed);
        if (res.graph.edge_count() * 2 < res.edges_after_buckets) ++violations;
        const double divisor = 4.0 * r * std::pow(std::log2(n), r);
        for (int i = 0; i < r; ++i)
            for (const auto& tup : res.graph.tuples(i)) {
                const double d = static_cast<double>(res.graph.degree(tup));
                const double cap = static_cast<double>(res.deltas[static_cast<std::size_t>(i)]);
                if (d > cap + 1e-9 || d < cap / divisor - 1e-9) ++violations;
            }
        // Relative variant against a two-thirds subgraph.
        int counter = 0;
        auto sub = g.delete_edges_if([&counter](const Edge&) { return counter++ % 3 == 0; });
        if (sub.edge_count() == 0) continue;
        const double c = static_cast<double>(g.edge_count()) /
                         static_cast<double>(sub.edge_count());
        auto rel = relative_regular_subgraph(g, sub, c, 0.1, 1.0, 3);
        if (rel.graph.edge_count() * 2 < sub.edge_count()) ++violations;
        for (int i = 0; i < r; ++i)
            for (const auto& tup : rel.graph.tuples(i))
                if (static_cast<double>(rel.graph.degree(tup)) * 2.0 * c * r <
                    static_cast<double>(g.degree(tup)) - 1e-9)
                    ++violations;
    }
    verdict(4, violations == 0,
            "regularization guarantees on 100 instances, " + std::to_string(violations) +
                " violations");
}

// 5. Exact Turán values against the pre-registered fixture.
void criterion_5() {
    std::ifstream in(std::string(FIXTURES_DIR) + "/turan_small.json");
    if (!in.good()) {
        verdict(5, false, "fixture turan_small.json missing");
        return;
    }
    nlohmann::json fixture;
    in >> fixture;
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 4; n <= 6; ++n) {
        auto res = turan_exact(n, {3, 2, 2}, SearchMode::all);
        long long expected = fixture["turan_values"][std::to_string(n)].get<long long>();
        if (!res.exhaustive || res.value != expected) ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    verdict(5, ok && secs < 600.0,
            "turan_exact(4,5,6) = 4, 10, and the pre-registered n=6 fixture value");
}

// 6. Cross-oracle identity between the two exact searches.
void criterion_6() {
    bool ok = true;
    for (int n = 3; n <= 6; ++n) {
        auto fr = erdos_fr_exact(n, 3);
        auto tu = turan_exact(n, {3, 2, 2}, SearchMode::all);
        if (!fr.exhaustive || !tu.exhaustive || fr.value != tu.value) ok = false;
    }
    verdict(6, ok, "erdos_fr_exact(n,3) = turan_exact(n,(3,2,2)) for n <= 6, both exhaustive");
}

// 7. Backtracking detector vs the Y-plus-matching characterization.
void criterion_7() {
    long long disagreements = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        PartiteHypergraph g = [&] {
            switch (seed % 3) {
                case 0:
                    return construct_random_maximal(static_cast<int>(7 + seed % 4),
                                                    {3, 2, 2}, seed);
                case 1:
                    return random_partite(3, 3, 0.3 + 0.001 * static_cast<double>(seed), seed);
                default:
                    return random_partite(3, 4, 0.2 + 0.001 * static_cast<double>(seed), seed);
            }
        }();
        if (find_kst(g, {3, 2, 2}).has_value() != oracle::contains_kst(g, 2, 2))
            ++disagreements;
    }
    verdict(7, disagreements == 0,
            "detection equivalence on 500 mixed instances, " +
                std::to_string(disagreements) + " disagreements");
}

// 8. Counting bound m <= r t |Z|^s on free hosts with full-part Y, Z.
void criterion_8() {
    const int r = 3, s = 2, t = 2, n = 3;
    long long violations = 0;
    int free_found = 0;
    for (std::uint64_t seed = 0; free_found < 100 && seed < 5000; ++seed) {
        auto g = random_partite(r, n, 0.35, seed);
        if (!is_kst_free(g, {r, s, t})) continue;
        ++free_found;
        VertexSet Y = {0, 1, 2}, Z = {3, 4, 5};
        long long m = count_rooted_pairs(g, Y, Z, s);
        if (m > r * t * 9) ++violations; // |Z|^s = 9
    }
    verdict(8, violations == 0 && free_found == 100,
            "m <= rt|Z|^s on " + std::to_string(free_found) + " free instances, " +
                std::to_string(violations) + " violations");
}

// 9. Constructive witnesses re-verify from scratch.
void criterion_9() {
    long long discrepancies = 0;
    DensityParams p;
    p.s = 2;
    p.codegree_threshold = 1.0;
    p.sset_fraction_threshold = 1.0;
    p.margin = 0.1;
    for (int n = 3; n <= 5; ++n) {
        auto g = complete_partite(3, n);
        VertexSet T = {0, n};
        VertexSet X;
        for (int k = 0; k < n; ++k) X.push_back(2 * n + k);
        auto rooted = rooted_sset_search(g, T, X, p);
        for (const auto& sset : rooted.ssets)
            if (!is_rooted_on(g, sset, 0)) ++discrepancies;
        VertexSet T2 = {0, 2 * n}; // X in part 1, Z sought in part 2
        VertexSet X2;
        for (int k = 0; k < n; ++k) X2.push_back(n + k);
        auto w = bipartite_reduction_witness(g, T2, X2, 2, p);
        for (Vertex y : w.Y) {
            VertexSet pair = {w.v1, y};
            std::sort(pair.begin(), pair.end());
            long long hits = 0;
            for (const auto& b : g.link(pair))
                if (set_contains(w.Z, b.front())) ++hits;
            if (w.per_y_hits.at(y) != hits) ++discrepancies;
        }
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_partite(3, 4, 0.7, seed);
        VertexSet T = {0, 4};
        if (g.degree(T) < 3) continue;
        VertexSet X;
        for (const auto& b : g.link(T)) X.push_back(b.front());
        try {
            auto rooted = rooted_sset_search(g, T, X, p);
            for (const auto& sset : rooted.ssets)
                if (!is_rooted_on(g, sset, 0)) ++discrepancies;
        } catch (const Error&) {
            // Desk-scale precondition failures are acceptable here; the
            // criterion is about soundness of what does come back.
        }
    }
    verdict(9, discrepancies == 0,
            "constructive witnesses re-verified, " + std::to_string(discrepancies) +
                " discrepancies");
}

// 10. Byte-identical CLI artifacts across thread counts.
void criterion_10() {
    const std::string bin = CLI_BIN;
    const std::string fixtures = FIXTURES_DIR;
    auto capture = [&](const std::string& cmd, const std::string& path) -> bool {
        std::string full = cmd + " > " + path + " 2>/dev/null";
        return std::system(full.c_str()) == 0;
    };
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    bool ok = true;
    std::vector<std::string> outputs;
    for (int threads : {1, 2, 8}) {
        std::string path = "/tmp/turanlab_digraph_" + std::to_string(threads) + ".json";
        ok = ok && capture(bin + " digraph --input " + fixtures +
                               "/random_333_seed7.hgr --skip-regularity --seed 0"
                               " --codegree-threshold 1 --sset-threshold 1 --threads " +
                               std::to_string(threads),
                           path);
        outputs.push_back(slurp(path));
    }
    for (int threads : {1, 2, 8}) {
        std::string path = "/tmp/turanlab_verify_" + std::to_string(threads) + ".json";
        ok = ok && capture("TURANLAB_FIXTURES=" + fixtures + " " + bin +
                               " verify --seed 0 --codegree-threshold 1"
                               " --sset-threshold 1 --threads " +
                               std::to_string(threads),
                           path);
        outputs.push_back(slurp(path));
    }
    bool identical = outputs[0] == outputs[1] && outputs[1] == outputs[2] &&
                     outputs[3] == outputs[4] && outputs[4] == outputs[5] &&
                     !outputs[0].empty() && !outputs[3].empty();
    verdict(10, ok && identical,
            "digraph and verify byte-identical at 1, 2, and 8 threads");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
