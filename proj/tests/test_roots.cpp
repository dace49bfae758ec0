#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "turan/patterns.hpp"
#include "turan/roots.hpp"
#include "turan/search.hpp"

using namespace turan;

namespace {

PartiteHypergraph k22_host() {
    return PartiteHypergraph::build(3, {6},
                                    {{0, 1, 4}, {0, 1, 5}, {2, 3, 4}, {2, 3, 5}});
}

bool covers(const VertexSet& roots, const std::vector<VertexSet>& cn) {
    for (const auto& member : cn) {
        bool hit = false;
        for (Vertex v : roots)
            if (set_contains(member, v)) hit = true;
        if (!hit) return false;
    }
    return true;
}

} // namespace

TEST_CASE("common_neighborhood: pattern Y side, singleton, isolated vertex") {
    auto g = k22_host();
    CHECK(common_neighborhood(g, {4, 5}) == std::vector<VertexSet>{{0, 1}, {2, 3}});
    CHECK(common_neighborhood(g, {4}) == g.link({4}));
    auto h = PartiteHypergraph::build(3, {7}, {{0, 1, 4}, {0, 1, 5}, {2, 3, 4}, {2, 3, 5}});
    CHECK(common_neighborhood(h, {4, 6}).empty());
}

TEST_CASE("codegree and codegree_at on the pattern") {
    auto g = k22_host();
    CHECK(codegree(g, {4, 5}) == 2);
    for (Vertex x : {0, 1, 2, 3}) CHECK(codegree_at(g, {4, 5}, x) == 1);
    auto h = PartiteHypergraph::build(3, {7}, {{0, 1, 4}, {0, 1, 5}, {2, 3, 4}, {2, 3, 5}});
    CHECK(codegree_at(h, {4, 5}, 6) == 0);
    CHECK_THROWS_AS(codegree_at(g, {4, 5}, 4), Error);
}

TEST_CASE("codegree decomposition over root covers") {
    auto g = construct_random_maximal(9, {3, 2, 2}, 7);
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b) {
            VertexSet s = {a, b};
            auto rep = root_set(g, s);
            long long sum = 0;
            for (Vertex u : rep.roots) sum += codegree_at(g, s, u);
            CHECK(codegree(g, s) <= sum);
            if (rep.roots.empty()) CHECK(codegree(g, s) == 0);
        }
}

TEST_CASE("greedy_matching: disjoint, star-shaped, pattern CN") {
    std::vector<VertexSet> disjoint = {{0, 1}, {2, 3}, {4, 5}};
    CHECK(greedy_matching(disjoint) == disjoint);
    std::vector<VertexSet> shared = {{0, 1}, {0, 2}, {0, 3}};
    CHECK(greedy_matching(shared).size() == 1);
    // CN of Y in K_{2,3}^{(3)}: three disjoint X_i.
    auto g = PartiteHypergraph::build(
        3, {8}, {{0, 1, 6}, {0, 1, 7}, {2, 3, 6}, {2, 3, 7}, {4, 5, 6}, {4, 5, 7}});
    CHECK(greedy_matching(common_neighborhood(g, {6, 7})).size() == 3);
}

TEST_CASE("root_set: empty CN, disjoint CN, exact vs matching") {
    auto g = k22_host();
    CHECK(root_set(g, {0, 2}).roots.empty());
    auto rep = root_set(g, {4, 5});
    CHECK(rep.roots == VertexSet{0, 1, 2, 3});
    auto exact = root_set(g, {4, 5}, CoverMethod::exact);
    CHECK(exact.roots.size() == 2);
    CHECK(exact.roots == VertexSet{0, 2}); // lexicographically least optimum
    CHECK(covers(exact.roots, common_neighborhood(g, {4, 5})));
}

TEST_CASE("root_set: per-root codegrees recorded") {
    auto rep = root_set(k22_host(), {4, 5});
    for (Vertex v : rep.roots) CHECK(rep.per_root_codegrees.at(v) == 1);
}

TEST_CASE("cover property and freeness bound on random maximal instances") {
    const int r = 3, s = 2, t = 2;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto g = construct_random_maximal(10, {r, s, t}, seed);
        REQUIRE(is_kst_free(g, {r, s, t}));
        for (int a = 0; a < 10; ++a)
            for (int b = a + 1; b < 10; ++b) {
                auto cn = common_neighborhood(g, {a, b});
                auto rep = root_set(g, {a, b});
                CHECK(covers(rep.roots, cn));
                CHECK(static_cast<int>(rep.matching.size()) <= t - 1);
                CHECK(static_cast<int>(rep.roots.size()) <= (t - 1) * (r - 1));
                CHECK(static_cast<int>(rep.roots.size()) < r * t);
            }
    }
}

TEST_CASE("min_cover_size and is_rooted_on") {
    auto g = k22_host();
    CHECK(min_cover_size(common_neighborhood(g, {4, 5})) == 2);
    for (Vertex v : {0, 1, 2, 3}) CHECK(is_rooted_on(g, {4, 5}, v));
    CHECK(!is_rooted_on(g, {4, 5}, 5));
}

TEST_CASE("set-degree bounds on free partite instances") {
    const int r = 3, s = 2, t = 2;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_partite(3, 4, 0.3, seed);
        if (!is_kst_free(g, {r, s, t})) continue;
        long long delta = 0;
        for (int i = 0; i < r; ++i)
            for (const auto& tup : g.tuples(i)) delta = std::max(delta, g.degree(tup));
        for (int a = 0; a < g.vertex_count(); ++a)
            for (int b = a + 1; b < g.vertex_count(); ++b) {
                if (g.part_of(a) == g.part_of(b)) continue;
                // k = 2, r = 3: d(A) <= Delta * n^{r-k-1} = Delta.
                CHECK(g.degree({a, b}) <= delta);
                // cd(S) <= r t Delta n^{r-3} = r t Delta.
                CHECK(codegree(g, {a, b}) <= r * t * delta);
            }
    }
}
