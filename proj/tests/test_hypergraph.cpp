#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "turan/error.hpp"
#include "turan/hypergraph.hpp"

using namespace turan;

TEST_CASE("build: smallest partite instance") {
    auto g = PartiteHypergraph::build(3, {1, 1, 1}, {{0, 1, 2}});
    CHECK(g.edge_count() == 1);
    CHECK(g.partite());
    CHECK(g.vertex_count() == 3);
}

TEST_CASE("build: complete 3-partite on (2,2,2)") {
    auto g = complete_partite(3, 2);
    CHECK(g.edge_count() == 8);
    CHECK(g.part_sizes() == std::vector<int>{2, 2, 2});
}

TEST_CASE("build: non-transversal edge rejected") {
    CHECK_THROWS_WITH_AS(PartiteHypergraph::build(3, {2, 2, 2}, {{0, 1, 2}}),
                         doctest::Contains("part"), Error);
    try {
        PartiteHypergraph::build(3, {2, 2, 2}, {{0, 1, 2}});
    } catch (const Error& e) {
        CHECK(e.code() == Err::NonTransversalEdge);
    }
}

TEST_CASE("build: duplicate, arity, and range errors") {
    CHECK_THROWS_AS(PartiteHypergraph::build(3, {2, 2, 2}, {{0, 2, 4}, {0, 2, 4}}), Error);
    CHECK_THROWS_AS(PartiteHypergraph::build(3, {2, 2, 2}, {{0, 2}}), Error);
    CHECK_THROWS_AS(PartiteHypergraph::build(3, {2, 2, 2}, {{0, 2, 9}}), Error);
}

TEST_CASE("link: one completion") {
    auto g = PartiteHypergraph::build(3, {1, 1, 1}, {{0, 1, 2}});
    CHECK(g.link({0, 1}) == std::vector<VertexSet>{{2}});
}

TEST_CASE("link: complete partite forces all of the missing part") {
    auto g = complete_partite(3, 2);
    // a in V1, b in V2 -> both vertices of V3.
    CHECK(g.link({0, 2}) == std::vector<VertexSet>{{4}, {5}});
    CHECK(g.degree({0, 2}) == 2);
}

TEST_CASE("link: vertex in no edge has empty link") {
    auto g = PartiteHypergraph::build(3, {2, 2, 2}, {{0, 2, 4}});
    CHECK(g.link({5}).empty());
    CHECK(g.degree({5}) == 0);
}

TEST_CASE("degree: complete partite, single edge, disjoint tuple") {
    auto g = complete_partite(3, 3);
    for (const auto& t : g.tuples(2)) CHECK(g.degree(t) == 3);
    auto one = PartiteHypergraph::build(3, {2, 2, 2}, {{0, 2, 4}});
    CHECK(one.degree({0, 2}) == 1);
    CHECK(one.degree({0}) == 1);
    CHECK(one.degree({1, 3}) == 0);
}

TEST_CASE("tuples: complete partite part 3, empty graph, single edge") {
    auto g = complete_partite(3, 2);
    auto ts = g.tuples(2);
    CHECK(ts.size() == 4); // V1 x V2
    CHECK(ts.front() == VertexSet{0, 2});
    CHECK(empty_hypergraph(3, {2, 2, 2}).tuples(0).empty());
    auto one = PartiteHypergraph::build(3, {2, 2, 2}, {{0, 2, 4}});
    CHECK(one.tuples(0) == std::vector<VertexSet>{{2, 4}});
}

TEST_CASE("tuples: rejected in general mode") {
    auto g = PartiteHypergraph::build(3, {4}, {{0, 1, 2}});
    CHECK_THROWS_AS(g.tuples(0), Error);
}

TEST_CASE("delete_edges: identity, everything, incident-to-vertex") {
    auto g = complete_partite(3, 2);
    CHECK(g.delete_edges({}) == g);
    CHECK(g.delete_edges(g.edges()).edge_count() == 0);
    auto h = g.delete_edges_if([](const Edge& e) { return e.front() == 0; });
    CHECK(h.edge_count() == 4);
    CHECK_THROWS_AS(g.delete_edges({{1, 1, 1}}), Error);
}

TEST_CASE("delete is monotone on links") {
    auto g = complete_partite(3, 2);
    auto h = g.delete_edges_if([](const Edge& e) { return e.back() == 5; });
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto small = h.link({v});
        auto big = g.link({v});
        for (const auto& b : small)
            CHECK(std::find(big.begin(), big.end(), b) != big.end());
    }
}

TEST_CASE("text format: round trip and parsing") {
    auto g = PartiteHypergraph::from_text("HGR 3 3 2 2 2\n0 2 4\n");
    CHECK(g.edge_count() == 1);
    CHECK(g.to_text() == "HGR 3 3 2 2 2\n0 2 4\n");
    CHECK(PartiteHypergraph::from_text(complete_partite(3, 3).to_text()) ==
          complete_partite(3, 3));
    CHECK_THROWS_AS(PartiteHypergraph::from_text("HGR 3 3 2 2 2\n0 2\n"), Error);
    CHECK_THROWS_AS(PartiteHypergraph::from_text("nonsense"), Error);
}

TEST_CASE("handshake: tuple degrees sum to the edge count per part") {
    for (int n = 1; n <= 3; ++n) {
        auto g = complete_partite(3, n);
        for (int i = 0; i < 3; ++i) {
            long long sum = 0;
            for (const auto& t : g.tuples(i)) sum += g.degree(t);
            CHECK(sum == g.edge_count());
        }
    }
}

TEST_CASE("link consistency by full enumeration") {
    auto g = PartiteHypergraph::build(3, {2, 2, 2},
                                      {{0, 2, 4}, {0, 3, 5}, {1, 2, 5}, {1, 3, 4}});
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            if (g.part_of(a) == g.part_of(b)) continue;
            for (const auto& c : g.link({a, b})) {
                Edge e = {a, b, c.front()};
                std::sort(e.begin(), e.end());
                CHECK(std::binary_search(g.edges().begin(), g.edges().end(), e));
            }
        }
}
