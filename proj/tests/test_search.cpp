#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "turan/patterns.hpp"
#include "turan/search.hpp"

using namespace turan;

#ifndef FIXTURES_DIR
#define FIXTURES_DIR "fixtures"
#endif

namespace {

nlohmann::json load_fixture() {
    std::ifstream in(std::string(FIXTURES_DIR) + "/turan_small.json");
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    return j;
}

} // namespace

TEST_CASE("turan_exact: vertex-count-forced values at n = 4, 5") {
    CHECK(turan_exact(4, {3, 2, 2}, SearchMode::all).value == 4);
    CHECK(turan_exact(5, {3, 2, 2}, SearchMode::all).value == 10);
}

TEST_CASE("turan_exact: n = 6 matches the pre-registered fixture") {
    auto fixture = load_fixture();
    auto res = turan_exact(6, {3, 2, 2}, SearchMode::all);
    CHECK(res.exhaustive);
    CHECK(res.value == fixture["turan_values"]["6"].get<long long>());
}

TEST_CASE("turan_exact: ceiling and degenerate sizes") {
    SearchOptions opts;
    opts.ceiling = 5;
    CHECK_THROWS_AS(turan_exact(6, {3, 2, 2}, SearchMode::all, opts), Error);
    CHECK(turan_exact(2, {3, 2, 2}, SearchMode::all).value == 0); // n < r
}

TEST_CASE("turan_exact: blown budget downgrades to a lower bound") {
    SearchOptions opts;
    opts.node_budget = 50;
    auto res = turan_exact(6, {3, 2, 2}, SearchMode::all, opts);
    CHECK(!res.exhaustive);
    CHECK(res.value <= 11);
}

TEST_CASE("erdos_fr_exact agrees with turan_exact for n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        auto fr = erdos_fr_exact(n, 3);
        auto tu = turan_exact(n, {3, 2, 2}, SearchMode::all);
        CHECK(fr.exhaustive);
        CHECK(tu.exhaustive);
        CHECK(fr.value == tu.value);
    }
}

TEST_CASE("fr fixture values") {
    auto fixture = load_fixture();
    for (int n = 4; n <= 6; ++n)
        CHECK(erdos_fr_exact(n, 3).value ==
              fixture["fr_values"][std::to_string(n)].get<long long>());
}

TEST_CASE("monotonicity in n and in t") {
    long long prev = -1;
    for (int n = 3; n <= 6; ++n) {
        long long v = turan_exact(n, {3, 2, 2}, SearchMode::all).value;
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(turan_exact(6, {3, 2, 3}, SearchMode::all).value >=
          turan_exact(6, {3, 2, 2}, SearchMode::all).value);
}

TEST_CASE("witness validity: free with exactly value edges") {
    auto res = turan_exact(6, {3, 2, 2}, SearchMode::all);
    REQUIRE(!res.witnesses.empty());
    for (const auto& w : res.witnesses) {
        CHECK(w.edge_count() == res.value);
        CHECK(is_kst_free(w, {3, 2, 2}));
    }
    auto fr = erdos_fr_exact(6, 3);
    for (const auto& w : fr.witnesses) {
        CHECK(w.edge_count() == fr.value);
        CHECK(!find_erdos_quadruple(w));
    }
}

TEST_CASE("partite mode runs and is bounded by the general count") {
    auto res = turan_exact(2, {3, 2, 2}, SearchMode::partite);
    CHECK(res.exhaustive);
    CHECK(res.value <= 8);
    CHECK(res.value >= 1);
}

TEST_CASE("construct_star: size, freeness, no quadruple") {
    auto star = construct_star(5, 3);
    CHECK(star.edge_count() == 6); // C(4, 2)
    CHECK(is_kst_free(star, {3, 2, 2}));
    CHECK(!find_erdos_quadruple(star));
    CHECK_THROWS_AS(construct_star(3, 3), Error);
}

TEST_CASE("lower-bound sandwich: star <= exact optimum") {
    for (int n = 4; n <= 6; ++n)
        CHECK(construct_star(n, 3).edge_count() <=
              turan_exact(n, {3, 2, 2}, SearchMode::all).value);
}

TEST_CASE("construct_random_maximal: determinism, freeness, maximality") {
    auto a = construct_random_maximal(8, {3, 2, 2}, 42);
    auto b = construct_random_maximal(8, {3, 2, 2}, 42);
    CHECK(a == b);
    CHECK(is_kst_free(a, {3, 2, 2}));
    // Pattern needing more vertices than available -> complete hypergraph.
    auto full = construct_random_maximal(5, {3, 2, 2}, 9);
    CHECK(full.edge_count() == 10);
}

TEST_CASE("random_partite: determinism and density extremes") {
    CHECK(random_partite(3, 3, 0.5, 4) == random_partite(3, 3, 0.5, 4));
    CHECK(random_partite(3, 2, 1.0, 0).edge_count() == 8);
    CHECK(random_partite(3, 2, 0.0, 0).edge_count() == 0);
}

TEST_CASE("canonical_form: isomorphs collapse, idempotent") {
    auto g = PartiteHypergraph::build(3, {5}, {{0, 1, 2}, {0, 1, 3}});
    auto h = PartiteHypergraph::build(3, {5}, {{2, 3, 4}, {1, 3, 4}});
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_form(canonical_form(g)) == canonical_form(g));
}
