#pragma once

#include <array>
#include <optional>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

struct PatternParams {
    int r;
    int s;
    int t;
};

/// A witness copy of K_{s,t}^{(r)}: t pairwise-disjoint (r-1)-sets X_i and an
/// s-set Y disjoint from all of them, with every X_i union {y} an edge.
struct Embedding {
    std::vector<VertexSet> x_sets; // lexicographically sorted
    VertexSet y;
};

/// Exhaustive search for K_{s,t}^{(r)}. Returns the lexicographically least
/// witness (Y-major order) or nullopt. Works in both partite and general mode.
std::optional<Embedding> find_kst(const PartiteHypergraph& g, const PatternParams& p);

bool is_kst_free(const PartiteHypergraph& g, const PatternParams& p);

/// Like find_kst, but only considers embeddings that use the given edge.
/// The edge must be present in g. Used for incremental freeness checks.
std::optional<Embedding> find_kst_using_edge(const PartiteHypergraph& g,
                                             const PatternParams& p, const Edge& e);

/// Four distinct edges A, B, C, D with A u B = C u D and A n B = C n D = {}.
std::optional<std::array<Edge, 4>> find_erdos_quadruple(const PartiteHypergraph& g);

/// Quadruple variant restricted to configurations using the given edge.
std::optional<std::array<Edge, 4>> find_erdos_quadruple_using_edge(
    const PartiteHypergraph& g, const Edge& e);

/// True iff the family contains t pairwise-disjoint members. Exact
/// branch-and-bound; t is tiny in practice.
bool has_disjoint_family(const std::vector<VertexSet>& sets, int t);

// Raw variants over a plain lexicographically sorted edge list (the edge must
// be a member of the list). These back the incremental freeness checks of the
// search engine, where rebuilding full hypergraph indices per node is wasted
// work.
std::optional<Embedding> kst_using_edge_raw(const std::vector<Edge>& sorted_edges, int s,
                                            int t, const Edge& e);
std::optional<std::array<Edge, 4>> quadruple_using_edge_raw(
    const std::vector<Edge>& sorted_edges, const Edge& e);

} // namespace turan
