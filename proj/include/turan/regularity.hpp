#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

/// Pass/fail evidence for the three bounded-degree conditions, evaluated with
/// Delta_i taken as the max degree over the (r-1)-tuples avoiding part i.
struct RegularityCertificate {
    double epsilon = 0;
    double alpha = 1;
    int s = 3;
    int n = 0;
    long long edge_count = 0;
    std::vector<long long> delta_caps;
    std::vector<long long> min_degree;
    std::vector<long long> max_degree;
    bool density_bound_ok = false;
    bool degree_window_ok = false;
    bool per_tuple_ok = false;
    bool pass() const { return density_bound_ok && degree_window_ok && per_tuple_ok; }
};

struct DeletionRecord {
    VertexSet tuple;
    long long degree_at_deletion = 0;
};

struct DeletionTrace {
    std::vector<DeletionRecord> rounds;
    long long edges_deleted = 0;
};

struct PartiteReduction {
    PartiteHypergraph graph;
    std::vector<int> vertex_map; // old id -> new id
    double fraction = 0;         // e(G') / e(G)
    bool met_guarantee = true;   // fraction >= r!/r^r
};

/// Balanced r-partition of a general r-uniform hypergraph keeping as many
/// transversal edges as possible over seeded random retries. An explicit
/// partition (vertex -> part) short-circuits the sampling.
PartiteReduction partite_reduction(const PartiteHypergraph& g, std::uint64_t seed,
                                   int retries = 64,
                                   const std::optional<std::vector<int>>& partition = {});

struct DyadicResult {
    PartiteHypergraph graph;
    long long delta = 0; // 2^j, the kept bucket's ceiling
    int bucket = 0;
};

/// Buckets the (r-1)-tuples avoiding part i by dyadic degree class and keeps
/// the class covering the most edges (ties: smallest class).
DyadicResult dyadic_pass(const PartiteHypergraph& g, int part);

struct RegularPipelineResult {
    PartiteHypergraph graph;
    RegularityCertificate certificate;
    DeletionTrace trace;
    std::vector<long long> deltas;        // per part, from the dyadic passes
    long long edges_after_buckets = 0;    // e(G_r)
    double reduction_fraction = 1;        // from the partite step, 1 if skipped
};

/// Full pipeline: balanced partition (skipped for partite input), one dyadic
/// pass per part, then the iterated low-degree deletion loop. The certificate
/// is evaluated at (epsilon + (log2 n)^{-1/2}, 4 r log2^r n). The deletion
/// threshold Delta_i / (4 r log2^r n) can be overridden by divisor_override.
RegularPipelineResult find_regular_subgraph(const PartiteHypergraph& g, double epsilon,
                                            int s, std::uint64_t seed = 0,
                                            std::optional<double> divisor_override = {});

struct RelativeRegularResult {
    PartiteHypergraph graph;
    RegularityCertificate certificate;
    DeletionTrace trace;
};

/// Deletion loop relative to the host degrees: drop edges through tuples with
/// d_H(T) < d_G(T)/(2cr). Requires e(g_sub) >= e(g)/c.
RelativeRegularResult relative_regular_subgraph(const PartiteHypergraph& g,
                                                const PartiteHypergraph& g_sub, double c,
                                                double epsilon, double alpha, int s);

RegularityCertificate verify_regularity(const PartiteHypergraph& g, double epsilon,
                                        double alpha, int s);

} // namespace turan
