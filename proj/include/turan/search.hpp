#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "turan/hypergraph.hpp"
#include "turan/patterns.hpp"

namespace turan {

enum class SearchMode { all, partite };

struct SearchResult {
    long long value = 0;
    std::vector<PartiteHypergraph> witnesses; // canonical forms
    std::uint64_t nodes_explored = 0;
    SearchMode mode = SearchMode::all;
    bool exhaustive = true; // false once the node budget runs out
};

struct SearchOptions {
    std::uint64_t node_budget = 200'000'000;
    int ceiling = 8;     // max n (mode all) / max part size (mode partite)
    int max_witnesses = 4;
};

/// Exact maximum edge count of a K_{s,t}^{(r)}-free hypergraph on n vertices
/// (mode all) or with parts of size n (mode partite). Branch-and-bound with
/// leader-based symmetry pruning; a blown budget downgrades the value to a
/// lower bound with exhaustive = false.
SearchResult turan_exact(int n, const PatternParams& params, SearchMode mode,
                         const SearchOptions& opts = {});

/// Same engine against the four-edge quadruple configuration.
SearchResult erdos_fr_exact(int n, int r, const SearchOptions& opts = {});

/// All C(n-1, r-1) edges through vertex 0, general mode.
PartiteHypergraph construct_star(int n, int r);

/// Seeded random-greedy maximal K_{s,t}^{(r)}-free hypergraph on n vertices.
PartiteHypergraph construct_random_maximal(int n, const PatternParams& params,
                                           std::uint64_t seed);

/// Seeded random balanced r-partite hypergraph, each transversal edge kept
/// independently with the given density.
PartiteHypergraph random_partite(int r, int n, double density, std::uint64_t seed);

/// Lexicographic-leader canonical form: minimum relabeled edge list over all
/// vertex permutations (mode all) or part-structure-preserving permutations
/// (partite).
PartiteHypergraph canonical_form(const PartiteHypergraph& g);

} // namespace turan
