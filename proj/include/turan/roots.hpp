#pragma once

#include <map>
#include <optional>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

enum class CoverMethod { matching, exact };

/// Common neighborhood, codegrees, and a canonical root cover for an s-set S.
struct RootReport {
    VertexSet subject;
    long long cn_size = 0;
    std::vector<VertexSet> matching; // pairwise-disjoint CN members, greedy order
    VertexSet roots;                 // the chosen cover
    CoverMethod method = CoverMethod::matching;
    std::map<Vertex, long long> per_root_codegrees;
};

/// CN(S) = intersection of the links of all members of S.
std::vector<VertexSet> common_neighborhood(const PartiteHypergraph& g, const VertexSet& S);

long long codegree(const PartiteHypergraph& g, const VertexSet& S);

/// Number of CN(S) members containing u; u must lie outside S.
long long codegree_at(const PartiteHypergraph& g, const VertexSet& S, Vertex u);

/// Inclusion-maximal pairwise-disjoint sublist, scanning in lexicographic order.
std::vector<VertexSet> greedy_matching(const std::vector<VertexSet>& cn);

/// Matching method: vertex union of the greedy matching (a cover by
/// maximality). Exact method: the lexicographically least minimum vertex
/// cover, found by exhaustive search bounded by exact_budget on |CN|.
RootReport root_set(const PartiteHypergraph& g, const VertexSet& S,
                    CoverMethod method = CoverMethod::matching, int exact_budget = 64);

/// Size of a minimum vertex cover of the family (exhaustive).
int min_cover_size(const std::vector<VertexSet>& cn);

/// True iff some minimum vertex cover of CN(S) contains v, i.e. v can be
/// chosen as a root of S. Vacuously false when CN(S) is empty or v misses it.
bool is_rooted_on(const PartiteHypergraph& g, const VertexSet& S, Vertex v);

} // namespace turan
