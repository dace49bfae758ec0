#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "turan/hypergraph.hpp"
#include "turan/regularity.hpp"

namespace turan {

using Rational = boost::rational<long long>;

/// All asymptotic thresholds are explicit with the formula values as defaults;
/// overrides exist because the defaults trivialize at desk scale.
struct DensityParams {
    int s = 3;
    double delta = 0.1;
    double epsilon = 0.1;
    double alpha = 1.0;
    std::optional<double> codegree_threshold;      // default n^{r-2-1/(s-1)-delta}
    std::optional<double> sset_fraction_threshold; // default d(T)^{s-1}/r
    std::optional<double> small_threshold;         // default n^{r-2-1/(s-1)-(s+1)eps}
    std::optional<double> f0_threshold; // default (n^{1-1/(s-1)-eps}/(alpha log2 n))^{s-1}
    double margin = 10.0;               // explicit stand-in for ">>"
};

struct DenseCheck {
    bool dense = false;
    long long qualifying = 0; // s-sets through v meeting the codegree threshold
    double codegree_threshold = 0;
    double fraction_threshold = 0;
};

/// Definition of a delta-dense pair (T; v) on u: enough s-sets S with
/// v in S subset N(T) have cd(S|u) above the codegree threshold.
DenseCheck is_delta_dense(const PartiteHypergraph& g, const VertexSet& T, Vertex v,
                          Vertex u, const DensityParams& params);

struct ArrowCheck {
    bool holds = false;
    std::optional<std::pair<VertexSet, Vertex>> failure; // first failing (T, v)
};

/// Arrow V_i -> V_j: every (T, v) with T avoiding part j in h and v completing
/// it is delta-dense on T's part-i vertex in g.
ArrowCheck part_arrow(const PartiteHypergraph& h, const PartiteHypergraph& g, int i, int j,
                      const DensityParams& params);

struct EdgeClassification {
    Edge edge;
    VertexSet t_e;          // edge minus its target-part vertex
    Vertex target_vertex = -1;
    std::optional<int> source_part; // nullopt encodes the zero class
    long long sset_count = 0;
    long long small_count = 0;
    std::map<int, long long> per_part_counts; // part -> #large s-sets indexed there
    long long root_anomalies = 0; // large-candidate s-sets with no root inside t_e
    bool forced_zero = false;     // nonzero class failed the d(T)^{s-1}/r floor
};

/// Classifies one edge against a target part: zero class when enough (S, T_e)
/// pairs are small, otherwise the most frequent root part among large pairs.
EdgeClassification classify_edge(const PartiteHypergraph& g, const Edge& e, int target_part,
                                 const DensityParams& params);

struct ArrowSearchResult {
    bool ok = false;
    int source = -1;
    int target = -1;
    std::optional<PartiteHypergraph> subgraph;
    RegularityCertificate certificate;
    bool arrow_verified = false;
    std::optional<std::pair<VertexSet, Vertex>> arrow_failure;
    long long zero_count = 0;
    std::string diagnostic;
};

/// The full classify/majority/regularize/verify pipeline for one target part.
/// Throws NotRegular (unless skip_regularity_check) and NoMajorityIndex when
/// every edge lands in the zero class; other desk-scale failures come back as
/// diagnostics.
ArrowSearchResult find_dense_arrow(const PartiteHypergraph& g, int target_part,
                                   const DensityParams& params,
                                   bool skip_regularity_check = false, int threads = 1);

struct DenseDigraph {
    int parts = 0;
    struct Arc {
        int from = -1;
        int to = -1;
        long long witness_edges = 0;
        double delta = 0;
        bool witness_regular = false;
    };
    std::vector<Arc> arcs;
    std::map<int, std::string> failures; // target part -> reason
};

struct PropertyCheck {
    bool ok = false;
    std::vector<int> witness; // offending node, or the directed path i->j->k
};

DenseDigraph build_dense_digraph(const PartiteHypergraph& g, const DensityParams& params,
                                 bool skip_regularity_check = false, int threads = 1);

/// Property (I): every node has in-degree >= 1.
PropertyCheck check_property_one(const DenseDigraph& d);
/// Property (II): no directed path through three distinct parts.
PropertyCheck check_property_two(const DenseDigraph& d);

struct BipartiteGraph {
    int a_size = 0;
    int b_size = 0;
    std::vector<std::pair<int, int>> edges; // (a index, b index)
};

/// All a in A with degree >= rho |B| / 2, exact rational arithmetic.
/// Requires e(G) >= rho |A| |B|.
std::vector<int> heavy_vertices(const BipartiteGraph& g, const Rational& rho);

struct HeavySsetResult {
    std::vector<std::vector<int>> ssets; // index s-sets of A
    bool guarantee_met = false;          // count >= (rho |A|)^s / (3 s!)
};

/// All s-sets of A with at least rho^s |B| / 3 common neighbors.
HeavySsetResult heavy_ssets(const BipartiteGraph& g, const Rational& rho, int s,
                            double margin = 10.0);

struct RootedSsetResult {
    std::vector<VertexSet> ssets; // verified rooted on the anchor vertex
    long long constructed = 0;    // before the root re-verification filter
    bool guarantee_met = false;
    Vertex pivot = -1; // the majority vertex u_0
};

/// Constructive search for s-sets inside X rooted on T's part-0 vertex.
RootedSsetResult rooted_sset_search(const PartiteHypergraph& g, const VertexSet& T,
                                    const VertexSet& X, const DensityParams& params);

struct ReductionWitness {
    VertexSet T;
    Vertex v = -1;  // the fixed member of X
    Vertex v1 = -1; // T's part-0 vertex
    VertexSet Y;
    VertexSet Z;
    VertexSet R; // the chosen (r-3)-tuple, empty when r = 3
    std::map<Vertex, long long> per_y_hits;
    bool y_size_ok = false;
    bool z_size_ok = false;
    bool hits_ok = false;
};

/// Lemma-style bipartite reduction: dense Y inside N(T) and Z inside part j
/// such that every y sees most of Z through {v1, y} u R.
ReductionWitness bipartite_reduction_witness(const PartiteHypergraph& g, const VertexSet& T,
                                             const VertexSet& X, int j,
                                             const DensityParams& params);

/// Number of pairs (S, y) with S an s-set in Z and y in Y a matching-method
/// root of S. Y and Z must sit in distinct parts.
long long count_rooted_pairs(const PartiteHypergraph& g, const VertexSet& Y,
                             const VertexSet& Z, int s);

} // namespace turan
