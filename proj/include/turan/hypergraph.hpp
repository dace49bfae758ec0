#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "turan/error.hpp"

namespace turan {

using Vertex = int;
using VertexSet = std::vector<Vertex>; // strictly increasing
using Edge = VertexSet;

/// Fixed-universe bitset indexed by edge position; backs link/codegree
/// intersections.
class EdgeBitset {
public:
    EdgeBitset() = default;
    explicit EdgeBitset(std::size_t universe)
        : size_(universe), words_((universe + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void and_with(const EdgeBitset& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    }
    std::size_t count() const;
    std::size_t size() const { return size_; }

    /// Calls fn(i) for every set bit, in increasing order.
    void for_each(const std::function<void(std::size_t)>& fn) const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A k-set of vertices, at most one per part in partite mode.
struct Tuple {
    VertexSet vertices;
};

/// r-uniform hypergraph, either balanced r-partite (parts() == r) or general
/// (parts() == 1). Vertex ids are global and 0-based; part membership is
/// derived from cumulative part ranges. Edges are stored canonically: each a
/// strictly increasing id sequence, the edge list sorted lexicographically.
class PartiteHypergraph {
public:
    static PartiteHypergraph build(int r, std::vector<int> part_sizes,
                                   std::vector<Edge> edges);

    int r() const { return r_; }
    int parts() const { return static_cast<int>(part_sizes_.size()); }
    bool partite() const { return parts() > 1; }
    int part_size(int i) const { return part_sizes_[i]; }
    const std::vector<int>& part_sizes() const { return part_sizes_; }
    int vertex_count() const { return vertex_count_; }

    /// 0-based part index of a global vertex id (always 0 in general mode).
    int part_of(Vertex v) const;
    /// First global id of part i.
    int part_offset(int i) const { return offsets_[i]; }
    /// All global ids of part i, increasing.
    VertexSet part_vertices(int i) const;

    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool contains(const Edge& e) const;

    /// Edges containing vertex v, as a bitset over edge positions.
    const EdgeBitset& incidence(Vertex v) const { return incidence_[v]; }
    /// Edges containing every vertex of T.
    EdgeBitset edges_containing_all(const VertexSet& T) const;

    /// Throws InvalidTuple unless T is a valid k-set, 1 <= k <= r-1, with at
    /// most one vertex per part.
    void validate_tuple(const VertexSet& T) const;

    /// The (r-k)-sets B with T union B an edge.
    std::vector<VertexSet> link(const VertexSet& T) const;
    long long degree(const VertexSet& T) const;

    /// The (r-1)-tuples avoiding part i with degree >= 1, lexicographic.
    /// Partite mode only.
    std::vector<VertexSet> tuples(int part) const;

    PartiteHypergraph delete_edges(const std::vector<Edge>& to_delete) const;
    PartiteHypergraph delete_edges_if(const std::function<bool(const Edge&)>& pred) const;
    /// Keeps exactly the given edges (each must be present).
    PartiteHypergraph restrict_to(const std::vector<Edge>& keep) const;

    bool is_subgraph_of(const PartiteHypergraph& host) const;

    std::string to_text() const;
    static PartiteHypergraph from_text(const std::string& text);
    static PartiteHypergraph read_file(const std::string& path);
    void write_file(const std::string& path) const;

    bool operator==(const PartiteHypergraph& other) const {
        return r_ == other.r_ && part_sizes_ == other.part_sizes_ && edges_ == other.edges_;
    }

    /// Zero-vertex placeholder; build() makes every meaningful instance.
    PartiteHypergraph() = default;

private:
    void rebuild_index();

    int r_ = 0;
    int vertex_count_ = 0;
    std::vector<int> part_sizes_;
    std::vector<int> offsets_; // cumulative, offsets_[parts()] == vertex_count_
    std::vector<Edge> edges_;
    std::vector<EdgeBitset> incidence_;
};

/// Convenience constructors used across tests and the CLI.
PartiteHypergraph complete_partite(int r, int n);
PartiteHypergraph empty_hypergraph(int r, std::vector<int> part_sizes);

/// Sorted-set helpers shared by the combinatorial modules.
bool sets_disjoint(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, Vertex v);

} // namespace turan
