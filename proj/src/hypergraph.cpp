#include "turan/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace turan {

std::size_t EdgeBitset::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

void EdgeBitset::for_each(const std::function<void(std::size_t)>& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            int b = std::countr_zero(w);
            fn(wi * 64 + static_cast<std::size_t>(b));
            w &= w - 1;
        }
    }
}

PartiteHypergraph PartiteHypergraph::build(int r, std::vector<int> part_sizes,
                                           std::vector<Edge> edges) {
    if (r < 2) fail(Err::WrongArity, "uniformity must be at least 2");
    if (part_sizes.empty()) fail(Err::BadPartIndex, "at least one part required");
    for (int s : part_sizes)
        if (s <= 0) fail(Err::BadPartIndex, "part sizes must be positive");
    if (part_sizes.size() != 1 && static_cast<int>(part_sizes.size()) != r)
        fail(Err::BadPartIndex, "part count must be 1 (general) or r (partite)");

    PartiteHypergraph g;
    g.r_ = r;
    g.part_sizes_ = std::move(part_sizes);
    g.offsets_.resize(g.part_sizes_.size() + 1, 0);
    for (std::size_t i = 0; i < g.part_sizes_.size(); ++i)
        g.offsets_[i + 1] = g.offsets_[i] + g.part_sizes_[i];
    g.vertex_count_ = g.offsets_.back();

    for (Edge& e : edges) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != r ||
            std::adjacent_find(e.begin(), e.end()) != e.end())
            fail(Err::WrongArity, "edge must have exactly r distinct vertices");
        for (Vertex v : e)
            if (v < 0 || v >= g.vertex_count_)
                fail(Err::VertexOutOfRange, "vertex id out of range");
        if (g.partite()) {
            std::vector<char> seen(g.parts(), 0);
            for (Vertex v : e) {
                int p = g.part_of(v);
                if (seen[p]) fail(Err::NonTransversalEdge, "edge doubles a part");
                seen[p] = 1;
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail(Err::DuplicateEdge, "duplicate edge");
    g.edges_ = std::move(edges);
    g.rebuild_index();
    return g;
}

void PartiteHypergraph::rebuild_index() {
    incidence_.assign(static_cast<std::size_t>(vertex_count_), EdgeBitset(edges_.size()));
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (Vertex v : edges_[i]) incidence_[static_cast<std::size_t>(v)].set(i);
}

int PartiteHypergraph::part_of(Vertex v) const {
    if (v < 0 || v >= vertex_count_) fail(Err::VertexOutOfRange, "vertex id out of range");
    int p = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), v) -
                             offsets_.begin()) - 1;
    return p;
}

VertexSet PartiteHypergraph::part_vertices(int i) const {
    if (i < 0 || i >= parts()) fail(Err::BadPartIndex, "part index out of range");
    VertexSet out;
    for (Vertex v = offsets_[i]; v < offsets_[i + 1]; ++v) out.push_back(v);
    return out;
}

bool PartiteHypergraph::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

EdgeBitset PartiteHypergraph::edges_containing_all(const VertexSet& T) const {
    EdgeBitset acc = incidence_[static_cast<std::size_t>(T.front())];
    for (std::size_t i = 1; i < T.size(); ++i)
        acc.and_with(incidence_[static_cast<std::size_t>(T[i])]);
    return acc;
}

void PartiteHypergraph::validate_tuple(const VertexSet& T) const {
    if (T.empty() || static_cast<int>(T.size()) > r_ - 1)
        fail(Err::InvalidTuple, "tuple size must be in [1, r-1]");
    if (!std::is_sorted(T.begin(), T.end()) ||
        std::adjacent_find(T.begin(), T.end()) != T.end())
        fail(Err::InvalidTuple, "tuple must be strictly increasing");
    for (Vertex v : T)
        if (v < 0 || v >= vertex_count_) fail(Err::InvalidTuple, "tuple vertex out of range");
    if (partite()) {
        std::vector<char> seen(parts(), 0);
        for (Vertex v : T) {
            int p = part_of(v);
            if (seen[p]) fail(Err::InvalidTuple, "tuple doubles a part");
            seen[p] = 1;
        }
    }
}

std::vector<VertexSet> PartiteHypergraph::link(const VertexSet& T) const {
    validate_tuple(T);
    std::vector<VertexSet> out;
    edges_containing_all(T).for_each([&](std::size_t i) {
        out.push_back(set_difference(edges_[i], T));
    });
    std::sort(out.begin(), out.end());
    return out;
}

long long PartiteHypergraph::degree(const VertexSet& T) const {
    validate_tuple(T);
    return static_cast<long long>(edges_containing_all(T).count());
}

std::vector<VertexSet> PartiteHypergraph::tuples(int part) const {
    if (!partite()) fail(Err::BadPartIndex, "tuples() requires partite mode");
    if (part < 0 || part >= parts()) fail(Err::BadPartIndex, "part index out of range");
    std::vector<VertexSet> out;
    for (const Edge& e : edges_) {
        VertexSet t;
        for (Vertex v : e)
            if (part_of(v) != part) t.push_back(v);
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PartiteHypergraph PartiteHypergraph::delete_edges(const std::vector<Edge>& to_delete) const {
    std::vector<Edge> del = to_delete;
    for (Edge& e : del) std::sort(e.begin(), e.end());
    std::sort(del.begin(), del.end());
    del.erase(std::unique(del.begin(), del.end()), del.end());
    for (const Edge& e : del)
        if (!contains(e)) fail(Err::UnknownEdge, "edge to delete not present");
    std::vector<Edge> kept;
    kept.reserve(edges_.size() - del.size());
    std::set_difference(edges_.begin(), edges_.end(), del.begin(), del.end(),
                        std::back_inserter(kept));
    return build(r_, part_sizes_, std::move(kept));
}

PartiteHypergraph PartiteHypergraph::delete_edges_if(
    const std::function<bool(const Edge&)>& pred) const {
    std::vector<Edge> kept;
    for (const Edge& e : edges_)
        if (!pred(e)) kept.push_back(e);
    return build(r_, part_sizes_, std::move(kept));
}

PartiteHypergraph PartiteHypergraph::restrict_to(const std::vector<Edge>& keep) const {
    std::vector<Edge> kept = keep;
    for (Edge& e : kept) std::sort(e.begin(), e.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    for (const Edge& e : kept)
        if (!contains(e)) fail(Err::UnknownEdge, "edge to keep not present");
    return build(r_, part_sizes_, std::move(kept));
}

bool PartiteHypergraph::is_subgraph_of(const PartiteHypergraph& host) const {
    if (r_ != host.r_ || part_sizes_ != host.part_sizes_) return false;
    return std::includes(host.edges_.begin(), host.edges_.end(), edges_.begin(),
                         edges_.end());
}

std::string PartiteHypergraph::to_text() const {
    std::ostringstream os;
    os << "HGR " << r_ << ' ' << parts();
    for (int s : part_sizes_) os << ' ' << s;
    os << '\n';
    for (const Edge& e : edges_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ' ';
            os << e[i];
        }
        os << '\n';
    }
    return os.str();
}

PartiteHypergraph PartiteHypergraph::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    if (!std::getline(is, line)) fail(Err::ParseError, "line 1: missing header");
    ++lineno;
    std::istringstream hs(line);
    std::string magic;
    int r = 0, p = 0;
    if (!(hs >> magic >> r >> p) || magic != "HGR")
        fail(Err::ParseError, "line 1: expected 'HGR <r> <p> <sizes...>'");
    std::vector<int> sizes(static_cast<std::size_t>(std::max(p, 0)));
    for (int i = 0; i < p; ++i)
        if (!(hs >> sizes[static_cast<std::size_t>(i)]))
            fail(Err::ParseError, "line 1: missing part size");
    std::string extra;
    if (hs >> extra) fail(Err::ParseError, "line 1: trailing tokens");

    std::vector<Edge> edges;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) fail(Err::ParseError, "line " + std::to_string(lineno) + ": empty line");
        std::istringstream es(line);
        Edge e;
        int v;
        while (es >> v) e.push_back(v);
        if (!es.eof())
            fail(Err::ParseError, "line " + std::to_string(lineno) + ": bad token");
        if (static_cast<int>(e.size()) != r)
            fail(Err::ParseError, "line " + std::to_string(lineno) + ": expected " +
                                      std::to_string(r) + " vertex ids");
        edges.push_back(std::move(e));
    }
    try {
        return build(r, std::move(sizes), std::move(edges));
    } catch (const Error& err) {
        fail(Err::ParseError, std::string("invalid hypergraph: ") + err.what());
    }
}

PartiteHypergraph PartiteHypergraph::read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Err::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

void PartiteHypergraph::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Err::ParseError, "cannot open " + path + " for writing");
    out << to_text();
}

PartiteHypergraph complete_partite(int r, int n) {
    std::vector<Edge> edges;
    Edge cur(static_cast<std::size_t>(r));
    std::function<void(int)> rec = [&](int part) {
        if (part == r) {
            edges.push_back(cur);
            return;
        }
        for (int k = 0; k < n; ++k) {
            cur[static_cast<std::size_t>(part)] = part * n + k;
            rec(part + 1);
        }
    };
    rec(0);
    return PartiteHypergraph::build(r, std::vector<int>(static_cast<std::size_t>(r), n),
                                    std::move(edges));
}

PartiteHypergraph empty_hypergraph(int r, std::vector<int> part_sizes) {
    return PartiteHypergraph::build(r, std::move(part_sizes), {});
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& a, Vertex v) {
    return std::binary_search(a.begin(), a.end(), v);
}

} // namespace turan
