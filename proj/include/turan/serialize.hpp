#pragma once

#include <json.hpp>

#include "turan/density.hpp"
#include "turan/hypergraph.hpp"
#include "turan/patterns.hpp"
#include "turan/regularity.hpp"
#include "turan/roots.hpp"
#include "turan/search.hpp"

namespace turan {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const PartiteHypergraph& g) {
    ojson j;
    j["r"] = g.r();
    j["part_sizes"] = g.part_sizes();
    j["edge_count"] = g.edge_count();
    j["edges"] = g.edges();
    return j;
}

inline ojson to_json(const Embedding& e) {
    ojson j;
    j["x_sets"] = e.x_sets;
    j["y"] = e.y;
    return j;
}

inline ojson to_json(const RootReport& r) {
    ojson j;
    j["subject"] = r.subject;
    j["cn_size"] = r.cn_size;
    j["matching"] = r.matching;
    j["roots"] = r.roots;
    j["method"] = r.method == CoverMethod::matching ? "matching" : "exact";
    ojson cds = ojson::object();
    for (const auto& [v, cd] : r.per_root_codegrees) cds[std::to_string(v)] = cd;
    j["per_root_codegrees"] = cds;
    return j;
}

inline ojson to_json(const RegularityCertificate& c) {
    ojson j;
    j["epsilon"] = c.epsilon;
    j["alpha"] = c.alpha;
    j["s"] = c.s;
    j["n"] = c.n;
    j["edge_count"] = c.edge_count;
    j["delta_caps"] = c.delta_caps;
    j["min_degree"] = c.min_degree;
    j["max_degree"] = c.max_degree;
    j["density_bound_ok"] = c.density_bound_ok;
    j["degree_window_ok"] = c.degree_window_ok;
    j["per_tuple_ok"] = c.per_tuple_ok;
    j["pass"] = c.pass();
    return j;
}

inline ojson to_json(const DeletionTrace& t) {
    ojson j;
    j["edges_deleted"] = t.edges_deleted;
    ojson rounds = ojson::array();
    for (const auto& rec : t.rounds) {
        ojson r;
        r["tuple"] = rec.tuple;
        r["degree_at_deletion"] = rec.degree_at_deletion;
        rounds.push_back(r);
    }
    j["rounds"] = rounds;
    return j;
}

inline ojson to_json(const RegularPipelineResult& r) {
    ojson j;
    j["certificate"] = to_json(r.certificate);
    j["deltas"] = r.deltas;
    j["edges_after_buckets"] = r.edges_after_buckets;
    j["reduction_fraction"] = r.reduction_fraction;
    j["trace"] = to_json(r.trace);
    j["graph"] = to_json(r.graph);
    return j;
}

inline ojson to_json(const DenseDigraph& d) {
    ojson j;
    j["parts"] = d.parts;
    ojson arcs = ojson::array();
    for (const auto& a : d.arcs) {
        ojson arc;
        arc["from"] = a.from;
        arc["to"] = a.to;
        arc["witness_edges"] = a.witness_edges;
        arc["delta"] = a.delta;
        arc["witness_regular"] = a.witness_regular;
        arcs.push_back(arc);
    }
    j["arcs"] = arcs;
    ojson fails = ojson::object();
    for (const auto& [part, why] : d.failures) fails[std::to_string(part)] = why;
    j["failures"] = fails;
    return j;
}

inline ojson to_json(const PropertyCheck& p) {
    ojson j;
    j["ok"] = p.ok;
    j["witness"] = p.witness;
    return j;
}

inline ojson to_json(const SearchResult& r) {
    ojson j;
    j["value"] = r.value;
    j["nodes_explored"] = r.nodes_explored;
    j["mode"] = r.mode == SearchMode::all ? "all" : "partite";
    j["exhaustive"] = r.exhaustive;
    ojson ws = ojson::array();
    for (const auto& w : r.witnesses) ws.push_back(to_json(w));
    j["witnesses"] = ws;
    return j;
}

} // namespace turan
