#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turan/density.hpp"
#include "turan/error.hpp"
#include "turan/hypergraph.hpp"
#include "turan/patterns.hpp"
#include "turan/regularity.hpp"
#include "turan/roots.hpp"
#include "turan/search.hpp"
#include "turan/serialize.hpp"

namespace {

constexpr const char* k_version = "turanlab 0.1.0";

struct RunConfig {
    std::string command;
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string format = "json";
    double epsilon = 0.1;
    double delta = 0.1;
    double alpha = 1.0;
    std::optional<double> codegree_threshold;
    std::optional<double> sset_threshold;
    double margin = 10.0;
    std::optional<double> deletion_divisor;
    std::uint64_t budget = 200'000'000;

    // gen / search knobs
    std::string kind = "star";
    int n = 0, r = 3, s = 2, t = 2;
    double density = 0.5;
    std::string mode = "all";
    int ceiling = 8;
    std::string method = "matching";
    bool skip_regularity = false;
};

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) turan::fail(turan::Err::ParseError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Seed, thresholds, and format go into every artifact; thread_count is
/// deliberately absent so outputs stay byte-identical across worker counts.
turan::ojson config_echo(const RunConfig& cfg) {
    turan::ojson j;
    j["command"] = cfg.command;
    j["input"] = cfg.input;
    j["seed"] = cfg.seed;
    j["format"] = cfg.format;
    j["epsilon"] = cfg.epsilon;
    j["delta"] = cfg.delta;
    j["alpha"] = cfg.alpha;
    if (cfg.codegree_threshold) j["codegree_threshold"] = *cfg.codegree_threshold;
    if (cfg.sset_threshold) j["sset_threshold"] = *cfg.sset_threshold;
    j["margin"] = cfg.margin;
    if (cfg.deletion_divisor) j["deletion_divisor"] = *cfg.deletion_divisor;
    j["budget"] = cfg.budget;
    return j;
}

turan::ojson artifact_shell(const RunConfig& cfg, const std::string& input_bytes) {
    turan::ojson j;
    j["tool"] = k_version;
    j["config"] = config_echo(cfg);
    j["input_digest"] = input_bytes.empty() ? "none" : fnv1a_hex(input_bytes);
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

/// Lossy projection: top-level and one-level-deep scalar fields only.
std::string to_csv(const turan::ojson& j) {
    std::ostringstream os;
    os << "key,value\n";
    std::function<void(const std::string&, const turan::ojson&)> walk =
        [&](const std::string& prefix, const turan::ojson& node) {
            for (const auto& [k, v] : node.items()) {
                std::string key = prefix.empty() ? k : prefix + "." + k;
                if (v.is_object()) {
                    if (prefix.empty()) walk(key, v);
                } else if (v.is_primitive()) {
                    os << csv_escape(key) << ","
                       << csv_escape(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
                }
            }
        };
    walk("", j);
    return os.str();
}

void emit(const RunConfig& cfg, const turan::ojson& j) {
    std::string payload = cfg.format == "csv" ? to_csv(j) : j.dump(2) + "\n";
    if (cfg.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) turan::fail(turan::Err::ParseError, "cannot write " + cfg.output);
    out << payload;
}

turan::DensityParams density_params(const RunConfig& cfg) {
    turan::DensityParams p;
    p.s = cfg.s;
    p.delta = cfg.delta;
    p.epsilon = cfg.epsilon;
    p.alpha = cfg.alpha;
    p.codegree_threshold = cfg.codegree_threshold;
    p.sset_fraction_threshold = cfg.sset_threshold;
    p.margin = cfg.margin;
    return p;
}

int cmd_gen(const RunConfig& cfg) {
    turan::PartiteHypergraph g = [&] {
        if (cfg.kind == "star") return turan::construct_star(cfg.n, cfg.r);
        if (cfg.kind == "random-maximal")
            return turan::construct_random_maximal(cfg.n, {cfg.r, cfg.s, cfg.t}, cfg.seed);
        if (cfg.kind == "complete-partite") return turan::complete_partite(cfg.r, cfg.n);
        if (cfg.kind == "random-partite")
            return turan::random_partite(cfg.r, cfg.n, cfg.density, cfg.seed);
        turan::fail(turan::Err::BadConfig, "unknown kind " + cfg.kind);
    }();
    turan::ojson j = artifact_shell(cfg, "");
    j["kind"] = cfg.kind;
    j["graph"] = turan::to_json(g);
    if (!cfg.output.empty()) {
        g.write_file(cfg.output);
        std::cout << j.dump(2) << "\n";
    } else {
        emit(cfg, j);
    }
    return 0;
}

int cmd_check(const RunConfig& cfg) {
    std::string bytes = slurp(cfg.input);
    auto g = turan::PartiteHypergraph::from_text(bytes);
    turan::ojson j = artifact_shell(cfg, bytes);
    auto emb = turan::find_kst(g, {g.r(), cfg.s, cfg.t});
    j["pattern"] = {{"s", cfg.s}, {"t", cfg.t}};
    j["kst_verdict"] = emb ? "contains" : "free";
    if (emb) j["embedding"] = turan::to_json(*emb);
    auto quad = turan::find_erdos_quadruple(g);
    j["quadruple_verdict"] = quad ? "contains" : "free";
    if (quad) {
        turan::ojson q = turan::ojson::array();
        for (const auto& e : *quad) q.push_back(e);
        j["quadruple"] = q;
    }
    emit(cfg, j);
    return 0;
}

int cmd_roots(const RunConfig& cfg) {
    std::string bytes = slurp(cfg.input);
    auto g = turan::PartiteHypergraph::from_text(bytes);
    auto method = cfg.method == "exact" ? turan::CoverMethod::exact
                                        : turan::CoverMethod::matching;
    turan::ojson j = artifact_shell(cfg, bytes);
    turan::ojson reports = turan::ojson::array();
    std::vector<turan::Vertex> subject;
    std::function<void(int)> sweep = [&](int from) {
        if (static_cast<int>(subject.size()) == cfg.s) {
            auto rep = turan::root_set(g, subject, method);
            if (rep.cn_size > 0) reports.push_back(turan::to_json(rep));
            return;
        }
        for (int v = from; v < g.vertex_count(); ++v) {
            subject.push_back(v);
            sweep(v + 1);
            subject.pop_back();
        }
    };
    sweep(0);
    j["s"] = cfg.s;
    j["reports"] = reports;
    emit(cfg, j);
    return 0;
}

int cmd_regularize(const RunConfig& cfg) {
    std::string bytes = slurp(cfg.input);
    auto g = turan::PartiteHypergraph::from_text(bytes);
    auto res = turan::find_regular_subgraph(g, cfg.epsilon, cfg.s, cfg.seed,
                                            cfg.deletion_divisor);
    turan::ojson j = artifact_shell(cfg, bytes);
    j["result"] = turan::to_json(res);
    emit(cfg, j);
    return 0;
}

int cmd_digraph(const RunConfig& cfg) {
    std::string bytes = slurp(cfg.input);
    auto g = turan::PartiteHypergraph::from_text(bytes);
    auto d = turan::build_dense_digraph(g, density_params(cfg), cfg.skip_regularity,
                                        cfg.threads);
    turan::ojson j = artifact_shell(cfg, bytes);
    j["digraph"] = turan::to_json(d);
    j["property_one"] = turan::to_json(turan::check_property_one(d));
    j["property_two"] = turan::to_json(turan::check_property_two(d));
    emit(cfg, j);
    return 0;
}

int cmd_turan(const RunConfig& cfg, bool quadruple) {
    turan::SearchOptions opts;
    opts.node_budget = cfg.budget;
    opts.ceiling = cfg.ceiling;
    auto res = quadruple
                   ? turan::erdos_fr_exact(cfg.n, cfg.r, opts)
                   : turan::turan_exact(cfg.n, {cfg.r, cfg.s, cfg.t},
                                        cfg.mode == "partite" ? turan::SearchMode::partite
                                                              : turan::SearchMode::all,
                                        opts);
    turan::ojson j = artifact_shell(cfg, "");
    j["n"] = cfg.n;
    j["r"] = cfg.r;
    if (!quadruple) {
        j["s"] = cfg.s;
        j["t"] = cfg.t;
    }
    j["result"] = turan::to_json(res);
    emit(cfg, j);
    return 0;
}

/// One graph's invariant battery; appends findings and returns true when clean.
bool verify_graph(const turan::PartiteHypergraph& g, const RunConfig& cfg,
                  turan::ojson& findings) {
    bool ok = true;
    auto note = [&](const std::string& what) {
        findings.push_back(what);
        ok = false;
    };
    // Round-trip identity.
    if (!(turan::PartiteHypergraph::from_text(g.to_text()) == g))
        note("text round-trip changed the graph");
    // Handshake: in partite mode each edge contains exactly one tuple
    // avoiding part i, so tuple degrees sum to e(G) for every i.
    if (g.partite()) {
        for (int i = 0; i < g.parts(); ++i) {
            long long sum = 0;
            for (const auto& tup : g.tuples(i)) sum += g.degree(tup);
            if (sum != g.edge_count())
                note("handshake failed for part " + std::to_string(i));
        }
    }
    // Root covers: every CN member must be hit; free graphs obey the
    // matching-cover bound (t-1)(r-1).
    const int s = 2, t = 2;
    bool free = turan::is_kst_free(g, {g.r(), s, t});
    std::vector<turan::Vertex> subject;
    std::function<bool(int)> sweep = [&](int from) -> bool {
        if (static_cast<int>(subject.size()) == s) {
            auto cn = turan::common_neighborhood(g, subject);
            if (cn.empty()) return true;
            auto rep = turan::root_set(g, subject);
            for (const auto& member : cn) {
                bool hit = false;
                for (turan::Vertex v : rep.roots)
                    if (turan::set_contains(member, v)) hit = true;
                if (!hit) {
                    note("root set misses a CN member");
                    return true;
                }
            }
            if (free &&
                static_cast<int>(rep.roots.size()) > (t - 1) * (g.r() - 1)) {
                note("free graph exceeded the matching-cover bound");
            }
            if (static_cast<long long>(cn.size()) != turan::codegree(g, subject))
                note("codegree disagrees with |CN|");
            return true;
        }
        for (int v = from; v < g.vertex_count(); ++v) {
            subject.push_back(v);
            if (!sweep(v + 1)) return false;
            subject.pop_back();
        }
        return true;
    };
    sweep(0);
    // The regularity certificate must agree with a recomputation.
    if (g.partite() && g.edge_count() > 0) {
        auto pipeline = turan::find_regular_subgraph(g, cfg.epsilon, cfg.s, cfg.seed,
                                                     cfg.deletion_divisor);
        auto recheck =
            turan::verify_regularity(pipeline.graph, pipeline.certificate.epsilon,
                                     pipeline.certificate.alpha, cfg.s);
        if (recheck.pass() != pipeline.certificate.pass())
            note("regularity certificate not reproducible");
    }
    return ok;
}

int cmd_verify(const RunConfig& cfg) {
    std::vector<std::string> paths;
    if (!cfg.input.empty()) {
        paths.push_back(cfg.input);
    } else if (const char* dir = std::getenv("TURANLAB_FIXTURES")) {
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.path().extension() == ".hgr") paths.push_back(entry.path().string());
        std::sort(paths.begin(), paths.end());
    } else {
        turan::fail(turan::Err::BadConfig, "verify needs --input or TURANLAB_FIXTURES");
    }
    if (paths.empty()) turan::fail(turan::Err::BadConfig, "no .hgr fixtures found");

    std::string all_bytes;
    turan::ojson cases = turan::ojson::array();
    bool all_ok = true;
    for (const auto& path : paths) {
        std::string bytes = slurp(path);
        all_bytes += bytes;
        auto g = turan::PartiteHypergraph::from_text(bytes);
        turan::ojson findings = turan::ojson::array();
        bool ok = verify_graph(g, cfg, findings);
        turan::ojson c;
        c["file"] = std::filesystem::path(path).filename().string();
        c["ok"] = ok;
        c["findings"] = findings;
        // Exercise the parallel classification path so thread-count
        // determinism is actually on trial here.
        if (g.partite() && g.edge_count() > 0) {
            auto d = turan::build_dense_digraph(g, density_params(cfg), true, cfg.threads);
            c["digraph"] = turan::to_json(d);
        }
        cases.push_back(c);
        all_ok = all_ok && ok;
    }
    turan::ojson j = artifact_shell(cfg, all_bytes);
    j["cases"] = cases;
    j["ok"] = all_ok;
    emit(cfg, j);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale hypergraph Turán toolkit"};
    app.set_version_flag("--version", k_version);
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "input .hgr file");
        sub->add_option("--output", cfg.output, "output artifact path (default stdout)");
        sub->add_option("--seed", cfg.seed, "RNG seed (default 0)");
        sub->add_option("--threads", cfg.threads, "worker thread cap")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "json | csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--epsilon", cfg.epsilon);
        sub->add_option("--delta", cfg.delta);
        sub->add_option("--alpha", cfg.alpha);
        sub->add_option("--codegree-threshold", cfg.codegree_threshold);
        sub->add_option("--sset-threshold", cfg.sset_threshold);
        sub->add_option("--margin", cfg.margin);
        sub->add_option("--deletion-divisor", cfg.deletion_divisor);
        sub->add_option("--budget", cfg.budget);
        sub->add_option("--s", cfg.s);
        sub->add_option("--t", cfg.t);
        sub->add_option("--r", cfg.r);
        sub->add_option("--n", cfg.n);
        return sub;
    };

    auto* gen = add_common(app.add_subcommand("gen", "generate a hypergraph"));
    gen->add_option("--kind", cfg.kind,
                    "star | random-maximal | complete-partite | random-partite");
    gen->add_option("--density", cfg.density);
    auto* check = add_common(app.add_subcommand("check", "pattern + quadruple verdicts"));
    auto* roots = add_common(app.add_subcommand("roots", "root reports for all s-sets"));
    roots->add_option("--method", cfg.method)->check(CLI::IsMember({"matching", "exact"}));
    auto* regularize = add_common(app.add_subcommand("regularize", "regular subgraph pipeline"));
    auto* digraph = add_common(app.add_subcommand("digraph", "dense auxiliary digraph"));
    digraph->add_flag("--skip-regularity", cfg.skip_regularity);
    auto* turan_cmd = add_common(app.add_subcommand("turan", "exact Turán number"));
    turan_cmd->add_option("--mode", cfg.mode)->check(CLI::IsMember({"all", "partite"}));
    turan_cmd->add_option("--ceiling", cfg.ceiling);
    auto* fr = add_common(app.add_subcommand("fr", "exact quadruple-free maximum"));
    fr->add_option("--ceiling", cfg.ceiling);
    auto* verify = add_common(app.add_subcommand("verify", "full invariant suite"));

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return (cfg.command = "gen", cmd_gen(cfg));
        if (check->parsed()) return (cfg.command = "check", cmd_check(cfg));
        if (roots->parsed()) return (cfg.command = "roots", cmd_roots(cfg));
        if (regularize->parsed()) return (cfg.command = "regularize", cmd_regularize(cfg));
        if (digraph->parsed()) return (cfg.command = "digraph", cmd_digraph(cfg));
        if (turan_cmd->parsed()) return (cfg.command = "turan", cmd_turan(cfg, false));
        if (fr->parsed()) return (cfg.command = "fr", cmd_turan(cfg, true));
        if (verify->parsed()) return (cfg.command = "verify", cmd_verify(cfg));
    } catch (const turan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case turan::Err::ParseError:
                return 3;
            case turan::Err::BadConfig:
            case turan::Err::CeilingExceeded:
            case turan::Err::TooSmall:
            case turan::Err::BadPartIndex:
            case turan::Err::BadTargetPart:
                return 2;
            default:
                return 1;
        }
    }
    return 2;
}
