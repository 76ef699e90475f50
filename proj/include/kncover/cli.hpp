#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kncover/core.hpp"
#include "kncover/counting.hpp"
#include "kncover/covering.hpp"
#include "kncover/enumerate.hpp"
#include "kncover/io.hpp"
#include "kncover/iso.hpp"
#include "kncover/switching.hpp"
#include "kncover/verify.hpp"
#include "kncover/version.hpp"

namespace kncover {

namespace cli_detail {

using nlohmann::json;

inline json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"kind", "graph"}, {"vertex_count", g.vertex_count()}, {"edges", edges}};
}

inline json hypergraph_json(const Hypergraph& h) {
    json edges = json::array();
    for (const auto& e : h.edge_lists()) edges.push_back(e);
    return {{"kind", "hypergraph"}, {"vertex_count", h.vertex_count()}, {"edges", edges}};
}

inline json report_json(const VerifyReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    json details = json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    json witness;
    if (r.witness_edges) {
        witness = json::array();
        for (auto [u, v] : *r.witness_edges) witness.push_back({u, v});
    }
    json j = {{"command", r.command},
              {"params", params},
              {"bound", r.bound ? json(*r.bound) : json()},
              {"achieved", r.achieved ? json(*r.achieved) : json()},
              {"extremal_count", r.extremal_count ? json(*r.extremal_count) : json()},
              {"witness_edges", witness},
              {"matches_construction", r.matches_construction},
              {"pass", r.pass},
              {"instances_scanned", r.instances_scanned},
              {"elapsed_ms", r.elapsed_ms},
              {"seed", r.seed ? json(*r.seed) : json()},
              {"version", r.version},
              {"details", details}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline void print_report(const VerifyReport& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << report_json(r).dump() << "\n";
        return;
    }
    out << r.command;
    for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
    out << "\n";
    if (r.bound) out << "bound: " << *r.bound << "\n";
    if (r.achieved) out << "achieved: " << *r.achieved << "\n";
    if (r.extremal_count) out << "extremal classes: " << *r.extremal_count << "\n";
    out << "instances scanned: " << r.instances_scanned << "\n";
    for (const auto& [k, v] : r.details) out << k << ": " << v << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    out << "pass: " << (r.pass ? "true" : "false") << "\n";
}

inline std::string pv_str(const PotentialValue& p) { return p.str(); }

inline json switch_json(const SwitchOutcome& o) {
    json j = {{"result", hypergraph_json(o.result)},
              {"f_before", pv_str(o.f_before)},
              {"f_after", pv_str(o.f_after)},
              {"i3_before", o.i3_before ? json(*o.i3_before) : json()},
              {"i3_after", o.i3_after ? json(*o.i3_after) : json()},
              {"merged_duplicates", o.merged_duplicates},
              {"changed", o.changed}};
    return j;
}

inline json audit_json(const PartitionAudit& a) {
    return {{"t_counts", a.t_counts},
            {"t_prime_counts", a.t_prime_counts},
            {"per_class_ok", a.per_class_ok},
            {"i3_before", a.i3_before},
            {"i3_after", a.i3_after},
            {"sums_match", a.sums_match},
            {"merged_duplicates", a.merged_duplicates}};
}

struct IoOptions {
    std::string input = "-";
    std::string format = "text";
    std::string out_path;
    int jobs = 1;
};

inline void add_io_options(CLI::App* sub, IoOptions& io, bool with_input = true) {
    if (with_input) sub->add_option("-i,--input", io.input, "input file ('-' for stdin)");
    sub->add_option("--format", io.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", io.out_path, "write output to this file instead of stdout");
    sub->add_option("--jobs", io.jobs, "worker threads for the scanning verifiers");
}

inline GraphOrHypergraph read_object(const IoOptions& io, std::istream& stdin_stream) {
    if (io.input == "-") return parse_object(stdin_stream);
    std::ifstream f(io.input);
    if (!f) throw std::invalid_argument("cannot open input file: " + io.input);
    return parse_object(f);
}

inline Hypergraph as_hypergraph(GraphOrHypergraph obj) {
    if (auto* h = std::get_if<Hypergraph>(&obj)) return std::move(*h);
    return graph_to_hypergraph(std::get<Graph>(obj));
}

inline OrderedEdge resolve_pivot(const Hypergraph& h, int pivot_index,
                                 const std::string& order_mode,
                                 const std::string& order_list) {
    if (pivot_index < 0 || pivot_index >= h.edge_count())
        throw std::invalid_argument("pivot index out of range");
    VertexSet e = h.edge_masks()[static_cast<std::size_t>(pivot_index)];
    if (order_mode == "default") return default_ordering(h, e);
    OrderedEdge oe;
    std::istringstream is(order_list);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        oe.vertices.push_back(std::stoi(tok));
    }
    if (oe.mask() != e || oe.vertices.size() != static_cast<std::size_t>(popcount(e)))
        throw std::invalid_argument("--order-list does not enumerate the pivot edge");
    return oe;
}

struct OutputSink {
    std::ostream& fallback;
    std::ofstream file;

    OutputSink(const IoOptions& io, std::ostream& out) : fallback(out) {
        if (!io.out_path.empty()) {
            file.open(io.out_path);
            if (!file) throw std::invalid_argument("cannot open output file: " + io.out_path);
        }
    }
    std::ostream& stream() { return file.is_open() ? file : fallback; }
};

}  // namespace cli_detail

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in = std::cin);

/// Runs every argv list in the config, writes one JSON report per line,
/// returns 1 when any run reports pass=false (or fails outright).
inline int batch_run(const std::string& config_path, const std::string& out_path,
                     std::ostream& out, std::ostream& err) {
    using nlohmann::json;
    std::ifstream cfg(config_path);
    if (!cfg) throw std::invalid_argument("cannot open config file: " + config_path);
    json doc;
    try {
        cfg >> doc;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    json runs = doc.is_array() ? doc : doc.value("runs", json::array());
    if (!runs.is_array()) throw std::invalid_argument("config: 'runs' must be an array");

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    }
    std::ostream& sink = file.is_open() ? file : out;

    bool all_pass = true;
    for (const json& spec_args : runs) {
        if (!spec_args.is_array()) throw std::invalid_argument("config: each run must be an array");
        std::vector<std::string> argv;
        for (const json& a : spec_args) argv.push_back(a.get<std::string>());
        bool has_format = false;
        for (const auto& a : argv) has_format = has_format || a == "--format";
        if (!has_format) {
            argv.push_back("--format");
            argv.push_back("json");
        }
        std::ostringstream captured, captured_err;
        std::istringstream empty_in;
        int code = run(argv, captured, captured_err, empty_in);
        json line;
        try {
            line = json::parse(captured.str());
        } catch (...) {
            line = {{"command", argv.empty() ? "" : argv.front()},
                    {"params", json::object()},
                    {"bound", nullptr},
                    {"achieved", nullptr},
                    {"extremal_count", nullptr},
                    {"witness_edges", nullptr},
                    {"pass", code == 0},
                    {"instances_scanned", 0},
                    {"elapsed_ms", 0},
                    {"seed", nullptr},
                    {"version", kVersion},
                    {"output", captured.str()},
                    {"error", captured_err.str()}};
        }
        if (!line.contains("pass") || !line["pass"].is_boolean()) line["pass"] = code == 0;
        bool pass = line["pass"].get<bool>();
        all_pass = all_pass && pass && code != 2;
        sink << line.dump() << "\n";
    }
    return all_pass ? 0 : 1;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in) {
    using cli_detail::IoOptions;
    using nlohmann::json;

    CLI::App app{"independent-set extremal checks for clique-covered graphs"};
    app.require_subcommand(1);

    int default_jobs = 1;
    if (const char* env = std::getenv("COVER_SWITCH_JOBS")) {
        char* endp = nullptr;
        long v = std::strtol(env, &endp, 10);
        if (endp && *endp == '\0' && v >= 1 && v <= 256) default_jobs = static_cast<int>(v);
    }

    IoOptions io;
    io.jobs = default_jobs;
    int t = 3, n = 3, N = 6, k = 0, q = 1, r = 0, s = 2;
    int pivot_index = 0, bound_offset = 0, n_max = 7, max_n = 9, max_edges = 7;
    long long samples = 100;
    unsigned long long seed = 0;
    std::string order_mode = "default", order_list, config_path;

    auto* c_count = app.add_subcommand("count", "count independent sets of size t");
    c_count->add_option("--t", t, "set size")->required();
    cli_detail::add_io_options(c_count, io);

    auto* c_census = app.add_subcommand("census", "triple census of a graph");
    cli_detail::add_io_options(c_census, io);

    auto* c_covered = app.add_subcommand("covered-check", "is every vertex in an n-clique?");
    c_covered->add_option("--n", n, "clique size")->required();
    cli_detail::add_io_options(c_covered, io);

    auto* c_assoc = app.add_subcommand("assoc", "n-clique hypergraph of a graph");
    c_assoc->add_option("--n", n, "clique size")->required();
    cli_detail::add_io_options(c_assoc, io);

    auto* c_shadow = app.add_subcommand("shadow", "s-shadow of a hypergraph");
    c_shadow->add_option("--s", s, "shadow arity");
    cli_detail::add_io_options(c_shadow, io);

    auto* c_critical = app.add_subcommand("critical", "edge-critical reduction");
    c_critical->add_option("--n", n, "clique size")->required();
    cli_detail::add_io_options(c_critical, io);

    auto* c_make = app.add_subcommand("make", "named constructions");
    c_make->require_subcommand(1);
    auto* c_make_split = c_make->add_subcommand("split", "clique joined to an empty graph");
    c_make_split->add_option("--N", N, "vertices")->required();
    c_make_split->add_option("--k", k, "clique part size")->required();
    cli_detail::add_io_options(c_make_split, io, /*with_input=*/false);
    auto* c_make_cl = c_make->add_subcommand("cl", "two overlapping cliques plus disjoint cliques");
    c_make_cl->add_option("--n", n, "clique size")->required();
    c_make_cl->add_option("--q", q, "quotient")->required();
    c_make_cl->add_option("--r", r, "remainder")->required();
    cli_detail::add_io_options(c_make_cl, io, /*with_input=*/false);

    auto* c_switch = app.add_subcommand("switch", "one edge-switching step");
    c_switch->add_option("--pivot", pivot_index, "pivot edge index (canonical order)")->required();
    c_switch->add_option("--order", order_mode, "pivot ordering")
        ->check(CLI::IsMember({"default", "given"}));
    c_switch->add_option("--order-list", order_list, "comma-separated pivot vertices");
    cli_detail::add_io_options(c_switch, io);

    auto* c_stabilize = app.add_subcommand("stabilize", "switch until stable");
    cli_detail::add_io_options(c_stabilize, io);

    auto* c_audit = app.add_subcommand("audit-switch", "I3 partition audit across one switch");
    c_audit->add_option("--pivot", pivot_index, "pivot edge index (canonical order)")->required();
    c_audit->add_option("--order", order_mode, "pivot ordering")
        ->check(CLI::IsMember({"default", "given"}));
    c_audit->add_option("--order-list", order_list, "comma-separated pivot vertices");
    cli_detail::add_io_options(c_audit, io);

    auto* c_canon = app.add_subcommand("canon", "canonical key of the isomorphism class");
    cli_detail::add_io_options(c_canon, io);

    auto* c_gen = app.add_subcommand("gen", "one representative per isomorphism class");
    c_gen->add_option("--N", N, "vertex count")->required();
    cli_detail::add_io_options(c_gen, io, /*with_input=*/false);

    auto* c_vmain = app.add_subcommand("verify-main", "exhaustive max-independent-set bound check");
    c_vmain->add_option("--n", n, "clique size")->required();
    c_vmain->add_option("--t", t, "set size")->required();
    c_vmain->add_option("--N", N, "vertex count")->required();
    c_vmain->add_option("--bound-offset", bound_offset,
                        "shift the claimed bound (harness negative control)");
    cli_detail::add_io_options(c_vmain, io, /*with_input=*/false);

    auto* c_vcl = app.add_subcommand("verify-cl", "exhaustive clique-minimization check");
    c_vcl->add_option("--n", n, "clique size")->required();
    c_vcl->add_option("--t", t, "clique size to count")->required();
    c_vcl->add_option("--N", N, "vertex count")->required();
    cli_detail::add_io_options(c_vcl, io, /*with_input=*/false);

    auto* c_vsw = app.add_subcommand("verify-switching", "randomized switching-lemma suite");
    c_vsw->add_option("--samples", samples, "instances")->required();
    c_vsw->add_option("--seed", seed, "rng seed")->required();
    c_vsw->add_option("--max-n", max_n, "max vertices");
    c_vsw->add_option("--max-edges", max_edges, "max edges");
    cli_detail::add_io_options(c_vsw, io, /*with_input=*/false);

    int st_max_n = 8, st_max_edges = 6;
    auto* c_vst = app.add_subcommand("verify-stable", "randomized stabilization suite");
    c_vst->add_option("--samples", samples, "instances")->required();
    c_vst->add_option("--seed", seed, "rng seed")->required();
    c_vst->add_option("--max-n", st_max_n, "max vertices")->check(CLI::Range(1, 10));
    c_vst->add_option("--max-edges", st_max_edges, "max edges")->check(CLI::Range(1, 10));
    cli_detail::add_io_options(c_vst, io, /*with_input=*/false);

    auto* c_vbase = app.add_subcommand("verify-base", "base-case identity suite");
    c_vbase->add_option("--N-max", n_max, "largest vertex count");
    cli_detail::add_io_options(c_vbase, io, /*with_input=*/false);

    auto* c_deficit = app.add_subcommand("deficit", "closed-form deficit value");
    c_deficit->add_option("--n", n, "clique size")->required();
    c_deficit->add_option("--q", q, "quotient")->required();
    c_deficit->add_option("--r", r, "remainder")->required();
    cli_detail::add_io_options(c_deficit, io, /*with_input=*/false);

    auto* c_batch = app.add_subcommand("batch", "run a grid of subcommands");
    c_batch->add_option("--config", config_path, "JSON config listing argv arrays")->required();
    c_batch->add_option("--out", io.out_path, "JSON-lines output path");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("kncover");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        cli_detail::OutputSink sink_holder(io, out);
        std::ostream& sink = sink_holder.stream();

        if (app.got_subcommand(c_count)) {
            auto obj = cli_detail::read_object(io, in);
            long long c = std::holds_alternative<Graph>(obj)
                              ? count_independent_sets(std::get<Graph>(obj), t)
                              : count_independent_sets(std::get<Hypergraph>(obj), t);
            if (io.format == "json") sink << json{{"t", t}, {"count", c}}.dump() << "\n";
            else sink << c << "\n";
            return 0;
        }
        if (app.got_subcommand(c_census)) {
            Graph g = std::get<Graph>(cli_detail::read_object(io, in));
            TripleCensus c = triple_census(g);
            if (io.format == "json")
                sink << json{{"tau0", c.tau0}, {"tau1", c.tau1}, {"tau2", c.tau2}, {"tau3", c.tau3}}
                            .dump()
                     << "\n";
            else
                sink << "tau0 " << c.tau0 << "\ntau1 " << c.tau1 << "\ntau2 " << c.tau2
                     << "\ntau3 " << c.tau3 << "\n";
            return 0;
        }
        if (app.got_subcommand(c_covered)) {
            Graph g = std::get<Graph>(cli_detail::read_object(io, in));
            bool covered = is_kn_covered(g, n);
            if (io.format == "json")
                sink << json{{"n", n}, {"covered", covered}}.dump() << "\n";
            else
                sink << (covered ? "true" : "false") << "\n";
            return 0;
        }
        if (app.got_subcommand(c_assoc)) {
            Graph g = std::get<Graph>(cli_detail::read_object(io, in));
            Hypergraph h = associated_hypergraph(g, n);
            if (io.format == "json") sink << cli_detail::hypergraph_json(h).dump() << "\n";
            else sink << format_hypergraph(h);
            return 0;
        }
        if (app.got_subcommand(c_shadow)) {
            Hypergraph h = cli_detail::as_hypergraph(cli_detail::read_object(io, in));
            if (s == 2) {
                Graph g = shadow_graph(h);
                if (io.format == "json") sink << cli_detail::graph_json(g).dump() << "\n";
                else sink << format_graph(g);
            } else {
                Hypergraph sh = shadow(h, s);
                if (io.format == "json") sink << cli_detail::hypergraph_json(sh).dump() << "\n";
                else sink << format_hypergraph(sh);
            }
            return 0;
        }
        if (app.got_subcommand(c_critical)) {
            Graph g = std::get<Graph>(cli_detail::read_object(io, in));
            Graph red = edge_critical_reduction(g, n);
            if (io.format == "json") sink << cli_detail::graph_json(red).dump() << "\n";
            else sink << format_graph(red);
            return 0;
        }
        if (app.got_subcommand(c_make)) {
            Graph g = c_make->got_subcommand(c_make_split) ? make_split(N, k) : make_cl(n, q, r);
            if (io.format == "json") sink << cli_detail::graph_json(g).dump() << "\n";
            else sink << format_graph(g);
            return 0;
        }
        if (app.got_subcommand(c_switch)) {
            Hypergraph h = cli_detail::as_hypergraph(cli_detail::read_object(io, in));
            OrderedEdge pivot = cli_detail::resolve_pivot(h, pivot_index, order_mode, order_list);
            SwitchOutcome o = edge_switch(h, pivot);
            if (io.format == "json") sink << cli_detail::switch_json(o).dump() << "\n";
            else {
                sink << format_hypergraph(o.result);
                sink << "f " << o.f_before.str() << " -> " << o.f_after.str() << "\n";
                sink << "i3 " << *o.i3_before << " -> " << *o.i3_after << "\n";
                sink << "merged_duplicates " << o.merged_duplicates << "\n";
                sink << "changed " << (o.changed ? "true" : "false") << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(c_stabilize)) {
            Hypergraph h = cli_detail::as_hypergraph(cli_detail::read_object(io, in));
            StabilizeResult st = stabilize(h);
            if (io.format == "json") {
                json trace = json::array();
                for (const auto& f : st.f_trace) trace.push_back(f.str());
                sink << json{{"result", cli_detail::hypergraph_json(st.result)},
                             {"steps", st.steps},
                             {"f_trace", trace}}
                            .dump()
                     << "\n";
            } else {
                sink << format_hypergraph(st.result);
                sink << "steps " << st.steps << "\n";
                sink << "f_trace";
                for (const auto& f : st.f_trace) sink << " " << f.str();
                sink << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(c_audit)) {
            Hypergraph h = cli_detail::as_hypergraph(cli_detail::read_object(io, in));
            OrderedEdge pivot = cli_detail::resolve_pivot(h, pivot_index, order_mode, order_list);
            PartitionAudit a = partition_audit(h, pivot);
            sink << cli_detail::audit_json(a).dump() << "\n";
            return 0;
        }
        if (app.got_subcommand(c_canon)) {
            auto obj = cli_detail::read_object(io, in);
            CanonicalKey key = std::holds_alternative<Graph>(obj)
                                   ? canonical_key(std::get<Graph>(obj))
                                   : canonical_key(std::get<Hypergraph>(obj));
            sink << key.hex() << "\n";
            return 0;
        }
        if (app.got_subcommand(c_gen)) {
            std::vector<Graph> classes = enumerate_graphs(N);
            if (io.format == "json") {
                json arr = json::array();
                for (const Graph& g : classes) arr.push_back(cli_detail::graph_json(g));
                sink << json{{"N", N}, {"count", classes.size()}, {"graphs", arr}}.dump() << "\n";
            } else {
                for (const Graph& g : classes) sink << format_graph(g) << "\n";
            }
            return 0;
        }

        VerifyReport report;
        bool have_report = false;
        if (app.got_subcommand(c_vmain)) {
            report = verify_main(n, t, N, io.jobs, bound_offset);
            have_report = true;
        } else if (app.got_subcommand(c_vcl)) {
            report = verify_cl(n, t, N, io.jobs);
            have_report = true;
        } else if (app.got_subcommand(c_vsw)) {
            report = verify_switching(samples, seed, io.jobs, max_n, max_edges);
            have_report = true;
        } else if (app.got_subcommand(c_vst)) {
            report = verify_stable_lemma(samples, seed, io.jobs, st_max_n, st_max_edges);
            have_report = true;
        } else if (app.got_subcommand(c_vbase)) {
            report = verify_base_recursion(n_max, io.jobs);
            have_report = true;
        }
        if (have_report) {
            cli_detail::print_report(report, io.format, sink);
            return report.pass ? 0 : 1;
        }

        if (app.got_subcommand(c_deficit)) {
            Rational d = deficit(n, q, r);
            if (io.format == "json")
                sink << json{{"n", n}, {"q", q}, {"r", r}, {"deficit", d.str()}}.dump() << "\n";
            else
                sink << d.str() << "\n";
            return 0;
        }
        if (app.got_subcommand(c_batch)) {
            return batch_run(config_path, io.out_path, out, err);
        }
        err << "error: no subcommand dispatched\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace kncover
