// Command-line front end: exact gamma2 / annihilation computation, conjecture
// checks, family generation, reduction traces, structure reports and class
// scans over edge-list files ("-" or no argument reads stdin).
//
// Exit codes: 0 success, 1 input error, 2 solver budget exhausted.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twodom/errors.hpp"
#include "twodom/family.hpp"
#include "twodom/generators.hpp"
#include "twodom/graph.hpp"
#include "twodom/invariants.hpp"
#include "twodom/reductions.hpp"
#include "twodom/scan.hpp"
#include "twodom/structure.hpp"

namespace {

using nlohmann::json;
using namespace twodom;

Graph read_graph(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw precondition_error("cannot open file: " + path);
        buf << in.rdbuf();
    }
    return parse_edge_list(buf.str());
}

json domination_json(const DominationCertificate& cert) {
    return {{"gamma2", cert.gamma2},
            {"witness", std::vector<int>(cert.witness.begin(), cert.witness.end())},
            {"backend", backend_name(cert.backend)}};
}

json annihilation_json(const AnnihilationCertificate& cert) {
    json j = {{"a", cert.a},
              {"canonical_set", std::vector<int>(cert.canonical_set.begin(), cert.canonical_set.end())},
              {"degree_sum", cert.degree_sum}};
    if (cert.d_star)
        j["d_star"] = *cert.d_star;
    else
        j["d_star"] = nullptr;
    return j;
}

json step_json(const ReductionStep& s) {
    json anchors = json::object();
    for (const auto& [role, id] : s.anchors) {
        if (!anchors.contains(role)) anchors[role] = json::array();
        anchors[role].push_back(id);
    }
    json j = {{"rule", rule_name(s.rule)},
              {"anchors", anchors},
              {"removed_vertices", s.removed_vertices},
              {"removed_edges", s.removed_edges},
              {"added_edges", s.added_edges},
              {"f_before", s.f_before},
              {"f_after", s.f_after}};
    if (s.offset_s)
        j["offset_s"] = *s.offset_s;
    else
        j["offset_s"] = "unknown";
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"exact 2-domination vs annihilation toolkit for cactus graphs"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string format = "text";
    long long budget = kDefaultNodeBudget;
    std::string backend = "auto";

    auto* cmd_gamma2 = app.add_subcommand("gamma2", "minimum 2-dominating set size of a graph");
    cmd_gamma2->add_option("file", file, "edge-list file, - for stdin");
    cmd_gamma2->add_option("--backend", backend, "auto|bruteforce|branch_and_bound|cactus_dp");
    cmd_gamma2->add_option("--budget", budget, "search node budget");
    cmd_gamma2->add_option("--format", format, "json|text");

    auto* cmd_a = app.add_subcommand("annihilation", "annihilation number and canonical set");
    cmd_a->add_option("file", file, "edge-list file, - for stdin");
    cmd_a->add_option("--format", format, "json|text");

    auto* cmd_check = app.add_subcommand("check", "compare gamma2 against a+1 (JSON record)");
    cmd_check->add_option("file", file, "edge-list file, - for stdin");
    cmd_check->add_option("--budget", budget, "search node budget");

    auto* cmd_family = app.add_subcommand("gen-family", "emit a counterexample family member as an edge list");
    int fam_t = 0;
    std::vector<int> fam_ks;
    cmd_family->add_option("t", fam_t, "number of cycles (>= 4)")->required();
    cmd_family->add_option("ks", fam_ks, "k_1 .. k_t (each >= 1)")->required();

    auto* cmd_reduce = app.add_subcommand("reduce", "run the rewrite engine and print the trace");
    bool stop_at_base = false, verify = false;
    cmd_reduce->add_option("file", file, "edge-list file, - for stdin");
    cmd_reduce->add_flag("--stop-at-base", stop_at_base, "stop at trees/cycles instead of trimming to K2");
    cmd_reduce->add_flag("--verify", verify, "re-check every step's inequalities exactly");
    cmd_reduce->add_option("--budget", budget, "search node budget for --verify");
    cmd_reduce->add_option("--format", format, "json|text");

    auto* cmd_scan = app.add_subcommand("scan", "solve random instances of a graph class");
    std::string klass = "tree";
    ScanSpec spec;
    std::string scan_format = "json";
    cmd_scan->add_option("--class", klass, "tree|cactus|bipartite_cactus|bipartite_cactus_theorem5|bipartite_cactus_prop2|min_degree_3")->required();
    cmd_scan->add_option("--count", spec.count, "number of instances");
    cmd_scan->add_option("--n-min", spec.n_min, "smallest instance size");
    cmd_scan->add_option("--n-max", spec.n_max, "largest instance size");
    cmd_scan->add_option("--seed", spec.seed, "generator seed");
    cmd_scan->add_option("--budget", spec.solver_budget, "per-instance node budget");
    cmd_scan->add_option("--jobs", spec.jobs, "worker threads");
    cmd_scan->add_option("--format", scan_format, "json|csv|text");

    auto* cmd_structure = app.add_subcommand("structure", "cactus decomposition and cycle hypotheses report");
    cmd_structure->add_option("file", file, "edge-list file, - for stdin");
    cmd_structure->add_option("--format", format, "json|text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints usage/help
        return rc == 0 ? 0 : 1;
    }

    if (cmd_gamma2->parsed()) {
        Graph g = read_graph(file);
        DominationCertificate cert;
        if (backend == "auto")
            cert = gamma2(g, budget);
        else if (backend == "bruteforce")
            cert = gamma2_bruteforce(g);
        else if (backend == "branch_and_bound")
            cert = gamma2_branch_and_bound(g, budget);
        else if (backend == "cactus_dp")
            cert = gamma2_cactus(g);
        else
            throw precondition_error("unknown backend: " + backend);
        if (format == "json") {
            std::cout << domination_json(cert).dump(2) << "\n";
        } else {
            std::cout << "gamma2 = " << cert.gamma2 << " (" << backend_name(cert.backend) << ")\n";
            std::cout << "witness =";
            for (int v : cert.witness) std::cout << ' ' << v;
            std::cout << "\n";
        }
    } else if (cmd_a->parsed()) {
        Graph g = read_graph(file);
        AnnihilationCertificate cert = annihilation(g);
        if (format == "json") {
            std::cout << annihilation_json(cert).dump(2) << "\n";
        } else {
            std::cout << "a = " << cert.a << " (degree sum " << cert.degree_sum << " <= m = "
                      << g.edge_count() << ")\n";
            std::cout << "d* = ";
            if (cert.d_star)
                std::cout << *cert.d_star << "\n";
            else
                std::cout << "undefined (canonical set covers every vertex)\n";
        }
    } else if (cmd_check->parsed()) {
        Graph g = read_graph(file);
        ConjectureRecord rec = conjecture_check(g, budget);
        json j = {{"gamma2", rec.gamma2}, {"a", rec.a},          {"gap", rec.gap},
                  {"holds", rec.holds},   {"backend", backend_name(rec.backend)}};
        std::cout << j.dump(2) << "\n";
    } else if (cmd_family->parsed()) {
        FamilyParams p;
        p.t = fam_t;
        p.ks = fam_ks;
        std::cout << write_edge_list(family_graph(p));
    } else if (cmd_reduce->parsed()) {
        Graph g = read_graph(file);
        ReduceOptions opts;
        opts.stop_at_base_classes = stop_at_base;
        ReductionTrace trace = reduce_trace(g, opts);
        std::vector<StepVerification> checks;
        if (verify) {
            Graph cur = trace.initial;
            for (const ReductionStep& s : trace.steps) {
                Graph next = apply_step(cur, s);
                checks.push_back(verify_step(cur, s, next, budget));
                cur = next;
            }
        }
        if (format == "json") {
            json j;
            j["steps"] = json::array();
            for (size_t i = 0; i < trace.steps.size(); ++i) {
                json sj = step_json(trace.steps[i]);
                if (verify) {
                    const StepVerification& v = checks[i];
                    json vj;
                    vj["complete"] = v.complete;
                    vj["all_ok"] = v.all_ok();
                    if (v.gamma2_inequality_ok) vj["gamma2_inequality_ok"] = *v.gamma2_inequality_ok;
                    if (v.a_inequality_ok) vj["a_inequality_ok"] = *v.a_inequality_ok;
                    if (v.end_implication_ok) vj["end_implication_ok"] = *v.end_implication_ok;
                    sj["verification"] = vj;
                }
                j["steps"].push_back(sj);
            }
            j["terminal_reason"] = terminal_reason_name(trace.terminal_reason);
            j["terminal_n"] = trace.terminal.vertex_count();
            j["terminal_m"] = trace.terminal.edge_count();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << write_trace_text(trace);
            if (verify) {
                bool all = true;
                for (const StepVerification& v : checks) all = all && v.complete && v.all_ok();
                std::cout << "verification " << (all ? "passed" : "FAILED") << " over "
                          << checks.size() << " steps\n";
            }
        }
    } else if (cmd_scan->parsed()) {
        spec.klass = parse_scan_class(klass);
        ScanReport report = scan(spec);
        if (scan_format == "json")
            std::cout << report_to_json(report);
        else if (scan_format == "csv")
            std::cout << report_to_csv(report);
        else
            std::cout << report_to_text(report);
    } else if (cmd_structure->parsed()) {
        Graph g = read_graph(file);
        bool cactus = is_cactus(g);
        Theorem5Hypotheses h = theorem5_hypotheses(g);
        json j;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["is_cactus"] = cactus;
        j["is_bipartite"] = h.bipartite;
        j["theorem5"] = {{"connected", h.connected},
                         {"bipartite", h.bipartite},
                         {"cactus", h.cactus},
                         {"no_sun_at_outer", h.no_sun_at_outer},
                         {"outer_4cycle_exit_degree_ok", h.outer_4cycle_exit_degree_ok},
                         {"all", h.all}};
        if (cactus) {
            CactusDecomposition d = decompose_cactus(g);
            j["bridges"] = d.bridges;
            j["cut_vertices"] = d.cut_vertices;
            j["cycles"] = json::array();
            for (const CycleReport& r : outer_cycles(g))
                j["cycles"].push_back({{"cycle", r.cycle},
                                       {"length", r.length},
                                       {"exit_vertices", std::vector<int>(r.exit_vertices.begin(),
                                                                          r.exit_vertices.end())},
                                       {"is_outer", r.is_outer},
                                       {"has_sun", r.has_sun}});
        }
        if (format == "text") {
            std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
                      << " cactus=" << (cactus ? "yes" : "no")
                      << " bipartite=" << (h.bipartite ? "yes" : "no")
                      << " theorem5=" << (h.all ? "yes" : "no") << "\n";
            if (cactus)
                for (const auto& cj : j["cycles"])
                    std::cout << "cycle len=" << cj["length"] << " outer=" << cj["is_outer"]
                              << " sun=" << cj["has_sun"] << "\n";
        } else {
            std::cout << j.dump(2) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
