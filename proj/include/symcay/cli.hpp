#pragma once

// Command-line surface.  run_cli is the whole dispatcher, callable
// in-process so tests can drive every command and exit code without
// spawning binaries.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error,
// 3 a resource cap was exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <future>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "catalog.hpp"
#include "constructions.hpp"
#include "graph_aut.hpp"
#include "group.hpp"
#include "io.hpp"
#include "report.hpp"

namespace symcay {

struct CliConfig {
    std::string command;
    std::string arg;
    long long enum_cap = 1000000;
    long long max_index = 1000000;
    long long vertex_cap = 512;
    int workers = 0;  // 0 = one per hardware thread
    bool json = false;
    std::string catalog_dir = "catalog";
};

namespace detail_cli {

inline int effective_workers(const CliConfig& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

inline VerificationReport run_verify_example(const CliConfig& cfg) {
    if (cfg.arg != "all") return verify_example(cfg.catalog_dir, cfg.arg, big_of(cfg.enum_cap));

    const std::vector<std::string> ids = {"a39", "a117", "a208"};
    std::vector<VerificationReport> parts(ids.size());
    if (effective_workers(cfg) > 1) {
        std::vector<std::future<VerificationReport>> tasks;
        tasks.reserve(ids.size());
        for (const auto& id : ids)
            tasks.push_back(std::async(std::launch::async, [&cfg, id] {
                return verify_example(cfg.catalog_dir, id, big_of(cfg.enum_cap));
            }));
        for (std::size_t k = 0; k < tasks.size(); ++k) parts[k] = tasks[k].get();
    } else {
        for (std::size_t k = 0; k < ids.size(); ++k)
            parts[k] = verify_example(cfg.catalog_dir, ids[k], big_of(cfg.enum_cap));
    }

    VerificationReport merged;
    merged.command = "verify-example all";
    for (const auto& part : parts) merged.merge(part);
    std::stable_sort(merged.checks.begin(), merged.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         return a.name != b.name ? a.name < b.name : a.claim < b.claim;
                     });
    return merged;
}

inline VerificationReport run_coset(const CliConfig& cfg) {
    SpecFile spec = load_spec(cfg.arg);
    if (spec.directive.kind != DirectiveKind::coset)
        throw InvalidParameter("spec file does not hold a coset directive");
    CosetGraphSpec cs{spec.group(spec.directive.group_a), spec.group(spec.directive.group_b),
                      spec.perm(spec.directive.perm)};
    BigCount cap = big_of(cfg.enum_cap);

    VerificationReport rep;
    rep.command = "coset " + cfg.arg;
    FeasibilityReport feas = feasibility_check(cs, cap);
    rep.check("joining element is a 2-element", "coset/two-element", true, feas.two_element);
    rep.check("square of the joining element lies in the subgroup", "coset/square-in-subgroup",
              true, feas.square_in_subgroup);
    rep.check("subgroup and joining element generate the group", "coset/generates", true,
              feas.generates);
    if (!feas.square_in_subgroup) return rep;  // no graph to build

    SimpleGraph graph = coset_graph(cs, big_of(cfg.max_index), cap);
    BigCount index = cs.G.order() / cs.H.order();
    rep.check("vertex count equals the subgroup index", "coset/vertex-count", index,
              BigCount(static_cast<unsigned long>(graph.vertex_count())));
    bool regular = true;
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (graph.degree(v) != graph.degree(0)) regular = false;
    rep.check("graph is regular", "coset/regular", true, regular);
    if (graph.vertex_count() > 0)
        rep.check("valency", "coset/valency", feas.valency,
                  BigCount(static_cast<unsigned long>(graph.degree(0))));
    rep.check("connectivity matches generation", "coset/connected-iff-generates", feas.generates,
              graph.connected());

    CosetAction act = coset_action(cs.G, cs.H, big_of(cfg.max_index));
    GeneratedGroup image(act.index, act.action);
    rep.check("arc-transitive under the supplied group", "coset/arc-transitive", true,
              arc_orbit_report(graph, image, 1).transitive);
    return rep;
}

inline VerificationReport run_cayley(const CliConfig& cfg) {
    SpecFile spec = load_spec(cfg.arg);
    if (spec.directive.kind != DirectiveKind::cayley)
        throw InvalidParameter("spec file does not hold a cayley directive");
    const GeneratedGroup& R = spec.group(spec.directive.group_a);
    ConnectionSet S;
    S.degree = spec.degree;
    for (const auto& name : spec.directive.set) S.elements.push_back(spec.perm(name));
    validate_connection_set(R, S);
    BigCount cap = big_of(cfg.enum_cap);

    VerificationReport rep;
    rep.command = "cayley " + cfg.arg;
    SimpleGraph graph = cayley_graph(R, S, cap);
    rep.check("vertex count equals the group order", "cayley/vertex-count", R.order(),
              BigCount(static_cast<unsigned long>(graph.vertex_count())));
    bool regular = true;
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (graph.degree(v) != graph.degree(0)) regular = false;
    rep.check("graph is regular of the connection-set valency", "cayley/valency",
              static_cast<long long>(S.elements.size()),
              static_cast<long long>(graph.vertex_count() > 0 ? graph.degree(0) : 0));
    rep.check("graph is regular", "cayley/regular", true, regular);

    NormalityReport norm = normality_report(R, S, static_cast<int>(cfg.vertex_cap), cap);
    rep.check("connected", "cayley/connected", display(norm.connected), norm.connected,
              "informational");
    rep.check("automorphism group order", "cayley/aut-order", norm.aut_order, norm.aut_order,
              "informational");
    rep.check("right-regular copy is normal in the automorphism group", "cayley/normal",
              display(norm.normal), norm.normal, "informational");
    return rep;
}

inline VerificationReport run_quotient(const CliConfig& cfg) {
    SpecFile spec = load_spec(cfg.arg);
    if (spec.directive.kind != DirectiveKind::quotient)
        throw InvalidParameter("spec file does not hold a quotient directive");
    SimpleGraph graph = load_edge_list(resolve_relative(cfg.arg, spec.directive.graph_file));
    const GeneratedGroup& X = spec.group(spec.directive.group_a);
    const GeneratedGroup& N = spec.group(spec.directive.group_b);

    VerificationReport rep;
    rep.command = "quotient " + cfg.arg;
    QuotientReport q = normal_quotient(graph, X, N);
    rep.check("orbit count", "quotient/orbit-count", q.orbit_count,
              static_cast<long long>(q.quotient.vertex_count()));
    rep.check("normal subgroup is semiregular", "quotient/semiregular", display(q.semiregular),
              q.semiregular, "informational");
    rep.check("valency preserved", "quotient/valency-preserved", display(q.valency_preserved),
              q.valency_preserved, "informational");
    rep.check("quotient edge count", "quotient/edge-count", display(q.quotient.edge_count()),
              q.quotient.edge_count(), "informational");
    return rep;
}

inline VerificationReport run_search(const CliConfig& cfg) {
    SpecFile spec = load_spec(cfg.arg);
    if (spec.directive.kind != DirectiveKind::search)
        throw InvalidParameter("spec file does not hold a search directive");
    const GeneratedGroup& G = spec.group(spec.directive.group_a);
    const GeneratedGroup& H = spec.group(spec.directive.group_b);
    std::optional<BigCount> target;
    if (spec.directive.valency)
        target = big_of(*spec.directive.valency);

    VerificationReport rep;
    rep.command = "search " + cfg.arg;
    auto hits = feasible_element_search(G, H, target, big_of(cfg.enum_cap),
                                        effective_workers(cfg));
    rep.check("feasible elements found", "search/hit-count",
              display(static_cast<long long>(hits.size())),
              static_cast<long long>(hits.size()), "informational");
    std::size_t shown = std::min<std::size_t>(hits.size(), 5);
    for (std::size_t k = 0; k < shown; ++k) {
        std::string label = "witness " + std::to_string(k + 1);
        rep.check(label, "search/witness-" + std::to_string(k + 1),
                  format_cycles(hits[k].witness), format_cycles(hits[k].witness),
                  "informational");
        rep.check(label + " valency", "search/witness-" + std::to_string(k + 1) + "-valency",
                  display(hits[k].report.valency), hits[k].report.valency, "informational");
    }
    return rep;
}

inline VerificationReport run_aut(const CliConfig& cfg) {
    SimpleGraph graph = load_edge_list(cfg.arg);

    VerificationReport rep;
    rep.command = "aut " + cfg.arg;
    GeneratedGroup aut = automorphism_group(graph, static_cast<int>(cfg.vertex_cap));
    rep.check("vertex count", "aut/vertex-count", graph.vertex_count(), graph.vertex_count(),
              "informational");
    rep.check("edge count", "aut/edge-count", graph.edge_count(), graph.edge_count(),
              "informational");
    rep.check("automorphism group order", "aut/order", aut.order(), aut.order(), "informational");
    rep.check("vertex-transitive", "aut/vertex-transitive", display(aut.is_transitive()),
              aut.is_transitive(), "informational");
    return rep;
}

}  // namespace detail_cli

/// Full command dispatch.  `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"permutation-group and Cayley/coset graph toolkit"};
    app.add_flag("--json", cfg.json, "emit the report as JSON");
    app.add_option("--enum-cap", cfg.enum_cap, "largest group enumerated element-by-element")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-index", cfg.max_index, "largest coset space constructed")
        ->check(CLI::PositiveNumber);
    app.add_option("--vertex-cap", cfg.vertex_cap, "largest graph searched for automorphisms")
        ->check(CLI::PositiveNumber);
    app.add_option("--workers", cfg.workers, "worker threads (default: hardware)")
        ->check(CLI::PositiveNumber);
    app.add_option("--catalog", cfg.catalog_dir, "directory holding the bundled data files");
    app.add_option("command", cfg.command,
                   "verify-example | check-stab-table | check-table1 | coset | cayley | "
                   "quotient | search | aut")
        ->required();
    app.add_option("arg", cfg.arg, "entry id or input file");

    std::vector<std::string> full = args;
    full.insert(full.begin(), "symcay");
    std::vector<char*> argv;
    argv.reserve(full.size());
    for (auto& s : full) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    auto needs_arg = [&](const char* what) {
        if (cfg.arg.empty()) throw InvalidParameter(std::string("missing ") + what);
    };

    try {
        auto start = std::chrono::steady_clock::now();
        VerificationReport rep;
        if (cfg.command == "verify-example") {
            needs_arg("entry id (a39 | a117 | a208 | all)");
            rep = detail_cli::run_verify_example(cfg);
        } else if (cfg.command == "check-stab-table") {
            rep = check_stabilizer_table();
        } else if (cfg.command == "check-table1") {
            rep = check_table1();
        } else if (cfg.command == "coset") {
            needs_arg("spec file");
            rep = detail_cli::run_coset(cfg);
        } else if (cfg.command == "cayley") {
            needs_arg("spec file");
            rep = detail_cli::run_cayley(cfg);
        } else if (cfg.command == "quotient") {
            needs_arg("spec file");
            rep = detail_cli::run_quotient(cfg);
        } else if (cfg.command == "search") {
            needs_arg("spec file");
            rep = detail_cli::run_search(cfg);
        } else if (cfg.command == "aut") {
            needs_arg("edge-list file");
            rep = detail_cli::run_aut(cfg);
        } else {
            err << "error: unknown command '" << cfg.command << "'\n" << app.help();
            return 2;
        }
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        out << (cfg.json ? emit_json(rep) : emit_human(rep));
        return rep.overall() ? 0 : 1;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace symcay
