// Command-line front end: every subcommand is a thin adapter over the
// library. Exit codes: 0 success, 1 domain error (message on stderr),
// 2 usage error. '-' means stdin/stdout so subcommands compose in pipes.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "majority/dynamics.hpp"
#include "majority/generators.hpp"
#include "majority/graph.hpp"
#include "majority/io.hpp"
#include "majority/opinions.hpp"
#include "majority/potential.hpp"
#include "majority/reduction.hpp"
#include "majority/search.hpp"
#include "majority/symmetry.hpp"

namespace {

using nlohmann::json;
using namespace majority;

constexpr uint64_t kDefaultSeed = 12345;  // fixed default: runs are reproducible by default

// ----- stream plumbing ------------------------------------------------

struct InStream {
    std::unique_ptr<std::ifstream> file;
    std::istream& get(const std::string& path) {
        if (path == "-") return std::cin;
        file = std::make_unique<std::ifstream>(path);
        if (!*file) throw std::runtime_error("cannot open '" + path + "' for reading");
        return *file;
    }
};

struct OutStream {
    std::unique_ptr<std::ofstream> file;
    std::ostream& get(const std::string& path) {
        if (path == "-") return std::cout;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw std::runtime_error("cannot open '" + path + "' for writing");
        return *file;
    }
};

GraphBundle load_graph(const std::string& path) {
    InStream in;
    return read_graph(in.get(path));
}

Opinions load_opinions(const std::string& path, const Graph& g) {
    InStream in;
    Opinions f = read_opinions(in.get(path));
    if (f.size() != g.node_count())
        throw std::runtime_error("opinion vector has " + std::to_string(f.size()) + " bits but the graph has " +
                                 std::to_string(g.node_count()) + " nodes");
    return f;
}

void emit_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// aligned key/value lines for the plain-text mode
struct KvPrinter {
    std::vector<std::pair<std::string, std::string>> rows;
    void add(const std::string& k, const std::string& v) { rows.emplace_back(k, v); }
    void add(const std::string& k, long long v) { add(k, std::to_string(v)); }
    void print() const {
        size_t width = 0;
        for (const auto& [k, v] : rows) width = std::max(width, k.size());
        for (const auto& [k, v] : rows)
            std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
    }
};

json family_table_json(const FamilyPartition& part) {
    json classes = json::array();
    for (size_t i = 0; i < part.classes.size(); ++i) {
        const FamilyClass& c = part.classes[i];
        classes.push_back({{"id", i},
                           {"size", c.members.size()},
                           {"kind", to_string(c.kind)},
                           {"degree", c.degree},
                           {"members", c.members}});
    }
    return classes;
}

void print_family_table(const FamilyPartition& part, bool with_members) {
    std::cout << "class  size  kind         degree" << (with_members ? "  members" : "") << "\n";
    for (size_t i = 0; i < part.classes.size(); ++i) {
        const FamilyClass& c = part.classes[i];
        std::cout << std::left << std::setw(7) << i << std::setw(6) << c.members.size() << std::setw(13)
                  << to_string(c.kind) << std::setw(6) << c.degree;
        if (with_members) {
            std::cout << "  ";
            for (size_t j = 0; j < c.members.size(); ++j) std::cout << (j ? " " : "") << c.members[j];
        }
        std::cout << "\n";
    }
}

json edges_json(const Graph& g) {
    json edges = json::array();
    for (int v = 0; v < g.node_count(); ++v)
        for (int u : g.neighbors(v))
            if (u > v) edges.push_back({v, u});
    return edges;
}

// ----- subcommand bodies ----------------------------------------------

int cmd_gen(const std::string& kind, const std::vector<std::string>& params, const std::string& out_path,
            bool as_json) {
    GraphBundle b = generate(kind, params);
    if (as_json) {
        json labels = json::object();
        for (const auto& [v, name] : b.labels) labels[std::to_string(v)] = name;
        emit_json({{"kind", kind},
                   {"n", b.graph.node_count()},
                   {"edge_count", b.graph.edge_count()},
                   {"edges", edges_json(b.graph)},
                   {"labels", labels}});
        return 0;
    }
    OutStream out;
    write_graph(out.get(out_path), b.graph);
    return 0;
}

int cmd_sim(const std::string& graph_path, const std::string& opinions_path, int max_rounds, bool trace,
            bool as_json) {
    GraphBundle b = load_graph(graph_path);
    Opinions f0 = load_opinions(opinions_path, b.graph);
    std::optional<int> budget;
    if (max_rounds >= 0) budget = max_rounds;
    Trajectory traj = run(b.graph, f0, budget, trace);
    if (!traj.converged) {
        std::cerr << "error: no 2-periodic state within " << traj.rounds_computed << " rounds\n";
        return 1;
    }
    if (as_json) {
        json doc = {{"n", b.graph.node_count()}, {"voting_time", traj.voting_time}};
        if (trace) {
            json rounds = json::array();
            for (const Opinions& f : traj.states) rounds.push_back(f.to_string());
            doc["rounds"] = rounds;
        } else {
            doc["period_first"] = traj.period_first.to_string();
            doc["period_second"] = traj.period_second.to_string();
        }
        emit_json(doc);
        return 0;
    }
    KvPrinter kv;
    kv.add("n", b.graph.node_count());
    kv.add("voting_time", traj.voting_time);
    kv.add("period_first", traj.period_first.to_string());
    kv.add("period_second", traj.period_second.to_string());
    kv.print();
    if (trace)
        for (size_t t = 0; t < traj.states.size(); ++t)
            std::cout << "round " << t << "  " << traj.states[t].to_string() << "\n";
    return 0;
}

int cmd_bounds(const std::string& graph_path, const std::string& opinions_path, bool as_json) {
    GraphBundle b = load_graph(graph_path);
    const Graph& g = b.graph;
    auto [v_odd, v_even] = degree_parity_counts(g);
    Rational half = bound_half_E(g);
    AsymBound asym = bound_asym(g);

    std::optional<Opinions> f0;
    int voting_time = -1;
    long long phi0 = -1, badarrows = -1;
    if (!opinions_path.empty()) {
        f0 = load_opinions(opinions_path, g);
        Trajectory traj = run(g, *f0);
        voting_time = traj.voting_time;
        badarrows = bound_badarrows(g, *f0);
        phi0 = badarrows - 1;
    }

    if (as_json) {
        json doc = {{"edges", g.edge_count()},
                    {"v_odd", v_odd},
                    {"v_even", v_even},
                    {"bound_2E", bound_two_E(g)},
                    {"bound_E", bound_E(g)},
                    {"bound_halfE", half.str()},
                    {"bound_halfE_ceil", half.ceil_value()},
                    {"bound_asym", asym.value.str()},
                    {"bound_asym_ceil", asym.value.ceil_value()}};
        if (f0) {
            doc["voting_time"] = voting_time;
            doc["phi0_Gstar"] = phi0;
            doc["bound_badarrows"] = badarrows;
        }
        emit_json(doc);
        return 0;
    }
    KvPrinter kv;
    kv.add("edges", g.edge_count());
    kv.add("v_odd", v_odd);
    kv.add("v_even", v_even);
    kv.add("bound_2E", bound_two_E(g));
    kv.add("bound_E", bound_E(g));
    kv.add("bound_halfE", half.str());
    kv.add("bound_halfE_ceil", half.ceil_value());
    kv.add("bound_asym", asym.value.str());
    kv.add("bound_asym_ceil", asym.value.ceil_value());
    if (f0) {
        kv.add("voting_time", voting_time);
        kv.add("phi0_Gstar", phi0);
        kv.add("bound_badarrows", badarrows);
    }
    kv.print();
    return 0;
}

int cmd_families(const std::string& graph_path, bool as_json) {
    GraphBundle b = load_graph(graph_path);
    FamilyPartition part = families(b.graph);
    if (as_json) {
        emit_json({{"n", b.graph.node_count()}, {"classes", family_table_json(part)}});
        return 0;
    }
    print_family_table(part, true);
    return 0;
}

int cmd_gdelta(const std::string& graph_path, const std::string& out_graph, const std::string& out_map,
               bool as_json) {
    GraphBundle b = load_graph(graph_path);
    AsymmetricReduction red = asymmetric_graph(b.graph);
    json map_doc = {{"kept_nodes", red.kept_nodes},
                    {"n_original", b.graph.node_count()},
                    {"n_delta", red.g_delta.node_count()},
                    {"edges_delta", red.g_delta.edge_count()},
                    {"v_odd", red.v_odd},
                    {"v_even", red.v_even}};
    if (as_json) {
        map_doc["classes"] = family_table_json(red.partition);
        map_doc["edges"] = edges_json(red.g_delta);
        emit_json(map_doc);
    } else {
        print_family_table(red.partition, false);
        std::cout << "kept";
        for (int v : red.kept_nodes) std::cout << " " << v;
        std::cout << "\n";
    }
    if (!out_graph.empty()) {
        OutStream out;
        write_graph(out.get(out_graph), red.g_delta);
    }
    if (!out_map.empty()) {
        OutStream out;
        out.get(out_map) << map_doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_arrows(const std::string& graph_path, const std::string& opinions_path, bool on_gstar,
               const std::string& out_path, bool as_json) {
    GraphBundle b = load_graph(graph_path);
    Opinions f0 = load_opinions(opinions_path, b.graph);
    Graph g = on_gstar ? with_self_loops(b.graph) : b.graph;
    Opinions f1 = step(g, f0);
    ArrowSet arrows = bad_arrows(g, f0, f1);
    if (as_json) {
        json list = json::array();
        for (const auto& [v, u] : arrows.arrows) list.push_back({v, u});
        emit_json({{"count", arrows.count()}, {"arrows", list}});
        return 0;
    }
    OutStream out;
    write_arrows(out.get(out_path), arrows);
    return 0;
}

int cmd_reconstruct(const std::string& graph_path, const std::string& arrows_path, bool on_gstar,
                    bool allow_disconnected, int max_candidates, bool as_json) {
    GraphBundle b = load_graph(graph_path);
    ArrowSet beta;
    {
        InStream in;
        beta = read_arrows(in.get(arrows_path), on_gstar ? with_self_loops(b.graph) : b.graph);
    }
    std::vector<Opinions> found =
        arrow_consistent_assignments(b.graph, beta, on_gstar, allow_disconnected, max_candidates);
    if (as_json) {
        json list = json::array();
        for (const Opinions& f : found) list.push_back(f.to_string());
        emit_json({{"count", found.size()}, {"assignments", list}});
        return 0;
    }
    std::cout << "assignments " << found.size() << "\n";
    for (const Opinions& f : found) std::cout << f.to_string() << "\n";
    return 0;
}

int cmd_reduce(const std::string& cnf_path, const std::string& out_graph, const std::string& out_roles,
               const std::string& assignment_bits, const std::string& out_opinions, bool verify,
               bool as_json) {
    CnfFormula phi;
    {
        InStream in;
        phi = parse_cnf(in.get(cnf_path));
    }
    ReductionLayout layout = build_reduction(phi);

    std::vector<bool> a;
    if (!assignment_bits.empty()) {
        if (static_cast<int>(assignment_bits.size()) != phi.num_vars)
            throw std::runtime_error("assignment has " + std::to_string(assignment_bits.size()) +
                                     " bits but the formula has " + std::to_string(phi.num_vars) + " variables");
        for (char c : assignment_bits) {
            if (c != '0' && c != '1') throw std::runtime_error("assignment must be a string of 0/1");
            a.push_back(c == '1');
        }
    }

    json roles_doc = {{"num_vars", layout.num_vars},
                      {"num_clauses", layout.num_clauses},
                      {"ell", layout.ell},
                      {"h", layout.h},
                      {"n", layout.node_count()},
                      {"kwhite_base", layout.kwhite_base},
                      {"kblack_base", layout.kblack_base},
                      {"or_outputs", layout.or_outputs},
                      {"and_node", layout.and_node},
                      {"gate_path", layout.gate_path}};
    {
        json labels = json::object();
        for (const auto& [v, name] : layout.bundle.labels) labels[std::to_string(v)] = name;
        roles_doc["labels"] = labels;
    }

    if (verify) {
        if (a.empty()) throw std::runtime_error("--verify requires --assignment");
        VerifyReport rep = verify_satisfiable_direction(phi, a);
        if (as_json) {
            json stages = json::array();
            for (const StageTiming& s : rep.stages)
                stages.push_back({{"stage", s.stage}, {"expected_round", s.expected_round}, {"ok", s.ok}});
            emit_json({{"voting_time", rep.voting_time},
                       {"expected", rep.expected_voting_time},
                       {"ok", rep.ok},
                       {"stages", stages},
                       {"failures", rep.failures}});
        } else {
            std::cout << "voting_time=" << rep.voting_time << " expected=" << rep.expected_voting_time << " "
                      << (rep.ok ? "OK" : "FAIL") << "\n";
        }
        if (!rep.ok) {
            for (const std::string& msg : rep.failures) std::cerr << "verify: " << msg << "\n";
            return 1;
        }
        return 0;
    }

    if (as_json) {
        roles_doc["edges"] = edges_json(layout.bundle.graph);
        if (!a.empty()) roles_doc["opinions"] = assignment_to_opinions(layout, a).to_string();
        emit_json(roles_doc);
        return 0;
    }
    if (!out_graph.empty()) {
        OutStream out;
        write_graph(out.get(out_graph), layout.bundle.graph);
    }
    if (!out_roles.empty()) {
        OutStream out;
        out.get(out_roles) << roles_doc.dump(2) << "\n";
    }
    if (!a.empty()) {
        OutStream out;
        write_opinions(out.get(out_opinions), assignment_to_opinions(layout, a));
    }
    return 0;
}

int cmd_worstcase(const std::string& graph_path, bool exact, int samples, uint64_t seed, int node_limit,
                  int workers, const std::vector<std::string>& inject_paths, const std::vector<int>& serp,
                  bool as_json) {
    GraphBundle b = load_graph(graph_path);
    std::vector<Opinions> seeds;
    for (const std::string& p : inject_paths) seeds.push_back(load_opinions(p, b.graph));
    if (!serp.empty()) {
        Opinions f = serpentine_opinions(serp[0], serp[1]);
        if (f.size() != b.graph.node_count())
            throw std::runtime_error("--serpentine dimensions do not match the graph's node count");
        seeds.push_back(f);
    }

    auto t0 = std::chrono::steady_clock::now();
    WorstCaseResult res = exact ? exact_worst_case(b.graph, node_limit, workers)
                                : sampled_worst_case(b.graph, samples, seed, seeds);
    auto t1 = std::chrono::steady_clock::now();
    // stderr, so stdout stays byte-identical across runs with equal inputs
    std::cerr << "wall_time_ms "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << "\n";

    if (as_json) {
        emit_json({{"mode", res.mode},
                   {"max_voting_time", res.max_voting_time},
                   {"witness", res.witness.to_string()},
                   {"explored", res.explored}});
        return 0;
    }
    KvPrinter kv;
    kv.add("mode", res.mode);
    kv.add("max_voting_time", res.max_voting_time);
    kv.add("witness", res.witness.to_string());
    kv.add("explored", static_cast<long long>(res.explored));
    kv.print();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic binary majority process: simulation, bounds, reductions"};
    app.require_subcommand(1);

    int rc = 0;
    bool as_json = false;

    // gen
    std::string gen_kind, gen_out = "-";
    std::vector<std::string> gen_params;
    auto* gen = app.add_subcommand("gen", "Generate a named graph as an edge list");
    gen->add_option("kind", gen_kind, "one of: path cycle complete star turan full_dary_tree grid star_plus_path erdos_renyi")
        ->required();
    gen->add_option("params", gen_params, "generator parameters, in order");
    gen->add_option("--out", gen_out, "output path, '-' for stdout");
    gen->add_flag("--json", as_json, "emit one JSON document");
    gen->callback([&] { rc = cmd_gen(gen_kind, gen_params, gen_out, as_json); });

    // sim
    std::string sim_graph = "-", sim_opinions;
    int sim_max_rounds = -1;
    bool sim_trace = false;
    auto* sim = app.add_subcommand("sim", "Run the process until it is 2-periodic");
    sim->add_option("--graph,-g", sim_graph, "edge-list path, '-' for stdin");
    sim->add_option("--opinions,-f", sim_opinions, "initial opinion file")->required();
    sim->add_option("--max-rounds", sim_max_rounds, "round budget (default 2|E|+2)");
    sim->add_flag("--trace", sim_trace, "record and print every round");
    sim->add_flag("--json", as_json, "emit one JSON document");
    sim->callback([&] { rc = cmd_sim(sim_graph, sim_opinions, sim_max_rounds, sim_trace, as_json); });

    // bounds
    std::string bounds_graph = "-", bounds_opinions;
    auto* bounds = app.add_subcommand("bounds", "Closed-form voting-time bounds");
    bounds->add_option("--graph,-g", bounds_graph, "edge-list path, '-' for stdin");
    bounds->add_option("--opinions,-f", bounds_opinions, "also report T and the bad-arrow potential for this start");
    bounds->add_flag("--json", as_json, "emit one JSON document");
    bounds->callback([&] { rc = cmd_bounds(bounds_graph, bounds_opinions, as_json); });

    // families
    std::string fam_graph = "-";
    auto* fam = app.add_subcommand("families", "Twin-class partition of the node set");
    fam->add_option("--graph,-g", fam_graph, "edge-list path, '-' for stdin");
    fam->add_flag("--json", as_json, "emit one JSON document");
    fam->callback([&] { rc = cmd_families(fam_graph, as_json); });

    // gdelta
    std::string gd_graph = "-", gd_out_graph, gd_out_map;
    auto* gd = app.add_subcommand("gdelta", "Family-reduced graph and its class table");
    gd->add_option("--graph,-g", gd_graph, "edge-list path, '-' for stdin");
    gd->add_option("--out-graph", gd_out_graph, "write the reduced graph as an edge list");
    gd->add_option("--out-map", gd_out_map, "write a JSON sidecar with the kept-node mapping");
    gd->add_flag("--json", as_json, "emit one JSON document");
    gd->callback([&] { rc = cmd_gdelta(gd_graph, gd_out_graph, gd_out_map, as_json); });

    // arrows
    std::string ar_graph = "-", ar_opinions, ar_out = "-";
    bool ar_gstar = false;
    auto* ar = app.add_subcommand("arrows", "Bad arrows of the first round from a given start");
    ar->add_option("--graph,-g", ar_graph, "edge-list path, '-' for stdin");
    ar->add_option("--opinions,-f", ar_opinions, "initial opinion file")->required();
    ar->add_flag("--gstar", ar_gstar, "add self-loops at even-degree nodes first");
    ar->add_option("--out", ar_out, "output path, '-' for stdout");
    ar->add_flag("--json", as_json, "emit one JSON document");
    ar->callback([&] { rc = cmd_arrows(ar_graph, ar_opinions, ar_gstar, ar_out, as_json); });

    // reconstruct
    std::string rec_graph = "-", rec_arrows;
    bool rec_gstar = false, rec_disconnected = false;
    int rec_max = 64;
    auto* rec = app.add_subcommand("reconstruct", "All assignments producing a given bad-arrow set");
    rec->add_option("--graph,-g", rec_graph, "edge-list path, '-' for stdin");
    rec->add_option("--arrows", rec_arrows, "arrow-set file")->required();
    rec->add_flag("--gstar", rec_gstar, "interpret the arrows on the self-looped graph");
    rec->add_flag("--allow-disconnected", rec_disconnected, "accept disconnected graphs");
    rec->add_option("--max-candidates", rec_max, "cap on seed combinations for disconnected inputs");
    rec->add_flag("--json", as_json, "emit one JSON document");
    rec->callback([&] { rc = cmd_reconstruct(rec_graph, rec_arrows, rec_gstar, rec_disconnected, rec_max, as_json); });

    // reduce
    std::string red_cnf, red_out_graph, red_out_roles, red_assignment, red_out_opinions = "-";
    bool red_verify = false;
    auto* red = app.add_subcommand("reduce", "Hardness gadget graph from a 3-CNF formula");
    red->add_option("--cnf", red_cnf, "DIMACS CNF path, '-' for stdin")->required();
    red->add_option("--out-graph", red_out_graph, "write the gadget graph as an edge list");
    red->add_option("--out-roles", red_out_roles, "write a JSON sidecar with node roles and layout");
    red->add_option("--assignment", red_assignment, "Boolean assignment as a 0/1 string of length n");
    red->add_option("--out-opinions", red_out_opinions, "where to write the structured start for --assignment");
    red->add_flag("--verify", red_verify, "simulate the structured start and check the staged schedule");
    red->add_flag("--json", as_json, "emit one JSON document");
    red->callback([&] {
        rc = cmd_reduce(red_cnf, red_out_graph, red_out_roles, red_assignment, red_out_opinions, red_verify,
                        as_json);
    });

    // worstcase
    std::string wc_graph = "-";
    bool wc_exact = false;
    int wc_samples = 0, wc_node_limit = 22, wc_workers = 0;
    uint64_t wc_seed = kDefaultSeed;
    std::vector<std::string> wc_inject;
    std::vector<int> wc_serp;
    auto* wc = app.add_subcommand("worstcase", "Worst-case voting time over initial assignments");
    wc->add_option("--graph,-g", wc_graph, "edge-list path, '-' for stdin");
    auto* wc_exact_flag = wc->add_flag("--exact", wc_exact, "enumerate all assignments (node 0 pinned)");
    auto* wc_samples_opt = wc->add_option("--samples", wc_samples, "seeded random sampling with hill climb");
    wc_exact_flag->excludes(wc_samples_opt);
    wc->add_option("--seed", wc_seed, "RNG seed for sampling (default " + std::to_string(kDefaultSeed) + ")");
    wc->add_option("--node-limit", wc_node_limit, "refuse exact runs above this many nodes");
    wc->add_option("--workers", wc_workers, "thread count for exact runs, 0 = hardware");
    wc->add_option("--inject", wc_inject, "opinion files added as sampling start points");
    wc->add_option("--serpentine", wc_serp, "ROWS COLS: inject the serpentine start for a grid graph")
        ->expected(2);
    wc->add_flag("--json", as_json, "emit one JSON document");
    wc->callback([&] {
        bool exact = wc_exact || wc_samples_opt->count() == 0;
        rc = cmd_worstcase(wc_graph, exact, wc_samples, wc_seed, wc_node_limit, wc_workers, wc_inject, wc_serp,
                           as_json);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
