#include "majority/reduction.hpp"

#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "majority/dynamics.hpp"

namespace majority {

bool CnfFormula::satisfied_by(const std::vector<bool>& a) const {
    if (static_cast<int>(a.size()) != num_vars) throw std::invalid_argument("satisfied_by: assignment size mismatch");
    for (const auto& clause : clauses) {
        bool sat = false;
        for (const Literal& l : clause)
            if (a[static_cast<size_t>(l.var - 1)] != l.negated) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

CnfFormula parse_cnf(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<int> nums;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            if (n >= 0) throw std::runtime_error("cnf: duplicate problem line");
            std::istringstream ls(line);
            std::string p, fmt;
            if (!(ls >> p >> fmt >> n >> m) || fmt != "cnf" || n < 1 || m < 0)
                throw std::runtime_error("cnf: malformed problem line '" + line + "'");
            continue;
        }
        if (n < 0) throw std::runtime_error("cnf: clause data before problem line");
        std::istringstream ls(line);
        int x;
        while (ls >> x) nums.push_back(x);
    }
    if (n < 0) throw std::runtime_error("cnf: missing problem line");
    CnfFormula phi;
    phi.num_vars = n;
    std::vector<Literal> current;
    for (int x : nums) {
        if (x == 0) {
            if (current.size() != 3)
                throw std::runtime_error("cnf: clause of width " + std::to_string(current.size()) +
                                         ", exactly 3 literals required");
            phi.clauses.push_back({current[0], current[1], current[2]});
            current.clear();
            continue;
        }
        int var = x < 0 ? -x : x;
        if (var > n) throw std::runtime_error("cnf: variable " + std::to_string(var) + " out of range");
        current.push_back(Literal{var, x < 0});
    }
    if (!current.empty()) throw std::runtime_error("cnf: unterminated clause");
    if (phi.num_clauses() != m)
        throw std::runtime_error("cnf: header promises " + std::to_string(m) + " clauses, found " +
                                 std::to_string(phi.num_clauses()));
    return phi;
}

CnfFormula parse_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cnf file '" + path + "'");
    return parse_cnf(in);
}

namespace {

void ensure(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error("build_reduction: " + msg);
}

}  // namespace

ReductionLayout build_reduction(const CnfFormula& phi) {
    int n = phi.num_vars, m = phi.num_clauses();
    if (m < 2) throw std::invalid_argument("build_reduction: at least 2 clauses required (the AND gate needs m-2 >= 0 anchor ports)");
    ReductionLayout lay;
    lay.num_vars = n;
    lay.num_clauses = m;
    lay.ell = 10 * (m + n) + 1;
    lay.h = 3 + 4 * n;
    int ell = lay.ell;
    lay.kwhite_base = 2 * n * ell;
    lay.kblack_base = 2 * n * ell + ell;
    int or_base = 2 * n * ell + 2 * ell;
    for (int j = 0; j < m; ++j) lay.or_outputs.push_back(or_base + j);
    lay.and_node = or_base + m;
    for (int i = 1; i <= 4 * n; ++i) lay.gate_path.push_back(lay.and_node + i);
    int total = 2 * n * ell + 2 * ell + m + 1 + 4 * n;

    Graph g(total);
    auto clique = [&](int base) {
        for (int i = 0; i < ell; ++i)
            for (int j = i + 1; j < ell; ++j) g.add_edge(base + i, base + j);
    };
    for (int c = 0; c < 2 * n; ++c) clique(lay.clique_base(c));
    clique(lay.kwhite_base);
    clique(lay.kblack_base);

    // OR gates: 2 representatives per literal occurrence, chosen by
    // rotation over occurrences of the clique; 4 fixed K_white ports; the
    // AND node.
    std::vector<int> occ(static_cast<size_t>(2 * n), 0);
    for (int j = 0; j < m; ++j) {
        int v = lay.or_outputs[static_cast<size_t>(j)];
        for (const Literal& l : phi.clauses[static_cast<size_t>(j)]) {
            int c = lay.clique_index(l.var, l.negated);
            auto reps = lay.representatives(c);
            int o = occ[static_cast<size_t>(c)]++;
            g.add_edge(v, reps[static_cast<size_t>(o % 3)]);
            g.add_edge(v, reps[static_cast<size_t>((o + 1) % 3)]);
        }
        for (int t = 0; t < 4; ++t) g.add_edge(v, lay.kwhite_base + t);
        g.add_edge(v, lay.and_node);
    }

    // AND gate: m-2 distinct K_black ports (plus the OR edges above and
    // u_1 from the chain below).
    for (int t = 0; t < m - 2; ++t) g.add_edge(lay.and_node, lay.kblack_base + t);

    // 2/3-gate chain u_1..u_{4n}: every node has 2 fixed K_white ports;
    // each gate input additionally sees all 6 representatives of its
    // variable's two cliques; the final output anchors to one K_black node.
    int prev = lay.and_node;
    for (int i = 1; i <= 4 * n; ++i) {
        int u = lay.gate_path[static_cast<size_t>(i - 1)];
        g.add_edge(u, prev);
        g.add_edge(u, lay.kwhite_base + 0);
        g.add_edge(u, lay.kwhite_base + 1);
        prev = u;
    }
    for (int i = 1; i <= n; ++i) {
        int v1 = lay.gate_path[static_cast<size_t>(4 * (i - 1))];
        for (int c : {lay.clique_index(i, false), lay.clique_index(i, true)})
            for (int rep : lay.representatives(c)) g.add_edge(v1, rep);
    }
    g.add_edge(lay.gate_path.back(), lay.kblack_base + 0);

    // structural checks
    ensure(g.node_count() == total, "node-count formula violated");
    validate(g);
    ensure(is_connected(g), "gadget graph is disconnected");
    auto external = [&](int v) { return g.degree(v) - (ell - 1); };
    for (int t = 0; t < 4; ++t) ensure(external(lay.kwhite_base + t) < (ell - 1) / 2, "K_white port overloaded");
    for (int t = 0; t < std::max(1, m - 2); ++t)
        ensure(external(lay.kblack_base + t) < (ell - 1) / 2, "K_black port overloaded");
    for (int c = 0; c < 2 * n; ++c)
        for (int rep : lay.representatives(c)) ensure(external(rep) < ell / 2, "representative overloaded");
    for (int i = 2; i <= 4 * n; ++i) {
        if (i % 4 == 1) continue;
        int u = lay.gate_path[static_cast<size_t>(i - 1)];
        int kw = 0;
        for (int w : g.neighbors(u))
            if (w >= lay.kwhite_base && w < lay.kwhite_base + ell) ++kw;
        ensure(kw == 2 && g.degree(u) == 4, "2/3-gate parity balance violated");
    }
    ensure(g.degree(lay.and_node) == 2 * m - 1, "AND gate degree mismatch");

    lay.bundle.graph = std::move(g);
    for (int j = 0; j < m; ++j) lay.bundle.labels[lay.or_outputs[static_cast<size_t>(j)]] = "or:" + std::to_string(j);
    lay.bundle.labels[lay.and_node] = "and";
    for (int i = 1; i <= 4 * n; ++i)
        lay.bundle.labels[lay.gate_path[static_cast<size_t>(i - 1)]] = "u:" + std::to_string(i);
    lay.bundle.labels[lay.kwhite_base] = "kwhite";
    lay.bundle.labels[lay.kblack_base] = "kblack";
    return lay;
}

Opinions assignment_to_opinions(const ReductionLayout& lay, const std::vector<bool>& a) {
    if (static_cast<int>(a.size()) != lay.num_vars) throw std::invalid_argument("assignment_to_opinions: size mismatch");
    Opinions f(lay.node_count(), false);
    int ell = lay.ell;
    for (int i = 1; i <= lay.num_vars; ++i) {
        // the literal made TRUE by a is the positive clique
        int pos = a[static_cast<size_t>(i - 1)] ? lay.clique_index(i, false) : lay.clique_index(i, true);
        int base = lay.clique_base(pos);
        for (int k = ell / 2; k < ell; ++k) f.set(base + k, true);
    }
    for (int k = 0; k < ell; ++k) f.set(lay.kwhite_base + k, true);
    return f;
}

std::optional<std::vector<bool>> decode_assignment(const ReductionLayout& lay, const Opinions& f) {
    if (f.size() != lay.node_count()) return std::nullopt;
    std::vector<bool> a(static_cast<size_t>(lay.num_vars));
    for (int i = 1; i <= lay.num_vars; ++i) {
        int base = lay.clique_base(lay.clique_index(i, false));
        bool any_white = false;
        for (int k = 0; k < lay.ell && !any_white; ++k) any_white = f.get(base + k);
        a[static_cast<size_t>(i - 1)] = any_white;
    }
    if (assignment_to_opinions(lay, a) != f) return std::nullopt;
    return a;
}

VerifyReport verify_satisfiable_direction(const CnfFormula& phi, const std::vector<bool>& a) {
    if (!phi.satisfied_by(a)) throw std::invalid_argument("verify_satisfiable_direction: assignment does not satisfy the formula");
    ReductionLayout lay = build_reduction(phi);
    const Graph& g = lay.bundle.graph;
    Opinions f0 = assignment_to_opinions(lay, a);
    Trajectory traj = run(g, f0, std::nullopt, /*trace=*/true);

    VerifyReport rep;
    rep.expected_voting_time = 4 + 4 * lay.num_vars;
    rep.voting_time = traj.converged ? traj.voting_time : -1;
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };
    if (!traj.converged) fail("process did not converge within budget");
    if (traj.converged && traj.voting_time != rep.expected_voting_time)
        fail("voting time " + std::to_string(traj.voting_time) + ", expected " + std::to_string(rep.expected_voting_time));

    const auto& s = traj.states;
    int last = static_cast<int>(s.size()) - 1;
    auto node_is = [&](int t, int v, bool white) { return s[static_cast<size_t>(t)].get(v) == white; };
    auto check_stage = [&](const std::string& name, int flip_round, const std::vector<int>& nodes) {
        bool ok = true;
        for (int v : nodes) {
            for (int t = 0; t < flip_round && ok; ++t) ok = node_is(t, v, false);
            for (int t = flip_round; t <= last && ok; ++t) ok = node_is(t, v, true);
            if (!ok) break;
        }
        rep.stages.push_back({name, flip_round, ok});
        if (!ok) fail("stage '" + name + "' missed its schedule (expected flip at round " + std::to_string(flip_round) + ")");
    };

    int ell = lay.ell;
    std::vector<int> pos_nonrep_black, pos_nonrep_white, pos_reps, pos_reps_sparse, always_black, always_white;
    for (int i = 1; i <= lay.num_vars; ++i) {
        int pos = a[static_cast<size_t>(i - 1)] ? lay.clique_index(i, false) : lay.clique_index(i, true);
        int neg = a[static_cast<size_t>(i - 1)] ? lay.clique_index(i, true) : lay.clique_index(i, false);
        int pb = lay.clique_base(pos);
        for (int k = 3; k < ell / 2; ++k) pos_nonrep_black.push_back(pb + k);
        for (int k = ell / 2; k < ell; ++k) pos_nonrep_white.push_back(pb + k);
        for (int r : lay.representatives(pos)) {
            // A representative with fewer than 2 external edges lacks the
            // black ballast to survive round 1 and flips one round early;
            // it is still white from round 2 on, which is all the later
            // layers rely on.
            int external = g.degree(r) - (ell - 1);
            (external >= 2 ? pos_reps : pos_reps_sparse).push_back(r);
        }
        int nb = lay.clique_base(neg);
        for (int k = 0; k < ell; ++k) always_black.push_back(nb + k);
    }
    for (int k = 0; k < ell; ++k) {
        always_white.push_back(lay.kwhite_base + k);
        always_black.push_back(lay.kblack_base + k);
    }
    bool anchors_ok = true;
    for (int t = 0; t <= last && anchors_ok; ++t) {
        for (int v : always_white) anchors_ok = anchors_ok && node_is(t, v, true);
        for (int v : always_black) anchors_ok = anchors_ok && node_is(t, v, false);
    }
    rep.stages.push_back({"anchors (K_white/K_black/negative cliques)", 0, anchors_ok});
    if (!anchors_ok) fail("anchor cliques changed color");

    check_stage("positive-clique white non-representatives", 0, pos_nonrep_white);
    check_stage("positive-clique non-representatives", 1, pos_nonrep_black);
    check_stage("positive-clique representatives", 2, pos_reps);
    {
        bool ok = true;
        for (int v : pos_reps_sparse) {
            ok = ok && node_is(0, v, false);
            for (int t = 2; t <= last && ok; ++t) ok = node_is(t, v, true);
            if (!ok) break;
        }
        rep.stages.push_back({"positive-clique representatives (sparse)", 2, ok});
        if (!ok) fail("stage 'positive-clique representatives (sparse)' not white from round 2");
    }
    check_stage("or-gate outputs", 3, lay.or_outputs);
    check_stage("and-gate output u_0", 4, {lay.and_node});
    for (int i = 1; i <= 4 * lay.num_vars; ++i)
        check_stage("gate node u_" + std::to_string(i), i + 4, {lay.gate_path[static_cast<size_t>(i - 1)]});

    rep.ok = rep.failures.empty();
    return rep;
}

UnsatSampleReport sample_unsat_ceiling(const CnfFormula& phi, int num_samples, uint64_t seed) {
    ReductionLayout lay = build_reduction(phi);
    const Graph& g = lay.bundle.graph;
    UnsatSampleReport rep;
    rep.h_plus_1 = lay.h + 1;
    rep.argmax = Opinions(g.node_count());
    std::mt19937_64 rng(seed);

    auto consider = [&](const Opinions& f0) {
        Trajectory traj = run(g, f0);
        if (!traj.converged) throw std::logic_error("sample_unsat_ceiling: budget exceeded");
        if (traj.voting_time > rep.max_voting_time || (rep.samples_run + rep.structured_run) == 0) {
            rep.max_voting_time = traj.voting_time;
            rep.argmax = f0;
        }
        if (traj.voting_time >= rep.h_plus_1) {
            ++rep.reached_threshold;
            if (auto a = decode_assignment(lay, f0)) rep.decoded_witnesses.emplace_back(*a, phi.satisfied_by(*a));
        }
    };

    for (int s = 0; s < num_samples; ++s) {
        Opinions f0(g.node_count());
        for (int v = 0; v < g.node_count(); ++v) f0.set(v, (rng() & 1u) != 0);
        consider(f0);
        ++rep.samples_run;
    }
    if (lay.num_vars <= 12) {
        for (uint32_t mask = 0; mask < (uint32_t{1} << lay.num_vars); ++mask) {
            std::vector<bool> a(static_cast<size_t>(lay.num_vars));
            for (int i = 0; i < lay.num_vars; ++i) a[static_cast<size_t>(i)] = ((mask >> i) & 1u) != 0;
            consider(assignment_to_opinions(lay, a));
            ++rep.structured_run;
        }
    } else {
        for (int s = 0; s < num_samples; ++s) {
            std::vector<bool> a(static_cast<size_t>(lay.num_vars));
            for (int i = 0; i < lay.num_vars; ++i) a[static_cast<size_t>(i)] = (rng() & 1u) != 0;
            consider(assignment_to_opinions(lay, a));
            ++rep.structured_run;
        }
    }
    return rep;
}

}  // namespace majority
