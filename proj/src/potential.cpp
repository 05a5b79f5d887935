#include "majority/potential.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "majority/dynamics.hpp"

namespace majority {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

long long Rational::ceil_value() const {
    long long q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool ArrowSet::contains(int v, int u) const {
    return std::binary_search(arrows.begin(), arrows.end(), std::make_pair(v, u));
}

Graph with_self_loops(const Graph& g) {
    if (g.any_loops()) throw std::invalid_argument("with_self_loops: graph already has loop flags");
    Graph s = g;
    for (int v = 0; v < g.node_count(); ++v)
        if (g.degree(v) % 2 == 0) s.set_loop(v, true);
    return s;
}

ArrowSet bad_arrows(const Graph& g, const Opinions& f_t, const Opinions& f_next) {
    if (f_t.size() != g.node_count() || f_next.size() != g.node_count())
        throw std::invalid_argument("bad_arrows: opinion size mismatch");
    ArrowSet out;
    for (int v = 0; v < g.node_count(); ++v) {
        for (int u : g.neighbors(v))
            if (f_next.get(u) != f_t.get(v)) out.arrows.emplace_back(v, u);
        if (g.has_loop(v) && f_next.get(v) != f_t.get(v)) out.arrows.emplace_back(v, v);
    }
    std::sort(out.arrows.begin(), out.arrows.end());
    return out;
}

long long bound_two_E(const Graph& g) { return 2ll * g.edge_count() + 1; }

long long bound_badarrows(const Graph& g, const Opinions& f0) {
    Graph star = with_self_loops(g);
    return 1 + static_cast<long long>(bad_arrows(star, f0, step(g, f0)).count());
}

long long bound_E(const Graph& g) {
    auto [odd, even] = degree_parity_counts(g);
    (void)even;
    if (odd % 2 != 0) throw std::logic_error("bound_E: odd number of odd-degree nodes");
    return 1 + static_cast<long long>(g.edge_count()) - odd / 2;
}

Rational bound_half_E(const Graph& g) {
    auto [odd, even] = degree_parity_counts(g);
    (void)odd;
    return Rational(4 + 2ll * g.edge_count() + even + 7ll * g.node_count(), 4);
}

namespace {

// Parity union-find over 2n variables: x_v = f0(v) at index v,
// y_v = f1(v) at index n + v. parity[i] is the xor of variable i with its
// representative.
struct ParityDsu {
    std::vector<int> parent;
    std::vector<char> parity;

    explicit ParityDsu(int n) : parent(static_cast<size_t>(n)), parity(static_cast<size_t>(n), 0) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    std::pair<int, char> find(int i) {
        if (parent[static_cast<size_t>(i)] == i) return {i, 0};
        auto [root, p] = find(parent[static_cast<size_t>(i)]);
        parent[static_cast<size_t>(i)] = root;
        parity[static_cast<size_t>(i)] ^= p;
        return {root, parity[static_cast<size_t>(i)]};
    }
    // returns false on parity contradiction
    bool unite(int a, int b, char rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return static_cast<char>(pa ^ pb) == rel;
        parent[static_cast<size_t>(ra)] = rb;
        parity[static_cast<size_t>(ra)] = static_cast<char>(pa ^ pb ^ rel);
        return true;
    }
};

}  // namespace

std::vector<Opinions> arrow_consistent_assignments(const Graph& g, const ArrowSet& beta, bool on_gstar,
                                                   bool allow_disconnected, int max_candidates) {
    if (g.any_loops()) throw std::invalid_argument("arrow_consistent_assignments: pass the base graph, not G*");
    if (!allow_disconnected && !is_connected(g))
        throw std::invalid_argument("arrow_consistent_assignments: graph must be connected");
    Graph arrow_graph = on_gstar ? with_self_loops(g) : g;
    for (auto [v, u] : beta.arrows) {
        bool ok = (v == u) ? arrow_graph.has_loop(v) : arrow_graph.has_edge(v, u);
        if (!ok) throw std::invalid_argument("arrow_consistent_assignments: arrow over a non-edge");
    }

    int n = g.node_count();
    ParityDsu dsu(2 * n);
    auto relate = [&](int v, int u) {
        // y_u = x_v xor beta(v, u)
        char rel = beta.contains(v, u) ? 1 : 0;
        if (!dsu.unite(v, n + u, rel)) return false;
        return true;
    };
    for (int v = 0; v < n; ++v) {
        for (int u : arrow_graph.neighbors(v))
            if (!relate(v, u)) return {};
        if (arrow_graph.has_loop(v) && !relate(v, v)) return {};
    }

    // one free bit per component containing at least one x-variable
    std::vector<int> roots;
    for (int v = 0; v < n; ++v) {
        int r = dsu.find(v).first;
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    if (roots.size() >= 31 || (1ll << roots.size()) > max_candidates)
        throw std::invalid_argument("arrow_consistent_assignments: too many candidate seeds (" +
                                    std::to_string(roots.size()) + " free bits)");

    std::vector<Opinions> out;
    for (uint32_t mask = 0; mask < (uint32_t{1} << roots.size()); ++mask) {
        Opinions f0(n);
        for (int v = 0; v < n; ++v) {
            auto [r, p] = dsu.find(v);
            size_t k = static_cast<size_t>(std::find(roots.begin(), roots.end(), r) - roots.begin());
            f0.set(v, (((mask >> k) & 1u) ^ p) != 0);
        }
        if (bad_arrows(arrow_graph, f0, step(g, f0)) == beta) out.push_back(std::move(f0));
    }
    return out;
}

ArrowSet read_arrows(std::istream& in, const Graph& g) {
    ArrowSet out;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = raw;
        auto hash = s.find('#');
        if (hash != std::string::npos) s.erase(hash);
        if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(s);
        int v, u;
        std::string rest;
        if (!(ls >> v >> u) || (ls >> rest))
            throw std::runtime_error("line " + std::to_string(lineno) + ": malformed arrow line");
        if (v < 0 || v >= g.node_count() || u < 0 || u >= g.node_count())
            throw std::runtime_error("line " + std::to_string(lineno) + ": arrow node id out of range");
        if (v == u ? !g.has_loop(v) : !g.has_edge(v, u))
            throw std::runtime_error("line " + std::to_string(lineno) + ": arrow " + std::to_string(v) + " " +
                                     std::to_string(u) + " has no underlying edge");
        out.arrows.emplace_back(v, u);
    }
    std::sort(out.arrows.begin(), out.arrows.end());
    out.arrows.erase(std::unique(out.arrows.begin(), out.arrows.end()), out.arrows.end());
    return out;
}

void write_arrows(std::ostream& out, const ArrowSet& a) {
    for (auto [v, u] : a.arrows) out << v << " " << u << "\n";
}

}  // namespace majority
