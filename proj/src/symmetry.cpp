#include "majority/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace majority {

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::Singleton: return "singleton";
        case FamilyKind::Clique: return "clique";
        case FamilyKind::Independent: return "independent";
    }
    return "?";
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

FamilyPartition families(const Graph& g) {
    if (g.any_loops()) throw std::invalid_argument("families: graph must not carry loop flags");
    int n = g.node_count();
    Dsu dsu(n);
    // Exact neighborhood keys; ordered map sidesteps hash collisions.
    std::map<std::vector<int>, int> open_first, closed_first;
    for (int v = 0; v < n; ++v) {
        std::vector<int> open = g.neighbors(v);
        auto [it, fresh] = open_first.try_emplace(open, v);
        if (!fresh) dsu.unite(v, it->second);
        std::vector<int> closed = std::move(open);
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
        auto [jt, fresh2] = closed_first.try_emplace(std::move(closed), v);
        if (!fresh2) dsu.unite(v, jt->second);
    }
    FamilyPartition part;
    part.class_of.assign(static_cast<size_t>(n), -1);
    std::vector<int> index_of_root(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int r = dsu.find(v);
        if (index_of_root[static_cast<size_t>(r)] < 0) {
            index_of_root[static_cast<size_t>(r)] = static_cast<int>(part.classes.size());
            part.classes.emplace_back();
        }
        int idx = index_of_root[static_cast<size_t>(r)];
        part.classes[static_cast<size_t>(idx)].members.push_back(v);
        part.class_of[static_cast<size_t>(v)] = idx;
    }
    for (auto& cls : part.classes) {
        cls.degree = g.degree(cls.members.front());
        if (cls.members.size() == 1)
            cls.kind = FamilyKind::Singleton;
        else
            cls.kind = g.has_edge(cls.members[0], cls.members[1]) ? FamilyKind::Clique : FamilyKind::Independent;
    }
    return part;
}

AsymmetricReduction asymmetric_graph(const Graph& g) {
    AsymmetricReduction red;
    red.partition = families(g);
    for (const auto& cls : red.partition.classes) {
        if (cls.members.size() == 1) {
            red.kept_nodes.push_back(cls.members[0]);
        } else if (cls.kind == FamilyKind::Independent && cls.odd_degree()) {
            red.kept_nodes.push_back(cls.members[0]);
        } else {
            red.kept_nodes.push_back(cls.members[0]);
            red.kept_nodes.push_back(cls.members[1]);
        }
    }
    std::sort(red.kept_nodes.begin(), red.kept_nodes.end());
    std::vector<int> new_id(static_cast<size_t>(g.node_count()), -1);
    for (size_t i = 0; i < red.kept_nodes.size(); ++i) new_id[static_cast<size_t>(red.kept_nodes[i])] = static_cast<int>(i);
    red.g_delta = Graph(static_cast<int>(red.kept_nodes.size()));
    for (int v : red.kept_nodes)
        for (int u : g.neighbors(v))
            if (u > v && new_id[static_cast<size_t>(u)] >= 0)
                red.g_delta.add_edge(new_id[static_cast<size_t>(v)], new_id[static_cast<size_t>(u)]);
    auto [odd, even] = degree_parity_counts(red.g_delta);
    red.v_odd = odd;
    red.v_even = even;
    return red;
}

AsymBound bound_asym(const Graph& g) {
    AsymBound b;
    b.reduction = asymmetric_graph(g);
    const Graph& gd = b.reduction.g_delta;
    b.branch_arrows = static_cast<long long>(gd.edge_count()) - b.reduction.v_odd / 2;
    b.branch_half = Rational(2ll * gd.edge_count() + b.reduction.v_even + 7ll * gd.node_count(), 4);
    Rational min_branch = Rational(b.branch_arrows) < b.branch_half ? Rational(b.branch_arrows) : b.branch_half;
    b.value = Rational(min_branch.num + min_branch.den, min_branch.den);
    return b;
}

}  // namespace majority
