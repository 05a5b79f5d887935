#include "majority/graph.hpp"

#include <algorithm>
#include <queue>

namespace majority {

bool Graph::any_loops() const {
    for (char c : loops_)
        if (c) return true;
    return false;
}

int Graph::loop_count() const {
    int k = 0;
    for (char c : loops_)
        if (c) ++k;
    return k;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[check_node(u)];
    check_node(v);
    return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::add_edge(int u, int v) {
    check_node(u);
    check_node(v);
    if (u == v) throw std::invalid_argument("graph: self-loop in add_edge");
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v) return false;
    a.insert(it, v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++edges_;
    return true;
}

std::pair<int, int> degree_parity_counts(const Graph& g) {
    int odd = 0;
    for (int v = 0; v < g.node_count(); ++v)
        if (g.degree(v) % 2 != 0) ++odd;
    return {odd, g.node_count() - odd};
}

std::vector<int> connected_components(const Graph& g, int* count) {
    std::vector<int> comp(static_cast<size_t>(g.node_count()), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.node_count(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (comp[u] < 0) {
                    comp[u] = next;
                    stack.push_back(u);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    int count = 0;
    connected_components(g, &count);
    return count <= 1;
}

int diameter(const Graph& g) {
    int n = g.node_count();
    if (n == 0 || !is_connected(g)) throw std::invalid_argument("diameter: graph must be connected and non-empty");
    int best = 0;
    std::vector<int> dist(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            best = std::max(best, dist[v]);
            for (int u : g.neighbors(v)) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
            }
        }
    }
    return best;
}

void validate(const Graph& g) {
    long long half_edges = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        const auto& a = g.neighbors(v);
        half_edges += static_cast<long long>(a.size());
        for (size_t i = 0; i < a.size(); ++i) {
            int u = a[i];
            if (u < 0 || u >= g.node_count()) throw std::logic_error("validate: neighbor id out of range");
            if (u == v) throw std::logic_error("validate: self-loop stored in adjacency");
            if (i > 0 && a[i - 1] >= u) throw std::logic_error("validate: neighbor list not sorted/duplicate-free");
            if (!g.has_edge(u, v)) throw std::logic_error("validate: asymmetric adjacency");
        }
    }
    if (half_edges % 2 != 0 || half_edges / 2 != g.edge_count())
        throw std::logic_error("validate: edge count inconsistent");
}

}  // namespace majority
