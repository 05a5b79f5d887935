#include "majority/generators.hpp"

#include <random>
#include <stdexcept>

namespace majority {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("generate: " + msg);
}

}  // namespace

GraphBundle gen_path(int n) {
    require(n >= 1, "path needs n >= 1");
    GraphBundle b;
    b.graph = Graph(n);
    for (int v = 0; v + 1 < n; ++v) b.graph.add_edge(v, v + 1);
    return b;
}

GraphBundle gen_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    GraphBundle b;
    b.graph = Graph(n);
    for (int v = 0; v < n; ++v) b.graph.add_edge(v, (v + 1) % n);
    return b;
}

GraphBundle gen_complete(int n) {
    require(n >= 1, "complete needs n >= 1");
    GraphBundle b;
    b.graph = Graph(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.graph.add_edge(u, v);
    return b;
}

GraphBundle gen_star(int leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    GraphBundle b;
    b.graph = Graph(leaves + 1);
    for (int v = 1; v <= leaves; ++v) b.graph.add_edge(0, v);
    b.labels[0] = "center";
    return b;
}

GraphBundle gen_turan(int n, int r) {
    require(n >= 1 && r >= 1 && r <= n, "turan needs 1 <= r <= n");
    GraphBundle b;
    b.graph = Graph(n);
    std::vector<int> cls(static_cast<size_t>(n));
    int id = 0;
    for (int c = 0; c < r; ++c) {
        int size = n / r + (c < n % r ? 1 : 0);
        for (int k = 0; k < size; ++k) cls[static_cast<size_t>(id++)] = c;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cls[static_cast<size_t>(u)] != cls[static_cast<size_t>(v)]) b.graph.add_edge(u, v);
    return b;
}

GraphBundle gen_full_dary_tree(int depth, int d) {
    require(depth >= 0 && d >= 2, "full_dary_tree needs depth >= 0, d >= 2");
    require(depth <= 30, "full_dary_tree depth too large");
    long long n = 0, layer = 1;
    for (int k = 0; k <= depth; ++k) {
        n += layer;
        layer *= d;
        require(n < (1ll << 31), "full_dary_tree too large");
    }
    GraphBundle b;
    b.graph = Graph(static_cast<int>(n));
    for (long long v = 0; v < n; ++v)
        for (int c = 1; c <= d; ++c) {
            long long child = v * d + c;
            if (child < n) b.graph.add_edge(static_cast<int>(v), static_cast<int>(child));
        }
    b.labels[0] = "root";
    return b;
}

GraphBundle gen_grid(int rows, int cols) {
    require(rows >= 2 && cols >= 2, "grid needs rows, cols >= 2");
    GraphBundle b;
    b.graph = Graph(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols) b.graph.add_edge(v, v + 1);
            if (r + 1 < rows) b.graph.add_edge(v, v + cols);
        }
    return b;
}

GraphBundle gen_star_plus_path(int leaves, int path_len) {
    require(leaves >= 1 && path_len >= 1, "star_plus_path needs leaves, path_len >= 1");
    GraphBundle b;
    b.graph = Graph(1 + leaves + path_len);
    for (int v = 1; v <= leaves; ++v) b.graph.add_edge(0, v);
    int prev = 0;
    for (int k = 0; k < path_len; ++k) {
        int v = 1 + leaves + k;
        b.graph.add_edge(prev, v);
        b.labels[v] = "path:" + std::to_string(k);
        prev = v;
    }
    b.labels[0] = "center";
    return b;
}

GraphBundle gen_erdos_renyi(int n, double p, uint64_t seed) {
    require(n >= 1, "erdos_renyi needs n >= 1");
    require(p >= 0.0 && p <= 1.0, "erdos_renyi needs p in [0,1]");
    GraphBundle b;
    b.graph = Graph(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) b.graph.add_edge(u, v);
    return b;
}

std::vector<std::string> generator_kinds() {
    return {"path",          "cycle", "complete",       "star",       "turan",
            "full_dary_tree", "grid",  "star_plus_path", "erdos_renyi"};
}

GraphBundle generate(const std::string& kind, const std::vector<std::string>& params) {
    auto arity = [&](size_t k) { require(params.size() == k, kind + " expects " + std::to_string(k) + " parameter(s)"); };
    auto as_int = [&](size_t i) {
        try {
            size_t pos = 0;
            int v = std::stoi(params.at(i), &pos);
            require(pos == params[i].size(), "bad integer parameter '" + params[i] + "'");
            return v;
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("generate: bad integer parameter '" + params.at(i) + "'");
        }
    };
    if (kind == "path") { arity(1); return gen_path(as_int(0)); }
    if (kind == "cycle") { arity(1); return gen_cycle(as_int(0)); }
    if (kind == "complete") { arity(1); return gen_complete(as_int(0)); }
    if (kind == "star") { arity(1); return gen_star(as_int(0)); }
    if (kind == "turan") { arity(2); return gen_turan(as_int(0), as_int(1)); }
    if (kind == "full_dary_tree") { arity(2); return gen_full_dary_tree(as_int(0), as_int(1)); }
    if (kind == "grid") { arity(2); return gen_grid(as_int(0), as_int(1)); }
    if (kind == "star_plus_path") { arity(2); return gen_star_plus_path(as_int(0), as_int(1)); }
    if (kind == "erdos_renyi") {
        arity(3);
        double p = 0;
        try {
            p = std::stod(params[1]);
        } catch (const std::exception&) {
            throw std::invalid_argument("generate: bad probability '" + params[1] + "'");
        }
        uint64_t seed = 0;
        try {
            seed = std::stoull(params[2]);
        } catch (const std::exception&) {
            throw std::invalid_argument("generate: bad seed '" + params[2] + "'");
        }
        return gen_erdos_renyi(as_int(0), p, seed);
    }
    throw std::invalid_argument("generate: unknown kind '" + kind + "'");
}

std::pair<GraphBundle, Opinions> augment_constant_diameter(const Graph& g, const Opinions& f) {
    if (f.size() != g.node_count()) throw std::invalid_argument("augment: opinion size mismatch");
    if (!is_connected(g)) throw std::invalid_argument("augment: graph must be connected");
    int n = g.node_count();
    GraphBundle b;
    b.graph = Graph(3 * n + 2);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (u > v) b.graph.add_edge(v, u);
    int c0 = n, c1 = 2 * n, hub0 = 3 * n, hub1 = 3 * n + 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            b.graph.add_edge(c0 + i, c0 + j);
            b.graph.add_edge(c1 + i, c1 + j);
        }
    for (int v = 0; v < n; ++v) {
        b.graph.add_edge(hub0, v);
        b.graph.add_edge(hub1, v);
        b.graph.add_edge(hub0, c0 + v);
        b.graph.add_edge(hub1, c1 + v);
    }
    b.labels[hub0] = "hub:0";
    b.labels[hub1] = "hub:1";
    Opinions ext(3 * n + 2, false);
    for (int v = 0; v < n; ++v) ext.set(v, f.get(v));
    for (int v = 0; v < n; ++v) ext.set(c1 + v, true);
    ext.set(hub1, true);
    return {std::move(b), std::move(ext)};
}

}  // namespace majority
