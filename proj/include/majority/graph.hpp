#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majority {

// Undirected simple graph on nodes 0..n-1. Self-loops are tracked as
// per-node flags, never as adjacency entries, so degree() and
// edge_count() always refer to the simple graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<size_t>(check_size(n))), loops_(static_cast<size_t>(n), 0) {}

    int node_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_[check_node(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[check_node(v)].size()); }

    bool has_loop(int v) const { return loops_[check_node(v)] != 0; }
    void set_loop(int v, bool on) { loops_[check_node(v)] = on ? 1 : 0; }
    bool any_loops() const;
    int loop_count() const;

    bool has_edge(int u, int v) const;

    // Inserts {u,v}; returns false if the edge already exists.
    // Self-loops are rejected.
    bool add_edge(int u, int v);

    bool operator==(const Graph& o) const { return adj_ == o.adj_ && loops_ == o.loops_; }

private:
    static int check_size(int n) {
        if (n < 0) throw std::invalid_argument("graph: negative node count");
        return n;
    }
    int check_node(int v) const {
        if (v < 0 || v >= node_count()) throw std::out_of_range("graph: node id out of range");
        return v;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<char> loops_;
    int edges_ = 0;
};

struct GraphBundle {
    Graph graph;
    std::map<int, std::string> labels;  // node id -> role, sparse
};

// (|V_odd|, |V_even|) by degree in the simple graph; loop flags ignored.
std::pair<int, int> degree_parity_counts(const Graph& g);

bool is_connected(const Graph& g);

// Connected component id per node, components numbered by smallest member.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

// Longest shortest path; requires a connected non-empty graph.
int diameter(const Graph& g);

// Checks all structural invariants (sorted duplicate-free neighbor lists,
// symmetry, no adjacency self-loops, consistent edge count). Throws
// std::logic_error on violation. Used by generators/parsers in tests.
void validate(const Graph& g);

}  // namespace majority
