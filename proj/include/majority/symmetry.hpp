#pragma once

#include <string>
#include <vector>

#include "majority/graph.hpp"
#include "majority/potential.hpp"

namespace majority {

enum class FamilyKind { Singleton, Clique, Independent };

std::string to_string(FamilyKind k);

struct FamilyClass {
    std::vector<int> members;  // sorted
    FamilyKind kind = FamilyKind::Singleton;
    int degree = 0;  // common degree in G
    bool odd_degree() const { return degree % 2 != 0; }
};

struct FamilyPartition {
    std::vector<FamilyClass> classes;  // ordered by smallest member
    std::vector<int> class_of;         // node -> class index
};

// Equivalence classes of u ~ v iff N(u)\{v} = N(v)\{u}: the union of
// true-twin (equal closed neighborhood) and false-twin (equal open
// neighborhood) groups. Rejects graphs with loop flags.
FamilyPartition families(const Graph& g);

struct AsymmetricReduction {
    Graph g_delta;
    std::vector<int> kept_nodes;  // G^Delta id -> original id
    FamilyPartition partition;    // on the original graph
    int v_odd = 0, v_even = 0;    // degree parity measured inside G^Delta
};

// Induced subgraph keeping 1 node per independent odd-degree family,
// 2 per any other proper family, and every singleton. Representatives are
// the smallest ids of each class, so the result is canonical.
AsymmetricReduction asymmetric_graph(const Graph& g);

struct AsymBound {
    AsymmetricReduction reduction;
    long long branch_arrows = 0;  // |E^| - |V^_odd|/2
    Rational branch_half;         // |E^|/2 + |V^_even|/4 + 7|V^|/4
    Rational value;               // 1 + min of the branches
};

AsymBound bound_asym(const Graph& g);

}  // namespace majority
