#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "majority/graph.hpp"
#include "majority/opinions.hpp"

namespace majority {

// Deterministic graph generators. Labeling schemes:
//   path/cycle:        nodes in path/cycle order
//   star:              node 0 is the center, leaves 1..k
//   turan(n, r):       partition classes occupy consecutive id ranges,
//                      class i of size n/r rounded (first n%r classes one larger)
//   full_dary_tree:    heap layout, children of v are d*v+1 .. d*v+d
//   grid(rows, cols):  node id = row*cols + col
//   star_plus_path:    center 0, leaves 1..k, path nodes k+1..k+len
//                      attached to the center in order
GraphBundle gen_path(int n);
GraphBundle gen_cycle(int n);
GraphBundle gen_complete(int n);
GraphBundle gen_star(int leaves);
GraphBundle gen_turan(int n, int r);
GraphBundle gen_full_dary_tree(int depth, int d);
GraphBundle gen_grid(int rows, int cols);
GraphBundle gen_star_plus_path(int leaves, int path_len);
GraphBundle gen_erdos_renyi(int n, double p, uint64_t seed);

// Dispatch by kind name; params are decimal strings in the order of the
// typed signatures above. Throws std::invalid_argument for unknown kinds
// or bad parameters.
GraphBundle generate(const std::string& kind, const std::vector<std::string>& params);

std::vector<std::string> generator_kinds();

// Embeds g into a constant-diameter supergraph without changing the
// trajectory of any original node: adds an all-black clique C0 and an
// all-white clique C1 of size n plus two hub nodes. Original nodes keep
// their ids; C0 occupies n..2n-1, C1 2n..3n-1, hubs 3n (black) and
// 3n+1 (white). Requires g connected.
std::pair<GraphBundle, Opinions> augment_constant_diameter(const Graph& g, const Opinions& f);

}  // namespace majority
