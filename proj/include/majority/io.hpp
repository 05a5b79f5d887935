#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "majority/graph.hpp"
#include "majority/opinions.hpp"

namespace majority {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge-list format: one "u v" per line, '#' starts a comment, blank lines
// ignored. An optional first line "n <count>" fixes the node count;
// otherwise it is 1 + max id. Duplicate edges and self-loops are rejected.
GraphBundle read_graph(std::istream& in);
GraphBundle read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string write_graph(const Graph& g);

// Opinion file: one line of '0'/'1' characters, or one bit per line.
// The writer emits the single-line form.
Opinions read_opinions(std::istream& in);
Opinions read_opinions_file(const std::string& path);
void write_opinions(std::ostream& out, const Opinions& f);

}  // namespace majority
