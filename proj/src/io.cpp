#include "majority/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace majority {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::string strip(const std::string& raw) {
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

GraphBundle read_graph(std::istream& in) {
    std::string raw;
    int lineno = 0;
    bool saw_header = false, saw_edge = false;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_lines;
    int max_id = -1;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = strip(raw);
        if (s.empty()) continue;
        std::istringstream ls(s);
        if (!saw_edge && !saw_header && s[0] == 'n') {
            std::string tag;
            ls >> tag;
            if (tag == "n") {
                if (!(ls >> n) || n < 0) fail(lineno, "bad node-count header");
                std::string rest;
                if (ls >> rest) fail(lineno, "trailing tokens after header");
                saw_header = true;
                continue;
            }
            fail(lineno, "malformed line '" + s + "'");
        }
        int u, v;
        if (!(ls >> u >> v)) fail(lineno, "malformed edge line '" + s + "'");
        std::string rest;
        if (ls >> rest) fail(lineno, "trailing tokens on edge line");
        if (u < 0 || v < 0) fail(lineno, "negative node id");
        if (u == v) fail(lineno, "self-loop " + std::to_string(u) + " " + std::to_string(v));
        saw_edge = true;
        max_id = std::max(max_id, std::max(u, v));
        edges.emplace_back(u, v);
        edge_lines.push_back(lineno);
    }
    if (n < 0) n = max_id + 1;
    if (max_id >= n) fail(edge_lines.empty() ? 1 : edge_lines.back(), "node id " + std::to_string(max_id) + " out of range for n=" + std::to_string(n));
    GraphBundle b;
    b.graph = Graph(n);
    for (size_t i = 0; i < edges.size(); ++i) {
        if (!b.graph.add_edge(edges[i].first, edges[i].second))
            fail(edge_lines[i], "duplicate edge " + std::to_string(edges[i].first) + " " + std::to_string(edges[i].second));
    }
    return b;
}

GraphBundle read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "n " << g.node_count() << "\n";
    for (int v = 0; v < g.node_count(); ++v)
        for (int u : g.neighbors(v))
            if (u > v) out << v << " " << u << "\n";
}

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

Opinions read_opinions(std::istream& in) {
    std::string bits, raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = strip(raw);
        if (s.empty()) continue;
        for (char c : s) {
            if (c != '0' && c != '1') fail(lineno, std::string("expected '0' or '1', got '") + c + "'");
            bits.push_back(c);
        }
    }
    if (bits.empty()) throw ParseError("empty opinion file");
    return Opinions::from_string(bits);
}

Opinions read_opinions_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open opinion file '" + path + "'");
    return read_opinions(in);
}

void write_opinions(std::ostream& out, const Opinions& f) { out << f.to_string() << "\n"; }

}  // namespace majority
