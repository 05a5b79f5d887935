#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "majority/graph.hpp"
#include "majority/opinions.hpp"

namespace majority {

// Exact rational with a small denominator; all bound formulas here have
// denominator 1, 2 or 4.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);

    long long ceil_value() const;
    bool is_integer() const { return den == 1; }
    std::string str() const;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }
};

// Ordered pairs (v, u) over existing edges, plus (v, v) for flagged loops.
struct ArrowSet {
    std::vector<std::pair<int, int>> arrows;  // sorted, duplicate-free

    size_t count() const { return arrows.size(); }
    bool contains(int v, int u) const;
    bool operator==(const ArrowSet& o) const { return arrows == o.arrows; }
};

// G*: identical adjacency, loop flag on every even-degree node.
// Rejects graphs that already carry loop flags.
Graph with_self_loops(const Graph& g);

// Arrows (v, u) with u adjacent to v and f_next(u) != f_t(v), plus (v, v)
// for flagged loops with f_next(v) != f_t(v). Caller contract:
// f_next = step(g, f_t).
ArrowSet bad_arrows(const Graph& g, const Opinions& f_t, const Opinions& f_next);

// Closed-form voting-time bounds.
long long bound_two_E(const Graph& g);                      // 2|E| + 1
long long bound_badarrows(const Graph& g, const Opinions& f0);  // 1 + phi_0 on G*
long long bound_E(const Graph& g);                          // 1 + |E| - |V_odd|/2
Rational bound_half_E(const Graph& g);                      // 1 + |E|/2 + |V_even|/4 + 7|V|/4

// All opinion assignments whose bad-arrow set on g (on_gstar = false) or
// on G* (true) equals beta exactly. Solved by parity propagation of
// f_1(u) = f_0(v) xor beta(v,u) over the edges, then verified against the
// process. Empty result means beta is not a valid bad-arrow assignment.
// Disconnected inputs are accepted only with allow_disconnected; the
// number of seed combinations is capped by max_candidates.
std::vector<Opinions> arrow_consistent_assignments(const Graph& g, const ArrowSet& beta,
                                                   bool on_gstar = false,
                                                   bool allow_disconnected = false,
                                                   int max_candidates = 64);

// Arrow-set text format: one "v u" per line, '#' comments, blank lines ignored.
ArrowSet read_arrows(std::istream& in, const Graph& g);
void write_arrows(std::ostream& out, const ArrowSet& a);

}  // namespace majority
