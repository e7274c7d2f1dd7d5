#pragma once

#include "discg/submodular.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace discg {

struct CapacitatedEdge {
    int from;
    int to;
    Rational capacity;

    friend bool operator==(const CapacitatedEdge&, const CapacitatedEdge&) = default;
};

/// s-t graph over nodes {s, t, 1..n}. Internally s is node 0 and t is n+1.
/// The source has only outgoing edges, the sink only incoming ones.
class CapacitatedDigraph {
public:
    /// Throws InvalidGraph on an edge into s, out of t, a self loop, a
    /// duplicate edge, an unknown node or a negative capacity.
    CapacitatedDigraph(int n, std::vector<CapacitatedEdge> edges);

    int size() const { return n_; }
    int source() const { return 0; }
    int sink() const { return n_ + 1; }
    /// Sorted by (from, to).
    const std::vector<CapacitatedEdge>& edges() const { return edges_; }
    Rational capacity(int from, int to) const;
    /// Sum of kappa_{s,j} over all j.
    Rational source_capacity() const;
    /// Capacity of the edges leaving U = X + {s}, summed edge by edge.
    Rational cut_capacity(const Subset& x) const;

    friend bool operator==(const CapacitatedDigraph&, const CapacitatedDigraph&) = default;

private:
    int n_;
    std::vector<CapacitatedEdge> edges_;
};

/// F(X) = sum_{i in X, j in V\X} k_ij + sum_{j in (V+t)\X} k_sj + sum_{i in X} k_it
///        - sum_{j in V+t} k_sj.
/// F(empty) = 0 and the cut U = X* + {s} is a minimum s-t cut.
SetFunctionPtr min_cut_function(const CapacitatedDigraph& g);

/// Random s-t graph: inner Erdos-Renyi digraph with edge probability 0.1;
/// s -> j and i -> t each attached to one uniformly drawn node plus every
/// other node independently with probability 0.1; capacities drawn uniformly
/// from {0.1, 0.2, .., 10.0}.
CapacitatedDigraph random_min_cut(int n, std::uint64_t seed);

struct SelectionInstance {
    RationalVector returns;                  // r(i)
    std::vector<RationalVector> penalties;   // p(i, j) >= 0, row i column j
};

/// F(X) = -R(X) + R(empty) with R(X) = sum_{i in X} r(i) - sum_{i in V, j in V\X} p(i, j).
/// Throws DimensionMismatch on a negative penalty or mismatched sizes.
SetFunctionPtr selection_function(const SelectionInstance& inst);

/// Returns in [-5, 5] and sparse penalties in [0.1, 5], one decimal digit.
SelectionInstance random_selection(int n, std::uint64_t seed);

/// g(|X|) + w(X) with g concave, g(0) = 0, plus a random cut term. Always
/// submodular; used to diversify brute-force property tests.
SetFunctionPtr random_concave_cut(int n, std::uint64_t seed);

/// Graph file: header "n s t", then one "i j num den" line per edge.
void write_graph(std::ostream& out, const CapacitatedDigraph& g);
CapacitatedDigraph read_graph(std::istream& in);

/// Instance file: a first line with n, then a tag line:
///   table      dense "mask value" lines (see write_table)
///   mincut     a graph file
///   selection  "r i value" and "p i j value" lines
SetFunctionPtr read_instance(std::istream& in);
void write_selection(std::ostream& out, const SelectionInstance& inst);
void write_mincut_instance(std::ostream& out, const CapacitatedDigraph& g);

}  // namespace discg
