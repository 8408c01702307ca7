#ifndef SPEXLAB_CANONICAL_HPP
#define SPEXLAB_CANONICAL_HPP

#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Canonical labeling by individualization-refinement.
///
/// The search tree branches on the first non-singleton cell of the
/// equitable refinement of the current ordered partition; twin vertices
/// (N(u)-v == N(v)-u) in the target cell are explored once, since swapping
/// them is an automorphism that fixes the current partition. The canonical
/// labeling is the leaf with the smallest upper-triangular adjacency string.
///
/// Returns perm with perm[v] = canonical position of vertex v.
std::vector<Vertex> canonical_labeling(const Graph& g);

Graph canonical_graph(const Graph& g);

/// graph6 text of canonical_graph(g). Two graphs are isomorphic iff their
/// canonical forms are equal.
std::string canonical_form(const Graph& g);

/// Exact lexicographically minimal adjacency string over all vertex
/// permutations (graph6-encoded), by column-wise branch and bound with twin
/// pruning. Slow on large symmetric graphs; intended as an oracle for
/// canonical_form at small orders. Requires order <= 64.
std::string brute_canonical_form(const Graph& g);

}  // namespace spexlab

#endif  // SPEXLAB_CANONICAL_HPP
