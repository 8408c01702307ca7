#ifndef SPEXLAB_ENUMERATE_HPP
#define SPEXLAB_ENUMERATE_HPP

#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

// Isomorphism-class catalogs, each canonically labeled and sorted by
// canonical form. Results are memoized per argument tuple.

/// Connected graphs on `order` vertices, every vertex of degree `degree`.
const std::vector<Graph>& connected_regular_graphs(int degree, int order);

/// Connected graphs on `order` vertices with exactly one vertex of degree
/// `degree`-1 and all others of degree `degree`.
const std::vector<Graph>& connected_near_regular_graphs(int degree, int order);

/// All graphs on `order` vertices up to isomorphism, by one-vertex
/// augmentation with canonical deduplication. Practical for order <= 8.
const std::vector<Graph>& all_graphs(int order);

/// Labeled graphs realizing `target` as degree sequence, one representative
/// at least per isomorphism class (interchangeable untouched vertices are
/// used in index order). Exposed for testing.
std::vector<Graph> degree_sequence_graphs(const std::vector<int>& target);

}  // namespace spexlab

#endif  // SPEXLAB_ENUMERATE_HPP
