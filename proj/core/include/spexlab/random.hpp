#ifndef SPEXLAB_RANDOM_HPP
#define SPEXLAB_RANDOM_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// G(n, p): each pair independently with probability p.
inline Graph random_graph(int order, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(order);
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

/// G(n, m): a uniformly random set of m distinct pairs.
inline Graph random_graph_with_edges(int order, int edges, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  GraphBuilder b(order);
  for (int i = 0; i < edges && i < static_cast<int>(pairs.size()); ++i) b.add_edge(pairs[i].first, pairs[i].second);
  return std::move(b).build();
}

}  // namespace spexlab

#endif  // SPEXLAB_RANDOM_HPP
