#ifndef SPEXLAB_SUBGRAPH_HPP
#define SPEXLAB_SUBGRAPH_HPP

#include <cstdint>
#include <string>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Outcome of an exact search. budget_exhausted means the search was cut
/// off and says nothing about the answer.
enum class Decision { yes, no, budget_exhausted };

std::string to_string(Decision d);

/// Cap on backtracking node expansions for one top-level call.
struct SearchBudget {
  std::uint64_t max_expansions = 200'000'000;
};

/// Whether g has a (not necessarily induced) cycle on exactly `length`
/// vertices. Exact backtracking from each start s over the 2-core of
/// {v >= s}; interchangeable twin vertices are extended only once per node.
Decision contains_cycle_of_length(const Graph& g, int length, SearchBudget budget = {});

/// Whether g contains W_{2k+1}: some vertex whose neighbourhood spans a
/// C_{2k}. Hubs are scanned by decreasing degree, skipping degree < 2k.
Decision contains_odd_wheel(const Graph& g, int k, SearchBudget budget = {});

struct LongestPath {
  int order = 0;          // vertices on the longest path found
  bool complete = true;   // false: budget ran out and `order` is a lower bound
};

/// Maximum number of vertices on a simple path. A component whose order
/// is already reached by a found path stops its search.
LongestPath longest_path_order(const Graph& g, SearchBudget budget = {});

/// K_{1,k}-freeness, i.e. maximum degree <= k-1.
bool is_star_free(const Graph& g, int k);

}  // namespace spexlab

#endif  // SPEXLAB_SUBGRAPH_HPP
