#ifndef SPEXLAB_GRAPH_HPP
#define SPEXLAB_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spexlab/vertex_set.hpp"

namespace spexlab {

// Thrown for malformed graph input: bad endpoints, loops, repeated edges,
// malformed partitions, empty part lists.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphBuilder;

/// Simple undirected graph on the dense labels 0..order-1.
///
/// Adjacency is held as one bit row per vertex. A Graph is immutable once
/// built; every transformation returns a new value, so instances can be
/// shared freely across threads.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);

  int order() const { return order_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  int degree(Vertex v) const { return degrees_[v]; }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }
  int max_degree() const;
  int min_degree() const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Adjacency lists, ascending.
  std::vector<std::vector<Vertex>> adjacency_lists() const;

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  /// Copy with the edge {u, v} added. Throws if already present.
  Graph with_edge(Vertex u, Vertex v) const;

  /// Relabel: vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.rows_ == b.rows_;
  }

 private:
  friend class GraphBuilder;
  void link(Vertex u, Vertex v);

  int order_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<int> degrees_;
};

/// Validating, single-use builder. add_edge rejects loops, out-of-range
/// endpoints and repeated pairs (in either orientation).
class GraphBuilder {
 public:
  explicit GraphBuilder(int order);
  GraphBuilder& add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
  int order() const { return graph_.order(); }
  Graph build() &&;

 private:
  Graph graph_;
};

/// build_graph: validated construction from an edge list.
Graph build_graph(int order, std::span<const std::pair<int, int>> edges);
Graph build_graph(int order, std::initializer_list<std::pair<int, int>> edges);

Graph complement(const Graph& g);

/// Vertices of parts[i] are offset by the total order of parts[0..i-1].
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);

/// Chain join: disjoint union plus every edge between parts i and i+1.
/// Non-consecutive parts stay non-adjacent, so join({K1, K1, K1}) is P3.
Graph join(std::span<const Graph> parts);
Graph join(std::initializer_list<Graph> parts);

struct Component {
  Graph graph;
  std::vector<Vertex> labels;  // labels[i] = original label of vertex i, ascending
};

/// Connected components ordered by their minimum original label.
std::vector<Component> components(const Graph& g);
bool is_connected(const Graph& g);

struct DegreeClassification {
  int max_degree = 0;
  bool is_regular = false;
  bool is_nearly_regular = false;
  std::optional<Vertex> deficient_vertex;
};

/// Regular: all degrees equal. Nearly regular: exactly one vertex of degree
/// max_degree-1 and every other vertex of degree max_degree.
DegreeClassification classify_degrees(const Graph& g);

}  // namespace spexlab

#endif  // SPEXLAB_GRAPH_HPP
