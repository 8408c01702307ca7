#include "spexlab/graph.hpp"

#include <algorithm>
#include <numeric>

namespace spexlab {

Graph::Graph(int order) : order_(order) {
  if (order < 0) throw GraphError("graph order must be non-negative");
  rows_.assign(order, VertexSet(order));
  degrees_.assign(order, 0);
}

void Graph::link(Vertex u, Vertex v) {
  rows_[u].insert(v);
  rows_[v].insert(u);
  ++degrees_[u];
  ++degrees_[v];
  ++edge_count_;
}

int Graph::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

int Graph::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order_; ++u)
    rows_[u].for_each([&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  return out;
}

std::vector<std::vector<Vertex>> Graph::adjacency_lists() const {
  std::vector<std::vector<Vertex>> out(order_);
  for (Vertex u = 0; u < order_; ++u) out[u] = rows_[u].to_vector();
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  const int m = static_cast<int>(vertices.size());
  Graph out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (adjacent(vertices[i], vertices[j])) out.link(i, j);
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  GraphBuilder b(order_);
  for (const auto& e : edges()) b.add_edge(e.u, e.v);
  b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order_) throw GraphError("permutation size mismatch");
  Graph out(order_);
  for (const auto& e : edges()) out.link(perm[e.u], perm[e.v]);
  return out;
}

GraphBuilder::GraphBuilder(int order) : graph_(order) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  const int n = graph_.order();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                     std::to_string(v) + ") with order " + std::to_string(n));
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (graph_.adjacent(u, v))
    throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  graph_.link(u, v);
  return *this;
}

Graph GraphBuilder::build() && { return std::move(graph_); }

Graph build_graph(int order, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(order);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph build_graph(int order, std::initializer_list<std::pair<int, int>> edges) {
  return build_graph(order, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

namespace {

std::vector<int> offsets_of(std::span<const Graph> parts) {
  std::vector<int> off(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) off[i + 1] = off[i] + parts[i].order();
  return off;
}

}  // namespace

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw GraphError("disjoint_union of an empty list");
  const auto off = offsets_of(parts);
  GraphBuilder b(off.back());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& e : parts[i].edges()) b.add_edge(e.u + off[i], e.v + off[i]);
  return std::move(b).build();
}

Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

Graph join(std::span<const Graph> parts) {
  if (parts.empty()) throw GraphError("join of an empty list");
  const auto off = offsets_of(parts);
  GraphBuilder b(off.back());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& e : parts[i].edges()) b.add_edge(e.u + off[i], e.v + off[i]);
    if (i + 1 < parts.size())
      for (int a = off[i]; a < off[i + 1]; ++a)
        for (int c = off[i + 1]; c < off[i + 2]; ++c) b.add_edge(a, c);
  }
  return std::move(b).build();
}

Graph join(std::initializer_list<Graph> parts) {
  return join(std::span<const Graph>(parts.begin(), parts.size()));
}

std::vector<Component> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<Component> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members{s};
    comp[s] = id;
    for (std::size_t head = 0; head < members.size(); ++head)
      g.neighbors(members[head]).for_each([&](Vertex w) {
        if (comp[w] < 0) {
          comp[w] = id;
          members.push_back(w);
        }
      });
    std::sort(members.begin(), members.end());
    out.push_back({g.induced(members), std::move(members)});
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen(g.order());
  std::vector<Vertex> stack{0};
  seen.insert(0);
  int reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    g.neighbors(u).for_each([&](Vertex w) {
      if (!seen.contains(w)) {
        seen.insert(w);
        ++reached;
        stack.push_back(w);
      }
    });
  }
  return reached == g.order();
}

DegreeClassification classify_degrees(const Graph& g) {
  DegreeClassification c;
  c.max_degree = g.max_degree();
  int below = 0;
  bool other = false;
  Vertex low = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d == c.max_degree) continue;
    if (d == c.max_degree - 1) {
      ++below;
      low = v;
    } else {
      other = true;
    }
  }
  c.is_regular = below == 0 && !other;
  c.is_nearly_regular = below == 1 && !other;
  if (c.is_nearly_regular) c.deficient_vertex = low;
  return c;
}

}  // namespace spexlab
