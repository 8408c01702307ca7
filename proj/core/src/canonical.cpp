#include "spexlab/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "spexlab/io.hpp"

namespace spexlab {
namespace {

using Cell = std::vector<Vertex>;
using Cells = std::vector<Cell>;

// Adjacency string in graph6 bit order (column j, rows 0..j-1), packed
// MSB-first so that vector comparison is lexicographic on bits.
using BitString = std::vector<std::uint64_t>;

BitString adjacency_string(const Graph& g, const std::vector<Vertex>& at) {
  const int n = g.order();
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  BitString s((nbits + 63) / 64, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(at[i], at[j])) s[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
  return s;
}

bool twins(const Graph& g, Vertex u, Vertex v) {
  VertexSet a = g.neighbors(u);
  VertexSet b = g.neighbors(v);
  a.erase(v);
  b.erase(u);
  return a == b;
}

// Equitable refinement of an ordered partition. The choice of splitter and
// split cell depends only on cell positions and neighbour counts, so the
// procedure commutes with relabeling.
void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      VertexSet splitter(n);
      for (Vertex v : cells[s]) splitter.insert(v);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() == 1) continue;
        std::vector<std::pair<int, Vertex>> keyed;
        keyed.reserve(cells[c].size());
        for (Vertex v : cells[c]) keyed.emplace_back(g.neighbors(v).intersection_count(splitter), v);
        const bool uniform = std::all_of(keyed.begin(), keyed.end(),
                                         [&](const auto& p) { return p.first == keyed.front().first; });
        if (uniform) continue;
        std::sort(keyed.begin(), keyed.end());
        Cells pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

struct Search {
  const Graph& g;
  std::optional<BitString> best;
  std::vector<Vertex> best_at;

  void run(Cells cells) {
    refine(g, cells);
    const auto target = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<Vertex> at;
      at.reserve(cells.size());
      for (const auto& c : cells) at.push_back(c.front());
      auto s = adjacency_string(g, at);
      if (!best || s < *best) {
        best = std::move(s);
        best_at = std::move(at);
      }
      return;
    }
    const auto t = static_cast<std::size_t>(target - cells.begin());
    const Cell cell = cells[t];
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return twins(g, v, w); })) continue;
      tried.push_back(v);
      Cells next = cells;
      Cell rest;
      for (Vertex w : cell)
        if (w != v) rest.push_back(w);
      next[t] = {v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(t) + 1, std::move(rest));
      run(std::move(next));
    }
  }
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> perm(n);
  if (n == 0) return perm;
  Cell all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  Search search{g, std::nullopt, {}};
  search.run(Cells{all});
  for (int pos = 0; pos < n; ++pos) perm[search.best_at[pos]] = pos;
  return perm;
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

std::string canonical_form(const Graph& g) { return encode_graph6(canonical_graph(g)); }

namespace {

struct BruteSearch {
  const Graph& g;
  int n;
  std::vector<Vertex> at;
  std::vector<std::uint64_t> columns;  // columns of the current prefix
  std::vector<std::uint64_t> best_columns;
  std::vector<Vertex> best_at;
  VertexSet placed;

  std::uint64_t column(Vertex v, int j) const {
    std::uint64_t c = 0;
    for (int i = 0; i < j; ++i)
      if (g.adjacent(at[i], v)) c |= std::uint64_t{1} << (j - 1 - i);
    return c;
  }

  // -1 / 0 / +1 comparing (columns[0..j-1], last) with best_columns[0..j].
  int compare_with_best(int j, std::uint64_t last) const {
    for (int i = 0; i < j; ++i)
      if (columns[i] != best_columns[i]) return columns[i] < best_columns[i] ? -1 : 1;
    if (last != best_columns[j]) return last < best_columns[j] ? -1 : 1;
    return 0;
  }

  void run(int j) {
    if (j == n) {
      if (best_at.empty() || columns < best_columns) {
        best_columns = columns;
        best_at = at;
      }
      return;
    }
    std::uint64_t lowest = ~std::uint64_t{0};
    std::vector<Vertex> cand;
    for (Vertex v = 0; v < n; ++v) {
      if (placed.contains(v)) continue;
      const auto c = column(v, j);
      if (c < lowest) {
        lowest = c;
        cand.clear();
      }
      if (c == lowest) cand.push_back(v);
    }
    std::vector<Vertex> tried;
    for (Vertex v : cand) {
      // best may improve inside an earlier sibling, so re-check per branch.
      if (!best_at.empty() && compare_with_best(j, lowest) > 0) return;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return twins(g, v, w); })) continue;
      tried.push_back(v);
      at[j] = v;
      columns[j] = lowest;
      placed.insert(v);
      run(j + 1);
      placed.erase(v);
    }
  }
};

}  // namespace

std::string brute_canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 64) throw std::invalid_argument("brute_canonical_form supports order <= 64");
  if (n == 0) return encode_graph6(g);
  BruteSearch s{g, n, std::vector<Vertex>(n), std::vector<std::uint64_t>(n, 0), {}, {}, VertexSet(n)};
  s.run(0);
  std::vector<Vertex> perm(n);
  for (int pos = 0; pos < n; ++pos) perm[s.best_at[pos]] = pos;
  return encode_graph6(g.relabeled(perm));
}

}  // namespace spexlab
