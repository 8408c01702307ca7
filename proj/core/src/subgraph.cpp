#include "spexlab/subgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace spexlab {

std::string to_string(Decision d) {
  switch (d) {
    case Decision::yes:
      return "yes";
    case Decision::no:
      return "no";
    case Decision::budget_exhausted:
      return "budget";
  }
  return "?";
}

namespace {

struct BudgetExhausted {};

class Counter {
 public:
  explicit Counter(SearchBudget b) : limit_(b.max_expansions) {}
  void tick() {
    if (++used_ > limit_) throw BudgetExhausted{};
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Twin classes inside `allowed`: vertices with equal open neighbourhoods,
// or failing that equal closed neighbourhoods, within the allowed set.
std::vector<int> twin_classes(const Graph& g, const VertexSet& allowed) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  std::map<std::vector<std::uint64_t>, std::vector<Vertex>> open, closed;
  allowed.for_each([&](Vertex v) {
    VertexSet row = g.neighbors(v) & allowed;
    open[row.words()].push_back(v);
    row.insert(v);
    closed[row.words()].push_back(v);
  });
  int next = 0;
  for (const auto& [key, members] : open) {
    if (members.size() < 2) continue;
    for (Vertex v : members) cls[v] = next;
    ++next;
  }
  for (const auto& [key, members] : closed) {
    if (members.size() < 2) continue;
    for (Vertex v : members)
      if (cls[v] < 0) cls[v] = next;
    ++next;
  }
  allowed.for_each([&](Vertex v) {
    if (cls[v] < 0) cls[v] = next++;
  });
  return cls;
}

// Removes vertices with fewer than two allowed neighbours until stable.
void two_core(const Graph& g, VertexSet& allowed) {
  bool changed = true;
  while (changed) {
    changed = false;
    allowed.for_each([&](Vertex v) {
      if (g.neighbors(v).intersection_count(allowed) < 2) {
        allowed.erase(v);
        changed = true;
      }
    });
  }
}

int reachable_count(const Graph& g, const VertexSet& allowed, Vertex s) {
  VertexSet seen(g.order());
  seen.insert(s);
  std::vector<Vertex> stack{s};
  int count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    (g.neighbors(u) & allowed).for_each([&](Vertex w) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
        ++count;
      }
    });
  }
  return count;
}

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int length, Counter& counter)
      : g_(g), length_(length), counter_(counter), visited_(g.order()), allowed_(g.order()) {}

  bool run() {
    const int n = g_.order();
    for (Vertex s = 0; s + length_ <= n; ++s) {
      allowed_ = VertexSet(n);
      for (Vertex v = s; v < n; ++v) allowed_.insert(v);
      two_core(g_, allowed_);
      if (!allowed_.contains(s)) continue;
      if (reachable_count(g_, allowed_, s) < length_) continue;
      cls_ = twin_classes(g_, allowed_);
      start_ = s;
      visited_ = VertexSet(n);
      visited_.insert(s);
      if (extend(s, 1)) return true;
    }
    return false;
  }

 private:
  bool extend(Vertex v, int depth) {
    counter_.tick();
    if (depth == length_) return g_.adjacent(v, start_);
    VertexSet next = g_.neighbors(v) & allowed_;
    next.subtract(visited_);
    if (depth == length_ - 1) next &= g_.neighbors(start_);
    std::vector<int> tried;
    bool found = false;
    next.for_each([&](Vertex w) {
      if (found) return;
      if (std::find(tried.begin(), tried.end(), cls_[w]) != tried.end()) return;
      tried.push_back(cls_[w]);
      visited_.insert(w);
      found = extend(w, depth + 1);
      visited_.erase(w);
    });
    return found;
  }

  const Graph& g_;
  int length_;
  Counter& counter_;
  VertexSet visited_;
  VertexSet allowed_;
  std::vector<int> cls_;
  Vertex start_ = 0;
};

Decision cycle_decision(const Graph& g, int length, Counter& counter) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (g.order() < length) return Decision::no;
  try {
    return CycleSearch(g, length, counter).run() ? Decision::yes : Decision::no;
  } catch (const BudgetExhausted&) {
    return Decision::budget_exhausted;
  }
}

class PathSearch {
 public:
  PathSearch(const Graph& g, Counter& counter) : g_(g), counter_(counter), visited_(g.order()) {}

  // Longest path in g (assumed connected), stopping once `cap` is reached.
  int run(int cap) {
    const VertexSet all = VertexSet::full(g_.order());
    cls_ = twin_classes(g_, all);
    cap_ = cap;
    best_ = 1;
    std::vector<int> tried;
    for (Vertex s = 0; s < g_.order() && best_ < cap_; ++s) {
      if (std::find(tried.begin(), tried.end(), cls_[s]) != tried.end()) continue;
      tried.push_back(cls_[s]);
      visited_.insert(s);
      extend(s, 1);
      visited_.erase(s);
    }
    return best_;
  }

 private:
  void extend(Vertex v, int depth) {
    counter_.tick();
    best_ = std::max(best_, depth);
    if (best_ >= cap_) return;
    VertexSet next = g_.neighbors(v);
    next.subtract(visited_);
    std::vector<int> tried;
    next.for_each([&](Vertex w) {
      if (best_ >= cap_) return;
      if (std::find(tried.begin(), tried.end(), cls_[w]) != tried.end()) return;
      tried.push_back(cls_[w]);
      visited_.insert(w);
      extend(w, depth + 1);
      visited_.erase(w);
    });
  }

  const Graph& g_;
  Counter& counter_;
  VertexSet visited_;
  std::vector<int> cls_;
  int cap_ = 0;
  int best_ = 0;
};

}  // namespace

Decision contains_cycle_of_length(const Graph& g, int length, SearchBudget budget) {
  Counter counter(budget);
  return cycle_decision(g, length, counter);
}

Decision contains_odd_wheel(const Graph& g, int k, SearchBudget budget) {
  if (k < 2) throw std::invalid_argument("odd wheel parameter k must be at least 2");
  std::vector<Vertex> hubs(g.order());
  std::iota(hubs.begin(), hubs.end(), 0);
  std::stable_sort(hubs.begin(), hubs.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  Counter counter(budget);
  bool cut_off = false;
  for (Vertex hub : hubs) {
    if (g.degree(hub) < 2 * k) break;
    const auto nbrs = g.neighbors(hub).to_vector();
    const Graph local = g.induced(nbrs);
    switch (cycle_decision(local, 2 * k, counter)) {
      case Decision::yes:
        return Decision::yes;
      case Decision::budget_exhausted:
        // The shared counter is spent, so later hubs cannot be decided either.
        cut_off = true;
        break;
      case Decision::no:
        break;
    }
    if (cut_off) break;
  }
  return cut_off ? Decision::budget_exhausted : Decision::no;
}

LongestPath longest_path_order(const Graph& g, SearchBudget budget) {
  LongestPath result;
  if (g.order() == 0) return result;
  auto parts = components(g);
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Component& a, const Component& b) { return a.graph.order() > b.graph.order(); });
  Counter counter(budget);
  for (const auto& part : parts) {
    if (part.graph.order() <= result.order) break;
    try {
      PathSearch search(part.graph, counter);
      result.order = std::max(result.order, search.run(part.graph.order()));
    } catch (const BudgetExhausted&) {
      result.complete = false;
      break;
    }
  }
  return result;
}

bool is_star_free(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("star parameter k must be at least 1");
  return g.max_degree() <= k - 1;
}

}  // namespace spexlab
