#include "spexlab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <unordered_set>

#include "spexlab/canonical.hpp"

namespace spexlab {
namespace {

class DegreeSequenceSearch {
 public:
  explicit DegreeSequenceSearch(std::vector<int> target)
      : m_(static_cast<int>(target.size())), target_(std::move(target)), deg_(m_, 0), adj_(m_, VertexSet(m_)) {}

  std::vector<Graph> run() {
    const int total = std::accumulate(target_.begin(), target_.end(), 0);
    const bool ok = total % 2 == 0 &&
                    std::all_of(target_.begin(), target_.end(), [&](int t) { return t >= 0 && t < m_; });
    if (ok) process(0);
    return std::move(out_);
  }

 private:
  void process(Vertex v) {
    if (v == m_) {
      GraphBuilder b(m_);
      for (Vertex u = 0; u < m_; ++u)
        adj_[u].for_each([&](Vertex w) {
          if (u < w) b.add_edge(u, w);
        });
      out_.push_back(std::move(b).build());
      return;
    }
    const int need = target_[v] - deg_[v];
    std::vector<Vertex> cand;
    for (Vertex w = v + 1; w < m_; ++w)
      if (deg_[w] < target_[w]) cand.push_back(w);
    // prev[i]: index in cand of the previous untouched candidate with the
    // same target, or -1.
    std::vector<int> prev(cand.size(), -1);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (deg_[cand[i]] != 0) continue;
      for (std::size_t j = i; j-- > 0;)
        if (deg_[cand[j]] == 0 && target_[cand[j]] == target_[cand[i]]) {
          prev[i] = static_cast<int>(j);
          break;
        }
    }
    std::vector<char> chosen(cand.size(), 0);
    choose(v, cand, prev, chosen, 0, need);
  }

  void choose(Vertex v, const std::vector<Vertex>& cand, const std::vector<int>& prev, std::vector<char>& chosen,
              std::size_t i, int need) {
    if (need == 0) {
      if (feasible_after(v)) process(v + 1);
      return;
    }
    if (cand.size() - i < static_cast<std::size_t>(need)) return;
    const Vertex w = cand[i];
    if (prev[i] < 0 || chosen[prev[i]]) {
      chosen[i] = 1;
      link(v, w);
      choose(v, cand, prev, chosen, i + 1, need - 1);
      unlink(v, w);
      chosen[i] = 0;
    }
    choose(v, cand, prev, chosen, i + 1, need);
  }

  bool feasible_after(Vertex v) const {
    int sum = 0;
    for (Vertex w = v + 1; w < m_; ++w) {
      const int need = target_[w] - deg_[w];
      if (need == 0) continue;
      sum += need;
      int room = 0;
      for (Vertex u = v + 1; u < m_; ++u)
        if (u != w && deg_[u] < target_[u] && !adj_[w].contains(u)) ++room;
      if (need > room) return false;
    }
    return sum % 2 == 0;
  }

  void link(Vertex a, Vertex b) {
    adj_[a].insert(b);
    adj_[b].insert(a);
    ++deg_[a];
    ++deg_[b];
  }
  void unlink(Vertex a, Vertex b) {
    adj_[a].erase(b);
    adj_[b].erase(a);
    --deg_[a];
    --deg_[b];
  }

  int m_;
  std::vector<int> target_;
  std::vector<int> deg_;
  std::vector<VertexSet> adj_;
  std::vector<Graph> out_;
};

// Connected, pairwise non-isomorphic realizations of `target`, generated in
// the complement when that is sparser.
std::vector<Graph> connected_classes(const std::vector<int>& target) {
  const int m = static_cast<int>(target.size());
  const long total = std::accumulate(target.begin(), target.end(), 0L);
  const bool flip = 2 * total > static_cast<long>(m) * (m - 1);
  std::vector<int> seq = target;
  if (flip)
    for (auto& t : seq) t = m - 1 - t;
  std::map<std::string, Graph> classes;
  for (auto& g : DegreeSequenceSearch(seq).run()) {
    Graph h = flip ? complement(g) : std::move(g);
    if (!is_connected(h)) continue;
    auto form = canonical_form(h);
    if (!classes.contains(form)) classes.emplace(std::move(form), canonical_graph(h));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [form, g] : classes) out.push_back(std::move(g));
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::vector<Graph> degree_sequence_graphs(const std::vector<int>& target) {
  return DegreeSequenceSearch(target).run();
}

const std::vector<Graph>& connected_regular_graphs(int degree, int order) {
  static std::map<std::pair<int, int>, std::vector<Graph>> cache;
  std::lock_guard lock(cache_mutex());
  const auto key = std::make_pair(degree, order);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<Graph> result;
  if (order >= 1 && degree >= 0 && degree < order && (degree * order) % 2 == 0)
    result = connected_classes(std::vector<int>(order, degree));
  return cache.emplace(key, std::move(result)).first->second;
}

const std::vector<Graph>& connected_near_regular_graphs(int degree, int order) {
  static std::map<std::pair<int, int>, std::vector<Graph>> cache;
  std::lock_guard lock(cache_mutex());
  const auto key = std::make_pair(degree, order);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<Graph> result;
  if (order >= 2 && degree >= 1 && degree < order && (degree * order - 1) % 2 == 0) {
    std::vector<int> target(order, degree);
    target[0] = degree - 1;
    result = connected_classes(target);
  }
  return cache.emplace(key, std::move(result)).first->second;
}

const std::vector<Graph>& all_graphs(int order) {
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  std::vector<Graph> result;
  if (order == 0) {
    result.emplace_back(0);
  } else if (order > 0) {
    const auto& smaller = all_graphs(order - 1);
    std::map<std::string, Graph> classes;
    const int n = order - 1;
    for (const auto& h : smaller) {
      const auto base = h.edges();
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        GraphBuilder b(order);
        for (const auto& e : base) b.add_edge(e.u, e.v);
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) b.add_edge(i, n);
        Graph g = std::move(b).build();
        auto form = canonical_form(g);
        if (!classes.contains(form)) classes.emplace(std::move(form), canonical_graph(g));
      }
    }
    for (auto& [form, g] : classes) result.push_back(std::move(g));
  }
  std::lock_guard lock(cache_mutex());
  return cache.emplace(order, std::move(result)).first->second;
}

}  // namespace spexlab
