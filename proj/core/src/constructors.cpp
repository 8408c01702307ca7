#include "spexlab/constructors.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "spexlab/enumerate.hpp"

namespace spexlab {

Graph complete_graph(int m) {
  GraphBuilder b(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle_graph(int m) {
  if (m < 3) throw FamilyError("cycle requires at least 3 vertices");
  GraphBuilder b(m);
  for (int u = 0; u < m; ++u) b.add_edge(u, (u + 1) % m);
  return std::move(b).build();
}

Graph perfect_matching(int m) {
  if (m < 0 || m % 2 != 0) throw FamilyError("perfect matching requires an even order, got " + std::to_string(m));
  GraphBuilder b(m);
  for (int u = 0; u < m; u += 2) b.add_edge(u, u + 1);
  return std::move(b).build();
}

Graph empty_graph(int m) {
  if (m < 0) throw FamilyError("negative order");
  return Graph(m);
}

Graph path_graph(int m) {
  if (m < 1) throw FamilyError("path requires at least 1 vertex");
  GraphBuilder b(m);
  for (int u = 0; u + 1 < m; ++u) b.add_edge(u, u + 1);
  return std::move(b).build();
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw FamilyError("negative part size");
  GraphBuilder gb(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) gb.add_edge(u, v);
  return std::move(gb).build();
}

Graph primitive(Primitive kind, int m) {
  switch (kind) {
    case Primitive::complete:
      if (m < 0) throw FamilyError("negative order");
      return complete_graph(m);
    case Primitive::cycle:
      return cycle_graph(m);
    case Primitive::matching:
      return perfect_matching(m);
    case Primitive::empty:
      return empty_graph(m);
  }
  throw FamilyError("unknown primitive");
}

Graph odd_wheel(int k) {
  if (k < 2) throw FamilyError("odd wheel requires k >= 2");
  return join({complete_graph(1), cycle_graph(2 * k)});
}

Graph core_component(int k) {
  if (k < 4 || k % 2 != 0) throw FamilyError("core component requires even k >= 4, got " + std::to_string(k));
  return join({complete_graph(1), complement(perfect_matching(k - 2)), complete_graph(2)});
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::U:
      return "U";
    case FamilyKind::V:
      return "V";
    case FamilyKind::GFAM:
      return "GFAM";
  }
  return "?";
}

FamilyKind family_kind_from_string(const std::string& s) {
  if (s == "U" || s == "u") return FamilyKind::U;
  if (s == "V" || s == "v") return FamilyKind::V;
  if (s == "GFAM" || s == "G" || s == "gfam" || s == "g") return FamilyKind::GFAM;
  throw FamilyError("unknown family kind '" + s + "'");
}

void validate(const FamilySpec& spec) {
  const int d = spec.degree_param;
  const int n = spec.order;
  switch (spec.kind) {
    case FamilyKind::U:
      if (d < 3) throw FamilyError("U family requires k >= 3");
      if (n < 1) throw FamilyError("U family requires a positive order");
      return;
    case FamilyKind::V:
      if (d < 4 || d % 2 != 0) throw FamilyError("V family requires even k >= 4");
      if (n % 2 == 0 || n < d + 1) throw FamilyError("V family requires odd order >= k+1");
      return;
    case FamilyKind::GFAM:
      if (d < 3 || d % 2 == 0) throw FamilyError("GFAM family requires odd Delta >= 3");
      if (n % 2 == 0 || n < 3 * d + 4) throw FamilyError("GFAM family requires odd order >= 3*Delta+4");
      return;
  }
}

namespace {

// Multisets of regular components summing to a target order, enumerated as
// index sequences that never decrease.
class Assembler {
 public:
  Assembler(int degree, int max_order) {
    for (int o = degree + 1; o <= max_order; ++o)
      for (const auto& g : connected_regular_graphs(degree, o)) pool_.push_back(&g);
  }

  // Calls emit(parts) for each multiset; emit returns false to stop.
  // Returns false if stopped early.
  bool walk(int target, const std::function<bool(const std::vector<const Graph*>&)>& emit) {
    std::vector<const Graph*> picked;
    return step(0, target, picked, emit);
  }

 private:
  bool representable(std::size_t from, int rem) {
    if (rem == 0) return true;
    if (from >= pool_.size()) return false;
    const int lo = pool_[from]->order();
    auto& table = memo_[lo];
    if (table.empty()) {
      std::vector<int> orders;
      for (const auto* g : pool_)
        if (g->order() >= lo) orders.push_back(g->order());
      std::sort(orders.begin(), orders.end());
      orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
      table.assign(1, 1);
      table_orders_[lo] = std::move(orders);
    }
    const auto& orders = table_orders_[lo];
    while (static_cast<int>(table.size()) <= rem) {
      const int r = static_cast<int>(table.size());
      char ok = 0;
      for (int o : orders)
        if (o <= r && table[r - o]) ok = 1;
      table.push_back(ok);
    }
    return table[rem];
  }

  bool step(std::size_t from, int rem, std::vector<const Graph*>& picked,
            const std::function<bool(const std::vector<const Graph*>&)>& emit) {
    if (rem == 0) return emit(picked);
    for (std::size_t i = from; i < pool_.size(); ++i) {
      const int o = pool_[i]->order();
      if (o > rem) break;
      if (!representable(i, rem - o)) continue;
      picked.push_back(pool_[i]);
      const bool go_on = step(i, rem - o, picked, emit);
      picked.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  std::vector<const Graph*> pool_;
  std::map<int, std::vector<char>> memo_;
  std::map<int, std::vector<int>> table_orders_;
};

// Shared driver: emit(member) returns false to stop.
void for_each_member(const FamilySpec& spec, const std::function<bool(Graph)>& emit) {
  validate(spec);
  const int n = spec.order;
  const int d = spec.kind == FamilyKind::GFAM ? spec.degree_param : spec.degree_param - 1;
  const int max_order = 2 * d;  // 2k-2 for U and V, 2*Delta for GFAM

  std::vector<Graph> deficient;
  bool regular_only = false;
  if (spec.kind == FamilyKind::V) {
    deficient.push_back(core_component(spec.degree_param));
  } else if ((static_cast<long>(d) * n) % 2 == 0) {
    regular_only = true;
  } else {
    for (int o = d + 2; o <= std::min(max_order, n); ++o)
      for (const auto& g : connected_near_regular_graphs(d, o)) deficient.push_back(g);
  }

  Assembler regular(d, max_order);
  auto assemble = [&](const Graph* head, int rem) {
    return regular.walk(rem, [&](const std::vector<const Graph*>& parts) {
      std::vector<Graph> all;
      all.reserve(parts.size() + 1);
      if (head) all.push_back(*head);
      for (const auto* p : parts) all.push_back(*p);
      return emit(disjoint_union(all));
    });
  };
  if (regular_only) {
    assemble(nullptr, n);
    return;
  }
  for (const auto& head : deficient) {
    if (head.order() > n) continue;
    if (!assemble(&head, n - head.order())) return;
  }
}

}  // namespace

std::vector<Graph> enumerate_family(const FamilySpec& spec) {
  std::vector<Graph> out;
  for_each_member(spec, [&](Graph g) {
    out.push_back(std::move(g));
    return true;
  });
  return out;
}

std::optional<Graph> first_family_member(const FamilySpec& spec) {
  std::optional<Graph> out;
  for_each_member(spec, [&](Graph g) {
    out = std::move(g);
    return false;
  });
  return out;
}

Graph spex_candidate(const CandidateSpec& spec) {
  const int nl = spec.left_size();
  const int nr = spec.right_size();
  if (nl <= 0 || nr <= 0) throw FamilyError("candidate parts must both be non-empty");
  if (spec.inner.order() != nl)
    throw FamilyError("inner graph has order " + std::to_string(spec.inner.order()) + " but |L| = " +
                      std::to_string(nl));
  if (spec.r_edge && spec.r_matching) throw FamilyError("choose either one R edge or an R matching");
  if (spec.r_edge && nr < 2) throw FamilyError("R needs two vertices for its edge");
  GraphBuilder b(spec.n);
  for (const auto& e : spec.inner.edges()) b.add_edge(e.u, e.v);
  for (int u = 0; u < nl; ++u)
    for (int v = nl; v < spec.n; ++v) b.add_edge(u, v);
  if (spec.r_edge) b.add_edge(nl, nl + 1);
  if (spec.r_matching)
    for (int v = nl; v + 1 < spec.n; v += 2) b.add_edge(v, v + 1);
  return std::move(b).build();
}

int default_left_size(int n, int k) {
  if (k == 2) return n % 4 == 2 ? n / 2 + 1 : (n + 1) / 2;
  if (k % 2 == 1) return (n + 1) / 2;
  switch (n % 4) {
    case 0:
    case 1:
    case 2:
      return n / 2;
    default:
      return (n + 1) / 2;
  }
}

CandidateSpec default_candidate_spec(int n, int k) {
  if (k < 2) throw FamilyError("k must be at least 2");
  if (n < 4) throw FamilyError("candidate order must be at least 4");
  CandidateSpec spec;
  spec.n = n;
  spec.k = k;
  const int nl = default_left_size(n, k);
  spec.s = nl - n / 2;
  if (k == 2) {
    GraphBuilder b(nl);
    for (int u = 0; u + 1 < nl; u += 2) b.add_edge(u, u + 1);
    spec.inner = std::move(b).build();
    spec.r_edge = false;
    spec.r_matching = true;
    return spec;
  }
  const bool v_family = k % 2 == 0 && n % 4 == 2;
  const FamilySpec fam{v_family ? FamilyKind::V : FamilyKind::U, k, nl};
  auto member = first_family_member(fam);
  if (!member)
    throw FamilyError("no member of " + to_string(fam.kind) + "(" + std::to_string(k) + "," + std::to_string(nl) + ")");
  spec.inner = std::move(*member);
  return spec;
}

}  // namespace spexlab
