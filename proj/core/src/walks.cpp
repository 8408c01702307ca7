#include "spexlab/walks.hpp"

#include <algorithm>

namespace spexlab {

std::vector<std::vector<mpz_class>> vertex_walks(const Graph& g, int L) {
  if (L < 1) throw std::invalid_argument("walk length must be at least 1");
  const int n = g.order();
  const auto lists = g.adjacency_lists();
  std::vector<std::vector<mpz_class>> table(L + 1, std::vector<mpz_class>(n));
  for (auto& x : table[0]) x = 1;
  for (int l = 1; l <= L; ++l)
    for (Vertex u = 0; u < n; ++u) {
      mpz_class s = 0;
      for (Vertex w : lists[u]) s += table[l - 1][w];
      table[l][u] = std::move(s);
    }
  return table;
}

WalkProfile walk_profile(const Graph& g, int L) {
  const auto table = vertex_walks(g, L);
  WalkProfile p;
  p.counts.reserve(L);
  for (int l = 1; l <= L; ++l) {
    mpz_class direct = 0, split = 0;
    const int i = l / 2;
    for (Vertex u = 0; u < g.order(); ++u) {
      direct += table[l][u];
      split += table[i][u] * table[l - i][u];
    }
    if (direct != split) throw std::logic_error("split identity failed at level " + std::to_string(l));
    p.counts.push_back(std::move(direct));
  }
  return p;
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::succ:
      return "SUCC";
    case Relation::equiv:
      return "EQUIV";
    case Relation::prec:
      return "PREC";
  }
  return "?";
}

OrderResult compare_profiles(const WalkProfile& a, const WalkProfile& b) {
  const int L = std::min(a.length(), b.length());
  for (int l = 1; l <= L; ++l) {
    const int c = cmp(a.level(l), b.level(l));
    if (c != 0) return {c > 0 ? Relation::succ : Relation::prec, l};
  }
  return {Relation::equiv, std::nullopt};
}

int default_horizon(const Graph& g1, const Graph& g2) { return std::max(1, 2 * std::max(g1.order(), g2.order())); }

OrderResult walk_compare(const Graph& g1, const Graph& g2, std::optional<int> L) {
  const int h = L.value_or(default_horizon(g1, g2));
  return compare_profiles(walk_profile(g1, h), walk_profile(g2, h));
}

ExInfinityResult ex_infinity(std::span<const Graph> family, std::optional<int> L) {
  if (family.empty()) throw std::invalid_argument("ex_infinity needs a non-empty family");
  int max_order = 0;
  for (const auto& g : family) max_order = std::max(max_order, g.order());
  ExInfinityResult r;
  r.horizon = L.value_or(std::max(1, 2 * max_order));
  std::vector<WalkProfile> profiles;
  profiles.reserve(family.size());
  for (const auto& g : family) profiles.push_back(walk_profile(g, r.horizon));
  for (std::size_t i = 0; i < family.size(); ++i) r.survivors.push_back(i);
  for (int l = 1; l <= r.horizon; ++l) {
    mpz_class best = profiles[r.survivors.front()].level(l);
    for (auto i : r.survivors) best = std::max(best, profiles[i].level(l));
    const auto before = r.survivors.size();
    std::erase_if(r.survivors, [&](std::size_t i) { return profiles[i].level(l) != best; });
    if (r.survivors.size() != before) r.stabilization_level = l;
    r.remaining_after_level.push_back(r.survivors.size());
  }
  return r;
}

std::array<mpz_class, 6> closed_form_profile(long delta, long n, long q, long e12, long sum_d2sq, long sum_d1sq) {
  if (delta < 2) throw WalkFormError("delta must be at least 2");
  if (q % 2 == 0 || q < delta + 2 || q > 2 * delta - 1)
    throw WalkFormError("component order q = " + std::to_string(q) + " must be odd in [delta+2, 2*delta-1]");
  if (n < q) throw WalkFormError("n must be at least q");
  const long n2 = q - delta;
  const long floor_e12 = n2 * (delta + 1 - n2);
  if (e12 < floor_e12)
    throw WalkFormError("e(N1,N2) = " + std::to_string(e12) + " is below its lower bound " + std::to_string(floor_e12));
  if (e12 > (delta - 1) * n2) throw WalkFormError("e(N1,N2) exceeds |N1||N2|");
  if (sum_d2sq < 0 || sum_d1sq < 0) throw WalkFormError("negative square sums");

  const mpz_class D(delta), N(n), E(e12);
  auto pw = [](const mpz_class& b, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
  };
  const mpz_class t = pw(D, 3) - 2 * D + 1;  // delta^3 - 2 delta + 1
  std::array<mpz_class, 6> w;
  w[0] = N * D - 1;
  w[1] = (N - 1) * pw(D, 2) + pw(D - 1, 2);
  w[2] = N * pw(D, 3) - 3 * pw(D, 2) + 2 * D;
  w[3] = N * pw(D, 4) - 4 * pw(D, 3) + 3 * pw(D, 2) + D - 1;
  w[4] = (N - D) * pw(D, 5) + D * (D + 1) * pw(D - 1, 3) + (pw(D, 2) - 1) * (D - 1) * t - E;
  w[5] = (N - D) * pw(D, 6) + pw(D - 1, 2) * pw(pw(D, 2) - 1, 2) + (D - 1) * pw(t, 2) - (4 * D - 2) * E +
         mpz_class(sum_d2sq) + mpz_class(sum_d1sq);
  return w;
}

DeficientStructure extract_deficient_structure(const Graph& g) {
  const auto deg = classify_degrees(g);
  if (!deg.is_nearly_regular) throw WalkFormError("graph is not nearly regular");
  DeficientStructure s;
  s.delta = deg.max_degree;
  s.n = g.order();
  s.deficient = *deg.deficient_vertex;
  std::vector<int> dist(g.order(), -1);
  dist[s.deficient] = 0;
  std::vector<Vertex> queue{s.deficient};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Vertex a = queue[h];
    g.neighbors(a).for_each([&](Vertex b) {
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    });
  }
  s.q = static_cast<int>(queue.size());
  for (Vertex v : queue) {
    if (dist[v] == 1) s.n1.push_back(v);
    if (dist[v] == 2) s.n2.push_back(v);
    if (dist[v] > 2) throw WalkFormError("deficient component has diameter above 2 from the deficient vertex");
  }
  std::sort(s.n1.begin(), s.n1.end());
  std::sort(s.n2.begin(), s.n2.end());
  VertexSet in1(g.order()), in2(g.order());
  for (Vertex v : s.n1) in1.insert(v);
  for (Vertex v : s.n2) in2.insert(v);
  for (Vertex v : s.n1) {
    const long d2 = g.neighbors(v).intersection_count(in2);
    s.e12 += d2;
    s.sum_d2sq += d2 * d2;
  }
  for (Vertex v : s.n2) {
    const long d1 = g.neighbors(v).intersection_count(in1);
    s.sum_d1sq += d1 * d1;
  }
  return s;
}

}  // namespace spexlab
