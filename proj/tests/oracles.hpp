#ifndef SPEXLAB_TESTS_ORACLES_HPP
#define SPEXLAB_TESTS_ORACLES_HPP

// Slow reference implementations used only by tests. None of them call the
// search, walk or eigen routines under test.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "spexlab/graph.hpp"

namespace oracle {

using spexlab::Graph;
using spexlab::Vertex;

inline std::vector<std::uint32_t> masks(const Graph& g) {
  std::vector<std::uint32_t> m(g.order(), 0);
  for (const auto& e : g.edges()) {
    m[e.u] |= 1u << e.v;
    m[e.v] |= 1u << e.u;
  }
  return m;
}

// Hamiltonian cycle on the vertex subset `sub` (bitmask) by Held-Karp DP.
inline bool hamiltonian_on(const std::vector<std::uint32_t>& adj, std::uint32_t sub) {
  std::vector<int> vs;
  for (int v = 0; v < 32; ++v)
    if (sub >> v & 1u) vs.push_back(v);
  const int n = static_cast<int>(vs.size());
  if (n < 3) return false;
  std::vector<std::vector<bool>> reach(std::size_t{1} << n, std::vector<bool>(n, false));
  reach[1][0] = true;
  for (std::uint32_t s = 1; s < (1u << n); s += 2)
    for (int last = 0; last < n; ++last) {
      if (!reach[s][last]) continue;
      for (int nxt = 1; nxt < n; ++nxt)
        if (!(s >> nxt & 1u) && (adj[vs[last]] >> vs[nxt] & 1u)) reach[s | 1u << nxt][nxt] = true;
    }
  const std::uint32_t all = (1u << n) - 1;
  for (int last = 1; last < n; ++last)
    if (reach[all][last] && (adj[vs[last]] >> vs[0] & 1u)) return true;
  return false;
}

// Hub plus 2k of its neighbours spanning a Hamiltonian cycle.
inline bool has_odd_wheel(const Graph& g, int k) {
  const auto adj = masks(g);
  const int n = g.order();
  for (int hub = 0; hub < n; ++hub) {
    const std::uint32_t nb = adj[hub];
    if (std::popcount(nb) < 2 * k) continue;
    for (std::uint32_t sub = nb;; sub = (sub - 1) & nb) {
      if (std::popcount(sub) == 2 * k && hamiltonian_on(adj, sub)) return true;
      if (sub == 0) break;
    }
  }
  return false;
}

// Longest simple path, DP over (subset, endpoint).
inline int longest_path(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const auto adj = masks(g);
  std::vector<std::vector<bool>> reach(std::size_t{1} << n, std::vector<bool>(n, false));
  int best = 1;
  for (int v = 0; v < n; ++v) reach[1u << v][v] = true;
  for (std::uint32_t s = 1; s < (1u << n); ++s)
    for (int last = 0; last < n; ++last) {
      if (!reach[s][last]) continue;
      best = std::max(best, std::popcount(s));
      for (int nxt = 0; nxt < n; ++nxt)
        if (!(s >> nxt & 1u) && (adj[last] >> nxt & 1u)) reach[s | 1u << nxt][nxt] = true;
    }
  return best;
}

// W^1..W^L as 1^T A^l 1 from explicit matrix powers.
inline std::vector<mpz_class> walk_totals(const Graph& g, int L) {
  const int n = g.order();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0)), p = a;
  for (int i = 0; i < n; ++i) p[i][i] = 1;
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  std::vector<mpz_class> out;
  for (int l = 1; l <= L; ++l) {
    std::vector<std::vector<mpz_class>> q(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t)
        if (p[i][t] != 0)
          for (int j = 0; j < n; ++j) q[i][j] += p[i][t] * a[t][j];
    p = std::move(q);
    mpz_class total = 0;
    for (const auto& row : p)
      for (const auto& x : row) total += x;
    out.push_back(total);
  }
  return out;
}

// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
inline double symmetric_max_eigenvalue(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 0.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  double best = a[0][0];
  for (int i = 1; i < n; ++i) best = std::max(best, a[i][i]);
  return best;
}

inline double graph_radius(const Graph& g) {
  std::vector<std::vector<double>> a(g.order(), std::vector<double>(g.order(), 0.0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1.0;
  return symmetric_max_eigenvalue(std::move(a));
}

}  // namespace oracle

#endif  // SPEXLAB_TESTS_ORACLES_HPP
