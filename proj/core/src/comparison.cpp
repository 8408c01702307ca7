#include "spexlab/comparison.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace spexlab {

Partition six_part_partition(const Graph& candidate, int left_size) {
  if (left_size < 1 || left_size + 2 > candidate.order()) throw GraphError("left part size out of range");
  std::vector<Vertex> left(left_size);
  for (int i = 0; i < left_size; ++i) left[i] = i;
  const Graph inner = candidate.induced(left);
  const auto deg = classify_degrees(inner);
  if (!deg.is_nearly_regular) throw GraphError("G[L] is not nearly regular");
  const Vertex u = *deg.deficient_vertex;

  std::vector<int> dist(left_size, -1);
  dist[u] = 0;
  std::vector<Vertex> queue{u};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Vertex a = queue[h];
    inner.neighbors(a).for_each([&](Vertex b) {
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    });
  }
  Partition p(6);
  for (Vertex v = 0; v < left_size; ++v) {
    if (dist[v] < 0 || dist[v] > 2)
      p[3].push_back(v);
    else
      p[dist[v]].push_back(v);
  }
  p[4] = {left_size, left_size + 1};
  for (Vertex v = left_size + 2; v < candidate.order(); ++v) p[5].push_back(v);
  return p;
}

Partition three_part_partition(const Graph& candidate, int left_size) {
  if (left_size < 1 || left_size + 2 > candidate.order()) throw GraphError("left part size out of range");
  Partition p(3);
  for (Vertex v = 0; v < left_size; ++v) p[0].push_back(v);
  p[1] = {left_size, left_size + 1};
  for (Vertex v = left_size + 2; v < candidate.order(); ++v) p[2].push_back(v);
  return p;
}

Matrix<mpq_class> printed_b1(int k, int n) {
  const mpq_class K(k), H(n / 2);
  return Matrix<mpq_class>{
      {0, K - 2, 0, 0, 2, H - 2},         {1, K - 3, 2, 0, 2, H - 2},         {0, K - 2, 1, 0, 2, H - 2},
      {0, 0, 0, K - 1, 2, H - 2},         {1, K - 2, 2, H - K - 1, 1, 0},     {1, K - 2, 2, H - K - 1, 0, 0},
  };
}

namespace {

void check_claim1_parameters(int k, int n) {
  if (k < 4 || k % 2 != 0) throw FamilyError("claim1_comparison needs even k >= 4, got " + std::to_string(k));
  if (n % 4 != 2) throw FamilyError("claim1_comparison needs n = 2 (mod 4), got " + std::to_string(n));
  if (n < 4 * k) throw FamilyError("claim1_comparison needs n >= 4k");
}

Graph candidate_from(FamilyKind kind, int k, int n, int s) {
  CandidateSpec spec;
  spec.n = n;
  spec.k = k;
  spec.s = s;
  auto member = first_family_member({kind, k, spec.left_size()});
  if (!member)
    throw FamilyError(to_string(kind) + "(" + std::to_string(k) + "," + std::to_string(spec.left_size()) +
                      ") is empty");
  spec.inner = std::move(*member);
  return spex_candidate(spec);
}

}  // namespace

Graph v_embedded_candidate(int k, int n) {
  check_claim1_parameters(k, n);
  return candidate_from(FamilyKind::V, k, n, 0);
}

Graph u_embedded_candidate(int k, int n) {
  check_claim1_parameters(k, n);
  return candidate_from(FamilyKind::U, k, n, 1);
}

Claim1Result claim1_comparison(int k, int n, const mpq_class& width) {
  check_claim1_parameters(k, n);
  Claim1Result r;
  r.k = k;
  r.n = n;
  const Graph h1 = v_embedded_candidate(k, n);
  const Graph h2 = u_embedded_candidate(k, n);
  r.q1 = quotient(h1, six_part_partition(h1, n / 2));
  r.q2 = quotient(h2, three_part_partition(h2, n / 2 + 1));
  r.f1 = char_poly(r.q1.matrix);
  r.f2 = char_poly(r.q2.matrix);
  r.root1 = *isolate_largest_root(r.f1, width);
  r.root2 = *isolate_largest_root(r.f2, width);
  r.radius1 = r.root1.midpoint();
  r.radius2 = r.root2.midpoint();
  std::tie(r.sign_at_root, r.sign_bracket) = sign_at_root(r.f1, r.f2, r.root2);

  r.printed = printed_b1(k, n);
  r.printed_matches_derived = r.printed == r.q1.matrix;
  const Polynomial printed_f = char_poly(r.printed);
  r.printed_radius1 = isolate_largest_root(printed_f, width)->midpoint();
  r.printed_sign_at_root = sign_at_root(printed_f, r.f2, r.root2).first;
  return r;
}

}  // namespace spexlab
