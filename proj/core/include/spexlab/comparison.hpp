#ifndef SPEXLAB_COMPARISON_HPP
#define SPEXLAB_COMPARISON_HPP

#include "spexlab/constructors.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

/// Six classes of a V-embedded candidate with |L| = left_size:
/// {K1 vertex}, its L-neighbours (the complement of M_{k-2}), the K2 at
/// distance two, the rest of L, the R edge {|L|, |L|+1}, the rest of R.
/// Located from the graph, since family members are canonically relabeled.
Partition six_part_partition(const Graph& candidate, int left_size);

/// L, the R edge, the rest of R.
Partition three_part_partition(const Graph& candidate, int left_size);

/// The 6x6 matrix as printed for the V-embedded candidate. Its
/// (M, M) entry reads k-3, where the graph gives k-4.
Matrix<mpq_class> printed_b1(int k, int n);

/// V-embedded (|L| = n/2) and U-embedded (|L| = n/2 + 1) candidates for
/// even k and n = 2 (mod 4). Both use the first family member.
Graph v_embedded_candidate(int k, int n);
Graph u_embedded_candidate(int k, int n);

struct Claim1Result {
  int k = 0;
  int n = 0;
  QuotientSystem q1;  // from the V-embedded candidate
  QuotientSystem q2;  // from the U-embedded candidate
  Polynomial f1;
  Polynomial f2;
  RootBracket root1;
  RootBracket root2;
  double radius1 = 0.0;
  double radius2 = 0.0;
  int sign_at_root = 0;  // sign of f1 at the largest root of f2
  RootBracket sign_bracket;
  // Same test on the printed matrix.
  Matrix<mpq_class> printed;
  double printed_radius1 = 0.0;
  int printed_sign_at_root = 0;
  bool printed_matches_derived = false;
};

/// Builds both candidates, derives their quotient matrices, isolates both
/// Perron roots to `width`, and evaluates the sign of f1 at lambda1(B2)
/// exactly. Requires even k >= 4, n = 2 (mod 4), n >= 4k.
Claim1Result claim1_comparison(int k, int n, const mpq_class& width = mpq_class("1/1000000000000"));

}  // namespace spexlab

#endif  // SPEXLAB_COMPARISON_HPP
