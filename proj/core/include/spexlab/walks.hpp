#ifndef SPEXLAB_WALKS_HPP
#define SPEXLAB_WALKS_HPP

#include <gmpxx.h>

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// table[l][u] = w^l(u), the number of walks of length l starting at u,
/// for l = 0..L (row 0 is all ones).
std::vector<std::vector<mpz_class>> vertex_walks(const Graph& g, int L);

/// W^1..W^L. counts[l-1] = W^l.
struct WalkProfile {
  std::vector<mpz_class> counts;

  int length() const { return static_cast<int>(counts.size()); }
  const mpz_class& level(int l) const { return counts.at(l - 1); }
};

/// Exact profile; each level is also recomputed through the split
/// identity W^l = sum_u w^i(u) w^(l-i)(u), i = floor(l/2), and a mismatch
/// throws std::logic_error.
WalkProfile walk_profile(const Graph& g, int L);

enum class Relation { succ, equiv, prec };
std::string to_string(Relation r);  // "SUCC", "EQUIV", "PREC"

struct OrderResult {
  Relation relation = Relation::equiv;
  std::optional<int> witness_level;  // first level where the counts differ
};

/// Lexicographic comparison over the shorter of the two profiles.
OrderResult compare_profiles(const WalkProfile& a, const WalkProfile& b);

/// 2 * max(order(g1), order(g2)), floored at 1.
int default_horizon(const Graph& g1, const Graph& g2);

OrderResult walk_compare(const Graph& g1, const Graph& g2, std::optional<int> L = std::nullopt);

struct ExInfinityResult {
  std::vector<std::size_t> survivors;  // indices into the family, ascending
  int horizon = 0;
  int stabilization_level = 0;  // last level that removed a member; 0 if none
  std::vector<std::size_t> remaining_after_level;  // survivor count after each level
};

/// Keeps the maximizers of W^1, then of W^2 among those, and so on through
/// the horizon (default 2 * max order over the family).
ExInfinityResult ex_infinity(std::span<const Graph> family, std::optional<int> L = std::nullopt);

class WalkFormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// W^1..W^6 of a graph of order n whose vertices all have degree delta
/// except one vertex u of degree delta-1, from the structure of u's
/// component Q (order q, diameter 2 from u, N_i at distance i from u).
/// Throws WalkFormError for inconsistent parameters: delta < 2, q outside
/// [delta+2, 2*delta-1] or even, n < q, or e12 below |N2|(delta+1-|N2|).
std::array<mpz_class, 6> closed_form_profile(long delta, long n, long q, long e12, long sum_d2sq, long sum_d1sq);

/// Parameters of closed_form_profile read off an actual graph.
struct DeficientStructure {
  int delta = 0;
  int n = 0;
  int q = 0;
  long e12 = 0;
  long sum_d2sq = 0;  // sum over N1 of d2(v)^2
  long sum_d1sq = 0;  // sum over N2 of d1(v)^2
  Vertex deficient = 0;
  std::vector<Vertex> n1;
  std::vector<Vertex> n2;
};

/// Throws WalkFormError if g is not nearly regular or u's component has
/// vertices at distance 3 or more from u.
DeficientStructure extract_deficient_structure(const Graph& g);

}  // namespace spexlab

#endif  // SPEXLAB_WALKS_HPP
