#ifndef SPEXLAB_VERIFY_HPP
#define SPEXLAB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"
#include "spexlab/report.hpp"
#include "spexlab/subgraph.hpp"

namespace spexlab {

struct VerifyOptions {
  double tol = 1e-10;
  SearchBudget budget{};
  std::uint64_t seed = 0;
  std::optional<int> max_walk;  // overrides the walk-comparison horizon
};

/// Stable claim identifiers accepted by the CLI `verify` subcommand.
const std::vector<std::string>& claim_ids();

/// lemma-3.2: every connected graph of order <= order_cap whose vertices
/// have degree delta, except at most one of degree delta-1, has a path on
/// 2*delta+1 vertices once its order reaches 2*delta+1.
VerificationReport verify_bounded_order(int delta, int order_cap, const VerifyOptions& opts = {});

/// lemma-3.3: EX^inf(GFAM(delta, n)) equals V(delta+1, n) as sets of
/// canonical forms. Throws FamilyError when n < 3*delta+4.
VerificationReport verify_walk_lemma(int delta, int n, const VerifyOptions& opts = {});

/// lemma-3.3-formulas: W^1..W^6 of every member of GFAM(delta, n) equal
/// the closed forms evaluated on the member's extracted structure.
VerificationReport verify_walk_formulas(int delta, int n, const VerifyOptions& opts = {});

/// theorem-3.1: S a clique on base_order - t_size vertices, T an
/// independent set of t_size vertices joined to all of S, H1 and H2
/// (padded with isolated vertices to t_size) embedded in T. Checks that
/// the radius comparison follows the walk order, and sweeps base_order
/// down to t_size+1 to record where the implication starts to hold.
VerificationReport verify_one_set(int base_order, int t_size, const Graph& h1, const Graph& h2,
                                  const VerifyOptions& opts = {});

/// theorem-1.4: all candidates over s in {-1, 0, 1} and every family
/// member; checks wheel-freeness, that the residue-predicted candidates
/// attain the maximum radius, and that they tie pairwise.
VerificationReport verify_spex_structure(int n, int k, const VerifyOptions& opts = {});

/// claim-1-thm-1.4: claim1_comparison for every n = 2 (mod 4) in
/// [n_min, n_max] with n >= 4k.
VerificationReport verify_claim1(int k, int n_min, int n_max, const VerifyOptions& opts = {});

/// equitable-partition: each V-embedded candidate's radius matches its
/// six-class quotient within `agreement`, and all such candidates tie.
VerificationReport verify_equitable_consistency(int k, int n, double agreement = 1e-8,
                                                const VerifyOptions& opts = {});

/// lemma-2.1: lambda1(H1 v H2) <= lambda1([[d, n2], [n1, d']]) + slack on
/// seeded random pairs.
VerificationReport verify_join_bound(int pairs, int max_order, double slack = 1e-9, const VerifyOptions& opts = {});

/// fact-1: the default candidate at (k, n) beats
/// (k-1 + sqrt((k-1)^2 + n^2 - 1))/2 + 1/(2n).
VerificationReport verify_fact1(int k, int n, const VerifyOptions& opts = {});

/// odd-wheel-detector: contains_odd_wheel against brute_contains_odd_wheel
/// on every graph up to exhaustive_order and on seeded random graphs.
VerificationReport verify_detector(int k, int exhaustive_order, int samples, int sample_max_order,
                                   const VerifyOptions& opts = {});

/// truncation-stability: walk_compare at horizons 2n and 2n+20 agree on
/// every pair from each GFAM(3, m) for m in family_orders and on seeded
/// random pairs (same order and size) of order <= max_order.
VerificationReport verify_truncation_stability(const std::vector<int>& family_orders, int pairs, int max_order,
                                               const VerifyOptions& opts = {});

/// brute-spex: maximizers of lambda1 over all W_{2k+1}-free graphs on
/// n <= 8 vertices. A finite-n oracle, not a theorem check.
VerificationReport brute_spex(int n, int k, const VerifyOptions& opts = {});

/// Exhaustive reference: some (2k+1)-subset has a hub adjacent to the
/// other 2k vertices, which carry a Hamiltonian cycle.
bool brute_contains_odd_wheel(const Graph& g, int k);

}  // namespace spexlab

#endif  // SPEXLAB_VERIFY_HPP
