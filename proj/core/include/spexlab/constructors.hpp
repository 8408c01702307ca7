#ifndef SPEXLAB_CONSTRUCTORS_HPP
#define SPEXLAB_CONSTRUCTORS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Primitive { complete, cycle, matching, empty };

/// K_m, C_m (m >= 3), M_m (m even) or the edgeless graph on m vertices.
Graph primitive(Primitive kind, int m);

Graph complete_graph(int m);
Graph cycle_graph(int m);
Graph perfect_matching(int m);
Graph empty_graph(int m);
Graph path_graph(int m);
Graph complete_bipartite(int a, int b);

/// W_{2k+1}: a hub joined to C_{2k}. The hub is vertex 0.
Graph odd_wheel(int k);

/// K1 v complement(M_{k-2}) v K2 for even k >= 4, order k+1. Vertex 0 is
/// the K1 vertex (degree k-2), vertices 1..k-2 the matching complement
/// (partners 2i-1, 2i), vertices k-1, k the K2.
Graph core_component(int k);

enum class FamilyKind { U, V, GFAM };

struct FamilySpec {
  FamilyKind kind = FamilyKind::U;
  int degree_param = 0;  // k for U and V, Delta for GFAM
  int order = 0;
};

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& s);

/// Throws FamilyError when the parameters violate the family's definition
/// (U: k >= 3; V: k even >= 4, order odd >= k+1; GFAM: Delta odd >= 3,
/// order odd >= 3*Delta+4).
void validate(const FamilySpec& spec);

/// All members up to isomorphism.
///  U(k, n):    (k-1)-regular or nearly (k-1)-regular, components <= 2k-2.
///  V(k, n):    core_component(k) plus (k-1)-regular components <= 2k-2.
///  GFAM(D, n): one vertex of degree D-1, all others D, components <= 2D.
/// Members are disjoint unions of canonical components, the deficient
/// component first, ordered by their component canonical forms. An
/// infeasible but valid spec yields an empty list.
std::vector<Graph> enumerate_family(const FamilySpec& spec);

/// The first member enumerate_family would return, without building the
/// rest. Suitable for large orders.
std::optional<Graph> first_family_member(const FamilySpec& spec);

struct CandidateSpec {
  int n = 0;
  int k = 0;
  int s = 0;           // |L| = floor(n/2) + s
  Graph inner;         // embedded in L; order must equal |L|
  bool r_edge = true;  // one edge between the first two vertices of R
  bool r_matching = false;  // maximum matching in R instead (k = 2 form)

  int left_size() const { return n / 2 + s; }
  int right_size() const { return n - left_size(); }
};

/// K_{|L|,|R|} with inner's edges inside L = {0..|L|-1} and one edge (or a
/// maximum matching) inside R = {|L|..n-1}.
Graph spex_candidate(const CandidateSpec& spec);

/// |L| prescribed for the extremal graphs: k = 2 gives n/2+1 when
/// n = 2 (mod 4) and ceil(n/2) otherwise; odd k gives ceil(n/2); even k
/// gives n/2, floor(n/2), n/2 (the V-family choice), ceil(n/2) for
/// n = 0, 1, 2, 3 (mod 4).
int default_left_size(int n, int k);

/// Candidate built from the residue rule and the first family member:
/// matchings for k = 2, V(k, n/2) for even k with n = 2 (mod 4), and
/// U(k, |L|) otherwise.
CandidateSpec default_candidate_spec(int n, int k);

}  // namespace spexlab

#endif  // SPEXLAB_CONSTRUCTORS_HPP
