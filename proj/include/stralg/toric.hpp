#pragma once

#include <string>
#include <vector>

#include "stralg/weights.hpp"

// The exponent monoid of a matching ring: monomials A_1^{u_1}..A_n^{u_n}
// B_1^{v_1}..B_n^{v_n} whose exponents satisfy the control equations of the
// matching.  Hilbert basis via Contejean-Devie completion, minimal binomial
// relations via fiber-graph connectivity degree by degree.

namespace stralg {

using ExponentVec = std::vector<int>;  // size 2n: u_1..u_n, v_1..v_n

struct ControlSystem {
  int n = 1;
  // Coefficient rows over (u, v), each with two +1 and two -1 entries,
  // normalized so the first nonzero coefficient is positive; deduplicated,
  // sorted.
  std::vector<std::vector<int>> equations;

  bool satisfied(const ExponentVec& x) const;
};

std::string monomial_string(const ExponentVec& e, int n);

struct Relation {
  std::vector<int> lhs;  // generator indices, sorted, with multiplicity
  std::vector<int> rhs;
  ExponentVec degree;    // common exponent sum of both sides
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

struct RelationSearch {
  std::vector<Relation> relations;
  bool stabilized = false;    // two consecutive size levels added nothing
  bool cap_exceeded = false;  // some fiber hit the size cap; result partial
  int degree_bound = 0;
};

enum class RingKind { polynomial, hypersurface, complete_intersection, not_complete_intersection };
const char* ring_kind_name(RingKind k);

struct ToricPresentation {
  int n = 1;
  std::vector<ExponentVec> generators;  // Hilbert basis, lexicographic
  RelationSearch relations;
  int lattice_rank = 0;
  int krull_dim = 0;
  int codim = 0;
};

struct RingClassification {
  RingKind kind = RingKind::polynomial;
  int codim = 0;
  int relation_count = 0;
  int generator_count = 0;
  int degree_bound_used = 0;
  bool stabilized = false;
};

struct RingAnalysis {
  Matching matching;
  ToricPresentation presentation;
  RingClassification classification;
};

ControlSystem control_equations(const Matching& t);

std::vector<ExponentVec> hilbert_basis(const ControlSystem& cs);

RelationSearch minimal_relations(const std::vector<ExponentVec>& generators, int degree_bound,
                                 size_t fiber_cap = 200000);

int integer_rank(const std::vector<ExponentVec>& rows);

RingAnalysis analyze_ring(const Matching& t, int degree_bound = 4);
RingClassification classify_ring(const Matching& t, int degree_bound = 4);

struct MatchingReduction {
  Matching reduced;
  int stripped_pairs = 0;
};
MatchingReduction reduce_matching(const Matching& t);

struct MatchingFlags {
  bool even = false;
  bool unmixed = false;
  bool irreducible = false;
  bool mirror_reduced = false;  // keep one matching per i -> n-i mirror class
};
// All fixed-point-free symmetric involutions on Z(n-1) with the requested
// properties, canonical order.
std::vector<Matching> enumerate_matchings(int n, const MatchingFlags& flags = {});

// Brute force over all monomials of total degree <= max_degree: membership in
// the monoid iff every torus weight vanishes.
bool invariance_oracle(const Matching& t, int max_degree);

struct ConjectureFinding {
  int n = 0;
  Matching matching;
  std::vector<ExponentVec> generator_violations;  // entries > 1 in a generator
  std::vector<ExponentVec> relation_violations;   // entries > 2 in a relation degree
};

struct ConjectureScan {
  int n_max = 0;
  int degree_bound = 0;
  int matchings_scanned = 0;
  std::vector<ConjectureFinding> findings;  // only matchings with violations
};

ConjectureScan conjecture_scan(int n_max, int degree_bound);

}  // namespace stralg
