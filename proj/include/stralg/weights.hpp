#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stralg/core.hpp"

// The doubled simple-root set of prod_i SL(beta_i) with its two involutions,
// whose orbit structure controls which weights carry semi-invariants.  Roots
// at vertex i are (eps_{i,j} - eps_{i,j+1}) for 1 <= j <= beta_i - 1, in two
// copies.  sigma reflects within a vertex and swaps the copies; theta pairs
// the bottom-block root (i, j), j > m_i, with the top-block root
// (i+1, beta_i - j) in the same copy.  The boundary roots (i, m_i) at inner
// vertices have no theta partner; they are the critical elements.

namespace stralg {

struct RootElem {
  int vertex = 0;
  int row = 0;   // 1-based, row < beta_vertex
  int copy = 0;  // 0 or 1
  friend auto operator<=>(const RootElem&, const RootElem&) = default;
};

struct RootSystem {
  Band band;
  DimVec beta;
  std::vector<RootElem> elements;  // canonical order: (vertex, row, copy)

  RootElem sigma(const RootElem& e) const;
  std::optional<RootElem> theta(const RootElem& e) const;
  bool critical(const RootElem& e) const;
  int index_of(const RootElem& e) const;
};

struct Orbits {
  std::vector<std::vector<RootElem>> orbits;  // each sorted
  std::vector<bool> critical;
  int critical_count() const;
  int noncritical_count() const;
  int orbit_of(const RootSystem& rs, const RootElem& e) const;
};

struct MatchPoint {
  int index = 0;  // 1..n-1
  bool is_y = false;
  friend auto operator<=>(const MatchPoint&, const MatchPoint&) = default;
  std::string name() const;
};

// A fixed-point-free involution on the 2(n-1) points x_1..x_{n-1}, y_1..y_{n-1}.
struct Matching {
  int n = 1;
  std::vector<MatchPoint> pairing;  // indexed by encode(); the image point

  static Matching identity(int n);
  static Matching from_pairs(int n, const std::vector<std::pair<MatchPoint, MatchPoint>>& pairs);

  int points() const { return 2 * (n - 1); }
  static int encode(int n, const MatchPoint& p);
  MatchPoint apply(const MatchPoint& p) const;
  bool is_identity() const;

  // Unordered linked index pairs {i, j} with a flag for the x-to-x type
  // (i != j for those); an x_i <-> y_j link is listed once as (min, max).
  struct Link {
    int i = 0, j = 0;
    bool same_letter = false;  // true: x_i <-> x_j and y_i <-> y_j
    friend auto operator<=>(const Link&, const Link&) = default;
  };
  std::vector<Link> links() const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

struct MatchingPredicates {
  bool symmetric = false;
  bool even = false;
  bool unmixed = false;
};

// lambda[i-1] = partition with m_i parts (zeros allowed), likewise mu.
struct WeightPair {
  std::vector<std::vector<int>> lambda;
  std::vector<std::vector<int>> mu;

  WeightPair operator+(const WeightPair& o) const;
};

struct SiRingStructure {
  int polynomial_var_count = 0;
  Matching base_matching;
};

struct MatchingReductionReport {
  std::string rule;  // "a", "b" or "c"
  bool holds = false;
  Matching before;   // matching of the given band
  Matching after;    // matching of the reduced band
  std::string detail;
};

RootSystem build_root_system(const Band& b);

// Validates exactly n-1 critical orbits with exactly two critical elements
// each (throws std::logic_error otherwise).
Orbits orbit_partition(const RootSystem& rs);

// Pairs the endpoints of each critical orbit; the result is checked to be
// symmetric, even and unmixed (throws std::logic_error with diagnostics).
Matching extract_matching(const Band& b);

MatchingPredicates matching_predicates(const Matching& t);

// Pairing of the weight with each doubled simple root.
long long f_value(const RootSystem& rs, const WeightPair& w, const RootElem& e);
bool contains_semiinvariant(const WeightPair& w, const RootSystem& rs, const Orbits& o);

// The unique weight pair whose pairing function is the characteristic
// function of the given noncritical orbit.
WeightPair characteristic_weight(const RootSystem& rs, const Orbits& o, int orbit_index);

SiRingStructure si_ring_structure(const Band& b);

// Checks how the matching transforms under the band reduction at position i
// (ascending m-index).  Throws std::invalid_argument when no rule hypothesis
// holds at i.
MatchingReductionReport matching_reduction_check(const Band& b, int i);

}  // namespace stralg
