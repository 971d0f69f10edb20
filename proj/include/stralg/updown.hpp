#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stralg/core.hpp"

// The bicolored up-and-down graph of a component: vertices e^{(i)}_j for
// 1 <= j <= beta_i, red edges carrying the a-arrows and blue edges the
// b-arrows.  At the transition between levels i and i-1 the red edges are the
// "upper identity" (rows 1..r_i on both sides) when n-i is even and the
// "lower identity" (last r_i rows on both sides) when n-i is odd; blue is the
// opposite alignment with s_i rows.

namespace stralg {

enum class Color { red, blue };

struct GraphVertex {
  int level = 0;
  int row = 0;  // 1-based within the level
  friend auto operator<=>(const GraphVertex&, const GraphVertex&) = default;
};

struct GraphEdge {
  int i = 0;       // transition: connects level i to level i-1
  int row_hi = 0;  // row at level i
  int row_lo = 0;  // row at level i-1
  Color color = Color::red;
  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;

  GraphVertex hi() const { return {i, row_hi}; }
  GraphVertex lo() const { return {i - 1, row_lo}; }
};

struct UpDownGraph {
  int n = 0;
  DimVec levels;  // size n+1, vertex count per level
  std::vector<GraphEdge> edges;

  int vertex_count() const;
  // Edge indices incident to v holding the given color, -1 if none.
  int incident(const GraphVertex& v, Color c) const;
  std::vector<GraphEdge> incident_edges(const GraphVertex& v) const;
};

struct GraphComponent {
  Kind kind = Kind::other;  // band (cycle) or string (path / isolated vertex)
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  DimVec level_counts;  // full length n+1
  // For strings: the two path ends (equal for an isolated vertex).
  GraphVertex end_a, end_b;
  // For bands: red edge count per transition (length n, zeros allowed); this
  // is the band data of the component viewed as its own up-and-down graph.
  std::vector<int> band_data;
};

struct Decomposition {
  struct Summand {
    Kind kind = Kind::other;
    DimVec dims;                          // full length n+1
    std::vector<int> band_data;           // length n when kind == band
    int multiplicity = 1;
  };
  DimVec beta;
  std::vector<Summand> summands;
  int summand_count() const;
};

struct ReductionStep {
  std::string rule;  // "a", "b", "c", "d", "e", "n1", "strip", "zigzag", "terminal"
  int index = 0;     // position the rule acted on (1-based), 0 when n/a
  std::string before;
  std::string after;
  long long summands_split = 0;
};

struct ReductionResult {
  long long summand_count = 0;
  std::vector<ReductionStep> trace;
};

UpDownGraph build_updown_graph(const Component& c);
// No maximality requirements, only feasibility (used for sub-band rebuilds and
// reduction intermediates): 0 <= r_i, r_i + r_{i+1} <= beta_i, likewise s.
UpDownGraph build_updown_graph_raw(const DimVec& beta, const std::vector<int>& r,
                                   const std::vector<int>& s);

// Connected components in deterministic order (by top-left-most vertex:
// highest level first, then smallest row).  Throws std::logic_error if a
// component is neither a cycle nor a path.
std::vector<GraphComponent> decompose_graph(const UpDownGraph& g);

Decomposition generic_decomposition(const Component& c);

ReductionResult reduce_band(const Band& b);
ReductionResult reduce_string(const Component& c);

std::string to_dot(const UpDownGraph& g);

// Canonical form of a component: rows renumbered 1.. within each level
// (preserving order), edges sorted.  Two components are isomorphic as
// bicolored leveled graphs iff their canonical forms agree.
struct CanonicalGraph {
  DimVec level_counts;
  std::vector<GraphEdge> edges;
  friend auto operator<=>(const CanonicalGraph&, const CanonicalGraph&) = default;
};
CanonicalGraph canonical_form(const GraphComponent& comp, int n);
CanonicalGraph canonical_form(const UpDownGraph& g);

}  // namespace stralg
