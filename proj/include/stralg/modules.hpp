#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stralg/updown.hpp"

// Modules over A(n) as explicit arrow matrices, the projective resolutions of
// up-and-down modules, and exact Hom/Ext^1 dimensions computed from the
// induced two-term (for bands) or longer (for strings) Hom complexes.
//
// Coefficients: a prime field F_p (default, exact ranks at a 31-bit prime) or
// exact rationals for auditing.  Matrices are stored with integer entries;
// all arithmetic happens in the selected field.

namespace stralg {

inline constexpr uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

struct FieldSpec {
  bool rational = false;
  uint64_t prime = kDefaultPrime;
};

uint64_t random_prime31(uint64_t seed);
bool is_prime_u64(uint64_t v);

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  friend bool operator==(const IntMat&, const IntMat&) = default;
};

// Arrow matrices of a representation; a[i-1] and b[i-1] have shape
// beta_{i-1} x beta_i.
struct Rep {
  int n = 0;
  DimVec beta;
  std::vector<IntMat> a, b;

  const IntMat& arrow(bool is_b, int index) const { return (is_b ? b : a)[index - 1]; }
  bool satisfies_relations() const;  // a_i a_{i+1} = 0 = b_i b_{i+1}, exactly
};

struct ModuleSpec {
  enum class Type { string_word, band_word, updown };
  Type type = Type::updown;
  std::vector<int> word;  // vertex word for the word types
  char side = 'a';        // which letter acts on odd steps of a string word
  long long scalar = 1;   // band word parameter
  Component comp;         // up-and-down data
  std::vector<long long> scalars;  // one per band component of the graph; empty = all 1

  static ModuleSpec string_word(std::vector<int> w, char side = 'a');
  static ModuleSpec band_word(std::vector<int> w, long long scalar);
  static ModuleSpec updown(Component c, std::vector<long long> scalars = {});

  DimVec dim_vector(int* out_n = nullptr) const;
};

Rep build_module(const ModuleSpec& spec, const FieldSpec& field = {});

// Dimension vector of the projective cover of the simple at `vertex`.
DimVec projective_dims(int n, int vertex);

struct Arrow {
  int index = 0;
  bool is_b = false;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

enum class SummandRole { peak, valley, tower };

struct ResSummand {
  int level = 0;
  SummandRole role = SummandRole::peak;
  GraphVertex anchor;     // graph vertex (peak/valley) or tower endpoint
  int tower_degree = 0;   // for towers
  bool tower_is_b = false;  // color of the tower arrows
};

struct ResEntry {
  int degree = 0;  // maps P^(degree) -> P^(degree - 1)
  int from = 0;    // summand index in terms[degree]
  int to = 0;      // summand index in terms[degree - 1]
  int sign = 1;
  int scalar_component = -1;  // band component whose scalar multiplies the entry
  bool lower = false;         // the path runs through the lower blocks
  std::vector<Arrow> word;    // arrows in application order (level of `to` downward)
};

struct Resolution {
  Component comp;
  int band_components = 0;  // number of scalar slots
  std::vector<std::vector<ResSummand>> terms;  // terms[d] = summands of P^(d)
  std::vector<ResEntry> entries;

  std::vector<int> summand_levels(int degree) const;
  DimVec term_dimvec(int degree) const;
  int length() const { return static_cast<int>(terms.size()) - 1; }
};

Resolution projective_resolution(const ModuleSpec& spec);

std::string word_string(const std::vector<Arrow>& word);  // composition order, e.g. "a1b2a3"

struct HomExt {
  long long hom = 0;
  long long ext1 = 0;
};

// M must be an up-and-down spec (band or string component); N any buildable
// module over the same algebra.
HomExt hom_ext_dims(const ModuleSpec& M, const ModuleSpec& N, const FieldSpec& field = {});

struct RigidityTrial {
  int trial = 0;
  std::vector<long long> scalars_m, scalars_n;
  long long hom = 0, ext1 = 0;
  long long euler = 0;
  bool euler_ok = false;
  bool pass = false;              // ext1 == 0
  bool scalar_collision = false;  // some scalar repeated within or across the draws
};

struct RigidityReport {
  Component comp;
  int trials = 0;
  uint64_t prime = 0;
  uint64_t seed = 0;
  int passes = 0;
  int failures = 0;
  std::vector<RigidityTrial> table;
};

// Draws independent scalars for two up-and-down modules per trial and checks
// Ext^1(M, M') = 0 plus the Euler characteristic identity (band components).
RigidityReport verify_rigidity(const Component& c, int trials, uint64_t seed,
                               const FieldSpec& field = {});

struct ExtGraph {
  struct Vertex {
    int degree = 0;      // 0 or 1
    int summand = 0;     // index into resolution terms[degree]
    int basis_row = 0;   // 1-based basis index of M at the summand level
    bool diagonal = false;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
  };
  struct Edge {
    Vertex from, to;  // from degree 0 to degree 1
    bool lower = false;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };
  struct ComponentInfo {
    std::vector<Vertex> vertices;
    Kind kind = Kind::string;  // cycle or path in the pairing graph
    bool distinguished = false;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<ComponentInfo> components;
};

ExtGraph ext_graph(const ModuleSpec& spec);

}  // namespace stralg
