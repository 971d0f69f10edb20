#pragma once

#include <string>
#include <vector>

// Core combinatorics of the string algebras A(n): the double-arrow A_n quiver
// with vertices x_n, ..., x_0, arrow pairs a_i, b_i : x_i -> x_{i-1} and the
// relations a_i a_{i+1} = b_i b_{i+1} = 0.
//
// Index conventions used throughout the library:
//   * dimension vectors are stored vertex-ascending, dims[i] = beta_i = dim at x_i;
//   * rank sequences r, s are stored with r[i-1] = rank of a_i (i = 1..n);
//   * band data m is stored with m[i-1] = m_i, inducing beta_i = m_i + m_{i+1}
//     (boundary m_0 = m_{n+1} = 0);
//   * all textual I/O (CLI arguments, JSON, printed tuples) uses the bracket
//     display order m_n ... m_1 resp. beta_n ... beta_0.  parse_display /
//     to_display convert between the two.

namespace stralg {

using DimVec = std::vector<int>;

std::vector<int> parse_display(const std::vector<int>& display);
std::vector<int> to_display(const std::vector<int>& ascending);

struct Algebra {
  int n = 1;  // number of arrow pairs; the quiver has n+1 vertices

  explicit Algebra(int n_arrows);
};

// Band dimension data m_1..m_n (ascending storage), all entries >= 1.
struct Band {
  std::vector<int> m;

  Band() = default;
  explicit Band(std::vector<int> ascending);
  static Band from_display(const std::vector<int>& display);

  int n() const { return static_cast<int>(m.size()); }
  // m_i with the boundary convention m_0 = m_{n+1} = 0.
  int at(int i) const;
  DimVec beta() const;  // (m_1, m_1+m_2, ..., m_n) ascending
  std::string display_string() const;
};

enum class Kind { band, string, other };

const char* kind_name(Kind k);

// An irreducible component C(beta; r; s) of the representation space,
// cut out by rank(a_i) <= r_i, rank(b_i) <= s_i.
struct Component {
  int n = 0;
  DimVec beta;         // size n+1, ascending
  std::vector<int> r;  // size n, r[i-1] = r_i
  std::vector<int> s;
  Kind kind = Kind::other;

  // Validates lengths, bounds and the chain conditions r_i + r_{i+1} <= beta_i
  // (likewise for s) and computes the kind; throws std::invalid_argument.
  static Component make(DimVec beta, std::vector<int> r, std::vector<int> s);
  static Component of_band(const Band& b);

  int rank_r(int i) const;  // r_i with r_0 = r_{n+1} = 0
  int rank_s(int i) const;
};

// <alpha, beta> = alpha E(n) beta^t where row 1 of E(n) belongs to vertex x_n.
long long euler_form(const Algebra& a, const DimVec& alpha, const DimVec& beta);

// q(beta) = (sum_i (-1)^i beta_i)^2, the square of the defect.
long long tits_form(const Algebra& a, const DimVec& beta);

// All components with beta-maximal rank pairs, lexicographic in (r, s)
// (ascending storage order).  The two chains are maximized independently.
std::vector<Component> enumerate_components(const Algebra& a, const DimVec& beta);

Component band_component(const Band& b);

bool is_string_component(const Component& c);

// True iff alpha_i + beta_{n+1-i} = l for all i; weights must be nonincreasing
// and of equal length.
bool has_semiinvariant_of_weight(const std::vector<int>& alpha, const std::vector<int>& beta,
                         long long l);

// Shared helpers.
bool is_nonincreasing(const std::vector<int>& w);
long long alternating_sum(const DimVec& beta);
// Number of positions i in 0..n where r_i + r_{i+1} != beta_i (r_0 = r_{n+1} = 0).
int inexact_spots(const DimVec& beta, const std::vector<int>& ranks);

}  // namespace stralg
