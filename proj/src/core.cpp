#include "stralg/core.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace stralg {

std::vector<int> parse_display(const std::vector<int>& display) {
  return {display.rbegin(), display.rend()};
}

std::vector<int> to_display(const std::vector<int>& ascending) {
  return {ascending.rbegin(), ascending.rend()};
}

Algebra::Algebra(int n_arrows) : n(n_arrows) {
  if (n < 1) throw std::invalid_argument("Algebra: n must be >= 1");
}

Band::Band(std::vector<int> ascending) : m(std::move(ascending)) {
  if (m.empty()) throw std::invalid_argument("Band: empty data");
  for (int v : m)
    if (v < 1) throw std::invalid_argument("Band: entries must be >= 1");
}

Band Band::from_display(const std::vector<int>& display) {
  return Band(parse_display(display));
}

int Band::at(int i) const {
  if (i < 1 || i > n()) return 0;
  return m[i - 1];
}

DimVec Band::beta() const {
  DimVec b(n() + 1);
  for (int i = 0; i <= n(); ++i) b[i] = at(i) + at(i + 1);
  return b;
}

std::string Band::display_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = n(); i >= 1; --i) {
    os << at(i);
    if (i > 1) os << ',';
  }
  os << ']';
  return os.str();
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::band: return "band";
    case Kind::string: return "string";
    default: return "other";
  }
}

int Component::rank_r(int i) const {
  if (i < 1 || i > n) return 0;
  return r[i - 1];
}

int Component::rank_s(int i) const {
  if (i < 1 || i > n) return 0;
  return s[i - 1];
}

long long alternating_sum(const DimVec& beta) {
  long long acc = 0;
  for (size_t i = 0; i < beta.size(); ++i) acc += (i % 2 ? -1 : 1) * (long long)beta[i];
  return acc;
}

int inexact_spots(const DimVec& beta, const std::vector<int>& ranks) {
  const int n = static_cast<int>(ranks.size());
  auto rk = [&](int i) { return (i >= 1 && i <= n) ? ranks[i - 1] : 0; };
  int count = 0;
  for (int i = 0; i <= n; ++i)
    if (rk(i) + rk(i + 1) != beta[i]) ++count;
  return count;
}

namespace {

void check_chain(const DimVec& beta, const std::vector<int>& ranks, const char* which) {
  const int n = static_cast<int>(ranks.size());
  auto rk = [&](int i) { return (i >= 1 && i <= n) ? ranks[i - 1] : 0; };
  for (int i = 0; i < n; ++i)
    if (ranks[i] < 0) throw std::invalid_argument(std::string("Component: negative ") + which);
  for (int i = 0; i <= n; ++i)
    if (rk(i) + rk(i + 1) > beta[i])
      throw std::invalid_argument(std::string("Component: rank condition violated on ") + which);
}

Kind classify(const DimVec& beta, const std::vector<int>& r, const std::vector<int>& s) {
  const int n = static_cast<int>(r.size());
  auto rr = [&](int i) { return (i >= 1 && i <= n) ? r[i - 1] : 0; };
  if (r == s) {
    bool exact_everywhere = true;
    for (int i = 0; i <= n && exact_everywhere; ++i)
      exact_everywhere = (rr(i) + rr(i + 1) == beta[i]);
    if (exact_everywhere) return Kind::band;
  }
  long long alt = alternating_sum(beta);
  if ((alt == 1 || alt == -1) && inexact_spots(beta, r) == 1 && inexact_spots(beta, s) == 1)
    return Kind::string;
  return Kind::other;
}

}  // namespace

Component Component::make(DimVec beta, std::vector<int> r, std::vector<int> s) {
  Component c;
  c.n = static_cast<int>(r.size());
  if (beta.size() != r.size() + 1 || r.size() != s.size())
    throw std::invalid_argument("Component: length mismatch");
  if (c.n < 1) throw std::invalid_argument("Component: n must be >= 1");
  for (int v : beta)
    if (v < 0) throw std::invalid_argument("Component: negative dimension");
  check_chain(beta, r, "r");
  check_chain(beta, s, "s");
  c.kind = classify(beta, r, s);
  c.beta = std::move(beta);
  c.r = std::move(r);
  c.s = std::move(s);
  return c;
}

Component Component::of_band(const Band& b) {
  return make(b.beta(), b.m, b.m);
}

Component band_component(const Band& b) { return Component::of_band(b); }

long long euler_form(const Algebra& a, const DimVec& alpha, const DimVec& beta) {
  const size_t len = static_cast<size_t>(a.n) + 1;
  if (alpha.size() != len || beta.size() != len)
    throw std::invalid_argument("euler_form: length mismatch");
  // Row 1 of E(n) belongs to x_n: off-diagonal contribution 2(-1)^{k-l} alpha_k beta_l, k > l.
  long long acc = 0;
  for (size_t k = 0; k < len; ++k) {
    acc += (long long)alpha[k] * beta[k];
    for (size_t l = 0; l < k; ++l)
      acc += 2LL * (((k - l) % 2) ? -1 : 1) * alpha[k] * beta[l];
  }
  return acc;
}

long long tits_form(const Algebra& a, const DimVec& beta) {
  if (beta.size() != static_cast<size_t>(a.n) + 1)
    throw std::invalid_argument("tits_form: length mismatch");
  long long d = alternating_sum(beta);
  return d * d;
}

namespace {

// All rank sequences satisfying the chain conditions for beta.
std::vector<std::vector<int>> valid_rank_sequences(const DimVec& beta) {
  const int n = static_cast<int>(beta.size()) - 1;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int)> rec = [&](int i) {  // choosing r_i
    if (i > n) {
      out.push_back(cur);
      return;
    }
    int prev = (i >= 2) ? cur[i - 2] : 0;
    int hi = std::min(beta[i - 1] - prev, beta[i]);
    for (int v = 0; v <= hi; ++v) {
      cur[i - 1] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

bool dominated(const std::vector<int>& a, const std::vector<int>& b) {
  // a <= b componentwise and a != b
  bool strict = false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

}  // namespace

std::vector<Component> enumerate_components(const Algebra& a, const DimVec& beta) {
  if (beta.size() != static_cast<size_t>(a.n) + 1)
    throw std::invalid_argument("enumerate_components: length mismatch");
  auto all = valid_rank_sequences(beta);
  std::vector<std::vector<int>> maximal;
  for (const auto& cand : all) {
    bool is_max = true;
    for (const auto& other : all)
      if (dominated(cand, other)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(cand);
  }
  std::sort(maximal.begin(), maximal.end());
  std::vector<Component> out;
  for (const auto& r : maximal)
    for (const auto& s : maximal) out.push_back(Component::make(beta, r, s));
  return out;
}

bool is_string_component(const Component& c) { return c.kind == Kind::string; }

bool is_nonincreasing(const std::vector<int>& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) return false;
  return true;
}

bool has_semiinvariant_of_weight(const std::vector<int>& alpha, const std::vector<int>& beta,
                         long long l) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("has_semiinvariant_of_weight: length mismatch");
  if (!is_nonincreasing(alpha) || !is_nonincreasing(beta))
    throw std::invalid_argument("has_semiinvariant_of_weight: weights must be dominant");
  const size_t n = alpha.size();
  for (size_t i = 0; i < n; ++i)
    if ((long long)alpha[i] + beta[n - 1 - i] != l) return false;
  return true;
}

}  // namespace stralg
