#include "stralg/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stralg {

RootElem RootSystem::sigma(const RootElem& e) const {
  return {e.vertex, beta[e.vertex] - e.row, 1 - e.copy};
}

std::optional<RootElem> RootSystem::theta(const RootElem& e) const {
  const int m_v = band.at(e.vertex);
  if (e.row > m_v) {
    // bottom block: pair upward
    return RootElem{e.vertex + 1, beta[e.vertex] - e.row, e.copy};
  }
  if (e.row < m_v) {
    // top block: pair downward (inverse of the upward rule at vertex - 1)
    return RootElem{e.vertex - 1, beta[e.vertex - 1] - e.row, e.copy};
  }
  return std::nullopt;  // boundary root, critical at inner vertices
}

bool RootSystem::critical(const RootElem& e) const {
  return e.vertex >= 1 && e.vertex <= band.n() - 1 && e.row == band.at(e.vertex);
}

int RootSystem::index_of(const RootElem& e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || *it != e)
    throw std::invalid_argument("RootSystem: no such element");
  return static_cast<int>(it - elements.begin());
}

RootSystem build_root_system(const Band& b) {
  RootSystem rs;
  rs.band = b;
  rs.beta = b.beta();
  for (int v = 0; v <= b.n(); ++v)
    for (int j = 1; j <= rs.beta[v] - 1; ++j)
      for (int copy = 0; copy < 2; ++copy) rs.elements.push_back({v, j, copy});
  std::sort(rs.elements.begin(), rs.elements.end());
  return rs;
}

int Orbits::critical_count() const {
  return static_cast<int>(std::count(critical.begin(), critical.end(), true));
}

int Orbits::noncritical_count() const {
  return static_cast<int>(orbits.size()) - critical_count();
}

int Orbits::orbit_of(const RootSystem& rs, const RootElem& e) const {
  for (size_t k = 0; k < orbits.size(); ++k)
    if (std::binary_search(orbits[k].begin(), orbits[k].end(), e)) return static_cast<int>(k);
  throw std::invalid_argument("Orbits: element not found");
  (void)rs;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Orbits orbit_partition(const RootSystem& rs) {
  const int sz = static_cast<int>(rs.elements.size());
  UnionFind uf(sz);
  for (int k = 0; k < sz; ++k) {
    const RootElem& e = rs.elements[k];
    uf.unite(k, rs.index_of(rs.sigma(e)));
    if (auto t = rs.theta(e)) uf.unite(k, rs.index_of(*t));
  }
  std::map<int, std::vector<RootElem>> groups;
  for (int k = 0; k < sz; ++k) groups[uf.find(k)].push_back(rs.elements[k]);

  Orbits o;
  for (auto& [root, elems] : groups) {
    std::sort(elems.begin(), elems.end());
    int crit = 0;
    for (const RootElem& e : elems) crit += rs.critical(e);
    if (crit != 0 && crit != 2)
      throw std::logic_error("orbit_partition: orbit with " + std::to_string(crit) +
                             " critical elements");
    o.critical.push_back(crit == 2);
    o.orbits.push_back(std::move(elems));
  }
  const int n = rs.band.n();
  if (o.critical_count() != n - 1)
    throw std::logic_error("orbit_partition: expected " + std::to_string(n - 1) +
                           " critical orbits, found " + std::to_string(o.critical_count()));
  return o;
}

std::string MatchPoint::name() const {
  return (is_y ? "y" : "x") + std::to_string(index);
}

int Matching::encode(int n, const MatchPoint& p) {
  return (p.is_y ? (n - 1) : 0) + p.index - 1;
}

MatchPoint Matching::apply(const MatchPoint& p) const {
  if (p.index < 1 || p.index > n - 1) throw std::invalid_argument("Matching: point out of range");
  return pairing[encode(n, p)];
}

Matching Matching::identity(int n) {
  Matching t;
  t.n = n;
  t.pairing.resize(2 * (n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    t.pairing[encode(n, {i, false})] = {i, true};
    t.pairing[encode(n, {i, true})] = {i, false};
  }
  return t;
}

Matching Matching::from_pairs(int n,
                              const std::vector<std::pair<MatchPoint, MatchPoint>>& pairs) {
  Matching t;
  t.n = n;
  t.pairing.assign(2 * (n - 1), MatchPoint{0, false});
  auto set = [&](const MatchPoint& a, const MatchPoint& b) {
    int ca = encode(n, a);
    if (t.pairing[ca].index != 0 && t.pairing[ca] != b)
      throw std::invalid_argument("Matching: conflicting pairs");
    t.pairing[ca] = b;
  };
  for (const auto& [a, b] : pairs) {
    if (a == b) throw std::invalid_argument("Matching: fixed point");
    set(a, b);
    set(b, a);
  }
  for (int k = 0; k < t.points(); ++k)
    if (t.pairing[k].index == 0) throw std::invalid_argument("Matching: incomplete pairing");
  return t;
}

bool Matching::is_identity() const {
  for (int i = 1; i <= n - 1; ++i)
    if (apply({i, false}) != MatchPoint{i, true}) return false;
  return true;
}

std::vector<Matching::Link> Matching::links() const {
  std::vector<Link> out;
  for (int i = 1; i <= n - 1; ++i) {
    MatchPoint im = apply({i, false});
    if (im.is_y) {
      if (i <= im.index) out.push_back({i, im.index, false});
    } else {
      if (i < im.index) out.push_back({i, im.index, true});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

MatchingPredicates matching_predicates(const Matching& t) {
  MatchingPredicates p;
  p.symmetric = true;
  for (int i = 1; i <= t.n - 1 && p.symmetric; ++i) {
    MatchPoint ix = t.apply({i, false});
    MatchPoint iy = t.apply({i, true});
    // theta must commute with the x<->y swap
    p.symmetric = (ix.index == iy.index) && (ix.is_y != iy.is_y);
  }
  p.even = true;
  for (int i = 1; i <= t.n - 1 && p.even; ++i) {
    MatchPoint im = t.apply({i, false});
    int diff = std::abs(i - im.index);
    p.even = im.is_y ? (diff % 2 == 0) : (diff % 2 == 1);
  }
  p.unmixed = true;
  auto ls = t.links();
  for (size_t a = 0; a < ls.size() && p.unmixed; ++a)
    for (size_t b = 0; b < ls.size() && p.unmixed; ++b) {
      if (a == b) continue;
      // mixed: i < j < k < l with (i,k) and (j,l) linked
      if (ls[a].i < ls[b].i && ls[b].i < ls[a].j && ls[a].j < ls[b].j) p.unmixed = false;
    }
  return p;
}

Matching extract_matching(const Band& b) {
  RootSystem rs = build_root_system(b);
  Orbits o = orbit_partition(rs);
  std::vector<std::pair<MatchPoint, MatchPoint>> pairs;
  for (size_t k = 0; k < o.orbits.size(); ++k) {
    if (!o.critical[k]) continue;
    std::vector<MatchPoint> ends;
    for (const RootElem& e : o.orbits[k])
      if (rs.critical(e)) ends.push_back({e.vertex, e.copy == 1});
    pairs.push_back({ends[0], ends[1]});
  }
  Matching t = Matching::from_pairs(b.n(), pairs);
  MatchingPredicates p = matching_predicates(t);
  if (!p.symmetric || !p.even || !p.unmixed) {
    std::ostringstream os;
    os << "extract_matching(" << b.display_string() << "): predicate failure:"
       << (p.symmetric ? "" : " not-symmetric") << (p.even ? "" : " not-even")
       << (p.unmixed ? "" : " mixed");
    throw std::logic_error(os.str());
  }
  return t;
}

namespace {

void validate_weights(const RootSystem& rs, const WeightPair& w) {
  const Band& b = rs.band;
  if (w.lambda.size() != static_cast<size_t>(b.n()) || w.mu.size() != w.lambda.size())
    throw std::invalid_argument("WeightPair: wrong number of partitions");
  for (int i = 1; i <= b.n(); ++i)
    for (const auto* part : {&w.lambda[i - 1], &w.mu[i - 1]}) {
      if (part->size() != static_cast<size_t>(b.at(i)))
        throw std::invalid_argument("WeightPair: partition part count mismatch");
      if (!is_nonincreasing(*part) || (!part->empty() && part->back() < 0))
        throw std::invalid_argument("WeightPair: not a partition");
    }
}

}  // namespace

WeightPair WeightPair::operator+(const WeightPair& o) const {
  WeightPair out = *this;
  for (size_t i = 0; i < lambda.size(); ++i) {
    for (size_t j = 0; j < lambda[i].size(); ++j) out.lambda[i][j] += o.lambda[i][j];
    for (size_t j = 0; j < mu[i].size(); ++j) out.mu[i][j] += o.mu[i][j];
  }
  return out;
}

long long f_value(const RootSystem& rs, const WeightPair& w, const RootElem& e) {
  validate_weights(rs, w);
  const Band& b = rs.band;
  const auto& parts = (e.copy == 0) ? w.lambda : w.mu;
  auto part = [&](int i, int j) -> long long {  // j-th part of partition i, 1-based
    return parts[i - 1][j - 1];
  };
  const int m_v = b.at(e.vertex);
  if (e.row < m_v) return part(e.vertex, e.row) - part(e.vertex, e.row + 1);
  if (e.row == m_v) {
    long long last = part(e.vertex, m_v);
    long long next_last = (e.vertex + 1 <= b.n()) ? part(e.vertex + 1, b.at(e.vertex + 1)) : 0;
    return last + next_last;
  }
  int t = e.row - m_v;  // inside the reversed negated block of partition vertex+1
  int k = b.at(e.vertex + 1) - t;
  return part(e.vertex + 1, k) - part(e.vertex + 1, k + 1);
}

bool contains_semiinvariant(const WeightPair& w, const RootSystem& rs, const Orbits& o) {
  validate_weights(rs, w);
  for (const auto& orbit : o.orbits) {
    long long v0 = f_value(rs, w, orbit.front());
    for (const RootElem& e : orbit)
      if (f_value(rs, w, e) != v0) return false;
  }
  return true;
}

WeightPair characteristic_weight(const RootSystem& rs, const Orbits& o, int orbit_index) {
  if (orbit_index < 0 || orbit_index >= static_cast<int>(o.orbits.size()))
    throw std::invalid_argument("characteristic_weight: bad orbit index");
  if (o.critical[orbit_index])
    throw std::invalid_argument("characteristic_weight: orbit is critical");
  const Band& b = rs.band;
  auto in_orbit = [&](const RootElem& e) {
    return std::binary_search(o.orbits[orbit_index].begin(), o.orbits[orbit_index].end(), e);
  };
  WeightPair w;
  w.lambda.resize(b.n());
  w.mu.resize(b.n());
  for (int i = 1; i <= b.n(); ++i) {
    w.lambda[i - 1].assign(b.at(i), 0);
    w.mu[i - 1].assign(b.at(i), 0);
    // jumps of partition i are read off the top-block roots at vertex i;
    // last parts vanish
    for (int j = b.at(i) - 1; j >= 1; --j) {
      long long jl = in_orbit({i, j, 0}) ? 1 : 0;
      long long jm = in_orbit({i, j, 1}) ? 1 : 0;
      w.lambda[i - 1][j - 1] = w.lambda[i - 1][j] + static_cast<int>(jl);
      w.mu[i - 1][j - 1] = w.mu[i - 1][j] + static_cast<int>(jm);
    }
  }
  // the inversion must reproduce the indicator exactly
  for (const RootElem& e : rs.elements) {
    long long want = in_orbit(e) ? 1 : 0;
    if (f_value(rs, w, e) != want)
      throw std::logic_error("characteristic_weight: reconstruction failed");
  }
  return w;
}

SiRingStructure si_ring_structure(const Band& b) {
  RootSystem rs = build_root_system(b);
  Orbits o = orbit_partition(rs);
  SiRingStructure out;
  out.polynomial_var_count = o.noncritical_count();
  out.base_matching = extract_matching(b);
  return out;
}

namespace {

// Linked index partitions (self links as {i,i}), with types dropped; for even
// matchings the xy/xx type is determined by the parity of the difference.
std::vector<std::pair<int, int>> link_partition(const Matching& t) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= t.n - 1; ++i) {
    MatchPoint im = t.apply({i, false});
    if (i <= im.index) out.push_back({i, im.index});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MatchingReductionReport matching_reduction_check(const Band& b, int i) {
  const int n = b.n();
  if (i < 1 || i > n) throw std::invalid_argument("matching_reduction_check: bad index");
  auto at = [&](int k) { return b.at(k); };
  MatchingReductionReport rep;
  rep.before = extract_matching(b);

  if (i + 1 <= n && at(i + 1) == at(i)) {
    rep.rule = "a";
    std::vector<int> shorter = b.m;
    shorter.erase(shorter.begin() + (i - 1));
    rep.after = extract_matching(Band(shorter));
    // links of the shorter matching, reindexed past the inserted point i,
    // plus the new self link at i; types follow from evenness
    std::vector<std::pair<int, int>> expect;
    for (auto [a, c] : link_partition(rep.after)) {
      auto shift = [&](int p) { return p < i ? p : p + 1; };
      expect.push_back({shift(a), shift(c)});
    }
    expect.push_back({i, i});
    std::sort(expect.begin(), expect.end());
    rep.holds = (expect == link_partition(rep.before)) &&
                matching_predicates(rep.before).even;
    rep.detail = "self pair inserted at " + std::to_string(i);
    return rep;
  }
  if (at(i) > std::max(at(i - 1), at(i + 1)) && at(i - 1) != at(i + 1)) {
    rep.rule = "b";
    std::vector<int> reduced = b.m;
    reduced[i - 1] = at(i) - std::abs(at(i - 1) - at(i + 1));
    rep.after = extract_matching(Band(reduced));
    rep.holds = (rep.before == rep.after);
    rep.detail = "matchings must coincide";
    return rep;
  }
  if (at(i) > at(i - 1) && at(i - 1) == at(i + 1) && i >= 2 && i <= n - 1) {
    rep.rule = "c";
    std::vector<int> reduced = b.m;
    reduced[i - 1] = at(i + 1);
    rep.after = extract_matching(Band(reduced));
    // the band's matching links points i-1 and i by letter-preserving pairs;
    // the reduced one replaces them by self pairs
    bool cross_ok = rep.before.apply({i - 1, false}) == MatchPoint{i, false} &&
                    rep.before.apply({i - 1, true}) == MatchPoint{i, true};
    auto lp_before = link_partition(rep.before);
    auto lp_after = link_partition(rep.after);
    std::vector<std::pair<int, int>> expect;
    for (auto pr : lp_before)
      if (pr != std::pair<int, int>{i - 1, i}) expect.push_back(pr);
    expect.push_back({i - 1, i - 1});
    expect.push_back({i, i});
    std::sort(expect.begin(), expect.end());
    rep.holds = cross_ok && (expect == lp_after);
    rep.detail = "cross pair at (" + std::to_string(i - 1) + "," + std::to_string(i) +
                 ") becomes self pairs";
    return rep;
  }
  throw std::invalid_argument("matching_reduction_check: no reduction hypothesis holds at " +
                              std::to_string(i));
}

}  // namespace stralg
