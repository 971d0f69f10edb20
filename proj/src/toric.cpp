#include "stralg/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stralg {

bool ControlSystem::satisfied(const ExponentVec& x) const {
  for (const auto& eq : equations) {
    long long acc = 0;
    for (size_t k = 0; k < eq.size(); ++k) acc += (long long)eq[k] * x[k];
    if (acc != 0) return false;
  }
  return true;
}

std::string monomial_string(const ExponentVec& e, int n) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 2 * n; ++k) {
    if (e[k] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << (k < n ? 'A' : 'B') << (k % n) + 1;
    if (e[k] > 1) os << '^' << e[k];
  }
  return first ? "1" : os.str();
}

const char* ring_kind_name(RingKind k) {
  switch (k) {
    case RingKind::polynomial: return "polynomial";
    case RingKind::hypersurface: return "hypersurface";
    case RingKind::complete_intersection: return "complete_intersection";
    default: return "not_complete_intersection";
  }
}

namespace {

std::vector<int> pair_sum_row(int n, int a_var, bool a_is_v, int b_var, bool b_is_v) {
  // u_a + u_{a+1} - (v_b + v_{b+1}) and the letter variants; indices are
  // point indices 1..n-1.
  std::vector<int> row(2 * n, 0);
  int off_a = a_is_v ? n : 0;
  int off_b = b_is_v ? n : 0;
  row[off_a + a_var - 1] += 1;
  row[off_a + a_var] += 1;
  row[off_b + b_var - 1] -= 1;
  row[off_b + b_var] -= 1;
  return row;
}

void normalize_row(std::vector<int>& row) {
  for (int c : row) {
    if (c > 0) return;
    if (c < 0) {
      for (int& x : row) x = -x;
      return;
    }
  }
}

}  // namespace

ControlSystem control_equations(const Matching& t) {
  if (!matching_predicates(t).symmetric)
    throw std::invalid_argument("control_equations: matching is not symmetric");
  ControlSystem cs;
  cs.n = t.n;
  std::set<std::vector<int>> rows;
  for (const auto& link : t.links()) {
    if (!link.same_letter) {
      rows.insert(pair_sum_row(t.n, link.i, false, link.j, true));
      rows.insert(pair_sum_row(t.n, link.j, false, link.i, true));
    } else {
      auto r1 = pair_sum_row(t.n, link.i, false, link.j, false);
      auto r2 = pair_sum_row(t.n, link.i, true, link.j, true);
      normalize_row(r1);
      normalize_row(r2);
      rows.insert(r1);
      rows.insert(r2);
    }
  }
  cs.equations.assign(rows.begin(), rows.end());
  return cs;
}

namespace {

std::vector<long long> apply_rows(const std::vector<std::vector<int>>& rows,
                                  const ExponentVec& x) {
  std::vector<long long> out(rows.size(), 0);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t k = 0; k < x.size(); ++k) out[r] += (long long)rows[r][k] * x[k];
  return out;
}

bool leq(const ExponentVec& a, const ExponentVec& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

}  // namespace

std::vector<ExponentVec> hilbert_basis(const ControlSystem& cs) {
  const int dim = 2 * cs.n;
  const auto& rows = cs.equations;
  // columns of the equation matrix
  std::vector<std::vector<long long>> col(dim, std::vector<long long>(rows.size(), 0));
  for (size_t r = 0; r < rows.size(); ++r)
    for (int k = 0; k < dim; ++k) col[k][r] = rows[r][k];

  std::vector<ExponentVec> minimal;
  auto dominated_by_minimal = [&](const ExponentVec& x) {
    for (const auto& m : minimal)
      if (leq(m, x)) return true;
    return false;
  };

  std::set<ExponentVec> frontier;
  for (int k = 0; k < dim; ++k) {
    ExponentVec e(dim, 0);
    e[k] = 1;
    frontier.insert(e);
  }
  while (!frontier.empty()) {
    std::set<ExponentVec> next;
    for (const ExponentVec& x : frontier) {
      if (dominated_by_minimal(x)) continue;
      auto v = apply_rows(rows, x);
      if (std::all_of(v.begin(), v.end(), [](long long a) { return a == 0; })) {
        minimal.push_back(x);
        continue;
      }
      for (int k = 0; k < dim; ++k) {
        long long dot = 0;
        for (size_t r = 0; r < rows.size(); ++r) dot += v[r] * col[k][r];
        if (dot < 0) {
          ExponentVec child = x;
          child[k] += 1;
          if (!dominated_by_minimal(child)) next.insert(std::move(child));
        }
      }
    }
    frontier = std::move(next);
  }
  // final minimality pass: solutions can be found before a smaller one
  std::vector<ExponentVec> basis;
  for (const auto& x : minimal) {
    bool keep = true;
    for (const auto& y : minimal)
      if (y != x && leq(y, x)) {
        keep = false;
        break;
      }
    if (keep) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

namespace {

// all multisets of generators (nondecreasing index vectors) with exponent sum
// exactly `target`
void fiber_dfs(const std::vector<ExponentVec>& gens, const ExponentVec& target, size_t cap,
               std::vector<int>& cur, int start, ExponentVec& remaining,
               std::vector<std::vector<int>>& out, bool& capped) {
  if (std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; })) {
    if (out.size() >= cap) {
      capped = true;
      return;
    }
    out.push_back(cur);
    return;
  }
  if (capped) return;
  for (int g = start; g < static_cast<int>(gens.size()); ++g) {
    bool fits = true;
    for (size_t k = 0; k < remaining.size(); ++k)
      if (gens[g][k] > remaining[k]) {
        fits = false;
        break;
      }
    if (!fits) continue;
    for (size_t k = 0; k < remaining.size(); ++k) remaining[k] -= gens[g][k];
    cur.push_back(g);
    fiber_dfs(gens, target, cap, cur, g, remaining, out, capped);
    cur.pop_back();
    for (size_t k = 0; k < remaining.size(); ++k) remaining[k] += gens[g][k];
    if (capped) return;
  }
}

std::vector<std::vector<int>> fiber_of(const std::vector<ExponentVec>& gens,
                                       const ExponentVec& degree, size_t cap, bool& capped) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  ExponentVec remaining = degree;
  fiber_dfs(gens, degree, cap, cur, 0, remaining, out, capped);
  std::sort(out.begin(), out.end());
  return out;
}

// multiset containment and replacement for relation moves
bool multiset_contains(const std::vector<int>& hay, const std::vector<int>& needle) {
  size_t i = 0;
  for (int x : needle) {
    while (i < hay.size() && hay[i] < x) ++i;
    if (i == hay.size() || hay[i] != x) return false;
    ++i;
  }
  return true;
}

std::vector<int> multiset_replace(const std::vector<int>& base, const std::vector<int>& minus,
                                  const std::vector<int>& plus) {
  std::vector<int> rest;
  size_t i = 0;
  for (int x : base) {
    if (i < minus.size() && minus[i] == x)
      ++i;
    else
      rest.push_back(x);
  }
  rest.insert(rest.end(), plus.begin(), plus.end());
  std::sort(rest.begin(), rest.end());
  return rest;
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

RelationSearch minimal_relations(const std::vector<ExponentVec>& gens, int degree_bound,
                                 size_t fiber_cap) {
  RelationSearch rs;
  rs.degree_bound = degree_bound;
  if (gens.empty()) {
    rs.stabilized = true;
    return rs;
  }
  const size_t dim = gens.front().size();
  std::set<ExponentVec> processed;
  std::vector<int> new_at_level(degree_bound + 1, 0);

  for (int size = 2; size <= degree_bound; ++size) {
    // multidegrees reachable by multisets of exactly `size` generators
    std::set<ExponentVec> degrees;
    std::function<void(int, int, ExponentVec&)> enumerate = [&](int start, int left,
                                                                ExponentVec& acc) {
      if (left == 0) {
        if (!processed.count(acc)) degrees.insert(acc);
        return;
      }
      for (int g = start; g < static_cast<int>(gens.size()); ++g) {
        for (size_t k = 0; k < dim; ++k) acc[k] += gens[g][k];
        enumerate(g, left - 1, acc);
        for (size_t k = 0; k < dim; ++k) acc[k] -= gens[g][k];
      }
    };
    ExponentVec acc(dim, 0);
    enumerate(0, size, acc);

    for (const ExponentVec& d : degrees) {
      processed.insert(d);
      bool capped = false;
      auto fiber = fiber_of(gens, d, fiber_cap, capped);
      if (capped) {
        rs.cap_exceeded = true;
        continue;
      }
      if (fiber.size() < 2) continue;
      UF uf(static_cast<int>(fiber.size()));
      for (size_t a = 0; a < fiber.size(); ++a)
        for (const Relation& rel : rs.relations) {
          for (const auto* side : {&rel.lhs, &rel.rhs}) {
            const auto& other = (side == &rel.lhs) ? rel.rhs : rel.lhs;
            if (!multiset_contains(fiber[a], *side)) continue;
            auto moved = multiset_replace(fiber[a], *side, other);
            auto it = std::lower_bound(fiber.begin(), fiber.end(), moved);
            if (it != fiber.end() && *it == moved)
              uf.unite(static_cast<int>(a), static_cast<int>(it - fiber.begin()));
          }
        }
      // lexicographically smallest member of each component
      std::map<int, int> rep;
      for (size_t a = 0; a < fiber.size(); ++a) {
        int r = uf.find(static_cast<int>(a));
        if (!rep.count(r)) rep[r] = static_cast<int>(a);
      }
      if (rep.size() <= 1) continue;
      std::vector<int> reps;
      for (auto [_, a] : rep) reps.push_back(a);
      std::sort(reps.begin(), reps.end());
      for (size_t k = 1; k < reps.size(); ++k) {
        Relation rel;
        rel.lhs = fiber[reps[0]];
        rel.rhs = fiber[reps[k]];
        rel.degree = d;
        rs.relations.push_back(std::move(rel));
        new_at_level[size]++;
      }
    }
  }
  rs.stabilized = degree_bound >= 3 && new_at_level[degree_bound] == 0 &&
                  new_at_level[degree_bound - 1] == 0;
  std::sort(rs.relations.begin(), rs.relations.end());
  return rs;
}

int integer_rank(const std::vector<ExponentVec>& rows_in) {
  if (rows_in.empty()) return 0;
  std::vector<std::vector<long long>> m(rows_in.size());
  for (size_t r = 0; r < rows_in.size(); ++r)
    m[r].assign(rows_in[r].begin(), rows_in[r].end());
  const size_t R = m.size(), C = m.front().size();
  size_t rank = 0;
  for (size_t c = 0; c < C && rank < R; ++c) {
    size_t piv = rank;
    while (piv < R && m[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(m[piv], m[rank]);
    for (size_t r = 0; r < R; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long long g = std::gcd(std::abs(m[r][c]), std::abs(m[rank][c]));
      long long fr = m[rank][c] / g, fp = m[r][c] / g;
      for (size_t k = 0; k < C; ++k) m[r][k] = m[r][k] * fr - m[rank][k] * fp;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

RingAnalysis analyze_ring(const Matching& t, int degree_bound) {
  RingAnalysis out;
  out.matching = t;
  out.presentation.n = t.n;
  ControlSystem cs = control_equations(t);
  out.presentation.generators = hilbert_basis(cs);
  out.presentation.relations =
      minimal_relations(out.presentation.generators, degree_bound);
  out.presentation.lattice_rank = integer_rank(out.presentation.generators);
  out.presentation.krull_dim = out.presentation.lattice_rank;
  out.presentation.codim =
      static_cast<int>(out.presentation.generators.size()) - out.presentation.lattice_rank;

  RingClassification& c = out.classification;
  c.codim = out.presentation.codim;
  c.relation_count = static_cast<int>(out.presentation.relations.relations.size());
  c.generator_count = static_cast<int>(out.presentation.generators.size());
  c.degree_bound_used = degree_bound;
  c.stabilized =
      out.presentation.relations.stabilized && !out.presentation.relations.cap_exceeded;
  if (c.relation_count == 0 && c.codim == 0)
    c.kind = RingKind::polynomial;
  else if (c.relation_count == 1 && c.codim == 1)
    c.kind = RingKind::hypersurface;
  else if (c.relation_count == c.codim)
    c.kind = RingKind::complete_intersection;
  else {
    c.kind = RingKind::not_complete_intersection;
    if (c.relation_count < c.codim) c.stabilized = false;  // under-resolved, provisional
  }
  return out;
}

RingClassification classify_ring(const Matching& t, int degree_bound) {
  return analyze_ring(t, degree_bound).classification;
}

MatchingReduction reduce_matching(const Matching& t) {
  MatchingReduction out;
  out.reduced = t;
  bool progress = true;
  while (progress && out.reduced.n >= 3) {
    progress = false;
    for (const auto& link : out.reduced.links()) {
      if (!link.same_letter || link.j != link.i + 1) continue;
      int k = link.i;
      int n_new = out.reduced.n - 2;
      std::vector<std::pair<MatchPoint, MatchPoint>> pairs;
      auto shift = [&](MatchPoint p) -> MatchPoint {
        return {p.index > k + 1 ? p.index - 2 : p.index, p.is_y};
      };
      for (const auto& l2 : out.reduced.links()) {
        if (l2 == link) continue;
        if (l2.same_letter) {
          pairs.push_back({shift({l2.i, false}), shift({l2.j, false})});
          pairs.push_back({shift({l2.i, true}), shift({l2.j, true})});
        } else {
          pairs.push_back({shift({l2.i, false}), shift({l2.j, true})});
          if (l2.i != l2.j) pairs.push_back({shift({l2.j, false}), shift({l2.i, true})});
        }
      }
      out.reduced = Matching::from_pairs(n_new, pairs);
      out.stripped_pairs++;
      progress = true;
      break;
    }
  }
  return out;
}

std::vector<Matching> enumerate_matchings(int n, const MatchingFlags& flags) {
  if (n < 2) throw std::invalid_argument("enumerate_matchings: n must be >= 2");
  const int points = n - 1;
  std::vector<Matching> out;
  std::vector<std::pair<MatchPoint, MatchPoint>> pairs;
  std::vector<bool> used(points + 1, false);

  std::function<void()> rec = [&]() {
    int i = 0;
    for (int k = 1; k <= points; ++k)
      if (!used[k]) {
        i = k;
        break;
      }
    if (i == 0) {
      Matching t = Matching::from_pairs(n, pairs);
      MatchingPredicates p = matching_predicates(t);
      if (flags.even && !p.even) return;
      if (flags.unmixed && !p.unmixed) return;
      if (flags.irreducible) {
        for (const auto& l : t.links())
          if (l.same_letter && l.j == l.i + 1) return;
      }
      out.push_back(std::move(t));
      return;
    }
    used[i] = true;
    // self pair x_i <-> y_i
    pairs.push_back({{i, false}, {i, true}});
    rec();
    pairs.pop_back();
    for (int j = i + 1; j <= points; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.push_back({{i, false}, {j, true}});
      pairs.push_back({{j, false}, {i, true}});
      rec();
      pairs.pop_back();
      pairs.pop_back();
      pairs.push_back({{i, false}, {j, false}});
      pairs.push_back({{i, true}, {j, true}});
      rec();
      pairs.pop_back();
      pairs.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec();
  if (flags.mirror_reduced) {
    auto mirrored = [&](const Matching& t) {
      std::vector<std::pair<MatchPoint, MatchPoint>> ps;
      auto flip = [&](MatchPoint p) { return MatchPoint{n - p.index, p.is_y}; };
      for (const auto& l : t.links()) {
        if (l.same_letter) {
          ps.push_back({flip({l.i, false}), flip({l.j, false})});
          ps.push_back({flip({l.i, true}), flip({l.j, true})});
        } else {
          ps.push_back({flip({l.i, false}), flip({l.j, true})});
          if (l.i != l.j) ps.push_back({flip({l.j, false}), flip({l.i, true})});
        }
      }
      return Matching::from_pairs(n, ps);
    };
    std::vector<Matching> kept;
    for (const Matching& t : out)
      if (!(mirrored(t).links() < t.links())) kept.push_back(t);
    out = std::move(kept);
  }
  std::sort(out.begin(), out.end(),
            [](const Matching& a, const Matching& b) { return a.links() < b.links(); });
  return out;
}

bool invariance_oracle(const Matching& t, int max_degree) {
  ControlSystem cs = control_equations(t);
  // torus weights, one per orbit of the involution on the point set
  std::vector<std::vector<int>> weights;
  for (const auto& link : t.links()) {
    if (!link.same_letter) {
      weights.push_back(pair_sum_row(t.n, link.i, false, link.j, true));
      if (link.i != link.j) weights.push_back(pair_sum_row(t.n, link.j, false, link.i, true));
    } else {
      weights.push_back(pair_sum_row(t.n, link.i, false, link.j, false));
      weights.push_back(pair_sum_row(t.n, link.i, true, link.j, true));
    }
  }
  const int dim = 2 * t.n;
  ExponentVec x(dim, 0);
  std::function<bool(int, int)> rec = [&](int pos, int left) {
    if (pos == dim) {
      bool invariant = true;
      for (const auto& w : weights) {
        long long acc = 0;
        for (int k = 0; k < dim; ++k) acc += (long long)w[k] * x[k];
        if (acc != 0) {
          invariant = false;
          break;
        }
      }
      return invariant == cs.satisfied(x);
    }
    for (int v = 0; v <= left; ++v) {
      x[pos] = v;
      if (!rec(pos + 1, left - v)) {
        x[pos] = 0;
        return false;
      }
    }
    x[pos] = 0;
    return true;
  };
  return rec(0, max_degree);
}

ConjectureScan conjecture_scan(int n_max, int degree_bound) {
  ConjectureScan scan;
  scan.n_max = n_max;
  scan.degree_bound = degree_bound;
  for (int n = 2; n <= n_max; ++n) {
    for (const Matching& t : enumerate_matchings(n, {})) {
      scan.matchings_scanned++;
      ConjectureFinding f;
      f.n = n;
      f.matching = t;
      auto gens = hilbert_basis(control_equations(t));
      for (const auto& g : gens)
        if (std::any_of(g.begin(), g.end(), [](int v) { return v > 1; }))
          f.generator_violations.push_back(g);
      auto rels = minimal_relations(gens, degree_bound);
      for (const auto& rel : rels.relations)
        if (std::any_of(rel.degree.begin(), rel.degree.end(), [](int v) { return v > 2; }))
          f.relation_violations.push_back(rel.degree);
      if (!f.generator_violations.empty() || !f.relation_violations.empty())
        scan.findings.push_back(std::move(f));
    }
  }
  return scan;
}

}  // namespace stralg
