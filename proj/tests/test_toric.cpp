#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "stralg/toric.hpp"

using namespace stralg;

namespace {

Matching n5_case_d() {
  return Matching::from_pairs(5, {{{1, false}, {4, false}},
                                  {{1, true}, {4, true}},
                                  {{2, false}, {2, true}},
                                  {{3, false}, {3, true}}});
}

}  // namespace

TEST_CASE("control equations") {
  SUBCASE("identity, n=2") {
    ControlSystem cs = control_equations(Matching::identity(2));
    REQUIRE(cs.equations.size() == 1);
    CHECK(cs.equations[0] == std::vector<int>{1, 1, -1, -1});
  }
  SUBCASE("empty matching, n=1") {
    CHECK(control_equations(Matching::identity(1)).equations.empty());
  }
  SUBCASE("letter swap closure") {
    for (int n = 2; n <= 6; ++n)
      for (const Matching& t : enumerate_matchings(n)) {
        ControlSystem cs = control_equations(t);
        std::set<std::vector<int>> rows(cs.equations.begin(), cs.equations.end());
        for (auto row : cs.equations) {
          // swap the u and v halves and normalize the leading sign
          std::rotate(row.begin(), row.begin() + n, row.end());
          for (int c : row) {
            if (c > 0) break;
            if (c < 0) {
              for (int& x : row) x = -x;
              break;
            }
          }
          CHECK(rows.count(row) == 1);
        }
      }
  }
  SUBCASE("coefficient shape") {
    // two +1 and two -1 in general; adjacent same-letter links cancel the
    // shared variable and leave one of each (the reducible pattern)
    for (const Matching& t : enumerate_matchings(5))
      for (const auto& row : control_equations(t).equations) {
        long plus = std::count(row.begin(), row.end(), 1);
        long minus = std::count(row.begin(), row.end(), -1);
        CHECK(plus == minus);
        CHECK((plus == 2 || plus == 1));
        CHECK(std::count(row.begin(), row.end(), 0) ==
              static_cast<long>(row.size()) - plus - minus);
      }
  }
}

TEST_CASE("hilbert basis") {
  SUBCASE("n=1: the two unit vectors") {
    auto basis = hilbert_basis(control_equations(Matching::identity(1)));
    CHECK(basis == std::vector<ExponentVec>{{0, 1}, {1, 0}});
  }
  SUBCASE("identity matchings for 2 <= n <= 8") {
    for (int n = 2; n <= 8; ++n) {
      auto basis = hilbert_basis(control_equations(Matching::identity(n)));
      std::set<ExponentVec> want;
      for (int i = 1; i <= n; ++i) {
        ExponentVec x(2 * n, 0);
        x[i - 1] = x[n + i - 1] = 1;
        want.insert(x);
      }
      ExponentVec y1(2 * n, 0), y2(2 * n, 0);
      for (int i = 1; i <= n; ++i) {
        (i % 2 ? y1 : y2)[i - 1] = 1;
        (i % 2 ? y2 : y1)[n + i - 1] = 1;
      }
      want.insert(y1);
      want.insert(y2);
      CHECK(std::set<ExponentVec>(basis.begin(), basis.end()) == want);
    }
  }
  SUBCASE("brute-force box oracle, n <= 3") {
    for (int n = 2; n <= 3; ++n)
      for (const Matching& t : enumerate_matchings(n)) {
        ControlSystem cs = control_equations(t);
        auto basis = hilbert_basis(cs);
        auto sols = oracles::boxed_solutions(cs, 4);
        auto minimal = oracles::minimal_of(sols);
        std::set<ExponentVec> basis_in_box;
        for (const auto& g : basis)
          if (std::all_of(g.begin(), g.end(), [](int v) { return v <= 4; }))
            basis_in_box.insert(g);
        CHECK(std::set<ExponentVec>(minimal.begin(), minimal.end()) == basis_in_box);
        for (const auto& s : sols) CHECK(oracles::decomposes(s, basis));
      }
  }
}

TEST_CASE("minimal relations") {
  SUBCASE("identity n=4: the single pinned relation") {
    auto gens = hilbert_basis(control_equations(Matching::identity(4)));
    auto rs = minimal_relations(gens, 4);
    REQUIRE(rs.relations.size() == 1);
    CHECK(rs.stabilized);
    CHECK(rs.relations[0].degree == ExponentVec(8, 1));
  }
  SUBCASE("n=5 case with a same-letter end link") {
    auto gens = hilbert_basis(control_equations(n5_case_d()));
    auto rs = minimal_relations(gens, 4);
    CHECK(rs.relations.size() == 2);
  }
  SUBCASE("relation sides carry equal exponent sums") {
    for (const Matching& t : enumerate_matchings(5)) {
      auto gens = hilbert_basis(control_equations(t));
      for (const Relation& r : minimal_relations(gens, 4).relations) {
        ExponentVec lhs(gens.front().size(), 0), rhs(lhs);
        for (int g : r.lhs)
          for (size_t k = 0; k < lhs.size(); ++k) lhs[k] += gens[g][k];
        for (int g : r.rhs)
          for (size_t k = 0; k < rhs.size(); ++k) rhs[k] += gens[g][k];
        CHECK(lhs == rhs);
        CHECK(lhs == r.degree);
      }
    }
  }
  SUBCASE("relations are irredundant") {
    for (const Matching& t : {Matching::identity(4), n5_case_d()}) {
      auto gens = hilbert_basis(control_equations(t));
      auto rs = minimal_relations(gens, 4);
      for (size_t skip = 0; skip < rs.relations.size(); ++skip) {
        // removing one relation must disconnect its own fiber: the two sides
        // must no longer be joined by the remaining relations
        const Relation& removed = rs.relations[skip];
        std::vector<Relation> rest;
        for (size_t k = 0; k < rs.relations.size(); ++k)
          if (k != skip) rest.push_back(rs.relations[k]);
        // breadth-first over rewrite moves from the lhs
        std::set<std::vector<int>> seen{removed.lhs};
        std::vector<std::vector<int>> queue{removed.lhs};
        bool reached = false;
        while (!queue.empty() && !reached) {
          auto cur = queue.back();
          queue.pop_back();
          for (const Relation& r : rest)
            for (const auto* side : {&r.lhs, &r.rhs}) {
              const auto& other = (side == &r.lhs) ? r.rhs : r.lhs;
              // try to apply side -> other inside cur
              std::vector<int> pool = cur;
              bool contains = true;
              for (int g : *side) {
                auto it = std::find(pool.begin(), pool.end(), g);
                if (it == pool.end()) {
                  contains = false;
                  break;
                }
                pool.erase(it);
              }
              if (!contains) continue;
              pool.insert(pool.end(), other.begin(), other.end());
              std::sort(pool.begin(), pool.end());
              if (pool == removed.rhs) reached = true;
              if (seen.insert(pool).second) queue.push_back(pool);
            }
        }
        CHECK(!reached);
      }
    }
  }
}

TEST_CASE("ring classification") {
  SUBCASE("identity matchings are hypersurfaces with n+2 generators") {
    for (int n = 2; n <= 8; ++n) {
      RingClassification c = classify_ring(Matching::identity(n));
      CHECK(c.kind == RingKind::hypersurface);
      CHECK(c.generator_count == n + 2);
      CHECK(c.relation_count == 1);
      CHECK(c.stabilized);
    }
  }
  SUBCASE("n=3 same-letter link: polynomial ring") {
    Matching t = Matching::from_pairs(3, {{{1, false}, {2, false}}, {{1, true}, {2, true}}});
    RingClassification c = classify_ring(t);
    CHECK(c.kind == RingKind::polynomial);
    CHECK(c.generator_count == 4);
    CHECK(c.codim == 0);
  }
  SUBCASE("n=5 same-letter end link: complete intersection of codimension 2") {
    RingClassification c = classify_ring(n5_case_d());
    CHECK(c.kind == RingKind::complete_intersection);
    CHECK(c.codim == 2);
  }
}

TEST_CASE("matching reduction") {
  SUBCASE("identity matchings are irreducible") {
    auto red = reduce_matching(Matching::identity(5));
    CHECK(red.stripped_pairs == 0);
    CHECK(red.reduced == Matching::identity(5));
  }
  SUBCASE("n=1 empty matching unchanged") {
    CHECK(reduce_matching(Matching::identity(1)).stripped_pairs == 0);
  }
  SUBCASE("adjacent same-letter pair strips to a two-variable extension") {
    Matching t = Matching::from_pairs(5, {{{2, false}, {3, false}},
                                          {{2, true}, {3, true}},
                                          {{1, false}, {1, true}},
                                          {{4, false}, {4, true}}});
    auto red = reduce_matching(t);
    CHECK(red.stripped_pairs == 1);
    CHECK(red.reduced.n == 3);
    CHECK(red.reduced.is_identity());
    RingAnalysis big = analyze_ring(t), small = analyze_ring(red.reduced);
    CHECK(big.classification.codim == small.classification.codim);
    CHECK(big.classification.relation_count == small.classification.relation_count);
    CHECK(big.presentation.generators.size() == small.presentation.generators.size() + 2);
  }
}

TEST_CASE("symmetric unmixed even matchings up to n = 6 are complete intersections") {
  MatchingFlags flags;
  flags.even = flags.unmixed = true;
  for (int n = 2; n <= 6; ++n)
    for (const Matching& t : enumerate_matchings(n, flags)) {
      RingClassification c = classify_ring(t);
      CHECK(c.stabilized);
      CHECK(c.kind != RingKind::not_complete_intersection);
    }
}

TEST_CASE("matching enumeration") {
  MatchingFlags all{true, true, true};
  CHECK(enumerate_matchings(4, all).size() == 2);
  CHECK(enumerate_matchings(5, all).size() == 4);
  CHECK(enumerate_matchings(6, all).size() == 8);
  // without the flags: all symmetric fixed-point-free involutions
  CHECK(enumerate_matchings(2).size() == 1);
  CHECK(enumerate_matchings(3).size() == 3);
  CHECK(enumerate_matchings(4).size() == 7);
  for (const Matching& t : enumerate_matchings(5)) {
    CHECK(matching_predicates(t).symmetric);
    for (int i = 1; i <= t.n - 1; ++i) {
      CHECK(t.apply(t.apply({i, false})) == MatchPoint{i, false});
      CHECK(!(t.apply({i, false}) == MatchPoint{i, false}));
    }
  }

  SUBCASE("mirror reduction keeps one matching per class") {
    for (int n = 4; n <= 6; ++n) {
      MatchingFlags flags{true, true, true, false};
      MatchingFlags reduced_flags{true, true, true, true};
      auto full = enumerate_matchings(n, flags);
      auto reduced = enumerate_matchings(n, reduced_flags);
      CHECK(reduced.size() <= full.size());
      // every matching's mirror class meets the reduced list exactly once
      auto mirror = [&](const Matching& t) {
        std::vector<std::pair<MatchPoint, MatchPoint>> ps;
        for (int i = 1; i <= n - 1; ++i)
          for (bool is_y : {false, true}) {
            MatchPoint q = t.apply({i, is_y});
            ps.push_back({{n - i, is_y}, {n - q.index, q.is_y}});
          }
        return Matching::from_pairs(n, ps);
      };
      for (const Matching& t : full) {
        int hits = 0;
        for (const Matching& r : reduced) hits += (r == t) + (r == mirror(t)) * (!(t == mirror(t)));
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("torus invariance oracle") {
  CHECK(invariance_oracle(Matching::identity(2), 6));
  CHECK(invariance_oracle(Matching::identity(1), 6));  // vacuous
  Matching ex8 = Matching::from_pairs(7, {{{1, false}, {3, true}},
                                          {{2, false}, {2, true}},
                                          {{3, false}, {1, true}},
                                          {{4, false}, {6, true}},
                                          {{5, false}, {5, true}},
                                          {{6, false}, {4, true}}});
  CHECK(invariance_oracle(ex8, 4));
}

TEST_CASE("generator and relation bound scan") {
  ConjectureScan s = conjecture_scan(4, 4);
  CHECK(s.matchings_scanned == 1 + 3 + 7);
  // deterministic across runs
  ConjectureScan s2 = conjecture_scan(4, 4);
  CHECK(s.findings.size() == s2.findings.size());
  for (const auto& f : s.findings)
    CHECK((!f.generator_violations.empty() || !f.relation_violations.empty()));
}
