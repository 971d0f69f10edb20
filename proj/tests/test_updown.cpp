#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "stralg/updown.hpp"

using namespace stralg;

namespace {

UpDownGraph band_graph(std::vector<int> display) {
  return build_updown_graph(band_component(Band::from_display(std::move(display))));
}

long long graph_count(const Band& b) {
  return static_cast<long long>(decompose_graph(build_updown_graph(band_component(b))).size());
}

// every band vector with entries in [1, hi]
std::vector<std::vector<int>> all_bands(int n, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 1);
  for (;;) {
    out.push_back(cur);
    int pos = 0;
    while (pos < n && cur[pos] == hi) cur[pos++] = 1;
    if (pos == n) break;
    cur[pos]++;
  }
  return out;
}

}  // namespace

TEST_CASE("the 4-cycle of band [1,1]") {
  UpDownGraph g = band_graph({1, 1});
  REQUIRE(g.vertex_count() == 4);
  std::vector<GraphEdge> want = {{2, 1, 1, Color::red},
                                 {2, 1, 2, Color::blue},
                                 {1, 2, 1, Color::red},
                                 {1, 1, 1, Color::blue}};
  std::sort(want.begin(), want.end());
  std::vector<GraphEdge> got = g.edges;
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  auto comps = decompose_graph(g);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].kind == Kind::band);
}

TEST_CASE("vertex color degrees of band graphs") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<int> m(n);
    for (int& v : m) v = 1 + static_cast<int>(rng() % 4);
    Band b(m);
    UpDownGraph g = build_updown_graph(band_component(b));
    long long m_sum = std::accumulate(m.begin(), m.end(), 0LL);
    long long reds = 0, blues = 0;
    for (const GraphEdge& e : g.edges) (e.color == Color::red ? reds : blues)++;
    CHECK(reds == m_sum);
    CHECK(blues == m_sum);
    for (int lvl = 0; lvl <= n; ++lvl)
      for (int row = 1; row <= g.levels[lvl]; ++row) {
        CHECK(g.incident({lvl, row}, Color::red) >= 0);
        CHECK(g.incident({lvl, row}, Color::blue) >= 0);
      }
  }
}

TEST_CASE("level counts of components add up to beta") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 1 + static_cast<int>(rng() % 4);
    DimVec beta(n + 1);
    for (int& v : beta) v = static_cast<int>(rng() % 4);
    auto comps_of = enumerate_components(Algebra(n), beta);
    const Component& c = comps_of[rng() % comps_of.size()];
    auto parts = decompose_graph(build_updown_graph(c));
    DimVec acc(n + 1, 0);
    for (const auto& p : parts)
      for (int k = 0; k <= n; ++k) acc[k] += p.level_counts[k];
    CHECK(acc == beta);
  }
}

TEST_CASE("components of a band graph rebuild to isomorphic graphs") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 1 + static_cast<int>(rng() % 4);
    std::vector<int> m(n);
    for (int& v : m) v = 1 + static_cast<int>(rng() % 4);
    auto comps = decompose_graph(build_updown_graph(band_component(Band(m))));
    for (const auto& comp : comps) {
      REQUIRE(comp.kind == Kind::band);
      DimVec beta(n + 1, 0);
      auto at = [&](int i) { return (i >= 1 && i <= n) ? comp.band_data[i - 1] : 0; };
      for (int i = 0; i <= n; ++i) beta[i] = at(i) + at(i + 1);
      UpDownGraph fresh = build_updown_graph_raw(beta, comp.band_data, comp.band_data);
      CHECK(canonical_form(comp, n) == canonical_form(fresh));
    }
  }
}

TEST_CASE("generic decomposition of small bands") {
  SUBCASE("[4,6] splits as 2 x [2,3]") {
    Decomposition d = generic_decomposition(band_component(Band::from_display({4, 6})));
    REQUIRE(d.summands.size() == 1);
    CHECK(d.summands[0].multiplicity == 2);
    CHECK(to_display(d.summands[0].band_data) == std::vector<int>{2, 3});
  }
  SUBCASE("[1,2,1] splits as [1,1,1] + [0,1,0]") {
    Decomposition d = generic_decomposition(band_component(Band::from_display({1, 2, 1})));
    CHECK(d.summand_count() == 2);
    std::multiset<std::vector<int>> got;
    for (const auto& s : d.summands)
      for (int k = 0; k < s.multiplicity; ++k) got.insert(to_display(s.band_data));
    CHECK(got == std::multiset<std::vector<int>>{{0, 1, 0}, {1, 1, 1}});
  }
  SUBCASE("[2,3,1] is a Schur component") {
    Decomposition d = generic_decomposition(band_component(Band::from_display({2, 3, 1})));
    CHECK(d.summand_count() == 1);
    CHECK(d.summands[0].kind == Kind::band);
  }
  SUBCASE("summands add up to beta") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 30; ++rep) {
      int n = 1 + static_cast<int>(rng() % 5);
      std::vector<int> m(n);
      for (int& v : m) v = 1 + static_cast<int>(rng() % 4);
      Component c = band_component(Band(m));
      Decomposition d = generic_decomposition(c);
      DimVec acc(n + 1, 0);
      for (const auto& s : d.summands)
        for (int k = 0; k <= n; ++k) acc[k] += s.multiplicity * s.dims[k];
      CHECK(acc == c.beta);
    }
  }
}

TEST_CASE("band reduction counts") {
  CHECK(reduce_band(Band::from_display({6, 4})).summand_count == 2);
  CHECK(reduce_band(Band::from_display({3, 4, 1})).summand_count == 2);
  CHECK(reduce_band(Band::from_display({1, 1})).summand_count == 1);

  SUBCASE("reduction count equals the graph component count") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& m : all_bands(n, 4)) {
        Band b(m);
        CHECK(reduce_band(b).summand_count == graph_count(b));
      }
  }
  SUBCASE("gcd closures against graph counts") {
    for (int m2 = 1; m2 <= 8; ++m2)
      for (int m1 = 1; m1 <= 8; ++m1)
        CHECK(graph_count(Band({m1, m2})) == std::gcd(m2, m1));
    for (int m3 = 1; m3 <= 5; ++m3)
      for (int m2 = 1; m2 <= 5; ++m2)
        for (int m1 = 1; m1 <= 5; ++m1) {
          long long want = std::gcd((long long)m2, std::abs((long long)m3 - m1));
          CHECK(graph_count(Band({m1, m2, m3})) == want);
        }
  }
}

TEST_CASE("string reduction counts match the graph") {
  Component simple = Component::make(parse_display({2, 1}), {1}, {1});
  CHECK(reduce_string(simple).summand_count == 1);

  Component ex3 = Component::make(parse_display({2, 3, 2, 4, 2}), parse_display({2, 0, 2, 2}),
                                  parse_display({2, 1, 1, 2}));
  CHECK(reduce_string(ex3).summand_count == 2);

  Component small = Component::make(parse_display({1, 2, 2}), parse_display({1, 1}),
                                    parse_display({1, 1}));
  CHECK(reduce_string(small).summand_count ==
        static_cast<long long>(decompose_graph(build_updown_graph(small)).size()));

  SUBCASE("exhaustive cross-check over enumerated string components") {
    std::mt19937_64 rng(37);
    int checked = 0;
    for (int rep = 0; rep < 200 && checked < 120; ++rep) {
      int n = 1 + static_cast<int>(rng() % 4);
      DimVec beta(n + 1);
      for (int& v : beta) v = static_cast<int>(rng() % 5);
      for (const Component& c : enumerate_components(Algebra(n), beta)) {
        if (!is_string_component(c)) continue;
        ++checked;
        auto red = reduce_string(c);
        auto comps = decompose_graph(build_updown_graph(c));
        CHECK(red.summand_count == static_cast<long long>(comps.size()));
      }
    }
    CHECK(checked >= 50);
  }
  CHECK_THROWS_AS(reduce_string(band_component(Band::from_display({1, 1}))),
                  std::invalid_argument);
}

TEST_CASE("dot output") {
  UpDownGraph empty;
  empty.n = 0;
  empty.levels = {0};
  std::string dot = to_dot(empty);
  CHECK(dot.find("graph updown {") == 0);
  CHECK(dot.find("e_") == std::string::npos);

  std::string small = to_dot(band_graph({1, 1}));
  CHECK(std::count(small.begin(), small.end(), '\n') == 12);  // 3 header + 4 + 4 + footer
  CHECK(small.find("e_2_1 -- e_1_1 [color=red, style=solid];") != std::string::npos);
  CHECK(small.find("style=dashed") != std::string::npos);

  std::string bigger = to_dot(band_graph({2, 3, 1}));
  size_t names = 0, edges = 0;
  for (size_t pos = bigger.find("e_"); pos != std::string::npos;
       pos = bigger.find("e_", pos + 2))
    ++names;
  for (size_t pos = bigger.find(" -- "); pos != std::string::npos;
       pos = bigger.find(" -- ", pos + 4))
    ++edges;
  CHECK(names == 12 + 2 * 12);  // 12 node declarations, 12 edges with two endpoints
  CHECK(edges == 12);

  // determinism
  CHECK(to_dot(band_graph({2, 3, 1})) == bigger);
}
