#include "stralg/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "stralg/modules.hpp"
#include "stralg/toric.hpp"
#include "stralg/updown.hpp"
#include "stralg/weights.hpp"

namespace stralg {

namespace {

GraphEdge edge(int i, int hi, int lo, Color c) { return {i, hi, lo, c}; }

std::vector<GraphEdge> sorted_edges(std::vector<GraphEdge> e) {
  std::sort(e.begin(), e.end());
  return e;
}

ExponentVec expo(int n, std::vector<int> a_idx, std::vector<int> b_idx) {
  ExponentVec e(2 * n, 0);
  for (int i : a_idx) e[i - 1]++;
  for (int i : b_idx) e[n + i - 1]++;
  return e;
}

Matching example8_matching() {
  return Matching::from_pairs(
      7, {{{1, false}, {3, true}},
          {{2, false}, {2, true}},
          {{3, false}, {1, true}},
          {{4, false}, {6, true}},
          {{5, false}, {5, true}},
          {{6, false}, {4, true}}});
}

struct Runner {
  std::vector<FixtureResult> results;

  void run(const std::string& name, const std::function<std::string()>& body) {
    FixtureResult r;
    r.name = name;
    try {
      r.detail = body();  // empty string means pass
      r.pass = r.detail.empty();
      if (r.pass) r.detail = "ok";
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

template <class T>
std::string expect_eq(const T& got, const T& want, const std::string& what) {
  if (got == want) return "";
  std::ostringstream os;
  os << what << " mismatch";
  return os.str();
}

}  // namespace

std::vector<FixtureResult> run_fixtures() {
  Runner R;

  R.run("components of beta (2,3,2,4,2) include ranks (2,0,2,2)/(2,1,1,2)", [] {
    Algebra a(4);
    DimVec beta = parse_display({2, 3, 2, 4, 2});
    auto r = parse_display({2, 0, 2, 2});
    auto s = parse_display({2, 1, 1, 2});
    for (const Component& c : enumerate_components(a, beta))
      if (c.r == r && c.s == s) return std::string();
    return std::string("pair not found");
  });

  R.run("band [2,3,1] has dimension vector (2,5,4,1)", [] {
    Component c = band_component(Band::from_display({2, 3, 1}));
    return expect_eq(to_display(c.beta), {2, 5, 4, 1}, "beta");
  });

  R.run("component ((2,3,2,4,2);2,0,2,2;2,1,1,2) is a string component", [] {
    Component c = Component::make(parse_display({2, 3, 2, 4, 2}), parse_display({2, 0, 2, 2}),
                                  parse_display({2, 1, 1, 2}));
    return std::string(is_string_component(c) ? "" : "not detected as string");
  });

  R.run("graph of band [2,3,1]: the twelve pinned edges", [] {
    UpDownGraph g = build_updown_graph(band_component(Band::from_display({2, 3, 1})));
    std::vector<GraphEdge> want = {
        edge(3, 1, 1, Color::red),  edge(3, 2, 2, Color::red),
        edge(3, 2, 5, Color::blue), edge(3, 1, 4, Color::blue),
        edge(2, 5, 4, Color::red),  edge(2, 4, 3, Color::red),
        edge(2, 3, 2, Color::red),  edge(2, 1, 1, Color::blue),
        edge(2, 2, 2, Color::blue), edge(2, 3, 3, Color::blue),
        edge(1, 1, 1, Color::red),  edge(1, 4, 1, Color::blue)};
    return expect_eq(sorted_edges(g.edges), sorted_edges(want), "edge set");
  });

  R.run("graph of ((2,3,2,4,2);2,0,2,2;2,1,1,2): pinned edges", [] {
    UpDownGraph g = build_updown_graph(
        Component::make(parse_display({2, 3, 2, 4, 2}), parse_display({2, 0, 2, 2}),
                        parse_display({2, 1, 1, 2})));
    std::vector<GraphEdge> want = {
        edge(4, 1, 1, Color::red),  edge(4, 2, 2, Color::red),
        edge(4, 2, 3, Color::blue), edge(4, 1, 2, Color::blue),
        edge(3, 1, 1, Color::blue), edge(2, 1, 1, Color::red),
        edge(2, 2, 2, Color::red),  edge(2, 2, 4, Color::blue),
        edge(1, 4, 2, Color::red),  edge(1, 3, 1, Color::red),
        edge(1, 1, 1, Color::blue), edge(1, 2, 2, Color::blue)};
    return expect_eq(sorted_edges(g.edges), sorted_edges(want), "edge set");
  });

  R.run("graph (5,9,7,3) splits into bands (2,4,3,1) and (3,5,4,2)", [] {
    auto comps = decompose_graph(
        build_updown_graph(band_component(Band::from_display({5, 4, 3}))));
    if (comps.size() != 2) return std::string("expected two components");
    std::multiset<std::vector<int>> got, want;
    for (const auto& c : comps) got.insert(to_display(c.level_counts));
    want.insert({2, 4, 3, 1});
    want.insert({3, 5, 4, 2});
    if (got != want) return std::string("level counts mismatch");
    // each component rebuilt from its own band data is isomorphic to it
    for (const auto& c : comps) {
      UpDownGraph fresh = build_updown_graph_raw(
          [&] {
            DimVec beta(4, 0);
            auto m = [&](int i) { return (i >= 1 && i <= 3) ? c.band_data[i - 1] : 0; };
            for (int i = 0; i <= 3; ++i) beta[i] = m(i) + m(i + 1);
            return beta;
          }(),
          c.band_data, c.band_data);
      if (!(canonical_form(c, 3) == canonical_form(fresh)))
        return std::string("component not isomorphic to its rebuilt graph");
    }
    return std::string();
  });

  R.run("graph of ((2,3,2,4,2);...) has one band and one string component", [] {
    auto comps = decompose_graph(build_updown_graph(
        Component::make(parse_display({2, 3, 2, 4, 2}), parse_display({2, 0, 2, 2}),
                        parse_display({2, 1, 1, 2}))));
    int bands = 0, strings = 0;
    for (const auto& c : comps) (c.kind == Kind::band ? bands : strings)++;
    return std::string(bands == 1 && strings == 1 ? "" : "wrong component kinds");
  });

  R.run("string reduction of ((2,3,2,4,2);...) counts two summands", [] {
    Component c = Component::make(parse_display({2, 3, 2, 4, 2}), parse_display({2, 0, 2, 2}),
                                  parse_display({2, 1, 1, 2}));
    auto red = reduce_string(c);
    if (red.summand_count != 2) return std::string("expected N = 2");
    auto comps = decompose_graph(build_updown_graph(c));
    return std::string(red.summand_count == static_cast<long long>(comps.size()) ? "" : "oracle mismatch");
  });

  R.run("up-and-down module for (2,4,5,3) realizes the pinned graph", [] {
    Component c = band_component(Band::from_display({2, 2, 3}));
    Rep rep = build_module(ModuleSpec::updown(c, {7}));
    UpDownGraph g = build_updown_graph(c);
    for (const GraphEdge& e : g.edges) {
      const IntMat& m = rep.arrow(e.color == Color::blue, e.i);
      if (m.at(e.row_lo - 1, e.row_hi - 1) == 0) return std::string("missing edge entry");
    }
    long long total = 0;
    for (const auto* fam : {&rep.a, &rep.b})
      for (const IntMat& m : *fam)
        for (long long v : m.a) total += (v != 0);
    if (total != static_cast<long long>(g.edges.size()))
      return std::string("extra nonzero entries");
    if (!rep.satisfies_relations()) return std::string("relations violated");
    return std::string();
  });

  R.run("resolution of band [2,2,3]: P_3+P_1+P_3 covered by three P_0", [] {
    Resolution res = projective_resolution(
        ModuleSpec::updown(band_component(Band::from_display({2, 2, 3}))));
    if (res.summand_levels(0) != std::vector<int>{3, 1, 3})
      return std::string("wrong generator levels");
    if (res.summand_levels(1) != std::vector<int>{0, 0, 0})
      return std::string("wrong syzygy levels");
    DimVec p0 = res.term_dimvec(0), p1 = res.term_dimvec(1);
    DimVec diff(p0.size());
    for (size_t k = 0; k < p0.size(); ++k) diff[k] = p0[k] - p1[k];
    if (to_display(diff) != std::vector<int>{2, 4, 5, 3})
      return std::string("telescoping failed");
    // pinned differential: rows P_3,P_1,P_3 and columns the three P_0 in
    // traversal order; entries as words with the scalar on the first segment
    struct Want {
      int to, from, sign;
      bool scalar;
      std::string word;
    };
    std::vector<Want> want = {{0, 0, 1, true, "a1b2a3"}, {1, 0, -1, false, "b1"},
                              {1, 1, 1, false, "a1"},    {2, 1, -1, false, "b1a2b3"},
                              {2, 2, 1, false, "a1b2a3"}, {0, 2, -1, false, "b1a2b3"}};
    if (res.entries.size() != want.size()) return std::string("wrong entry count");
    for (const auto& w : want) {
      bool found = false;
      for (const ResEntry& e : res.entries)
        if (e.degree == 1 && e.to == w.to && e.from == w.from && e.sign == w.sign &&
            (e.scalar_component >= 0) == w.scalar && word_string(e.word) == w.word)
          found = true;
      if (!found) return std::string("entry missing: ") + w.word;
    }
    return std::string();
  });

  R.run("generic modules of a string component: (hom, ext1) = (1, 0)", [] {
    Component c = Component::make(parse_display({2, 3, 2, 4, 2}), parse_display({2, 0, 2, 2}),
                                  parse_display({2, 1, 1, 2}));
    // two independent members of the family: the lone string summand carries
    // the one-dimensional endomorphism space
    ModuleSpec m = ModuleSpec::updown(c, {5});
    ModuleSpec n = ModuleSpec::updown(c, {7});
    HomExt he = hom_ext_dims(m, n);
    return std::string(he.hom == 1 && he.ext1 == 0 ? "" : "unexpected dimensions");
  });

  R.run("pairing graph of [2,2,3]: 18 labels, 14 pairings, one distinguished cycle", [] {
    ExtGraph eg = ext_graph(ModuleSpec::updown(band_component(Band::from_display({2, 2, 3}))));
    if (eg.vertices.size() != 18) return std::string("vertex count");
    if (eg.edges.size() != 14) return std::string("edge count");
    int distinguished = 0;
    for (const auto& comp : eg.components) {
      if (comp.distinguished) {
        ++distinguished;
        if (comp.kind != Kind::band || comp.vertices.size() != 6)
          return std::string("distinguished component shape");
      } else if (comp.vertices.size() % 2 != 0 || comp.kind != Kind::string) {
        return std::string("non-distinguished component must be an even string");
      }
    }
    return std::string(distinguished == 1 ? "" : "expected one distinguished component");
  });

  R.run("band [2,3,1]: two critical orbits, two critical elements each", [] {
    Orbits o = orbit_partition(build_root_system(Band::from_display({2, 3, 1})));
    return std::string(o.critical_count() == 2 ? "" : "wrong critical orbit count");
  });

  R.run("band [1,2,2,1,2,3,1]: six critical orbits", [] {
    Orbits o = orbit_partition(build_root_system(Band::from_display({1, 2, 2, 1, 2, 3, 1})));
    return std::string(o.critical_count() == 6 ? "" : "wrong critical orbit count");
  });

  R.run("connected band [2,3,1] yields the identity matching", [] {
    auto comps =
        decompose_graph(build_updown_graph(band_component(Band::from_display({2, 3, 1}))));
    if (comps.size() != 1) return std::string("band unexpectedly disconnected");
    return std::string(extract_matching(Band::from_display({2, 3, 1})).is_identity()
                           ? ""
                           : "matching is not the identity");
  });

  R.run("matching of [1,2,2,1,2,3,1] pairs (x1 y3)(x2 y2)(x3 y1)(x4 y6)(x5 y5)(x6 y4)", [] {
    Matching got = extract_matching(Band::from_display({1, 2, 2, 1, 2, 3, 1}));
    return std::string(got == example8_matching() ? "" : "unexpected matching");
  });

  R.run("n=3 matching x1<->x2: symmetric, even, unmixed", [] {
    Matching t = Matching::from_pairs(3, {{{1, false}, {2, false}}, {{1, true}, {2, true}}});
    auto p = matching_predicates(t);
    return std::string(p.symmetric && p.even && p.unmixed ? "" : "predicate failure");
  });

  R.run("characteristic weights of noncritical orbits carry semi-invariants", [] {
    RootSystem rs = build_root_system(Band::from_display({2, 2}));
    Orbits o = orbit_partition(rs);
    int checked = 0;
    for (size_t k = 0; k < o.orbits.size(); ++k) {
      if (o.critical[k]) continue;
      WeightPair w = characteristic_weight(rs, o, static_cast<int>(k));
      if (!contains_semiinvariant(w, rs, o)) return std::string("weight rejected");
      ++checked;
    }
    return std::string(checked > 0 ? "" : "no noncritical orbit available");
  });

  R.run("semi-invariant ring of [1,2,2,1,2,3,1] sits over the n=7 base matching", [] {
    SiRingStructure s = si_ring_structure(Band::from_display({1, 2, 2, 1, 2, 3, 1}));
    return std::string(s.base_matching == example8_matching() ? "" : "unexpected base matching");
  });

  R.run("shrinking the tall column of (1,3,9,11,4) keeps the matching", [] {
    // both graphs have two components and the same matching
    Band before = Band::from_display({1, 2, 7, 4});
    MatchingReductionReport rep = matching_reduction_check(before, 2);
    if (rep.rule != "b" || !rep.holds) return std::string("rule-b relation failed");
    auto n_before =
        decompose_graph(build_updown_graph(band_component(before))).size();
    auto n_after = decompose_graph(
                       build_updown_graph(band_component(Band::from_display({1, 2, 5, 4}))))
                       .size();
    return std::string(n_before == 2 && n_after == 2 ? "" : "component counts changed");
  });

  R.run("identity matching, n=2: single control equation", [] {
    ControlSystem cs = control_equations(Matching::identity(2));
    if (cs.equations.size() != 1) return std::string("equation count");
    return expect_eq(cs.equations[0], {1, 1, -1, -1}, "equation");
  });

  R.run("n=7 matching: the six pinned control equations", [] {
    ControlSystem cs = control_equations(example8_matching());
    auto row = [&](std::vector<int> u_pos, std::vector<int> v_pos) {
      std::vector<int> r(14, 0);
      for (int i : u_pos) r[i - 1] = 1;
      for (int i : v_pos) r[7 + i - 1] = -1;
      return r;
    };
    std::set<std::vector<int>> want = {row({1, 2}, {3, 4}), row({2, 3}, {2, 3}),
                                       row({3, 4}, {1, 2}), row({4, 5}, {6, 7}),
                                       row({5, 6}, {5, 6}), row({6, 7}, {4, 5})};
    std::set<std::vector<int>> got(cs.equations.begin(), cs.equations.end());
    return std::string(got == want ? "" : "equations differ");
  });

  R.run("identity matching, n=2: Hilbert basis A1B1, A1B2, A2B1, A2B2", [] {
    auto basis = hilbert_basis(control_equations(Matching::identity(2)));
    std::set<ExponentVec> want = {expo(2, {1}, {1}), expo(2, {1}, {2}), expo(2, {2}, {1}),
                                  expo(2, {2}, {2})};
    return std::string(
        std::set<ExponentVec>(basis.begin(), basis.end()) == want ? "" : "basis differs");
  });

  R.run("n=7 matching: the eleven pinned generators", [] {
    auto basis = hilbert_basis(control_equations(example8_matching()));
    std::set<ExponentVec> want = {
        expo(7, {2}, {3}),          expo(7, {3}, {2}),
        expo(7, {5}, {6}),          expo(7, {6}, {5}),
        expo(7, {1, 7}, {4}),       expo(7, {4}, {1, 7}),
        expo(7, {1, 3}, {1, 3}),    expo(7, {5, 7}, {5, 7}),
        expo(7, {1, 4, 6}, {1, 4, 6}), expo(7, {2, 4, 6}, {2, 4, 6}),
        expo(7, {2, 4, 7}, {2, 4, 7})};
    return std::string(
        std::set<ExponentVec>(basis.begin(), basis.end()) == want ? "" : "basis differs");
  });

  R.run("identity matching, n=4: single relation X1X2X3X4 = Y1Y2", [] {
    auto gens = hilbert_basis(control_equations(Matching::identity(4)));
    auto rels = minimal_relations(gens, 4);
    if (rels.relations.size() != 1) return std::string("relation count");
    const Relation& r = rels.relations[0];
    ExponentVec all_ones(8, 1);
    if (r.degree != all_ones) return std::string("relation degree");
    bool shape_ok = (r.lhs.size() == 2 && r.rhs.size() == 4) ||
                    (r.lhs.size() == 4 && r.rhs.size() == 2);
    return std::string(shape_ok ? "" : "relation shape");
  });

  R.run("n=5 matching (x1 x4)(x2 y2)(x3 y3): two relations, codimension 2", [] {
    Matching t = Matching::from_pairs(5, {{{1, false}, {4, false}},
                                          {{1, true}, {4, true}},
                                          {{2, false}, {2, true}},
                                          {{3, false}, {3, true}}});
    RingAnalysis a = analyze_ring(t);
    if (a.presentation.generators.size() != 8) return std::string("generator count");
    if (a.classification.relation_count != 2) return std::string("relation count");
    if (a.classification.codim != 2) return std::string("codim");
    return std::string(a.classification.kind == RingKind::complete_intersection ? "" : "kind");
  });

  R.run("n=7 matching: five relations in the pinned multidegrees", [] {
    RingAnalysis a = analyze_ring(example8_matching());
    if (a.presentation.relations.relations.size() != 5) return std::string("relation count");
    auto deg = [&](std::vector<int> u) {
      ExponentVec d(14, 0);
      for (int i = 0; i < 7; ++i) d[i] = d[7 + i] = u[i];
      return d;
    };
    std::multiset<ExponentVec> want = {deg({1, 1, 0, 2, 0, 1, 1}), deg({1, 1, 1, 1, 0, 1, 0}),
                                       deg({1, 1, 1, 1, 0, 0, 1}), deg({1, 0, 0, 1, 1, 1, 1}),
                                       deg({0, 1, 0, 1, 1, 1, 1})};
    std::multiset<ExponentVec> got;
    for (const auto& r : a.presentation.relations.relations) got.insert(r.degree);
    return std::string(got == want ? "" : "multidegrees differ");
  });

  R.run("n=3 matching x1<->x2 gives a polynomial ring on four generators", [] {
    Matching t = Matching::from_pairs(3, {{{1, false}, {2, false}}, {{1, true}, {2, true}}});
    RingAnalysis a = analyze_ring(t);
    if (a.presentation.generators.size() != 4) return std::string("generator count");
    return std::string(a.classification.kind == RingKind::polynomial ? "" : "kind");
  });

  R.run("identity matchings are hypersurfaces for n = 2..8", [] {
    for (int n = 2; n <= 8; ++n) {
      RingClassification c = classify_ring(Matching::identity(n));
      if (c.kind != RingKind::hypersurface)
        return "failed at n = " + std::to_string(n);
    }
    return std::string();
  });

  R.run("n=7 matching: codimension 3, not a complete intersection", [] {
    RingClassification c = classify_ring(example8_matching());
    if (c.codim != 3) return std::string("codim");
    if (c.relation_count != 5) return std::string("relation count");
    return std::string(c.kind == RingKind::not_complete_intersection ? "" : "kind");
  });

  R.run("adjacent same-letter link strips to a polynomial extension", [] {
    Matching t = Matching::from_pairs(5, {{{2, false}, {3, false}},
                                          {{2, true}, {3, true}},
                                          {{1, false}, {1, true}},
                                          {{4, false}, {4, true}}});
    MatchingReduction red = reduce_matching(t);
    if (red.stripped_pairs != 1) return std::string("strip count");
    if (!red.reduced.is_identity() || red.reduced.n != 3)
      return std::string("reduced matching");
    RingAnalysis big = analyze_ring(t), small = analyze_ring(red.reduced);
    if (big.presentation.generators.size() != small.presentation.generators.size() + 2)
      return std::string("generator counts");
    if (big.classification.codim != small.classification.codim)
      return std::string("codim changed");
    if (big.classification.relation_count != small.classification.relation_count)
      return std::string("relation count changed");
    return std::string();
  });

  R.run("non-reducible matching counts for n = 4, 5, 6 are 2, 4, 8", [] {
    MatchingFlags flags{true, true, true};
    std::vector<int> want = {2, 4, 8};
    for (int n = 4; n <= 6; ++n)
      if (enumerate_matchings(n, flags).size() != static_cast<size_t>(want[n - 4]))
        return "count failed at n = " + std::to_string(n);
    return std::string();
  });

  R.run("squarefree generators and small relation degrees on the pinned rings", [] {
    for (const Matching& t : {Matching::identity(5), example8_matching()}) {
      auto gens = hilbert_basis(control_equations(t));
      for (const auto& g : gens)
        for (int v : g)
          if (v > 1) return std::string("generator exponent above 1");
      for (const auto& r : minimal_relations(gens, 4).relations)
        for (int v : r.degree)
          if (v > 2) return std::string("relation degree above 2");
    }
    return std::string();
  });

  R.run("ring of the band [1,2,2,1,2,3,1]: not a complete intersection", [] {
    Matching t = extract_matching(Band::from_display({1, 2, 2, 1, 2, 3, 1}));
    RingClassification c = classify_ring(t);
    bool ok = c.kind == RingKind::not_complete_intersection && c.codim == 3 &&
              c.relation_count == 5;
    return std::string(ok ? "" : "classification differs");
  });

  return R.results;
}

}  // namespace stralg
