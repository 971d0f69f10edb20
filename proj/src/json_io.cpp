#include "stralg/json_io.hpp"

#include <algorithm>

namespace stralg {

Json json_dimvec(const DimVec& ascending) {
  return Json(to_display(ascending));
}

Json json_graph(const UpDownGraph& g) {
  Json j;
  j["n"] = g.n;
  j["levels"] = json_dimvec(g.levels);
  Json edges = Json::array();
  std::vector<GraphEdge> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());
  for (const GraphEdge& e : sorted) {
    Json je;
    je["color"] = e.color == Color::red ? "red" : "blue";
    je["from"] = {e.i, e.row_hi};
    je["to"] = {e.i - 1, e.row_lo};
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j;
}

Json json_decomposition(const Decomposition& d) {
  Json j;
  j["beta"] = json_dimvec(d.beta);
  j["summand_count"] = d.summand_count();
  Json arr = Json::array();
  for (const auto& s : d.summands) {
    Json js;
    js["kind"] = kind_name(s.kind);
    js["dims"] = json_dimvec(s.dims);
    if (s.kind == Kind::band) js["band"] = Json(to_display(s.band_data));
    js["multiplicity"] = s.multiplicity;
    arr.push_back(js);
  }
  j["summands"] = arr;
  return j;
}

Json json_matching(const Matching& t) {
  Json j;
  j["n"] = t.n;
  Json pairs = Json::array();
  std::vector<std::pair<MatchPoint, MatchPoint>> listed;
  auto order_key = [](const MatchPoint& p) { return std::pair(p.is_y, p.index); };
  for (int i = 1; i <= t.n - 1; ++i)
    for (bool is_y : {false, true}) {
      MatchPoint p{i, is_y};
      MatchPoint q = t.apply(p);
      if (order_key(p) < order_key(q)) listed.push_back({p, q});
    }
  std::sort(listed.begin(), listed.end(),
            [&](const auto& a, const auto& b) { return order_key(a.first) < order_key(b.first); });
  for (const auto& [p, q] : listed) pairs.push_back({p.name(), q.name()});
  j["theta"] = pairs;
  return j;
}

Json json_ring(const RingAnalysis& r) {
  Json j;
  j["n"] = r.matching.n;
  j["theta"] = json_matching(r.matching)["theta"];
  Json gens = Json::array();
  for (const auto& g : r.presentation.generators) {
    Json jg;
    jg["exponents"] = g;
    jg["monomial"] = monomial_string(g, r.presentation.n);
    gens.push_back(jg);
  }
  j["generators"] = gens;
  Json rels = Json::array();
  for (const auto& rel : r.presentation.relations.relations) {
    Json jr;
    jr["lhs"] = rel.lhs;
    jr["rhs"] = rel.rhs;
    jr["degree"] = rel.degree;
    rels.push_back(jr);
  }
  j["relations"] = rels;
  j["dim"] = r.presentation.krull_dim;
  j["codim"] = r.presentation.codim;
  j["classification"] = ring_kind_name(r.classification.kind);
  j["degree_bound"] = r.classification.degree_bound_used;
  j["stabilized"] = r.classification.stabilized;
  return j;
}

Json json_rigidity(const RigidityReport& r) {
  Json j;
  Json spec;
  spec["beta"] = json_dimvec(r.comp.beta);
  spec["r"] = Json(to_display(r.comp.r));
  spec["s"] = Json(to_display(r.comp.s));
  spec["kind"] = kind_name(r.comp.kind);
  j["spec"] = spec;
  j["trials"] = r.trials;
  j["prime"] = r.prime;
  j["seed"] = r.seed;
  j["passes"] = r.passes;
  j["failures"] = r.failures;
  Json table = Json::array();
  for (const auto& t : r.table) {
    Json jt;
    jt["trial"] = t.trial;
    jt["scalars_m"] = t.scalars_m;
    jt["scalars_n"] = t.scalars_n;
    jt["hom"] = t.hom;
    jt["ext1"] = t.ext1;
    jt["euler"] = t.euler;
    jt["euler_ok"] = t.euler_ok;
    jt["pass"] = t.pass;
    if (!t.pass)
      jt["finding"] = t.scalar_collision ? "non-generic scalar collision" : "rigidity failure";
    table.push_back(jt);
  }
  j["hom_ext_table"] = table;
  return j;
}

Json json_scan(const ConjectureScan& s) {
  Json j;
  j["n_max"] = s.n_max;
  j["degree_bound"] = s.degree_bound;
  j["matchings_scanned"] = s.matchings_scanned;
  Json arr = Json::array();
  for (const auto& f : s.findings) {
    Json jf;
    jf["n"] = f.n;
    jf["theta"] = json_matching(f.matching)["theta"];
    jf["generator_violations"] = f.generator_violations;
    jf["relation_violations"] = f.relation_violations;
    arr.push_back(jf);
  }
  j["findings"] = arr;
  j["summary"] = s.findings.empty() ? "none found" : "violations found";
  return j;
}

}  // namespace stralg
