#include "stralg/updown.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace stralg {

int UpDownGraph::vertex_count() const {
  return std::accumulate(levels.begin(), levels.end(), 0);
}

int UpDownGraph::incident(const GraphVertex& v, Color c) const {
  for (size_t k = 0; k < edges.size(); ++k) {
    const GraphEdge& e = edges[k];
    if (e.color != c) continue;
    if (e.hi() == v || e.lo() == v) return static_cast<int>(k);
  }
  return -1;
}

std::vector<GraphEdge> UpDownGraph::incident_edges(const GraphVertex& v) const {
  std::vector<GraphEdge> out;
  for (const GraphEdge& e : edges)
    if (e.hi() == v || e.lo() == v) out.push_back(e);
  return out;
}

namespace {

void add_transition_edges(std::vector<GraphEdge>& edges, int i, int bi, int bim1,
                          int count, bool upper, Color color) {
  for (int j = 1; j <= count; ++j) {
    if (upper)
      edges.push_back({i, j, j, color});
    else
      edges.push_back({i, bi + 1 - j, bim1 + 1 - j, color});
  }
}

}  // namespace

UpDownGraph build_updown_graph_raw(const DimVec& beta, const std::vector<int>& r,
                                   const std::vector<int>& s) {
  const int n = static_cast<int>(r.size());
  if (beta.size() != r.size() + 1 || r.size() != s.size())
    throw std::invalid_argument("build_updown_graph: length mismatch");
  auto rk = [&](const std::vector<int>& v, int i) { return (i >= 1 && i <= n) ? v[i - 1] : 0; };
  for (int i = 0; i <= n; ++i) {
    if (rk(r, i) + rk(r, i + 1) > beta[i] || rk(s, i) + rk(s, i + 1) > beta[i])
      throw std::invalid_argument("build_updown_graph: rank constraints violated");
    if (rk(r, i) < 0 || rk(s, i) < 0)
      throw std::invalid_argument("build_updown_graph: negative rank");
  }
  UpDownGraph g;
  g.n = n;
  g.levels = beta;
  for (int i = n; i >= 1; --i) {
    bool red_upper = ((n - i) % 2 == 0);
    add_transition_edges(g.edges, i, beta[i], beta[i - 1], r[i - 1], red_upper, Color::red);
    add_transition_edges(g.edges, i, beta[i], beta[i - 1], s[i - 1], !red_upper, Color::blue);
  }
  return g;
}

UpDownGraph build_updown_graph(const Component& c) {
  return build_updown_graph_raw(c.beta, c.r, c.s);
}

namespace {

struct Adjacency {
  // per vertex: edge index by color, -1 if absent
  std::map<GraphVertex, std::array<int, 2>> at;

  explicit Adjacency(const UpDownGraph& g) {
    for (int lvl = 0; lvl <= g.n; ++lvl)
      for (int row = 1; row <= g.levels[lvl]; ++row) at[{lvl, row}] = {-1, -1};
    for (size_t k = 0; k < g.edges.size(); ++k) {
      const GraphEdge& e = g.edges[k];
      int c = e.color == Color::red ? 0 : 1;
      for (GraphVertex v : {e.hi(), e.lo()}) {
        auto& slots = at.at(v);
        if (slots[c] != -1)
          throw std::logic_error("up-and-down graph has a doubly colored vertex");
        slots[c] = static_cast<int>(k);
      }
    }
  }
};

// Ordering used for deterministic component output: highest level first.
bool display_less(const GraphVertex& a, const GraphVertex& b) {
  if (a.level != b.level) return a.level > b.level;
  return a.row < b.row;
}

}  // namespace

std::vector<GraphComponent> decompose_graph(const UpDownGraph& g) {
  Adjacency adj(g);
  std::map<GraphVertex, bool> seen;
  std::vector<GraphComponent> out;

  std::vector<GraphVertex> order;
  for (const auto& [v, _] : adj.at) order.push_back(v);
  std::sort(order.begin(), order.end(), display_less);

  for (const GraphVertex& start : order) {
    if (seen[start]) continue;
    GraphComponent comp;
    // breadth-first over the two colored slots
    std::vector<GraphVertex> stack{start};
    std::vector<int> edge_ids;
    seen[start] = true;
    while (!stack.empty()) {
      GraphVertex v = stack.back();
      stack.pop_back();
      comp.vertices.push_back(v);
      for (int c = 0; c < 2; ++c) {
        int k = adj.at.at(v)[c];
        if (k == -1) continue;
        edge_ids.push_back(k);
        const GraphEdge& e = g.edges[k];
        GraphVertex w = (e.hi() == v) ? e.lo() : e.hi();
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(edge_ids.begin(), edge_ids.end());
    edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
    for (int k : edge_ids) comp.edges.push_back(g.edges[k]);
    std::sort(comp.vertices.begin(), comp.vertices.end(), display_less);
    std::sort(comp.edges.begin(), comp.edges.end());

    comp.level_counts.assign(g.n + 1, 0);
    for (const GraphVertex& v : comp.vertices) comp.level_counts[v.level]++;

    // classify: every vertex of a cycle has both colors, a path has exactly
    // two vertices of degree <= 1 (which coincide for an isolated vertex)
    std::vector<GraphVertex> ends;
    bool all_full = true;
    for (const GraphVertex& v : comp.vertices) {
      int deg = (adj.at.at(v)[0] != -1) + (adj.at.at(v)[1] != -1);
      if (deg < 2) all_full = false;
      if (deg <= 1) ends.push_back(v);
    }
    if (all_full && comp.edges.size() == comp.vertices.size()) {
      comp.kind = Kind::band;
      comp.band_data.assign(g.n, 0);
      for (const GraphEdge& e : comp.edges)
        if (e.color == Color::red) comp.band_data[e.i - 1]++;
      // a band subgraph carries equal red and blue counts at each transition
      std::vector<int> blue(g.n, 0);
      for (const GraphEdge& e : comp.edges)
        if (e.color == Color::blue) blue[e.i - 1]++;
      if (blue != comp.band_data)
        throw std::logic_error("band component with unbalanced colors");
    } else if (comp.vertices.size() == 1 && comp.edges.empty()) {
      comp.kind = Kind::string;
      comp.end_a = comp.end_b = comp.vertices.front();
    } else if (ends.size() == 2 && comp.edges.size() + 1 == comp.vertices.size()) {
      comp.kind = Kind::string;
      comp.end_a = ends[0];
      comp.end_b = ends[1];
    } else {
      throw std::logic_error("component is neither a band nor a string");
    }
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const GraphComponent& a, const GraphComponent& b) {
    return display_less(a.vertices.front(), b.vertices.front());
  });
  return out;
}

int Decomposition::summand_count() const {
  int acc = 0;
  for (const auto& s : summands) acc += s.multiplicity;
  return acc;
}

Decomposition generic_decomposition(const Component& c) {
  if (c.kind == Kind::other)
    throw std::invalid_argument("generic_decomposition: unsupported component kind");
  auto comps = decompose_graph(build_updown_graph(c));
  std::vector<Decomposition::Summand> raw;
  for (const auto& comp : comps) {
    Decomposition::Summand s;
    s.kind = comp.kind;
    s.dims = comp.level_counts;
    s.band_data = comp.band_data;
    raw.push_back(std::move(s));
  }
  auto key = [](const Decomposition::Summand& s) {
    return std::tuple(s.kind == Kind::band ? 0 : 1, s.dims, s.band_data);
  };
  std::sort(raw.begin(), raw.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  Decomposition d;
  d.beta = c.beta;
  for (auto& s : raw) {
    if (!d.summands.empty() && key(d.summands.back()) == key(s))
      d.summands.back().multiplicity++;
    else {
      s.multiplicity = 1;
      d.summands.push_back(std::move(s));
    }
  }
  return d;
}

namespace {

std::string band_str(const std::vector<int>& m_asc) {
  std::ostringstream os;
  os << '[';
  for (int i = static_cast<int>(m_asc.size()) - 1; i >= 0; --i) {
    os << m_asc[i];
    if (i > 0) os << ',';
  }
  os << ']';
  return os.str();
}

}  // namespace

ReductionResult reduce_band(const Band& b) {
  ReductionResult res;
  std::vector<int> m = b.m;  // ascending
  auto at = [&](int i) {
    return (i >= 1 && i <= static_cast<int>(m.size())) ? m[i - 1] : 0;
  };
  while (m.size() > 3) {
    const int n = static_cast<int>(m.size());
    int pos = 0;
    char rule = 0;
    for (int i = 1; i < n && !rule; ++i)
      if (at(i) == at(i + 1)) {
        rule = 'a';
        pos = i;
      }
    for (int i = 1; i <= n && !rule; ++i)
      if (at(i) > at(i - 1) && at(i - 1) == at(i + 1)) {
        rule = 'c';
        pos = i;
      }
    for (int i = 1; i <= n && !rule; ++i)
      if (at(i) > std::max(at(i - 1), at(i + 1))) {
        rule = 'b';
        pos = i;
      }
    if (!rule) throw std::logic_error("reduce_band: no rule applies");
    ReductionStep step;
    step.rule = std::string(1, rule);
    step.index = pos;
    step.before = band_str(m);
    if (rule == 'a') {
      m.erase(m.begin() + (pos - 1));
    } else if (rule == 'c') {
      long long split = at(pos) - at(pos - 1);
      res.summand_count += split;
      step.summands_split = split;
      m[pos - 1] = at(pos - 1);  // equals the two neighbors; rule a fires next
    } else {
      m[pos - 1] = at(pos) - std::abs(at(pos - 1) - at(pos + 1));
    }
    step.after = band_str(m);
    res.trace.push_back(std::move(step));
  }
  ReductionStep close;
  close.before = band_str(m);
  long long base = 0;
  if (m.size() == 3) {
    base = std::gcd((long long)m[1], std::abs((long long)m[2] - m[0]));
    close.rule = "e";
  } else if (m.size() == 2) {
    base = std::gcd((long long)m[1], (long long)m[0]);
    close.rule = "d";
  } else {
    base = m[0];
    close.rule = "n1";
  }
  close.after = band_str(m);
  close.summands_split = base;
  res.trace.push_back(std::move(close));
  res.summand_count += base;
  return res;
}

ReductionResult reduce_string(const Component& c) {
  if (!is_string_component(c))
    throw std::invalid_argument("reduce_string: not a string component");
  ReductionResult res;
  DimVec beta = c.beta;
  std::vector<int> r = c.r, s = c.s;
  const int n = c.n;

  auto spec_str = [&]() {
    std::ostringstream os;
    os << "(";
    for (int i = n; i >= 0; --i) os << beta[i] << (i ? "," : ";");
    for (int i = n; i >= 1; --i) os << r[i - 1] << (i > 1 ? "," : ";");
    for (int i = n; i >= 1; --i) os << s[i - 1] << (i > 1 ? "," : ")");
    return os.str();
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i <= n; ++i) {
      int cover = r[i - 1] + s[i - 1];
      int over_hi = cover - beta[i];
      int over_lo = cover - beta[i - 1];
      if (over_hi <= 0 || over_lo <= 0) continue;
      ReductionStep step;
      step.index = i;
      step.before = spec_str();
      int delta;
      if (beta[i] == beta[i - 1]) {
        // doubled red+blue edges split off as dimension vector e_{i-1}+e_i
        delta = over_hi;
        res.summand_count += delta;
        step.rule = "strip";
        step.summands_split = delta;
      } else {
        delta = std::abs(beta[i] - beta[i - 1]);
        step.rule = "zigzag";
      }
      beta[i] -= delta;
      beta[i - 1] -= delta;
      r[i - 1] -= delta;
      s[i - 1] -= delta;
      step.after = spec_str();
      res.trace.push_back(std::move(step));
      progress = true;
      break;
    }
  }

  auto comps = decompose_graph(build_updown_graph_raw(beta, r, s));
  ReductionStep terminal;
  terminal.rule = "terminal";
  terminal.before = spec_str();
  terminal.after = spec_str();
  terminal.summands_split = static_cast<long long>(comps.size());
  res.trace.push_back(std::move(terminal));
  res.summand_count += static_cast<long long>(comps.size());
  return res;
}

std::string to_dot(const UpDownGraph& g) {
  std::ostringstream os;
  os << "graph updown {\n";
  os << "  rankdir=LR;\n  node [shape=point];\n";
  for (int lvl = g.n; lvl >= 0; --lvl)
    for (int row = 1; row <= g.levels[lvl]; ++row)
      os << "  e_" << lvl << "_" << row << " [pos=\"" << (g.n - lvl) << ",-" << row
         << "!\"];\n";
  std::vector<GraphEdge> edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (const GraphEdge& e : edges)
    os << "  e_" << e.i << "_" << e.row_hi << " -- e_" << (e.i - 1) << "_" << e.row_lo
       << " [color=" << (e.color == Color::red ? "red, style=solid" : "blue, style=dashed")
       << "];\n";
  os << "}\n";
  return os.str();
}

CanonicalGraph canonical_form(const GraphComponent& comp, int n) {
  // renumber rows 1.. within each level preserving order
  std::map<GraphVertex, int> new_row;
  std::vector<int> next(n + 1, 1);
  std::vector<GraphVertex> verts = comp.vertices;
  std::sort(verts.begin(), verts.end());
  for (const GraphVertex& v : verts) new_row[v] = next[v.level]++;
  CanonicalGraph cg;
  cg.level_counts = comp.level_counts;
  for (const GraphEdge& e : comp.edges)
    cg.edges.push_back({e.i, new_row.at(e.hi()), new_row.at(e.lo()), e.color});
  std::sort(cg.edges.begin(), cg.edges.end());
  return cg;
}

CanonicalGraph canonical_form(const UpDownGraph& g) {
  CanonicalGraph cg;
  cg.level_counts = g.levels;
  cg.edges = g.edges;
  std::sort(cg.edges.begin(), cg.edges.end());
  return cg;
}

}  // namespace stralg
