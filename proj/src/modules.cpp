#include "stralg/modules.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stralg {

// ---------------------------------------------------------------------------
// primality / prime sampling

bool is_prime_u64(uint64_t v) {
  if (v < 2) return false;
  for (uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
    if (v % small == 0) return v == small;
  auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((__uint128_t)a * b % m);
  };
  auto powmod = [&](uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  uint64_t d = v - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                        31ULL, 37ULL}) {
    uint64_t x = powmod(base, d, v);
    if (x == 1 || x == v - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, v);
      if (x == v - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t random_prime31(uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (;;) {
    uint64_t candidate = (1ULL << 30) + rng() % (1ULL << 30);
    candidate |= 1;
    if (is_prime_u64(candidate)) return candidate;
  }
}

// ---------------------------------------------------------------------------
// field arithmetic (shared by both modes through a small context)

namespace {

struct Rat {
  long long num = 0, den = 1;
};

long long checked(__int128 v) {
  if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
    throw std::overflow_error("rational arithmetic overflow; use the prime field mode");
  return static_cast<long long>(v);
}

Rat rat_norm(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) num = -num, den = -den;
  __int128 g = std::gcd((long long)checked(num < 0 ? -num : num), (long long)checked(den));
  if (g == 0) g = 1;
  return {checked(num / g), checked(den / g)};
}

struct FieldCtx {
  bool rational = false;
  uint64_t p = kDefaultPrime;

  struct Val {
    uint64_t fp = 0;
    Rat q;
  };

  Val from_int(long long v) const {
    Val out;
    if (rational)
      out.q = {v, 1};
    else {
      long long r = v % static_cast<long long>(p);
      if (r < 0) r += static_cast<long long>(p);
      out.fp = static_cast<uint64_t>(r);
    }
    return out;
  }
  Val zero() const { return from_int(0); }
  Val one() const { return from_int(1); }
  bool is_zero(const Val& v) const { return rational ? v.q.num == 0 : v.fp == 0; }
  Val add(const Val& x, const Val& y) const {
    Val out;
    if (rational)
      out.q = rat_norm((__int128)x.q.num * y.q.den + (__int128)y.q.num * x.q.den,
                       (__int128)x.q.den * y.q.den);
    else
      out.fp = (x.fp + y.fp) % p;
    return out;
  }
  Val mul(const Val& x, const Val& y) const {
    Val out;
    if (rational)
      out.q = rat_norm((__int128)x.q.num * y.q.num, (__int128)x.q.den * y.q.den);
    else
      out.fp = static_cast<uint64_t>((__uint128_t)x.fp * y.fp % p);
    return out;
  }
  Val neg(const Val& x) const {
    Val out;
    if (rational)
      out.q = {-x.q.num, x.q.den};
    else
      out.fp = x.fp ? p - x.fp : 0;
    return out;
  }
  Val inv(const Val& x) const {
    if (is_zero(x)) throw std::domain_error("inverse of zero");
    Val out;
    if (rational)
      out.q = rat_norm(x.q.den, x.q.num);
    else {
      // Fermat
      uint64_t r = 1, a = x.fp, e = p - 2;
      while (e) {
        if (e & 1) r = static_cast<uint64_t>((__uint128_t)r * a % p);
        a = static_cast<uint64_t>((__uint128_t)a * a % p);
        e >>= 1;
      }
      out.fp = r;
    }
    return out;
  }
};

struct FMat {
  int rows = 0, cols = 0;
  std::vector<FieldCtx::Val> a;
  FMat() = default;
  FMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  FieldCtx::Val& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const FieldCtx::Val& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

FMat to_field(const IntMat& m, const FieldCtx& F) {
  FMat out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(r, c) = F.from_int(m.at(r, c));
  return out;
}

FMat fmul(const FMat& x, const FMat& y, const FieldCtx& F) {
  if (x.cols != y.rows) throw std::logic_error("fmul: shape mismatch");
  FMat out(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int c = 0; c < y.cols; ++c) {
      FieldCtx::Val acc = F.zero();
      for (int k = 0; k < x.cols; ++k) acc = F.add(acc, F.mul(x.at(r, k), y.at(k, c)));
      out.at(r, c) = acc;
    }
  return out;
}

int frank(FMat m, const FieldCtx& F) {
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!F.is_zero(m.at(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(rank, k));
    FieldCtx::Val inv = F.inv(m.at(rank, c));
    for (int r = rank + 1; r < m.rows; ++r) {
      if (F.is_zero(m.at(r, c))) continue;
      FieldCtx::Val f = F.neg(F.mul(m.at(r, c), inv));
      for (int k = c; k < m.cols; ++k)
        m.at(r, k) = F.add(m.at(r, k), F.mul(f, m.at(rank, k)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

// ---------------------------------------------------------------------------
// representations

bool Rep::satisfies_relations() const {
  for (int i = 1; i + 1 <= n; ++i) {
    for (const auto* fam : {&a, &b}) {
      const IntMat& first = (*fam)[i];      // arrow i+1
      const IntMat& second = (*fam)[i - 1];  // arrow i
      for (int r = 0; r < second.rows; ++r)
        for (int c = 0; c < first.cols; ++c) {
          __int128 acc = 0;
          for (int k = 0; k < second.cols; ++k)
            acc += (__int128)second.at(r, k) * first.at(k, c);
          if (acc != 0) return false;
        }
    }
  }
  return true;
}

ModuleSpec ModuleSpec::string_word(std::vector<int> w, char side) {
  ModuleSpec s;
  s.type = Type::string_word;
  s.word = std::move(w);
  s.side = side;
  return s;
}

ModuleSpec ModuleSpec::band_word(std::vector<int> w, long long scalar) {
  ModuleSpec s;
  s.type = Type::band_word;
  s.word = std::move(w);
  s.scalar = scalar;
  return s;
}

ModuleSpec ModuleSpec::updown(Component c, std::vector<long long> scalars) {
  ModuleSpec s;
  s.type = Type::updown;
  s.comp = std::move(c);
  s.scalars = std::move(scalars);
  return s;
}

namespace {

int word_max_vertex(const std::vector<int>& w) {
  int n = 1;
  for (int v : w) n = std::max(n, v);
  return n;
}

void place_word_edge(Rep& rep, int pos_hi, int pos_lo, int hi_vertex, bool is_b,
                     long long value) {
  IntMat& m = (is_b ? rep.b : rep.a)[hi_vertex - 1];
  int col = pos_hi, row = pos_lo;
  for (int r = 0; r < m.rows; ++r)
    if (m.at(r, col) != 0) throw std::invalid_argument("invalid word: arrow reused at a basis vector");
  for (int c = 0; c < m.cols; ++c)
    if (m.at(row, c) != 0) throw std::invalid_argument("invalid word: basis vector hit twice");
  m.at(row, col) = value;
}

Rep build_word_module(const ModuleSpec& spec, const FieldSpec& field, bool cyclic) {
  const std::vector<int>& w = spec.word;
  if (w.empty()) throw std::invalid_argument("invalid word: empty");
  for (size_t t = 0; t + 1 < w.size(); ++t)
    if (std::abs(w[t + 1] - w[t]) != 1) throw std::invalid_argument("invalid word: not a walk");
  if (cyclic) {
    if (w.size() % 2 != 0 || w.size() < 2)
      throw std::invalid_argument("invalid word: cyclic words have even length");
    if (std::abs(w.front() - w.back()) != 1)
      throw std::invalid_argument("invalid word: not cyclic");
    if (spec.scalar == 0) throw std::invalid_argument("zero scalar");
  }
  int n = word_max_vertex(w);
  Rep rep;
  rep.n = n;
  rep.beta.assign(n + 1, 0);
  std::vector<int> pos(w.size());
  for (size_t t = 0; t < w.size(); ++t) pos[t] = rep.beta[w[t]]++;
  for (int i = 1; i <= n; ++i) {
    rep.a.emplace_back(rep.beta[i - 1], rep.beta[i]);
    rep.b.emplace_back(rep.beta[i - 1], rep.beta[i]);
  }
  bool odd_is_b = (spec.side == 'b');
  size_t steps = cyclic ? w.size() : w.size() - 1;
  for (size_t t = 0; t < steps; ++t) {
    size_t u = t, v = (t + 1) % w.size();
    // steps are 1-based in the construction; odd steps carry the primary letter
    bool is_b = ((t % 2 == 0) ? odd_is_b : !odd_is_b);
    if (cyclic && t + 1 == w.size()) is_b = true;  // closing edge is a b-edge
    long long value = (cyclic && t + 1 == w.size()) ? spec.scalar : 1;
    int hi = std::max(w[u], w[v]);
    int pos_hi = (w[u] > w[v]) ? pos[u] : pos[v];
    int pos_lo = (w[u] > w[v]) ? pos[v] : pos[u];
    place_word_edge(rep, pos_hi, pos_lo, hi, is_b, value);
  }
  if (!rep.satisfies_relations()) throw std::invalid_argument("invalid word: relations violated");
  if (!field.rational)
    for (auto* fam : {&rep.a, &rep.b})
      for (IntMat& m : *fam)
        for (long long& v : m.a) {
          v %= static_cast<long long>(field.prime);
          if (v < 0) v += static_cast<long long>(field.prime);
        }
  return rep;
}

// Traversal data of one band cycle of an up-and-down graph.
struct CycleWalk {
  std::vector<GraphVertex> order;   // cyclic vertex sequence starting at top-left
  std::vector<GraphEdge> step;      // step[k] joins order[k] and order[k+1 mod L]
};

bool edge_is_upper(const GraphEdge& e, int n) {
  bool red_upper = ((n - e.i) % 2 == 0);
  return (e.color == Color::red) ? red_upper : !red_upper;
}

GraphVertex other_end(const GraphEdge& e, const GraphVertex& v) {
  return (e.hi() == v) ? e.lo() : e.hi();
}

CycleWalk walk_cycle(const UpDownGraph& g, const GraphComponent& comp) {
  CycleWalk walk;
  GraphVertex v0 = comp.vertices.front();  // components sorted top-left first
  // start along the upper edge at v0
  GraphEdge first{};
  bool found = false;
  for (const GraphEdge& e : comp.edges)
    if ((e.hi() == v0 || e.lo() == v0) && edge_is_upper(e, g.n)) {
      first = e;
      found = true;
      break;
    }
  if (!found) throw std::logic_error("walk_cycle: no upper edge at the top-left vertex");
  GraphVertex cur = v0;
  GraphEdge via = first;
  do {
    walk.order.push_back(cur);
    walk.step.push_back(via);
    cur = other_end(via, cur);
    // leave by the other color
    for (const GraphEdge& e : comp.edges)
      if ((e.hi() == cur || e.lo() == cur) && e.color != via.color) {
        via = e;
        break;
      }
  } while (cur != v0);
  return walk;
}

struct BandLayout {
  std::vector<GraphVertex> lext, rext;   // in traversal order
  // segment t joins lext[t/2-ish]; store per segment: (lext index, rext index,
  // word, lower flag, forward flag)
  struct Segment {
    int lext_idx = 0, rext_idx = 0;
    std::vector<Arrow> word;
    bool lower = false;
    bool forward = false;  // traversed from the lext to the rext
  };
  std::vector<Segment> segments;
  GraphEdge marked_edge;  // carries the band scalar in the module
};

bool is_peak(const UpDownGraph& g, const GraphVertex& v) {
  auto edges = g.incident_edges(v);
  if (edges.empty()) return true;
  for (const GraphEdge& e : edges)
    if (e.hi() != v) return false;  // an edge goes up
  return true;
}

bool is_valley(const UpDownGraph& g, const GraphVertex& v) {
  auto edges = g.incident_edges(v);
  if (edges.size() != 2) return false;
  for (const GraphEdge& e : edges)
    if (e.lo() != v) return false;
  return true;
}

std::vector<Arrow> word_of_path(const std::vector<GraphEdge>& path_edges) {
  // edges listed from the higher level downward
  std::vector<Arrow> w;
  for (const GraphEdge& e : path_edges) w.push_back({e.i, e.color == Color::blue});
  return w;
}

BandLayout layout_band(const UpDownGraph& g, const GraphComponent& comp) {
  BandLayout out;
  CycleWalk walk = walk_cycle(g, comp);
  const size_t L = walk.order.size();
  auto vertex_at = [&](size_t k) { return walk.order[k % L]; };
  auto edge_at = [&](size_t k) { return walk.step[k % L]; };

  // extremal positions along the cycle
  std::vector<size_t> ext_pos;
  for (size_t k = 0; k < L; ++k) {
    GraphVertex v = vertex_at(k);
    if (is_peak(g, v) || is_valley(g, v)) ext_pos.push_back(k);
  }
  // positions come in alternating peak/valley order starting at the peak v0
  std::map<GraphVertex, int> lext_index, rext_index;
  for (size_t t = 0; t < ext_pos.size(); ++t) {
    GraphVertex v = vertex_at(ext_pos[t]);
    if (t % 2 == 0) {
      lext_index[v] = static_cast<int>(out.lext.size());
      out.lext.push_back(v);
    } else {
      rext_index[v] = static_cast<int>(out.rext.size());
      out.rext.push_back(v);
    }
  }
  // segments between consecutive extremal positions
  for (size_t t = 0; t < ext_pos.size(); ++t) {
    size_t begin = ext_pos[t];
    size_t end = (t + 1 < ext_pos.size()) ? ext_pos[t + 1] : ext_pos[0] + L;
    std::vector<GraphEdge> seg_edges;
    bool lower = true;
    for (size_t k = begin; k < end; ++k) {
      seg_edges.push_back(edge_at(k));
      if (edge_is_upper(edge_at(k), g.n)) lower = false;
    }
    BandLayout::Segment s;
    s.forward = (t % 2 == 0);  // starts at a peak
    GraphVertex peak = vertex_at(s.forward ? begin : end);
    GraphVertex valley = vertex_at(s.forward ? end : begin);
    s.lext_idx = lext_index.at(peak);
    s.rext_idx = rext_index.at(valley);
    if (!s.forward) std::reverse(seg_edges.begin(), seg_edges.end());
    s.word = word_of_path(seg_edges);
    s.lower = lower;
    out.segments.push_back(std::move(s));
  }
  // the marked edge follows the first right-extremal vertex in the traversal
  out.marked_edge = edge_at(ext_pos[1]);
  return out;
}

Rep updown_base_rep(const Component& c) {
  Rep rep;
  rep.n = c.n;
  rep.beta = c.beta;
  UpDownGraph g = build_updown_graph(c);
  for (int i = 1; i <= c.n; ++i) {
    rep.a.emplace_back(c.beta[i - 1], c.beta[i]);
    rep.b.emplace_back(c.beta[i - 1], c.beta[i]);
  }
  for (const GraphEdge& e : g.edges) {
    IntMat& m = (e.color == Color::blue ? rep.b : rep.a)[e.i - 1];
    m.at(e.row_lo - 1, e.row_hi - 1) = 1;
  }
  return rep;
}

std::vector<long long> updown_scalars(const ModuleSpec& spec, int band_count) {
  std::vector<long long> scalars = spec.scalars;
  if (scalars.empty()) scalars.assign(band_count, 1);
  if (static_cast<int>(scalars.size()) != band_count)
    throw std::invalid_argument("build_module: expected one scalar per band component");
  for (long long s : scalars)
    if (s == 0) throw std::invalid_argument("zero scalar");
  return scalars;
}

}  // namespace

namespace {

void validate_field(const FieldSpec& field) {
  if (!field.rational && !is_prime_u64(field.prime))
    throw std::invalid_argument("coefficient field: modulus is not prime");
}

}  // namespace

Rep build_module(const ModuleSpec& spec, const FieldSpec& field) {
  validate_field(field);
  if (spec.type == ModuleSpec::Type::string_word) return build_word_module(spec, field, false);
  if (spec.type == ModuleSpec::Type::band_word) return build_word_module(spec, field, true);

  const Component& c = spec.comp;
  UpDownGraph g = build_updown_graph(c);
  auto comps = decompose_graph(g);
  int band_count = 0;
  for (const auto& comp : comps) band_count += (comp.kind == Kind::band);
  auto scalars = updown_scalars(spec, band_count);

  Rep rep = updown_base_rep(c);
  int band_idx = 0;
  for (const auto& comp : comps) {
    if (comp.kind != Kind::band) continue;
    BandLayout layout = layout_band(g, comp);
    const GraphEdge& e = layout.marked_edge;
    IntMat& m = (e.color == Color::blue ? rep.b : rep.a)[e.i - 1];
    m.at(e.row_lo - 1, e.row_hi - 1) = scalars[band_idx];
    ++band_idx;
  }
  if (!rep.satisfies_relations())
    throw std::logic_error("build_module: relations violated");
  if (!field.rational)
    for (auto* fam : {&rep.a, &rep.b})
      for (IntMat& m : *fam)
        for (long long& v : m.a) {
          v %= static_cast<long long>(field.prime);
          if (v < 0) v += static_cast<long long>(field.prime);
        }
  return rep;
}

DimVec ModuleSpec::dim_vector(int* out_n) const {
  if (type == Type::updown) {
    if (out_n) *out_n = comp.n;
    return comp.beta;
  }
  int n = word_max_vertex(word);
  DimVec beta(n + 1, 0);
  for (int v : word) beta[v]++;
  if (out_n) *out_n = n;
  return beta;
}

DimVec projective_dims(int n, int vertex) {
  DimVec d(n + 1, 0);
  d[vertex] = 1;
  for (int j = vertex - 1; j >= 0; --j) d[j] = 2;
  return d;
}

std::vector<int> Resolution::summand_levels(int degree) const {
  std::vector<int> out;
  if (degree < 0 || degree >= static_cast<int>(terms.size())) return out;
  for (const ResSummand& s : terms[degree]) out.push_back(s.level);
  return out;
}

DimVec Resolution::term_dimvec(int degree) const {
  DimVec acc(comp.n + 1, 0);
  for (int level : summand_levels(degree)) {
    DimVec d = projective_dims(comp.n, level);
    for (int k = 0; k <= comp.n; ++k) acc[k] += d[k];
  }
  return acc;
}

namespace {

struct StringLayout {
  // path vertices from one endpoint to the other
  std::vector<GraphVertex> path;
  std::vector<GraphEdge> edges;  // edges[k] joins path[k], path[k+1]
};

StringLayout walk_string(const GraphComponent& comp) {
  StringLayout out;
  GraphVertex start = std::min(comp.end_a, comp.end_b, [](auto x, auto y) {
    if (x.level != y.level) return x.level > y.level;
    return x.row < y.row;
  });
  out.path.push_back(start);
  if (comp.vertices.size() == 1) return out;
  GraphVertex cur = start;
  const GraphEdge* prev = nullptr;
  while (true) {
    const GraphEdge* next = nullptr;
    for (const GraphEdge& e : comp.edges) {
      if (e.hi() != cur && e.lo() != cur) continue;
      if (prev && e == *prev) continue;
      next = &e;
      break;
    }
    if (!next) break;
    cur = other_end(*next, cur);
    out.edges.push_back(*next);
    out.path.push_back(cur);
    prev = &out.edges.back();
  }
  return out;
}

}  // namespace

Resolution projective_resolution(const ModuleSpec& spec) {
  if (spec.type != ModuleSpec::Type::updown)
    throw std::invalid_argument("projective_resolution: up-and-down specs only");
  const Component& c = spec.comp;
  if (c.kind == Kind::other)
    throw std::invalid_argument("projective_resolution: band or string components only");

  UpDownGraph g = build_updown_graph(c);
  auto comps = decompose_graph(g);

  Resolution res;
  res.comp = c;
  res.terms.resize(2);

  auto add_summand = [&](int degree, ResSummand s) -> int {
    if (degree >= static_cast<int>(res.terms.size())) res.terms.resize(degree + 1);
    res.terms[degree].push_back(s);
    return static_cast<int>(res.terms[degree].size()) - 1;
  };

  int band_idx = 0;
  for (const auto& comp : comps) {
    if (comp.kind == Kind::band) {
      BandLayout layout = layout_band(g, comp);
      std::vector<int> lext_ids, rext_ids;
      for (const GraphVertex& v : layout.lext)
        lext_ids.push_back(add_summand(0, {v.level, SummandRole::peak, v, 0, false}));
      for (const GraphVertex& v : layout.rext)
        rext_ids.push_back(add_summand(1, {v.level, SummandRole::valley, v, 0, false}));
      for (size_t t = 0; t < layout.segments.size(); ++t) {
        const auto& seg = layout.segments[t];
        ResEntry e;
        e.degree = 1;
        e.from = rext_ids[seg.rext_idx];
        e.to = lext_ids[seg.lext_idx];
        e.sign = seg.forward ? 1 : -1;
        e.scalar_component = (t == 0) ? band_idx : -1;
        e.lower = seg.lower;
        e.word = seg.word;
        res.entries.push_back(std::move(e));
      }
      ++band_idx;
      continue;
    }

    // string component
    StringLayout walk = walk_string(comp);
    const auto& path = walk.path;
    const auto& edges = walk.edges;
    std::map<GraphVertex, int> peak_id;

    for (const GraphVertex& v : comp.vertices)
      if (is_peak(g, v)) peak_id[v] = add_summand(0, {v.level, SummandRole::peak, v, 0, false});

    // interior segments between consecutive extremal path positions
    std::vector<size_t> ext_pos;
    for (size_t k = 0; k < path.size(); ++k)
      if (is_peak(g, path[k]) || is_valley(g, path[k])) ext_pos.push_back(k);
    std::map<GraphVertex, int> valley_id;
    for (size_t k : ext_pos)
      if (is_valley(g, path[k]))
        valley_id[path[k]] = add_summand(1, {path[k].level, SummandRole::valley, path[k], 0, false});
    for (size_t t = 0; t + 1 < ext_pos.size(); ++t) {
      size_t beg = ext_pos[t], end = ext_pos[t + 1];
      std::vector<GraphEdge> seg(edges.begin() + beg, edges.begin() + end);
      bool lower = true;
      for (const GraphEdge& e : seg)
        if (edge_is_upper(e, g.n)) lower = false;
      bool forward = is_peak(g, path[beg]);  // runs peak -> valley
      GraphVertex peak = forward ? path[beg] : path[end];
      GraphVertex valley = forward ? path[end] : path[beg];
      if (!forward) std::reverse(seg.begin(), seg.end());
      ResEntry e;
      e.degree = 1;
      e.from = valley_id.at(valley);
      e.to = peak_id.at(peak);
      e.sign = (t % 2 == 0) ? 1 : -1;
      e.lower = lower;
      e.word = word_of_path(seg);
      res.entries.push_back(std::move(e));
    }

    // endpoint towers
    auto add_tower = [&](const GraphVertex& endpoint, bool tower_is_b,
                         int cover_peak_summand, std::vector<Arrow> first_word) {
      int prev_summand = cover_peak_summand;
      std::vector<Arrow> word = std::move(first_word);
      for (int level = endpoint.level - 1, degree = 1; level >= 0; --level, ++degree) {
        int id = add_summand(degree, {level, SummandRole::tower, endpoint, degree, tower_is_b});
        ResEntry e;
        e.degree = degree;
        e.from = id;
        e.to = prev_summand;
        e.sign = 1;
        e.word = word;
        res.entries.push_back(std::move(e));
        prev_summand = id;
        word = {Arrow{level, tower_is_b}};  // next differential: single arrow at `level`
      }
    };

    std::vector<GraphVertex> endpoints;
    endpoints.push_back(comp.end_a);
    if (!(comp.end_b == comp.end_a)) endpoints.push_back(comp.end_b);
    for (const GraphVertex& ep : endpoints) {
      auto inc = g.incident_edges(ep);
      if (inc.empty()) {
        // isolated vertex: a generator with one tower per color
        for (bool is_b : {false, true})
          add_tower(ep, is_b, peak_id.at(ep), {Arrow{ep.level, is_b}});
        continue;
      }
      const GraphEdge& e = inc.front();
      bool edge_is_b = (e.color == Color::blue);
      bool tower_is_b = !edge_is_b;
      if (e.lo() == ep) {
        // edge comes from above: walk up to the covering peak
        std::vector<GraphEdge> up_path;
        GraphVertex cur = ep;
        GraphEdge via = e;
        while (true) {
          up_path.push_back(via);
          cur = other_end(via, cur);
          if (is_peak(g, cur)) break;
          auto cur_inc = g.incident_edges(cur);
          bool moved = false;
          for (const GraphEdge& e2 : cur_inc)
            if (!(e2 == via) && e2.lo() == cur) {  // keep going up
              via = e2;
              moved = true;
              break;
            }
          if (!moved) throw std::logic_error("projective_resolution: no covering peak");
        }
        std::reverse(up_path.begin(), up_path.end());
        std::vector<Arrow> word = word_of_path(up_path);
        word.push_back({ep.level, tower_is_b});
        add_tower(ep, tower_is_b, peak_id.at(cur), std::move(word));
      } else {
        // edge goes down: the endpoint is itself a generator
        add_tower(ep, tower_is_b, peak_id.at(ep), {Arrow{ep.level, tower_is_b}});
      }
    }
  }
  res.band_components = band_idx;
  return res;
}

std::string word_string(const std::vector<Arrow>& word) {
  std::ostringstream os;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    os << (it->is_b ? 'b' : 'a') << it->index;
  return os.str();
}

// ---------------------------------------------------------------------------
// Hom complexes

namespace {

FMat word_action(const Rep& N, const FieldCtx& F, const std::vector<Arrow>& word,
                 int from_level) {
  // identity at from_level, then fold the arrows in application order
  FMat cur(N.beta[from_level], N.beta[from_level]);
  for (int k = 0; k < cur.rows; ++k) cur.at(k, k) = F.one();
  for (const Arrow& ar : word) {
    FMat m = to_field(N.arrow(ar.is_b, ar.index), F);
    cur = fmul(m, cur, F);
  }
  return cur;
}

struct HomBlocks {
  std::vector<int> dims;       // dim Hom(P^(d), N) per degree
  std::vector<FMat> diff;      // diff[d]: Hom(P^(d), N) -> Hom(P^(d+1), N)
  std::vector<std::vector<int>> offsets;  // per degree, block start per summand
};

HomBlocks hom_complex(const Resolution& res, const Rep& N, const FieldCtx& F,
                      const std::vector<long long>& m_scalars) {
  HomBlocks hb;
  const int degrees = static_cast<int>(res.terms.size());
  hb.offsets.resize(degrees);
  hb.dims.resize(degrees, 0);
  for (int d = 0; d < degrees; ++d) {
    for (const ResSummand& s : res.terms[d]) {
      hb.offsets[d].push_back(hb.dims[d]);
      hb.dims[d] += N.beta[s.level];
    }
  }
  for (int d = 0; d + 1 < degrees; ++d) {
    FMat m(hb.dims[d + 1], hb.dims[d]);
    for (const ResEntry& e : res.entries) {
      if (e.degree != d + 1) continue;
      const ResSummand& src = res.terms[d][e.to];
      FMat block = word_action(N, F, e.word, src.level);
      FieldCtx::Val coef = F.from_int(e.sign);
      if (e.scalar_component >= 0)
        coef = F.mul(coef, F.from_int(m_scalars[e.scalar_component]));
      int r0 = hb.offsets[d + 1][e.from];
      int c0 = hb.offsets[d][e.to];
      for (int r = 0; r < block.rows; ++r)
        for (int c = 0; c < block.cols; ++c)
          m.at(r0 + r, c0 + c) = F.add(m.at(r0 + r, c0 + c), F.mul(coef, block.at(r, c)));
    }
    hb.diff.push_back(std::move(m));
  }
  return hb;
}

std::vector<long long> module_scalars(const ModuleSpec& spec) {
  if (spec.type != ModuleSpec::Type::updown) return {};
  UpDownGraph g = build_updown_graph(spec.comp);
  auto comps = decompose_graph(g);
  int band_count = 0;
  for (const auto& comp : comps) band_count += (comp.kind == Kind::band);
  return updown_scalars(spec, band_count);
}

}  // namespace

HomExt hom_ext_dims(const ModuleSpec& M, const ModuleSpec& N, const FieldSpec& field) {
  validate_field(field);
  Resolution res = projective_resolution(M);
  FieldCtx F{field.rational, field.prime};
  Rep repN = build_module(N, field);
  if (repN.n != res.comp.n) throw std::invalid_argument("hom_ext_dims: algebra mismatch");
  HomBlocks hb = hom_complex(res, repN, F, module_scalars(M));
  long long rank0 = hb.diff.empty() ? 0 : frank(hb.diff[0], F);
  long long rank1 = hb.diff.size() > 1 ? frank(hb.diff[1], F) : 0;
  HomExt out;
  out.hom = hb.dims[0] - rank0;
  long long dim1 = hb.dims.size() > 1 ? hb.dims[1] : 0;
  out.ext1 = (dim1 - rank1) - rank0;
  return out;
}

RigidityReport verify_rigidity(const Component& c, int trials, uint64_t seed,
                               const FieldSpec& field) {
  if (c.kind == Kind::other)
    throw std::invalid_argument("verify_rigidity: band or string components only");
  RigidityReport rep;
  rep.comp = c;
  rep.trials = trials;
  rep.seed = seed;
  FieldSpec fs = field;
  if (fs.prime == 0) fs.prime = random_prime31(seed);
  validate_field(fs);
  rep.prime = fs.rational ? 0 : fs.prime;

  UpDownGraph g = build_updown_graph(c);
  auto comps = decompose_graph(g);
  int band_count = 0;
  for (const auto& comp : comps) band_count += (comp.kind == Kind::band);

  Algebra alg(c.n);
  std::mt19937_64 rng(seed);
  auto draw = [&]() {
    uint64_t modulus = fs.rational ? 1000003ULL : fs.prime;
    return static_cast<long long>(1 + rng() % (modulus - 1));
  };
  for (int t = 0; t < trials; ++t) {
    RigidityTrial trial;
    trial.trial = t;
    for (int k = 0; k < band_count; ++k) trial.scalars_m.push_back(draw());
    for (int k = 0; k < band_count; ++k) trial.scalars_n.push_back(draw());
    std::set<long long> all(trial.scalars_m.begin(), trial.scalars_m.end());
    all.insert(trial.scalars_n.begin(), trial.scalars_n.end());
    trial.scalar_collision = all.size() != static_cast<size_t>(2 * band_count);

    ModuleSpec m = ModuleSpec::updown(c, trial.scalars_m);
    ModuleSpec n = ModuleSpec::updown(c, trial.scalars_n);
    HomExt he = hom_ext_dims(m, n, fs);
    trial.hom = he.hom;
    trial.ext1 = he.ext1;
    trial.euler = euler_form(alg, c.beta, c.beta);
    trial.euler_ok = (c.kind != Kind::band) || (he.hom - he.ext1 == trial.euler);
    trial.pass = (he.ext1 == 0);
    (trial.pass ? rep.passes : rep.failures)++;
    rep.table.push_back(std::move(trial));
  }
  return rep;
}

ExtGraph ext_graph(const ModuleSpec& spec) {
  Resolution res = projective_resolution(spec);
  FieldSpec fs;
  Rep M = build_module(spec, fs);
  FieldCtx F{fs.rational, fs.prime};

  ExtGraph out;
  for (int d = 0; d < std::min<int>(2, res.terms.size()); ++d)
    for (size_t s = 0; s < res.terms[d].size(); ++s) {
      const ResSummand& sm = res.terms[d][s];
      for (int row = 1; row <= M.beta[sm.level]; ++row) {
        bool diag = (sm.role != SummandRole::tower) && (sm.anchor.row == row);
        out.vertices.push_back({d, static_cast<int>(s), row, diag});
      }
    }
  for (const ResEntry& e : res.entries) {
    if (e.degree != 1) continue;
    const ResSummand& src = res.terms[0][e.to];
    FMat block = word_action(M, F, e.word, src.level);
    for (int c = 0; c < block.cols; ++c)
      for (int r = 0; r < block.rows; ++r)
        if (!F.is_zero(block.at(r, c))) {
          ExtGraph::Vertex from{0, e.to, c + 1, false};
          ExtGraph::Vertex to{1, e.from, r + 1, false};
          out.edges.push_back({from, to, e.lower});
        }
  }
  // resolve diagonal flags on edge endpoints
  std::set<ExtGraph::Vertex> diag;
  for (const auto& v : out.vertices)
    if (v.diagonal) diag.insert({v.degree, v.summand, v.basis_row, false});
  for (auto& e : out.edges) {
    if (diag.count({e.from.degree, e.from.summand, e.from.basis_row, false}))
      e.from.diagonal = true;
    if (diag.count({e.to.degree, e.to.summand, e.to.basis_row, false})) e.to.diagonal = true;
  }

  // connected components of the pairing graph
  std::map<ExtGraph::Vertex, int> idx;
  auto key = [](ExtGraph::Vertex v) {
    v.diagonal = false;
    return v;
  };
  for (const auto& v : out.vertices) idx[key(v)] = -1;
  int comp_count = 0;
  for (auto& [v, id] : idx) {
    if (id != -1) continue;
    std::vector<ExtGraph::Vertex> stack{v};
    id = comp_count;
    ExtGraph::ComponentInfo info;
    while (!stack.empty()) {
      ExtGraph::Vertex cur = stack.back();
      stack.pop_back();
      info.vertices.push_back(cur);
      for (const auto& e : out.edges) {
        ExtGraph::Vertex a = key(e.from), b = key(e.to);
        ExtGraph::Vertex nxt = cur;
        if (a == cur)
          nxt = b;
        else if (b == cur)
          nxt = a;
        else
          continue;
        if (idx[nxt] == -1) {
          idx[nxt] = comp_count;
          stack.push_back(nxt);
        }
      }
    }
    std::sort(info.vertices.begin(), info.vertices.end());
    size_t edge_count = 0;
    for (const auto& e : out.edges)
      if (idx[key(e.from)] == comp_count) ++edge_count;
    info.kind = (edge_count == info.vertices.size()) ? Kind::band : Kind::string;
    for (const auto& vv : info.vertices)
      if (diag.count(vv)) info.distinguished = true;
    out.components.push_back(std::move(info));
    ++comp_count;
  }
  return out;
}

}  // namespace stralg
