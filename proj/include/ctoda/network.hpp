#pragma once

#include "ctoda/chiprep.hpp"

#include <bitset>
#include <functional>
#include <sstream>
#include <tuple>

namespace ctoda {

enum class VertexColor { source, orange, black, sink };

inline const char* color_name(VertexColor c) {
  switch (c) {
    case VertexColor::source: return "blue";
    case VertexColor::orange: return "orange";
    case VertexColor::black: return "black";
    case VertexColor::sink: return "red";
  }
  return "?";
}

struct NetVertex {
  int column;  // 0 for sources, chip number for internal vertices, last for sinks
  int level;   // 1-based
  VertexColor color;
};

struct NetEdge {
  int from, to;
  QSqrt2 weight;
  bool diagonal;
};

struct ChipSpec {
  enum Kind { E, D } kind;
  int index = 0;       // signed simple index for E
  QSqrt2 value;        // parameter for E
  std::vector<Q> t;    // torus parameters for D
};

struct ChipNetwork {
  Family family;
  int rank = 0, levels = 0;
  std::vector<NetVertex> vertices;  // topologically ordered
  std::vector<NetEdge> edges;
  std::vector<std::vector<int>> out;  // edge ids per vertex
  std::vector<int> source, sink;      // vertex id per level (1-based; slot 0 unused)
  std::vector<ChipSpec> chips;
};

inline ChipNetwork build_network(Family f, int r, const std::vector<ChipSpec>& chips) {
  if (!is_classical(f)) throw param_error("networks exist only for classical families");
  if (!valid_rank(f, r)) throw param_error("invalid rank");
  auto g = generators(f, r);
  ChipNetwork net;
  net.family = f;
  net.rank = r;
  net.levels = g.dim;
  net.chips = chips;
  int n = g.dim;
  net.source.assign(n + 1, -1);
  net.sink.assign(n + 1, -1);
  // last vertex on each level and the torus weight accumulated since it
  std::vector<int> last(n + 1);
  std::vector<QSqrt2> pending(n + 1, QSqrt2(1));
  auto add_vertex = [&](int col, int lvl, VertexColor c) {
    net.vertices.push_back({col, lvl, c});
    net.out.emplace_back();
    return (int)net.vertices.size() - 1;
  };
  auto add_edge = [&](int a, int b, const QSqrt2& w, bool diag) {
    net.edges.push_back({a, b, w, diag});
    net.out[a].push_back((int)net.edges.size() - 1);
  };
  auto extend = [&](int lvl, int v) {  // horizontal edge into a new vertex
    add_edge(last[lvl], v, pending[lvl], false);
    pending[lvl] = QSqrt2(1);
    last[lvl] = v;
  };
  for (int l = 1; l <= n; ++l) last[l] = net.source[l] = add_vertex(0, l, VertexColor::source);
  int col = 0;
  for (const auto& ch : chips) {
    ++col;
    if (ch.kind == ChipSpec::D) {
      GMatrix d = chip_D(g, ch.t);
      for (int l = 1; l <= n; ++l) pending[l] *= d(l - 1, l - 1);
      continue;
    }
    GMatrix x = chip_E(g, ch.index, ch.value);
    std::vector<int> orange(n + 1, -1), black(n + 1, -1);
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q)
        if (p != q && !is_zero(x(p - 1, q - 1))) {
          if (orange[p] < 0) orange[p] = 0;
          if (black[q] < 0) black[q] = 0;
        }
    // oranges first, then blacks, so that every diagonal goes forward
    for (int l = 1; l <= n; ++l)
      if (orange[l] == 0) {
        orange[l] = add_vertex(col, l, VertexColor::orange);
        extend(l, orange[l]);
      }
    for (int l = 1; l <= n; ++l)
      if (black[l] == 0) {
        black[l] = add_vertex(col, l, VertexColor::black);
        extend(l, black[l]);
      }
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q)
        if (p != q && !is_zero(x(p - 1, q - 1))) add_edge(orange[p], black[q], x(p - 1, q - 1), true);
  }
  ++col;
  for (int l = 1; l <= n; ++l) {
    net.sink[l] = add_vertex(col, l, VertexColor::sink);
    extend(l, net.sink[l]);
  }
  return net;
}

// E_{i_1}(1)...E_{i_r}(1) D(t) E_{i_{r+1}}(c)...; the network of element()
inline std::vector<ChipSpec> element_chips(int r, const DoubleReducedWord& w, const FactorizationPoint& fp) {
  check_coxeter_pair(w, r);
  if (!w.unmixed()) throw param_error("network needs an unmixed word");
  std::vector<ChipSpec> chips;
  for (int p = 0; p < r; ++p) chips.push_back({ChipSpec::E, w.entries[p], QSqrt2(1), {}});
  chips.push_back({ChipSpec::D, 0, QSqrt2(), fp.t});
  for (int p = r; p < 2 * r; ++p) {
    int k = w.entries[p];
    chips.push_back({ChipSpec::E, k, QSqrt2(fp.c[k - 1]), {}});
  }
  return chips;
}

inline ChipNetwork build_network(Family f, int r, const DoubleReducedWord& w, const FactorizationPoint& fp) {
  return build_network(f, r, element_chips(r, w, fp));
}

// the network for u = v = s_1...s_r used throughout the Hamiltonian formulas
inline ChipNetwork build_cc_network(Family f, int r, const FactorizationPoint& fp) {
  return build_network(f, r, unmixed_word(standard_coxeter(r), standard_coxeter(r)), fp);
}

// boundary measurement: sum over all source-i -> sink-j paths
inline GMatrix path_sum_matrix(const ChipNetwork& net) {
  int n = net.levels, V = (int)net.vertices.size();
  GMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<QSqrt2> acc(V, QSqrt2(0));
    acc[net.source[i]] = QSqrt2(1);
    for (int v = 0; v < V; ++v) {
      if (acc[v].is_zero()) continue;
      for (int e : net.out[v]) acc[net.edges[e].to] += acc[v] * net.edges[e].weight;
    }
    for (int j = 1; j <= n; ++j) m(i - 1, j - 1) = acc[net.sink[j]];
  }
  return m;
}

// ---- paths ----

using VertexSet = std::bitset<512>;

struct NetPath {
  int start, low, end;  // levels: (m, n, p)
  std::vector<int> vertices;
  VertexSet mask;
  QSqrt2 weight;
};

inline std::vector<NetPath> all_paths(const ChipNetwork& net) {
  if (net.vertices.size() > VertexSet().size()) throw param_error("network too large for path enumeration");
  std::vector<NetPath> out;
  for (int m = 1; m <= net.levels; ++m) {
    NetPath cur{m, m, 0, {net.source[m]}, {}, QSqrt2(1)};
    std::function<void(int)> dfs = [&](int v) {
      const auto& vx = net.vertices[v];
      if (vx.color == VertexColor::sink) {
        NetPath p = cur;
        p.end = vx.level;
        for (int x : p.vertices) {
          p.mask.set(x);
          p.low = std::min(p.low, net.vertices[x].level);
        }
        out.push_back(std::move(p));
        return;
      }
      for (int e : net.out[v]) {
        const auto& ed = net.edges[e];
        QSqrt2 saved = cur.weight;
        cur.weight *= ed.weight;
        cur.vertices.push_back(ed.to);
        dfs(ed.to);
        cur.vertices.pop_back();
        cur.weight = saved;
      }
    };
    dfs(net.source[m]);
  }
  return out;
}

struct AdmissibleTriple {
  int m, n, p;
  friend bool operator<(const AdmissibleTriple& a, const AdmissibleTriple& b) {
    return std::tie(a.m, a.n, a.p) < std::tie(b.m, b.n, b.p);
  }
  friend bool operator==(const AdmissibleTriple& a, const AdmissibleTriple& b) {
    return a.m == b.m && a.n == b.n && a.p == b.p;
  }
};

// every path is determined by its (start, minimum, end) levels
inline std::map<AdmissibleTriple, NetPath> admissible_triples(const ChipNetwork& net) {
  std::map<AdmissibleTriple, NetPath> out;
  for (auto& p : all_paths(net)) {
    AdmissibleTriple t{p.start, p.low, p.end};
    if (out.count(t)) throw invariant_error("two paths share a (start, min, end) triple");
    out.emplace(t, std::move(p));
  }
  return out;
}

// pairs (m, n): paths starting and ending at m
inline std::map<std::pair<int, int>, NetPath> admissible_pairs(const ChipNetwork& net) {
  std::map<std::pair<int, int>, NetPath> out;
  for (auto& [t, p] : admissible_triples(net))
    if (t.m == t.p) out.emplace(std::make_pair(t.m, t.n), p);
  return out;
}

inline QSqrt2 path_weight(const ChipNetwork& net, const AdmissibleTriple& t) {
  auto all = admissible_triples(net);
  auto it = all.find(t);
  if (it == all.end()) throw param_error("triple is not admissible");
  return it->second.weight;
}

// ---- non-intersecting families ----

struct PathFamily {
  std::vector<AdmissibleTriple> triples;  // ordered by start level
  int sign;
  QSqrt2 weight;
};

inline int perm_sign(std::vector<int> p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != (int)i) {
      std::swap(p[i], p[p[i]]);
      s = -s;
    }
  return s;
}

// visit every vertex-disjoint family with starts = ends = I
template <class F>
void for_each_family(const ChipNetwork& net, const std::vector<NetPath>& paths, const std::vector<int>& I, F&& visit) {
  int j = (int)I.size();
  std::vector<int> slot(net.levels + 1, -1);
  for (int a = 0; a < j; ++a) slot[I[a]] = a;
  std::vector<std::vector<const NetPath*>> by_start(j);
  for (auto& p : paths)
    if (slot[p.start] >= 0 && slot[p.end] >= 0) by_start[slot[p.start]].push_back(&p);
  std::vector<const NetPath*> chosen(j);
  std::vector<int> target(j);
  std::vector<bool> used(j, false);
  std::function<void(int, const VertexSet&)> rec = [&](int a, const VertexSet& occ) {
    if (a == j) {
      PathFamily fam{{}, perm_sign(target), QSqrt2(1)};
      for (auto* p : chosen) {
        fam.triples.push_back({p->start, p->low, p->end});
        fam.weight *= p->weight;
      }
      visit(fam);
      return;
    }
    for (auto* p : by_start[a]) {
      int b = slot[p->end];
      if (used[b] || (occ & p->mask).any()) continue;
      used[b] = true;
      chosen[a] = p;
      target[a] = b;
      rec(a + 1, occ | p->mask);
      used[b] = false;
    }
  };
  rec(0, VertexSet());
}

inline std::vector<std::vector<int>> subsets(int n, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if ((int)cur.size() == j) {
      out.push_back(cur);
      return;
    }
    for (int x = from; x <= n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// sum over |I| = j of signed non-intersecting families: the j-th char-poly coefficient
inline QSqrt2 lgv_f(const ChipNetwork& net, int j, const std::vector<NetPath>& paths) {
  if (j < 0 || j > net.levels) throw param_error("j out of range");
  QSqrt2 s(0);
  for (auto& I : subsets(net.levels, j))
    for_each_family(net, paths, I, [&](const PathFamily& f) { s += f.sign > 0 ? f.weight : -f.weight; });
  return s;
}
inline QSqrt2 lgv_f(const ChipNetwork& net, int j) { return lgv_f(net, j, all_paths(net)); }

// H_j assembled from LGV sums
inline QSqrt2 lgv_hamiltonian(const ChipNetwork& net, int j) {
  int r = net.rank;
  if (j < 1 || j > r) throw param_error("j out of range");
  auto paths = all_paths(net);
  std::vector<QSqrt2> f;
  for (int k = 0; k <= j; ++k) f.push_back(lgv_f(net, k, paths));
  auto H = hamiltonian_H_from_f(net.family, r, f);
  if (j > (int)H.size()) throw param_error("no Hamiltonian H_j of this index for the family");
  return H[j - 1];
}

// a family is mixed if some path has start != end
inline bool is_mixed(const PathFamily& f) {
  for (auto& t : f.triples)
    if (t.m != t.p) return true;
  return false;
}

// ---- DOT output ----

inline std::string emit_dot(const ChipNetwork& net) {
  if (net.rank < 1 || net.vertices.empty()) throw param_error("empty network");
  std::ostringstream os;
  os << "digraph network {\n  rankdir=BT;\n  node [shape=circle, style=filled, label=\"\", width=0.15];\n";
  for (std::size_t v = 0; v < net.vertices.size(); ++v) {
    const auto& x = net.vertices[v];
    os << "  v" << v << " [fillcolor=" << color_name(x.color) << ", level=" << x.level << ", pos=\"" << x.column << ","
       << x.level << "!\"";
    if (x.color == VertexColor::source || x.color == VertexColor::sink) os << ", xlabel=\"" << x.level << "\"";
    os << "];\n";
  }
  for (int l = 1; l <= net.levels; ++l) {
    os << "  { rank=same;";
    for (std::size_t v = 0; v < net.vertices.size(); ++v)
      if (net.vertices[v].level == l) os << " v" << v << ";";
    os << " }\n";
  }
  for (const auto& e : net.edges) {
    os << "  v" << e.from << " -> v" << e.to;
    if (!(e.weight == QSqrt2(1))) os << " [label=\"" << e.weight.str() << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ctoda
