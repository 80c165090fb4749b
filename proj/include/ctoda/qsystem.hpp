#pragma once

#include "ctoda/chiprep.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ctoda {

// (R_{a,k}, R_{a,k+1}) for a in [1,r], 0-based storage
struct QState {
  int r = 0;
  std::vector<Q> R0, R1;
  long k = 0;
  friend bool operator==(const QState& a, const QState& b) { return a.r == b.r && a.R0 == b.R0 && a.R1 == b.R1; }
};

inline void check_state(const QState& s) {
  if (s.r < 1 || (int)s.R0.size() != s.r || (int)s.R1.size() != s.r) throw param_error("Q-system state has wrong size");
  for (int a = 0; a < s.r; ++a)
    if (sgn(s.R0[a]) <= 0 || sgn(s.R1[a]) <= 0) throw param_error("Q-system state must be positive");
}

inline QState unit_state(int r) { return {r, std::vector<Q>(r, Q(1)), std::vector<Q>(r, Q(1)), 0}; }

inline QState random_state(int r, RatGen& g) {
  QState s{r, g.vec(r), g.vec(r), 0};
  return s;
}

// prod_{b != a} R_b^{-C_ba}
inline Q qsystem_coupling(const std::vector<Q>& R, const CartanData& c, int a) {
  Q p = 1;
  for (int b = 1; b <= c.rank; ++b)
    if (b != a && c(b, a) != 0) p *= qpow(R[b - 1], -c(b, a));
  return p;
}

inline QState qsystem_step(const QState& s, const CartanData& c) {
  check_state(s);
  if (s.r != c.rank) throw param_error("state rank does not match Cartan data");
  QState n{s.r, s.R1, std::vector<Q>(s.r), s.k + 1};
  for (int a = 1; a <= s.r; ++a) n.R1[a - 1] = (s.R1[a - 1] * s.R1[a - 1] + qsystem_coupling(s.R1, c, a)) / s.R0[a - 1];
  return n;
}

inline QState qsystem_inverse_step(const QState& s, const CartanData& c) {
  check_state(s);
  if (s.r != c.rank) throw param_error("state rank does not match Cartan data");
  QState n{s.r, std::vector<Q>(s.r), s.R0, s.k - 1};
  for (int a = 1; a <= s.r; ++a) n.R0[a - 1] = (s.R0[a - 1] * s.R0[a - 1] + qsystem_coupling(s.R0, c, a)) / s.R1[a - 1];
  return n;
}

// Q_{a,k} = eps_a^{-1} R_{a,k}, eps_a = (-1)^{mu_a}, mu_a = sum_b (C^{-1})_{ba}
struct Unnormalized {
  bool normalized_only = false;  // some mu_a is not an integer
  std::vector<Q> mu;
  std::vector<Q> Q0, Q1;  // empty when normalized_only
};

inline Unnormalized unnormalize(const QState& s, const CartanData& c) {
  check_state(s);
  QMatrix inv = inverse(c.matrix());
  Unnormalized u;
  for (int a = 0; a < c.rank; ++a) {
    Q m = 0;
    for (int b = 0; b < c.rank; ++b) m += inv(b, a);
    u.mu.push_back(m);
    if (!is_integer(m)) u.normalized_only = true;
  }
  if (u.normalized_only) return u;
  for (int a = 0; a < c.rank; ++a) {
    int sign = (to_long(u.mu[a]) % 2 == 0) ? 1 : -1;
    u.Q0.push_back(s.R0[a] * sign);
    u.Q1.push_back(s.R1[a] * sign);
  }
  return u;
}

// t_j = R_{j,1}/R_{j,0}, c_j = prod_k R_{k,1}^{-C_kj}
inline FactorizationPoint factorization_from_state(const QState& s, const CartanData& c) {
  check_state(s);
  FactorizationPoint fp;
  for (int j = 1; j <= s.r; ++j) {
    fp.t.push_back(s.R1[j - 1] / s.R0[j - 1]);
    Q cj = 1;
    for (int k = 1; k <= s.r; ++k)
      if (c(k, j) != 0) cj *= qpow(s.R1[k - 1], -c(k, j));
    fp.c.push_back(cj);
  }
  return fp;
}

// ---- hard-particle graphs ----

// plain vertex n is {n, 0}; composite (2r+1,b) in type B and (2r,b) in type D
struct HPVertex {
  int a, b;
  std::string label() const { return b == 0 ? std::to_string(a) : "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
  friend bool operator<(const HPVertex& x, const HPVertex& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); }
  friend bool operator==(const HPVertex& x, const HPVertex& y) { return x.a == y.a && x.b == y.b; }
};

struct HardParticleGraph {
  Family family;
  int rank;
  std::vector<HPVertex> vertices;
  std::vector<Q> weight;
  std::vector<std::pair<int, int>> path;  // (start level, lowest level) of the path behind each vertex
  std::vector<std::uint64_t> adj;        // bitmask rows
  int hub = -1;                          // type D: (2r,2)
  std::pair<int, int> effective_edge{-1, -1};  // type B: {2r, 2r+2}

  int size() const { return (int)vertices.size(); }
  int id(const HPVertex& v) const {
    for (int i = 0; i < size(); ++i)
      if (vertices[i] == v) return i;
    throw param_error("no vertex " + v.label());
  }
  int id(int a, int b = 0) const { return id(HPVertex{a, b}); }
  bool adjacent(int i, int j) const { return adj[i] >> j & 1; }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (adjacent(i, j)) e.push_back({i, j});
    return e;
  }
};

namespace detail {

struct HPBuilder {
  HardParticleGraph g;
  std::map<HPVertex, int> ids;

  void vertex(HPVertex v, Q w, std::pair<int, int> p) {
    ids[v] = g.size();
    g.vertices.push_back(v);
    g.weight.push_back(std::move(w));
    g.path.push_back(p);
  }
  bool has(HPVertex v) const { return ids.count(v) > 0; }
  // silently skips endpoints that do not exist at this rank
  void edge(HPVertex x, HPVertex y) {
    if (!has(x) || !has(y) || x == y) return;
    int i = ids[x], j = ids[y];
    g.adj[i] |= std::uint64_t(1) << j;
    g.adj[j] |= std::uint64_t(1) << i;
  }
  void star(HPVertex x, std::initializer_list<HPVertex> ys) {
    for (auto& y : ys) edge(x, y);
  }
  void generic_even(int e) { star({e, 0}, {{e - 2, 0}, {e - 1, 0}, {e + 1, 0}, {e + 2, 0}}); }
  void finish() {
    if (g.size() > 64) throw param_error("hard-particle graph too large");
    g.adj.assign(g.size(), 0);
  }
};

// odd vertex 2i-1 is the path (i,i), even 2j is (j+1,j)
inline std::pair<int, int> plain_path(int n) { return n % 2 ? std::make_pair((n + 1) / 2, (n + 1) / 2) : std::make_pair(n / 2 + 1, n / 2); }

}  // namespace detail

inline HardParticleGraph hp_graph(Family f, int r, const QState& s) {
  check_state(s);
  if (!is_classical(f) || !valid_rank(f, r)) throw param_error("hard-particle graphs exist for classical types only");
  if (s.r != r) throw param_error("state rank does not match");
  // R(i,k) with R_0 = 1 (and R_{r+1} = 1 in type A)
  auto R = [&](int i, int k) -> Q {
    if (i <= 0 || i > r) return Q(1);
    return k == 0 ? s.R0[i - 1] : s.R1[i - 1];
  };
  auto odd_w = [&](int k) -> Q { return R(k, 1) * R(k - 1, 0) / (R(k, 0) * R(k - 1, 1)); };
  auto even_w = [&](int l) -> Q { return R(l - 1, 0) * R(l + 1, 1) / (R(l, 0) * R(l, 1)); };
  auto even_mirror_w = [&](int l) -> Q { return R(l - 1, 1) * R(l + 1, 0) / (R(l, 0) * R(l, 1)); };

  detail::HPBuilder b;
  b.g.family = f;
  b.g.rank = r;
  std::map<int, Q> w;  // plain vertex weights
  std::vector<std::pair<HPVertex, std::pair<int, int>>> extra;
  std::map<HPVertex, Q> extra_w;

  switch (f) {
    case Family::A: {
      for (int i = 1; i <= r + 1; ++i) w[2 * i - 1] = odd_w(i);
      for (int j = 1; j <= r; ++j) w[2 * j] = even_w(j);
      break;
    }
    case Family::C: {
      for (int k = 1; k <= r; ++k) {
        w[2 * k - 1] = odd_w(k);
        w[4 * r + 1 - 2 * k] = 1 / odd_w(k);
      }
      for (int l = 1; l <= r - 1; ++l) {
        w[2 * l] = even_w(l);
        w[4 * r - 2 * l] = even_mirror_w(l);
      }
      w[2 * r] = R(r - 1, 0) * R(r - 1, 1) / (R(r, 0) * R(r, 1));
      break;
    }
    case Family::B: {
      for (int k = 1; k <= r - 1; ++k) {
        w[2 * k - 1] = odd_w(k);
        w[4 * r + 3 - 2 * k] = 1 / odd_w(k);
      }
      Q top = R(r, 1) * R(r, 1) * R(r - 1, 0) / (R(r, 0) * R(r, 0) * R(r - 1, 1));
      w[2 * r - 1] = top;
      w[2 * r + 3] = 1 / top;
      for (int l = 1; l <= r - 2; ++l) {
        w[2 * l] = even_w(l);
        w[4 * r + 2 - 2 * l] = even_mirror_w(l);
      }
      w[2 * r - 2] = R(r - 2, 0) * R(r, 1) * R(r, 1) / (R(r - 1, 0) * R(r - 1, 1));
      w[2 * r] = 2 * R(r - 1, 0) / (R(r, 0) * R(r, 0));
      w[2 * r + 2] = 2 * R(r - 1, 1) / (R(r, 1) * R(r, 1));
      w[2 * r + 4] = R(r - 2, 1) * R(r, 0) * R(r, 0) / (R(r - 1, 0) * R(r - 1, 1));
      extra = {{{2 * r + 1, 1}, {r + 1, r + 1}}, {{2 * r + 1, 2}, {r + 2, r}}};
      extra_w[{2 * r + 1, 1}] = 1;
      extra_w[{2 * r + 1, 2}] = R(r - 1, 0) * R(r - 1, 1) / (R(r, 0) * R(r, 0) * R(r, 1) * R(r, 1));
      break;
    }
    case Family::D: {
      for (int k = 1; k <= r; ++k) {
        if (k == r - 1) continue;
        w[2 * k - 1] = odd_w(k);
        w[4 * r + 1 - 2 * k] = 1 / odd_w(k);
      }
      Q y = R(r - 2, 0) * R(r - 1, 1) * R(r, 1) / (R(r - 2, 1) * R(r - 1, 0) * R(r, 0));
      w[2 * r - 3] = y;
      w[2 * r + 3] = 1 / y;
      for (int l = 1; l <= r - 3; ++l) {
        w[2 * l] = even_w(l);
        w[4 * r - 2 * l] = even_mirror_w(l);
      }
      w[2 * r - 4] = R(r - 3, 0) * R(r - 1, 1) * R(r, 1) / (R(r - 2, 0) * R(r - 2, 1));
      w[2 * r + 4] = R(r - 3, 1) * R(r - 1, 0) * R(r, 0) / (R(r - 2, 0) * R(r - 2, 1));
      w[2 * r - 2] = R(r - 2, 0) * R(r, 1) / (R(r - 1, 0) * R(r - 1, 1) * R(r, 0));
      w[2 * r + 2] = R(r - 2, 1) * R(r, 0) / (R(r - 1, 0) * R(r - 1, 1) * R(r, 1));
      extra = {{{2 * r, 1}, {r + 1, r - 1}}, {{2 * r, 2}, {r + 2, r - 1}}, {{2 * r, 3}, {r + 2, r}}};
      extra_w[{2 * r, 1}] = R(r - 2, 0) * R(r - 1, 1) / (R(r - 1, 0) * R(r, 0) * R(r, 1));
      extra_w[{2 * r, 3}] = R(r - 2, 1) * R(r - 1, 0) / (R(r - 1, 1) * R(r, 0) * R(r, 1));
      extra_w[{2 * r, 2}] = R(r - 2, 0) * R(r - 2, 1) / (R(r - 1, 0) * R(r - 1, 1) * R(r, 0) * R(r, 1));
      break;
    }
    default: break;
  }
  for (auto& [n, q] : w) b.vertex({n, 0}, q, detail::plain_path(n));
  for (auto& [v, p] : extra) b.vertex(v, extra_w[v], p);
  b.finish();

  switch (f) {
    case Family::A:
    case Family::C: {
      int top = (f == Family::A) ? 2 * r + 1 : 4 * r - 1;
      for (int e = 2; e < top; e += 2) b.generic_even(e);
      break;
    }
    case Family::B: {
      HPVertex X1{2 * r + 1, 1}, X2{2 * r + 1, 2};
      for (int j = 1; j <= r - 2; ++j) {
        b.generic_even(2 * j);
        b.generic_even(4 * r + 2 - 2 * j);
      }
      int m = 2 * r;
      b.star({m - 2, 0}, {{m - 4, 0}, {m - 3, 0}, {m - 1, 0}, {m, 0}, X2});
      b.star({m + 4, 0}, {{m + 2, 0}, {m + 3, 0}, {m + 5, 0}, {m + 6, 0}, X2});
      b.star({m, 0}, {{m - 2, 0}, {m - 1, 0}, X1, X2});
      b.star({m + 2, 0}, {{m + 3, 0}, {m + 4, 0}, X1, X2});
      b.star(X2, {{m - 2, 0}, {m - 1, 0}, {m, 0}, {m + 2, 0}, {m + 3, 0}, {m + 4, 0}});
      // cancelling triples make P_{2r} and P_{2r+2} behave as intersecting
      b.edge({m, 0}, {m + 2, 0});
      b.g.effective_edge = {b.ids[{m, 0}], b.ids[{m + 2, 0}]};
      break;
    }
    case Family::D: {
      HPVertex Y1{2 * r, 1}, Y2{2 * r, 2}, Y3{2 * r, 3};
      for (int j = 1; j <= r - 3; ++j) {
        b.generic_even(2 * j);
        b.generic_even(4 * r - 2 * j);
      }
      int m = 2 * r;
      b.star({m - 4, 0}, {{m - 6, 0}, {m - 5, 0}, {m - 3, 0}, {m - 2, 0}, Y1, Y2});
      b.star({m + 4, 0}, {Y2, Y3, {m + 2, 0}, {m + 3, 0}, {m + 5, 0}, {m + 6, 0}});
      b.star({m - 2, 0}, {{m - 4, 0}, {m - 3, 0}, {m - 1, 0}, Y1, Y2, Y3});
      b.star({m + 2, 0}, {Y1, Y2, Y3, {m + 1, 0}, {m + 3, 0}, {m + 4, 0}});
      b.star(Y1, {{m - 4, 0}, {m - 3, 0}, {m - 2, 0}, Y2, {m + 1, 0}, {m + 2, 0}});
      b.star(Y3, {{m - 2, 0}, {m - 1, 0}, Y2, {m + 2, 0}, {m + 3, 0}, {m + 4, 0}});
      b.star(Y2, {{m - 4, 0}, {m - 3, 0}, {m - 2, 0}, {m - 1, 0}, Y1, Y3, {m + 1, 0}, {m + 2, 0}, {m + 3, 0}, {m + 4, 0}});
      b.g.hub = b.ids[Y2];
      break;
    }
    default: break;
  }
  return b.g;
}

// every independent set with at most max_size vertices, as a bitmask
inline void for_each_independent_set(const HardParticleGraph& g, int max_size,
                                     const std::function<void(std::uint64_t, int)>& visit) {
  int n = g.size();
  std::function<void(int, std::uint64_t, std::uint64_t, int)> rec = [&](int from, std::uint64_t set, std::uint64_t blocked,
                                                                       int sz) {
    visit(set, sz);
    if (sz == max_size) return;
    for (int v = from; v < n; ++v) {
      if (blocked >> v & 1) continue;
      rec(v + 1, set | std::uint64_t(1) << v, blocked | g.adj[v], sz + 1);
    }
  };
  rec(0, 0, 0, 0);
}

inline Q set_weight(const HardParticleGraph& g, std::uint64_t set) {
  Q w = 1;
  for (int v = 0; v < g.size(); ++v)
    if (set >> v & 1) w *= g.weight[v];
  return w;
}

// P[j] = sum of wt(C) over independent sets of size j <= max_size avoiding `blocked`;
// memoized on (next vertex, blocked vertices ahead), cheap for the banded graphs here
inline std::vector<Q> independence_polynomial(const HardParticleGraph& g, int max_size, std::uint64_t blocked = 0) {
  int n = g.size();
  std::map<std::pair<int, std::uint64_t>, std::vector<Q>> memo;
  std::function<const std::vector<Q>&(int, std::uint64_t)> rec = [&](int v, std::uint64_t b) -> const std::vector<Q>& {
    if (v < 64) b &= ~((std::uint64_t(1) << v) - 1);
    auto key = std::make_pair(v, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Q> out(max_size + 1, Q(0));
    if (v == n) {
      out[0] = 1;
    } else {
      out = rec(v + 1, b);
      if (!(b >> v & 1)) {
        const auto& with = rec(v + 1, b | g.adj[v]);
        for (int j = 0; j < max_size; ++j)
          if (sgn(with[j])) out[j + 1] += g.weight[v] * with[j];
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  return rec(0, blocked);
}

// sum of wt(C) over independent sets of size j (optionally containing a given vertex)
inline Q partition_sum(const HardParticleGraph& g, int j, int must_contain = -1) {
  if (j < 0) return 0;
  if (must_contain < 0) return independence_polynomial(g, j)[j];
  if (j == 0) return 0;
  std::uint64_t b = g.adj[must_contain] | std::uint64_t(1) << must_contain;
  return g.weight[must_contain] * independence_polynomial(g, j - 1, b)[j - 1];
}

// largest j with a hard-particle formula
inline int conserved_range(Family f, int r) {
  switch (f) {
    case Family::A:
    case Family::C: return r;
    case Family::B: return r - 1;
    case Family::D: return r - 2;
    default: return 0;
  }
}

// A, B, D: C_j = H_j.  C: the sum is the trace of the j-th exterior power (f_j), not H_j.
inline Q conserved_quantity(Family f, int r, int j, const QState& s) {
  if (!is_classical(f)) throw param_error("no conserved-quantity formula for " + family_name(f));
  if (j < 1 || j > conserved_range(f, r)) throw param_error("j out of range for " + family_name(f) + std::to_string(r));
  auto g = hp_graph(f, r, s);
  Q c = partition_sum(g, j);
  if (f == Family::D && j >= 2) c += partition_sum(g, j - 2, g.hub);
  return c;
}

inline std::vector<Q> conserved_quantities(Family f, int r, const QState& s) {
  if (!is_classical(f)) throw param_error("no conserved-quantity formula for " + family_name(f));
  int n = conserved_range(f, r);
  auto g = hp_graph(f, r, s);
  auto P = independence_polynomial(g, n);
  std::vector<Q> out(P.begin() + 1, P.end());
  // D: sets of size j-2 through the hub; empty for j = 2
  if (f == Family::D && n >= 3) {
    std::uint64_t b = g.adj[g.hub] | std::uint64_t(1) << g.hub;
    auto Ph = independence_polynomial(g, n - 3, b);
    for (int j = 3; j <= n; ++j) out[j - 1] += g.weight[g.hub] * Ph[j - 3];
  }
  return out;
}

// i_1 < ... < i_j in [1,n]; after an odd value the next is >= +2, after an even value >= +3
inline std::vector<std::vector<int>> gap_rule_sets(int n, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if ((int)cur.size() == j) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= n; ++v) {
      cur.push_back(v);
      rec(v + (v % 2 ? 2 : 3));
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// ---- spin quantities ----

inline Q spin_conserved(Family f, int r, SpinRep which, const QState& s) {
  check_state(s);
  auto sb = spin_basis(f, r, which);
  auto c = cartan(f, r);
  std::vector<Q> Y(r + 1, Q(1));
  for (int k = 1; k <= r; ++k)
    for (int j = 1; j <= r; ++j)
      if (c(j, k) != 0) Y[k] *= qpow(s.R1[j - 1], -c(j, k));
  Q total = 0;
  for (const auto& J : sb.sets) {
    Q z = 1;
    for (int i = 1; i <= r; ++i) {
      if (sb.in_plus(J, i)) z *= s.R1[i - 1] / s.R0[i - 1] * (1 + Y[i]);
      if (sb.in_minus(J, i)) z *= s.R0[i - 1] / s.R1[i - 1];
    }
    total += z;
  }
  return total;
}

// mirror-pairing constraints on a configuration, as bitmasks
struct BundleRule {
  std::uint64_t forbidden = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> together;  // both or neither
  std::vector<std::uint64_t> exactly_one;
  std::uint64_t parity_mask = 0;
  int parity = -1;  // required popcount parity on parity_mask, -1 = none

  bool accepts(std::uint64_t set) const {
    if (set & forbidden) return false;
    for (auto& [x, y] : together)
      if (bool(set & x) != bool(set & y)) return false;
    for (auto m : exactly_one)
      if (__builtin_popcountll(set & m) != 1) return false;
    if (parity >= 0 && __builtin_popcountll(set & parity_mask) % 2 != parity) return false;
    return true;
  }
};

inline BundleRule bundle_rule(const HardParticleGraph& g, SpinRep which) {
  int r = g.rank;
  auto bits = [&](std::initializer_list<HPVertex> vs) {
    std::uint64_t m = 0;
    for (auto& v : vs) m |= std::uint64_t(1) << g.id(v);
    return m;
  };
  auto one = [&](int n) { return bits({{n, 0}}); };
  BundleRule br;
  if (g.family == Family::B) {
    HPVertex X1{2 * r + 1, 1}, X2{2 * r + 1, 2};
    br.forbidden = bits({{2 * r, 0}, {2 * r + 2, 0}, X1});
    for (int k = 1; k <= r - 1; ++k) br.together.push_back({one(2 * k), one(4 * r + 2 - 2 * k)});
    // start levels {k, 2r+2-k}
    br.exactly_one.push_back(bits({{1, 0}, {4 * r, 0}, {4 * r + 1, 0}}));
    for (int k = 2; k <= r - 1; ++k)
      br.exactly_one.push_back(bits({{2 * k - 2, 0}, {2 * k - 1, 0}, {4 * r + 2 - 2 * k, 0}, {4 * r + 3 - 2 * k, 0}}));
    br.exactly_one.push_back(bits({{2 * r - 2, 0}, {2 * r - 1, 0}, X2, {2 * r + 3, 0}}));
    // lowest levels
    br.exactly_one.push_back(bits({{1, 0}, {2, 0}, {4 * r + 1, 0}}));
    for (int k = 2; k <= r - 1; ++k)
      br.exactly_one.push_back(bits({{2 * k - 1, 0}, {2 * k, 0}, {4 * r + 3 - 2 * k, 0}, {4 * r + 4 - 2 * k, 0}}));
    br.exactly_one.push_back(bits({{2 * r - 1, 0}, X2, {2 * r + 3, 0}, {2 * r + 4, 0}}));
    if (which != SpinRep::spin) throw param_error("type B has a single spin representation");
    return br;
  }
  if (g.family == Family::D) {
    HPVertex Y1{2 * r, 1}, Y2{2 * r, 2}, Y3{2 * r, 3};
    br.forbidden = bits({Y2});
    for (int k = 1; k <= r - 1; ++k) br.together.push_back({one(2 * k), one(4 * r - 2 * k)});
    br.together.push_back({bits({Y1}), bits({Y3})});
    br.exactly_one.push_back(bits({{1, 0}, {4 * r - 2, 0}, {4 * r - 1, 0}}));
    for (int k = 2; k <= r - 2; ++k)
      br.exactly_one.push_back(bits({{2 * k - 2, 0}, {2 * k - 1, 0}, {4 * r - 2 * k, 0}, {4 * r + 1 - 2 * k, 0}}));
    br.exactly_one.push_back(bits({{2 * r - 4, 0}, {2 * r - 3, 0}, Y3, {2 * r + 2, 0}, {2 * r + 3, 0}}));
    br.exactly_one.push_back(bits({{2 * r - 2, 0}, {2 * r - 1, 0}, Y1, {2 * r + 1, 0}}));
    br.exactly_one.push_back(bits({{1, 0}, {2, 0}, {4 * r - 1, 0}}));
    for (int k = 2; k <= r - 2; ++k)
      br.exactly_one.push_back(bits({{2 * k - 1, 0}, {2 * k, 0}, {4 * r + 1 - 2 * k, 0}, {4 * r + 2 - 2 * k, 0}}));
    br.exactly_one.push_back(bits({{2 * r - 3, 0}, {2 * r - 2, 0}, Y1, {2 * r + 3, 0}, {2 * r + 4, 0}}));
    br.exactly_one.push_back(bits({{2 * r - 1, 0}, Y3, {2 * r + 1, 0}, {2 * r + 2, 0}}));
    br.parity_mask = bits({Y1, Y3});
    for (int n = 2 * r + 1; n <= 4 * r - 1; ++n) br.parity_mask |= one(n);
    if (which == SpinRep::spin) throw param_error("type D needs halfspin_odd or halfspin_even");
    br.parity = which == SpinRep::halfspin_odd ? 1 : 0;
    return br;
  }
  throw param_error("bundled configurations exist for types B and D only");
}

inline Q bundled_spin_conserved(Family f, int r, SpinRep which, const QState& s) {
  auto g = hp_graph(f, r, s);
  auto rule = bundle_rule(g, which);
  Q total = 0;
  for_each_independent_set(g, g.size(), [&](std::uint64_t set, int) {
    if (!rule.accepts(set)) return;
    auto rt = exact_sqrt(set_weight(g, set));
    if (!rt) throw invariant_error("bundled weight is not a rational square");
    total += *rt;
  });
  return total;
}

}  // namespace ctoda
