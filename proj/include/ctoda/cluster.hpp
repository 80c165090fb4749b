#pragma once

#include "ctoda/lie.hpp"

#include <map>
#include <vector>

namespace ctoda {

struct Seed {
  std::vector<int> indices;  // labels, possibly negative
  std::vector<bool> frozen;  // aligned with indices
  QMatrix B;
  std::vector<int> d;

  int size() const { return (int)indices.size(); }
  int pos(int label) const {
    for (int p = 0; p < size(); ++p)
      if (indices[p] == label) return p;
    throw param_error("unknown seed index " + std::to_string(label));
  }
  const Q& b(int i, int j) const { return B(pos(i), pos(j)); }
  bool is_frozen(int label) const { return frozen[pos(label)]; }

  friend bool operator==(const Seed& x, const Seed& y) {
    return x.indices == y.indices && x.frozen == y.frozen && x.B == y.B && x.d == y.d;
  }
};

inline bool skew_symmetrizable(const Seed& s) {
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j)
      if (s.d[i] * s.B(i, j) != -s.d[j] * s.B(j, i)) return false;
  return true;
}

inline Q pos_part(const Q& x) { return sgn(x) > 0 ? x : Q(0); }

// mutation at label k
inline Seed mutate_exchange(const Seed& s, int k) {
  int p = s.pos(k);
  if (s.frozen[p]) throw param_error("cannot mutate at a frozen index");
  Seed out = s;
  int n = s.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == p || j == p) {
        out.B(i, j) = -s.B(i, j);
      } else {
        Q prod = s.B(i, p) * s.B(p, j);
        if (sgn(prod) > 0) out.B(i, j) = s.B(i, j) + sgn(s.B(i, p)) * prod;
      }
    }
  return out;
}

namespace detail {
inline long int_exponent(const Q& e) {
  if (!is_integer(e)) throw domain_error("non-integral exponent in cluster transformation");
  return to_long(e);
}
inline void check_nonzero(const std::vector<Q>& v, int n) {
  if ((int)v.size() != n) throw param_error("variable vector has wrong size");
  for (auto& x : v)
    if (sgn(x) == 0) throw domain_error("zero cluster variable");
}
}  // namespace detail

// A'_k = A_k^{-1} (prod A_j^{[B_jk]+} + prod A_j^{[-B_jk]+})
inline std::vector<Q> mutate_A(const std::vector<Q>& A, const Seed& s, int k) {
  int p = s.pos(k);
  if (s.frozen[p]) throw param_error("cannot mutate at a frozen index");
  detail::check_nonzero(A, s.size());
  Q plus = 1, minus = 1;
  for (int j = 0; j < s.size(); ++j) {
    const Q& b = s.B(j, p);
    if (sgn(b) > 0) plus *= qpow(A[j], detail::int_exponent(b));
    if (sgn(b) < 0) minus *= qpow(A[j], detail::int_exponent(-b));
  }
  auto out = A;
  out[p] = (plus + minus) / A[p];
  return out;
}

// X'_k = 1/X_k, X'_i = X_i X_k^{[B_ki]+} (1+X_k)^{-B_ki}
inline std::vector<Q> mutate_X(const std::vector<Q>& X, const Seed& s, int k) {
  int p = s.pos(k);
  if (s.frozen[p]) throw param_error("cannot mutate at a frozen index");
  detail::check_nonzero(X, s.size());
  Q one_plus = 1 + X[p];
  auto out = X;
  for (int i = 0; i < s.size(); ++i) {
    if (i == p) continue;
    const Q& b = s.B(p, i);
    if (sgn(b) == 0) continue;
    long e = detail::int_exponent(b);
    if (e < 0 && sgn(one_plus) == 0) throw domain_error("singular X-mutation (X_k = -1)");
    if (e > 0) out[i] *= qpow(X[p], e);
    if (sgn(one_plus) == 0) throw domain_error("singular X-mutation (X_k = -1)");
    out[i] *= qpow(one_plus, -e);
  }
  out[p] = 1 / X[p];
  return out;
}

// X_i = prod_j A_j^{B_ji}
inline std::vector<Q> p_map(const std::vector<Q>& A, const Seed& s) {
  detail::check_nonzero(A, s.size());
  std::vector<Q> X(s.size(), Q(1));
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j)
      if (sgn(s.B(j, i))) X[i] *= qpow(A[j], detail::int_exponent(s.B(j, i)));
  return X;
}

// relabel: out carries the same index order, with B'_{perm(i),perm(j)} = B_{i,j}
inline Seed permute(const Seed& s, const std::map<int, int>& perm) {
  auto img = [&](int x) {
    auto it = perm.find(x);
    return it == perm.end() ? x : it->second;
  };
  Seed out = s;
  for (int i = 0; i < s.size(); ++i) {
    int pi = s.pos(img(s.indices[i]));
    out.frozen[pi] = s.frozen[i];
    out.d[pi] = s.d[i];
    for (int j = 0; j < s.size(); ++j) out.B(pi, s.pos(img(s.indices[j]))) = s.B(i, j);
  }
  return out;
}

// B = [[0,-C],[C,0]] on 1..2r
inline Seed qsystem_seed(const CartanData& c) {
  int r = c.rank;
  Seed s;
  s.B = QMatrix(2 * r);
  for (int i = 1; i <= 2 * r; ++i) {
    s.indices.push_back(i);
    s.frozen.push_back(false);
    s.d.push_back(c.dd((i - 1) % r + 1));
  }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      s.B(a, r + b) = -c.C[a][b];
      s.B(r + a, b) = c.C[a][b];
    }
  return s;
}

// sigma(i) = i +- r
inline std::map<int, int> half_shift(int r) {
  std::map<int, int> m;
  for (int i = 1; i <= r; ++i) {
    m[i] = i + r;
    m[i + r] = i;
  }
  return m;
}

inline Seed mutate_sequence(Seed s, const std::vector<int>& ks) {
  for (int k : ks) s = mutate_exchange(s, k);
  return s;
}

// is mu_1...mu_r a sigma-period: mu(B)_{sigma(i),sigma(j)} = B_{ij}
inline bool is_sigma_period(const Seed& s, int r) {
  Seed m = mutate_sequence(s, standard_coxeter(r));
  return permute(s, half_shift(r)).B == m.B;
}

// ---- amalgamated seeds on the conjugation quotient ----

namespace detail {
inline Seed signed_frame(const CartanData& c) {
  int r = c.rank;
  Seed s;
  s.B = QMatrix(2 * r);
  for (int i = 1; i <= r; ++i) s.indices.push_back(-i);
  for (int i = 1; i <= r; ++i) s.indices.push_back(i);
  s.frozen.assign(2 * r, false);
  for (int i = 1; i <= r; ++i) s.d.push_back(c.dd(i));
  for (int i = 1; i <= r; ++i) s.d.push_back(c.dd(i));
  return s;
}
}  // namespace detail

// general double reduced word of a Coxeter pair
inline Seed build_Btilde(const DoubleReducedWord& w, const CartanData& c) {
  int r = c.rank;
  check_coxeter_pair(w, r);
  Seed s = detail::signed_frame(c);
  std::vector<int> jm(r + 1), jp(r + 1), ep(r + 1);
  for (int j = 1; j <= r; ++j) {
    jm[j] = w.first(j);
    jp[j] = w.second(j);
    ep[j] = w.eps(j);
  }
  auto lt = [](int a, int b) { return a < b ? 1 : 0; };
  auto btw = [](int a, int x, int b) { return (a < x && x < b) ? 1 : 0; };
  for (int j = 1; j <= r; ++j)
    for (int k = 1; k <= r; ++k) {
      Q half = qfrac(c(j, k), 2);
      int djk = j == k;
      int mm = ep[k] * (btw(jm[j], jm[k], jp[j]) + btw(jm[j], jp[k], jp[j])) -
               ep[j] * (btw(jm[k], jm[j], jp[k]) + btw(jm[k], jp[j], jp[k]));
      int mp = ep[j] * (2 * djk + lt(jm[j], jm[k]) + lt(jp[j], jm[k]) + lt(jp[k], jm[j]) + lt(jp[k], jp[j])) +
               ep[k] * (btw(jm[j], jm[k], jp[j]) + btw(jm[j], jp[k], jp[j]));
      int pm = ep[k] * (2 * djk + lt(jm[k], jm[j]) + lt(jp[k], jm[j]) + lt(jp[j], jm[k]) + lt(jp[j], jp[k])) +
               ep[j] * (btw(jm[k], jm[j], jp[k]) + btw(jm[k], jp[j], jp[k]));
      int pp = ep[j] * (lt(jm[j], jm[k]) + lt(jp[j], jm[k]) + lt(jp[k], jm[j]) + lt(jp[k], jp[j])) -
               ep[k] * (lt(jm[k], jm[j]) + lt(jp[k], jm[j]) + lt(jp[j], jm[k]) + lt(jp[j], jp[k]));
      s.B(s.pos(-j), s.pos(-k)) = half * mm;
      s.B(s.pos(-j), s.pos(k)) = -half * mp;
      s.B(s.pos(j), s.pos(-k)) = half * pm;
      s.B(s.pos(j), s.pos(k)) = half * pp;
    }
  return s;
}

// closed form for unmixed words
inline Seed build_Btilde_unmixed(const DoubleReducedWord& w, const CartanData& c) {
  int r = c.rank;
  check_coxeter_pair(w, r);
  if (!w.unmixed()) throw param_error("word is not unmixed");
  Seed s = detail::signed_frame(c);
  auto lt = [](int a, int b) { return a < b ? 1 : 0; };
  for (int j = 1; j <= r; ++j)
    for (int k = 1; k <= r; ++k) {
      int jm = w.pos_minus(j), jp = w.pos_plus(j), km = w.pos_minus(k), kp = w.pos_plus(k);
      Q same = qfrac(c(j, k), 2) * (lt(km, jm) - lt(jm, km) + lt(jp, kp) - lt(kp, jp));
      s.B(s.pos(-j), s.pos(-k)) = same;
      s.B(s.pos(j), s.pos(k)) = same;
      s.B(s.pos(-j), s.pos(k)) = c(j, k) * ((j == k) + lt(jm, km) + lt(kp, jp));
      s.B(s.pos(j), s.pos(-k)) = -c(j, k) * ((j == k) + lt(km, jm) + lt(jp, kp));
    }
  return s;
}

// ---- face seed of the network and its amalgamation ----

// Faces: -1..-r (left boundary of each strip) and 1..m (the face to the right of
// the m-th chip).  Every chip contributes a solid arrow along its own strip and
// dashed half-arrows to the current faces of the neighbouring strips.
inline Seed build_face_seed(const DoubleReducedWord& w, const CartanData& c) {
  if (!is_classical(c.family)) throw param_error("face seeds are built for classical families only");
  int r = c.rank, m = w.size();
  check_coxeter_pair(w, r);
  Seed s;
  for (int i = 1; i <= r; ++i) s.indices.push_back(-i);
  for (int j = 1; j <= m; ++j) s.indices.push_back(j);
  s.B = QMatrix(r + m);
  auto level = [&](int label) { return label < 0 ? -label : std::abs(w.entries[label - 1]); };
  for (int label : s.indices) s.d.push_back(c.dd(level(label)));
  auto arrow = [&](int a, int b, const Q& wab, const Q& wba) {
    s.B(s.pos(a), s.pos(b)) += wab;
    s.B(s.pos(b), s.pos(a)) -= wba;
  };
  auto half = [&](int a, int b) {
    int la = level(a), lb = level(b);
    arrow(a, b, qfrac(-c(la, lb), 2), qfrac(-c(lb, la), 2));
  };
  std::vector<int> cur(r + 1);
  for (int k = 1; k <= r; ++k) cur[k] = -k;
  for (int n = 1; n <= m; ++n) {
    int e = w.entries[n - 1], k = std::abs(e), p = cur[k];
    if (e > 0)
      arrow(p, n, 1, 1);
    else
      arrow(n, p, 1, 1);
    for (int l = 1; l <= r; ++l) {
      if (l == k || c(k, l) == 0) continue;
      if (e > 0) {
        half(cur[l], p);
        half(n, cur[l]);
      } else {
        half(p, cur[l]);
        half(cur[l], n);
      }
    }
    cur[k] = n;
  }
  s.frozen.assign(r + m, false);
  for (int i = 1; i <= r; ++i) {
    s.frozen[s.pos(-i)] = true;
    s.frozen[s.pos(w.second(i))] = true;
  }
  return s;
}

// pi(-i) = i, pi(i_+) = i, pi(i_-) = -i  (i_-/i_+ first/second occurrence)
inline Seed amalgamate(const Seed& face, const DoubleReducedWord& w, const CartanData& c) {
  int r = c.rank;
  std::map<int, int> pi;
  for (int i = 1; i <= r; ++i) {
    pi[-i] = i;
    pi[w.second(i)] = i;
    pi[w.first(i)] = -i;
  }
  Seed s = detail::signed_frame(c);
  for (int x = 0; x < face.size(); ++x)
    for (int y = 0; y < face.size(); ++y) {
      int a = pi.at(face.indices[x]), b = pi.at(face.indices[y]);
      s.B(s.pos(a), s.pos(b)) += face.B(x, y);
    }
  return s;
}

// sigma_j: swap labels -j and j
inline std::map<int, int> sigma(int j) { return {{j, -j}, {-j, j}}; }

// tau_k = mu_{-k} o sigma_k
inline Seed tau(const Seed& s, int k) { return mutate_exchange(permute(s, sigma(k)), -k); }

// ---- moves between Coxeter pairs ----

struct CoxeterPair {
  Word u, v;
  friend bool operator==(const CoxeterPair& a, const CoxeterPair& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator<(const CoxeterPair& a, const CoxeterPair& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  }
};

// case 1: k source of O(u) becomes a sink, v fixed; case 2: k sink of O(v) becomes a source
inline bool can_flip(const CoxeterPair& p, int k, int which, const CartanData& c) {
  return which == 1 ? is_source(p.u, k, c) : is_sink(p.v, k, c);
}

inline CoxeterPair flip(const CoxeterPair& p, int k, int which, const CartanData& c) {
  if (!can_flip(p, k, which, c)) throw param_error("flip hypotheses not met");
  CoxeterPair q = p;
  if (which == 1) {
    q.u.clear();
    for (int x : p.u)
      if (x != k) q.u.push_back(x);
    q.u.push_back(k);
  } else {
    q.v = {k};
    for (int x : p.v)
      if (x != k) q.v.push_back(x);
  }
  return q;
}

// ---- compatible Poisson structure ----

// Lambda = -D B^{-1}
inline QMatrix lambda_matrix(const Seed& s) {
  QMatrix D(s.size());
  for (int i = 0; i < s.size(); ++i) D(i, i) = s.d[i];
  QMatrix L = -(D * inverse(s.B));
  if (L.transpose() != -L) throw invariant_error("Lambda is not skew-symmetric");
  return L;
}

inline bool lambda_compatible(const Seed& s, const QMatrix& L) {
  QMatrix D(s.size());
  for (int i = 0; i < s.size(); ++i) D(i, i) = -s.d[i];
  return L * s.B == D;
}

// Lambda_{i,j} - Lambda_{-i,j} - Lambda_{i,-j} + Lambda_{-i,-j} = 0 on a signed frame
inline bool lambda_cross_identity(const Seed& s, const QMatrix& L, int r) {
  auto at = [&](int i, int j) { return L(s.pos(i), s.pos(j)); };
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      if (at(i, j) - at(-i, j) - at(i, -j) + at(-i, -j) != 0) return false;
  return true;
}

}  // namespace ctoda
