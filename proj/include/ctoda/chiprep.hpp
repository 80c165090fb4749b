#pragma once

#include "ctoda/lie.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace ctoda {

// c_1..c_r, t_1..t_r (0-based storage)
struct FactorizationPoint {
  std::vector<Q> c, t;
  friend bool operator==(const FactorizationPoint& a, const FactorizationPoint& b) { return a.c == b.c && a.t == b.t; }
};

inline void check_positive(const FactorizationPoint& fp, int r) {
  if ((int)fp.c.size() != r || (int)fp.t.size() != r) throw param_error("factorization point has wrong size");
  for (int i = 0; i < r; ++i)
    if (sgn(fp.c[i]) <= 0 || sgn(fp.t[i]) <= 0) throw param_error("factorization point must be positive");
}

inline FactorizationPoint random_point(int r, RatGen& g) {
  FactorizationPoint fp;
  fp.c = g.vec(r);
  fp.t = g.vec(r);
  return fp;
}

inline int defining_dim(Family f, int r) {
  switch (f) {
    case Family::A: return r + 1;
    case Family::B: return 2 * r + 1;
    case Family::C:
    case Family::D: return 2 * r;
    default: throw param_error("no matrix model for family " + family_name(f));
  }
}

// Chevalley generators e_{+i}, e_{-i}, h_i in the defining representation.
// Index vectors are 1-based: pos[i], neg[i], h[i] for i in [1,r].
struct Generators {
  Family family;
  int rank, dim;
  std::vector<GMatrix> pos, neg;
  std::vector<std::vector<long>> h;  // diagonal of h_i
};

inline Generators generators(Family f, int r) {
  if (!valid_rank(f, r)) throw param_error("invalid rank for family");
  int n = defining_dim(f, r);
  Generators g{f, r, n, std::vector<GMatrix>(r + 1, GMatrix(n)), std::vector<GMatrix>(r + 1, GMatrix(n)), {}};
  // 1-based unit matrix entry
  auto put = [&](GMatrix& m, int i, int j, const QSqrt2& v) { m(i - 1, j - 1) += v; };
  QSqrt2 one(1);
  for (int i = 1; i <= r; ++i) {
    auto& P = g.pos[i];
    auto& N = g.neg[i];
    switch (f) {
      case Family::A:
        put(P, i, i + 1, one);
        put(N, i + 1, i, one);
        break;
      case Family::B:
        if (i < r) {
          put(P, i, i + 1, one);
          put(P, 2 * r + 1 - i, 2 * r + 2 - i, one);
          put(N, i + 1, i, one);
          put(N, 2 * r + 2 - i, 2 * r + 1 - i, one);
        } else {
          put(P, r, r + 1, QSqrt2::sqrt2());
          put(P, r + 1, r + 2, QSqrt2::sqrt2());
          put(N, r + 1, r, QSqrt2::sqrt2());
          put(N, r + 2, r + 1, QSqrt2::sqrt2());
        }
        break;
      case Family::C:
        if (i < r) {
          put(P, i, i + 1, one);
          put(P, 2 * r - i, 2 * r + 1 - i, one);
          put(N, i + 1, i, one);
          put(N, 2 * r + 1 - i, 2 * r - i, one);
        } else {
          put(P, r, r + 1, one);
          put(N, r + 1, r, one);
        }
        break;
      case Family::D:
        if (i < r) {
          put(P, i, i + 1, one);
          put(P, 2 * r - i, 2 * r + 1 - i, one);
          put(N, i + 1, i, one);
          put(N, 2 * r + 1 - i, 2 * r - i, one);
        } else {
          put(P, r - 1, r + 1, one);
          put(P, r, r + 2, one);
          put(N, r + 1, r - 1, one);
          put(N, r + 2, r, one);
        }
        break;
      default: break;
    }
  }
  g.h.assign(r + 1, std::vector<long>(n, 0));
  for (int i = 1; i <= r; ++i) {
    GMatrix hm = g.pos[i] * g.neg[i] - g.neg[i] * g.pos[i];
    if (!hm.is_diagonal()) throw invariant_error("h_i not diagonal");
    for (int p = 0; p < n; ++p) {
      if (!hm(p, p).is_rational() || !is_integer(hm(p, p).a)) throw invariant_error("h_i not integral");
      g.h[i][p] = to_long(hm(p, p).a);
    }
  }
  return g;
}

// exp(a * x) for nilpotent x, summed until the series terminates
inline GMatrix exp_nilpotent(const GMatrix& x, const QSqrt2& a) {
  int n = x.rows();
  GMatrix out = GMatrix::identity(n);
  GMatrix term = GMatrix::identity(n);
  GMatrix ax = x * a;
  for (int k = 1; k <= n; ++k) {
    term = term * ax * QSqrt2(qfrac(1, k));
    bool zero = true;
    for (int i = 0; i < n && zero; ++i)
      for (int j = 0; j < n; ++j)
        if (!is_zero(term(i, j))) {
          zero = false;
          break;
        }
    if (zero) return out;
    out += term;
  }
  throw invariant_error("generator is not nilpotent");
}

inline GMatrix chip_E(const Generators& g, int i, const QSqrt2& a) {
  if (i == 0 || std::abs(i) > g.rank) throw param_error("chip index out of range");
  return exp_nilpotent(i > 0 ? g.pos[i] : g.neg[-i], a);
}
inline GMatrix chip_E(Family f, int r, int i, const QSqrt2& a) { return chip_E(generators(f, r), i, a); }

// D(t) = prod_i t_i^{alpha_i^vee}
inline GMatrix chip_D(const Generators& g, const std::vector<Q>& t) {
  if ((int)t.size() != g.rank) throw param_error("torus parameter has wrong size");
  for (auto& x : t)
    if (sgn(x) == 0) throw domain_error("zero torus parameter");
  GMatrix d(g.dim);
  for (int p = 0; p < g.dim; ++p) {
    Q v = 1;
    for (int i = 1; i <= g.rank; ++i)
      if (g.h[i][p]) v *= qpow(t[i - 1], g.h[i][p]);
    d(p, p) = QSqrt2(v);
  }
  return d;
}
inline GMatrix chip_D(Family f, int r, const std::vector<Q>& t) { return chip_D(generators(f, r), t); }

// s^{alpha_j^vee}
inline GMatrix coroot(const Generators& g, int j, const Q& s) {
  std::vector<Q> t(g.rank, Q(1));
  t[j - 1] = s;
  return chip_D(g, t);
}

inline GMatrix form_J(Family f, int r) {
  int n = defining_dim(f, r);
  GMatrix J(n);
  auto sgn1 = [](int i) { return QSqrt2(i % 2 ? 1 : -1); };  // (-1)^{i+1}
  switch (f) {
    case Family::B:
      for (int i = 1; i <= n; ++i) J(i - 1, n - i) = sgn1(i);
      break;
    case Family::C:
      for (int i = 1; i <= n; ++i) J(i - 1, n - i) = sgn1(i);
      break;
    case Family::D:
      for (int i = 1; i <= r; ++i) {
        J(i - 1, n - i) = sgn1(i);
        J(n - i, i - 1) = sgn1(i);
      }
      break;
    default: throw param_error("no invariant form for this family");
  }
  return J;
}

inline bool preserves_form(Family f, int r, const GMatrix& m) {
  if (f == Family::A) return char_poly_coeffs(m).back() == QSqrt2(1);
  GMatrix J = form_J(f, r);
  return m.transpose() * J * m == J;
}

// E_{i_1}(1)...E_{i_r}(1) D(t) E_{i_{r+1}}(c)...E_{i_{2r}}(c) for an unmixed Coxeter-pair word
inline GMatrix element(const Generators& g, const DoubleReducedWord& w, const FactorizationPoint& fp) {
  check_coxeter_pair(w, g.rank);
  if (!w.unmixed()) throw param_error("element() needs an unmixed word");
  int r = g.rank;
  GMatrix m = GMatrix::identity(g.dim);
  for (int p = 0; p < r; ++p) m = m * chip_E(g, w.entries[p], QSqrt2(1));
  m = m * chip_D(g, fp.t);
  for (int p = r; p < 2 * r; ++p) {
    int k = w.entries[p];
    m = m * chip_E(g, k, QSqrt2(fp.c[k - 1]));
  }
  return m;
}
inline GMatrix element(Family f, int r, const DoubleReducedWord& w, const FactorizationPoint& fp) {
  return element(generators(f, r), w, fp);
}

// H_1.. from f_0..f_n; H[k-1] = H_k
template <class T>
std::vector<T> hamiltonian_H_from_f(Family f, int r, const std::vector<T>& fc) {
  std::vector<T> H;
  auto at = [&](int k) { return k < (int)fc.size() ? fc[k] : T(0); };
  switch (f) {
    case Family::A:
      for (int j = 1; j <= r; ++j) H.push_back(at(j));
      break;
    case Family::B:
      for (int j = 1; j <= r - 1; ++j) H.push_back(at(j));
      break;
    case Family::D:
      for (int j = 1; j <= r - 2; ++j) H.push_back(at(j));
      break;
    case Family::C:
      for (int k = 1; k <= r; ++k) {
        T s(0);
        for (int i = k % 2; i <= k; i += 2) s += at(i);
        H.push_back(s);
      }
      break;
    default: throw param_error("no H/f relation for this family");
  }
  return H;
}

// ---- spin representations ----

enum class SpinRep { spin, halfspin_odd, halfspin_even };

struct SpinBasis {
  Family family;
  int rank;
  SpinRep which;
  std::vector<std::vector<int>> sets;  // sorted elements
  std::map<std::vector<int>, int> index;

  int size() const { return (int)sets.size(); }
  // phi_k on I in I_k^+, or nullopt-like empty vector
  bool in_plus(const std::vector<int>& I, int k) const;
  bool in_minus(const std::vector<int>& I, int k) const;
  std::vector<int> phi(const std::vector<int>& I, int k) const;
};

namespace detail {
inline bool has(const std::vector<int>& I, int x) { return std::binary_search(I.begin(), I.end(), x); }
inline std::vector<int> swap_out(std::vector<int> I, std::vector<int> out, std::vector<int> in) {
  for (int x : out) I.erase(std::find(I.begin(), I.end(), x));
  for (int x : in) I.push_back(x);
  std::sort(I.begin(), I.end());
  return I;
}
}  // namespace detail

inline bool SpinBasis::in_plus(const std::vector<int>& I, int k) const {
  int r = rank;
  using detail::has;
  if (family == Family::B) {
    if (k < r) return has(I, k) && has(I, 2 * r + 1 - k);
    return has(I, r);
  }
  if (k < r) return has(I, k) && has(I, 2 * r - k);
  return has(I, r - 1) && has(I, r);
}
inline bool SpinBasis::in_minus(const std::vector<int>& I, int k) const {
  int r = rank;
  using detail::has;
  if (family == Family::B) {
    if (k < r) return has(I, k + 1) && has(I, 2 * r + 2 - k);
    return has(I, r + 2);
  }
  if (k < r) return has(I, k + 1) && has(I, 2 * r + 1 - k);
  return has(I, r + 1) && has(I, r + 2);
}
inline std::vector<int> SpinBasis::phi(const std::vector<int>& I, int k) const {
  int r = rank;
  if (family == Family::B) {
    if (k < r) return detail::swap_out(I, {k, 2 * r + 1 - k}, {k + 1, 2 * r + 2 - k});
    return detail::swap_out(I, {r}, {r + 2});
  }
  if (k < r) return detail::swap_out(I, {k, 2 * r - k}, {k + 1, 2 * r + 1 - k});
  return detail::swap_out(I, {r - 1, r}, {r + 1, r + 2});
}

inline SpinBasis spin_basis(Family f, int r, SpinRep which) {
  if (f == Family::B) {
    if (which != SpinRep::spin) throw param_error("type B has a single spin representation");
  } else if (f == Family::D) {
    if (which == SpinRep::spin) throw param_error("type D needs halfspin_odd or halfspin_even");
  } else {
    throw param_error("spin representations exist only for types B and D");
  }
  if (!valid_rank(f, r)) throw param_error("invalid rank");
  SpinBasis sb{f, r, which, {}, {}};
  int N = (f == Family::B) ? 2 * r + 1 : 2 * r;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> I;
    for (int k = 1; k <= r; ++k) I.push_back((mask >> (k - 1) & 1) ? N + 1 - k : k);
    std::sort(I.begin(), I.end());
    if (f == Family::D) {
      int up = 0;
      for (int x : I)
        if (x >= r + 1) ++up;
      bool odd = up % 2;
      if (odd != (which == SpinRep::halfspin_odd)) continue;
    }
    sb.sets.push_back(I);
  }
  // lexicographic by characteristic vector, highest weight [1,r] first
  auto charvec = [N](const std::vector<int>& I) {
    std::vector<int> v(N, 0);
    for (int x : I) v[x - 1] = 1;
    return v;
  };
  std::sort(sb.sets.begin(), sb.sets.end(), [&](auto& a, auto& b) { return charvec(a) > charvec(b); });
  for (int i = 0; i < sb.size(); ++i) sb.index[sb.sets[i]] = i;
  return sb;
}

inline QMatrix spin_E(const SpinBasis& sb, int k, const Q& a) {
  if (k == 0 || std::abs(k) > sb.rank) throw param_error("spin chip index out of range");
  QMatrix m = QMatrix::identity(sb.size());
  int kk = std::abs(k);
  for (int j = 0; j < sb.size(); ++j) {
    const auto& J = sb.sets[j];
    if (!sb.in_plus(J, kk)) continue;
    int pj = sb.index.at(sb.phi(J, kk));
    if (k > 0)
      m(j, pj) += a;
    else
      m(pj, j) += a;
  }
  return m;
}

inline Q spin_weight(const SpinBasis& sb, const std::vector<int>& I, const std::vector<Q>& t) {
  Q v = 1;
  for (int k = 1; k <= sb.rank; ++k) {
    if (sb.in_plus(I, k)) v *= t[k - 1];
    if (sb.in_minus(I, k)) v /= t[k - 1];
  }
  return v;
}

inline QMatrix spin_D(const SpinBasis& sb, const std::vector<Q>& t) {
  QMatrix m(sb.size());
  for (int j = 0; j < sb.size(); ++j) m(j, j) = spin_weight(sb, sb.sets[j], t);
  return m;
}

// E_{-1}(1)...E_{-r}(1) D(t) E_1(c_1)...E_r(c_r), standard Coxeter element
inline QMatrix spin_element(const SpinBasis& sb, const FactorizationPoint& fp) {
  int r = sb.rank;
  QMatrix m = QMatrix::identity(sb.size());
  for (int k = 1; k <= r; ++k) m = m * spin_E(sb, -k, Q(1));
  m = m * spin_D(sb, fp.t);
  for (int k = 1; k <= r; ++k) m = m * spin_E(sb, k, fp.c[k - 1]);
  return m;
}

// same with an arbitrary unmixed Coxeter-pair word
inline QMatrix spin_element(const SpinBasis& sb, const DoubleReducedWord& w, const FactorizationPoint& fp) {
  int r = sb.rank;
  check_coxeter_pair(w, r);
  QMatrix m = QMatrix::identity(sb.size());
  for (int p = 0; p < r; ++p) m = m * spin_E(sb, w.entries[p], Q(1));
  m = m * spin_D(sb, fp.t);
  for (int p = r; p < 2 * r; ++p) m = m * spin_E(sb, w.entries[p], fp.c[w.entries[p] - 1]);
  return m;
}

inline Q spin_trace_formula(const SpinBasis& sb, const FactorizationPoint& fp) {
  Q s = 0;
  for (const auto& J : sb.sets) {
    Q term = spin_weight(sb, J, fp.t);
    for (int k = 1; k <= sb.rank; ++k)
      if (sb.in_plus(J, k)) term *= 1 + fp.c[k - 1];
    s += term;
  }
  return s;
}
inline Q spin_trace_formula(Family f, int r, SpinRep which, const FactorizationPoint& fp) {
  return spin_trace_formula(spin_basis(f, r, which), fp);
}

inline std::vector<SpinRep> spin_reps(Family f) {
  if (f == Family::B) return {SpinRep::spin};
  if (f == Family::D) return {SpinRep::halfspin_odd, SpinRep::halfspin_even};
  return {};
}

inline std::string spin_rep_name(SpinRep s) {
  switch (s) {
    case SpinRep::spin: return "spin";
    case SpinRep::halfspin_odd: return "halfspin_odd";
    case SpinRep::halfspin_even: return "halfspin_even";
  }
  return "?";
}

}  // namespace ctoda
