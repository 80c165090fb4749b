#pragma once

#include "ctoda/chiprep.hpp"
#include "ctoda/cluster.hpp"

#include <string>
#include <vector>

namespace ctoda {

enum class MoveCase { source_u = 1, sink_v = 2 };
enum class Direction { forward, inverse };

// rho_{tau_k} from source to target (forward) or back (inverse)
struct BDMove {
  int k;
  MoveCase which;
  Direction dir;
  CoxeterPair source, target;

  std::string name() const {
    return std::string(dir == Direction::forward ? "rho" : "rho^-1") + "[" + std::to_string(k) +
           (which == MoveCase::source_u ? ",u" : ",v") + "]";
  }
};

inline BDMove make_move(const CoxeterPair& p, int k, MoveCase which, const CartanData& c) {
  if (k < 1 || k > c.rank) throw param_error("move index out of range");
  // canonical words with k in front of u (case 1) / at the back of v (case 2)
  CoxeterPair src = p;
  if (which == MoveCase::source_u)
    src.u = move_to_front(p.u, k, c);
  else
    src.v = move_to_back(p.v, k, c);
  return {k, which, Direction::forward, src, flip(src, k, (int)which, c)};
}

inline BDMove inverse_move(const BDMove& m) {
  BDMove n = m;
  n.dir = m.dir == Direction::forward ? Direction::inverse : Direction::forward;
  std::swap(n.source, n.target);
  return n;
}

// the pair on which the forward formulas are stated
inline const CoxeterPair& forward_source(const BDMove& m) { return m.dir == Direction::forward ? m.source : m.target; }

namespace detail {
inline int word_pos(const Word& w, int x) {
  for (int p = 0; p < (int)w.size(); ++p)
    if (w[p] == x) return p;
  throw param_error("index missing from word");
}
// case 1: i before k in v; case 2: k before i in u (u, resp. v, is shared by both pairs)
inline bool move_delta(const BDMove& m, int i) {
  const auto& p = forward_source(m);
  if (m.which == MoveCase::source_u) return word_pos(p.v, i) < word_pos(p.v, m.k);
  return word_pos(p.u, m.k) < word_pos(p.u, i);
}
inline Q torus_power(const std::vector<Q>& t, const CartanData& c, int k, int sign) {
  Q p = 1;
  for (int j = 1; j <= c.rank; ++j)
    if (c(j, k) != 0) p *= qpow(t[j - 1], sign * c(j, k));
  return p;
}
}  // namespace detail

inline FactorizationPoint rho_tau(const BDMove& m, const FactorizationPoint& fp, const CartanData& c) {
  check_positive(fp, c.rank);
  int k = m.k;
  FactorizationPoint out = fp;
  if (m.dir == Direction::forward) {
    Q s = 1 + fp.c[k - 1];
    out.t[k - 1] = fp.t[k - 1] * s;
    out.c[k - 1] = fp.c[k - 1] / (s * s) * detail::torus_power(fp.t, c, k, -1);
    for (int i = 1; i <= c.rank; ++i)
      if (i != k && c(k, i) != 0 && detail::move_delta(m, i)) out.c[i - 1] = fp.c[i - 1] * qpow(s, -c(k, i));
  } else {
    Q b = fp.c[k - 1] * detail::torus_power(fp.t, c, k, 1);
    Q s = 1 + b;
    out.t[k - 1] = fp.t[k - 1] / s;
    out.c[k - 1] = b;
    for (int i = 1; i <= c.rank; ++i)
      if (i != k && c(k, i) != 0 && detail::move_delta(m, i)) out.c[i - 1] = fp.c[i - 1] * qpow(s, c(k, i));
  }
  return out;
}

// ---- points on a cell with an arbitrary double reduced word ----

// D(t) E_{i_1}(a_1) ... E_{i_2r}(a_2r) modulo H; only abar_j = a_{j_-} a_{j_+} matters
struct CellPoint {
  DoubleReducedWord w;
  std::vector<Q> t, abar;
  friend bool operator==(const CellPoint& x, const CellPoint& y) {
    return x.w == y.w && x.t == y.t && x.abar == y.abar;
  }
};

inline CellPoint cell_from_unmixed(const DoubleReducedWord& w, const FactorizationPoint& fp, const CartanData& c) {
  if (!w.unmixed()) throw param_error("word is not unmixed");
  CellPoint cp{w, fp.t, {}};
  for (int k = 1; k <= c.rank; ++k) cp.abar.push_back(fp.c[k - 1] * detail::torus_power(fp.t, c, k, 1));
  return cp;
}

inline FactorizationPoint unmixed_from_cell(const CellPoint& cp, const CartanData& c) {
  if (!cp.w.unmixed()) throw param_error("word is not unmixed");
  FactorizationPoint fp{{}, cp.t};
  for (int k = 1; k <= c.rank; ++k) fp.c.push_back(cp.abar[k - 1] * detail::torus_power(cp.t, c, k, -1));
  return fp;
}

// representative: 1 on the first occurrence, abar on the second
inline std::vector<Q> cell_letter_params(const CellPoint& cp) {
  std::vector<Q> a;
  for (int p = 1; p <= cp.w.size(); ++p) {
    int j = std::abs(cp.w.entries[p - 1]);
    a.push_back(p == cp.w.first(j) ? Q(1) : cp.abar[j - 1]);
  }
  return a;
}

inline GMatrix cell_matrix(const Generators& g, const CellPoint& cp) {
  GMatrix m = chip_D(g, cp.t);
  auto a = cell_letter_params(cp);
  for (int p = 0; p < cp.w.size(); ++p) m = m * chip_E(g, cp.w.entries[p], QSqrt2(a[p]));
  return m;
}

// forward: i_1 moves to the back; inverse: i_2r moves to the front
inline CellPoint conjugation_move(const CellPoint& cp, Direction dir, const CartanData& c) {
  CellPoint out = cp;
  auto& e = out.w.entries;
  int k;
  if (dir == Direction::forward) {
    k = std::abs(e.front());
    std::rotate(e.begin(), e.begin() + 1, e.end());
  } else {
    k = std::abs(e.back());
    std::rotate(e.rbegin(), e.rbegin() + 1, e.rend());
  }
  out.abar[k - 1] = cp.abar[k - 1] * detail::torus_power(cp.t, c, k, cp.w.eps(k));
  return out;
}

// swap letters l, l+1 (1-based) which are -j, +j in some order
inline CellPoint refactor_swap(const CellPoint& cp, int l, const CartanData& c) {
  const auto& e = cp.w.entries;
  if (l < 1 || l >= cp.w.size() || e[l - 1] != -e[l]) throw param_error("letters are not a +-j pair");
  int j = std::abs(e[l - 1]);
  int ej = cp.w.eps(j);
  Q s = 1 + cp.abar[j - 1];
  CellPoint out = cp;
  std::swap(out.w.entries[l - 1], out.w.entries[l]);
  out.t[j - 1] = cp.t[j - 1] * qpow(s, ej);
  for (int i = 1; i <= c.rank; ++i) {
    if (i == j || c(j, i) == 0) continue;
    if (cp.w.first(i) < l && l < cp.w.second(i)) out.abar[i - 1] = cp.abar[i - 1] * qpow(s, -cp.w.eps(i) * ej * c(j, i));
  }
  return out;
}

// E_i(x)E_{-i}(y) = s^{alpha_i^vee} E_{-i}(ys) E_i(x/s), and the mirrored
// E_{-i}(y)E_i(x) = s^{-alpha_i^vee} E_i(xs) E_{-i}(y/s); s = 1+xy
inline bool refactorization_identity(const Generators& g, int i, const Q& x, const Q& y) {
  Q s = 1 + x * y;
  auto E = [&](int k, const Q& a) { return chip_E(g, k, QSqrt2(a)); };
  bool one = E(i, x) * E(-i, y) == coroot(g, i, s) * E(-i, y * s) * E(i, x / s);
  bool two = E(-i, y) * E(i, x) == coroot(g, i, 1 / s) * E(i, x * s) * E(-i, y / s);
  return one && two;
}

// ---- symbolic refactorization on a list of factors ----

struct Factor {
  enum Kind { E, T } kind;
  int idx = 0;          // +-i for E
  Q a;                  // parameter for E
  std::vector<Q> t;     // prod_i t_i^{alpha_i^vee} for T
};

inline Factor fE(int i, const Q& a) { return {Factor::E, i, a, {}}; }
inline Factor fT(const std::vector<Q>& t) { return {Factor::T, 0, Q(0), t}; }

namespace detail {
inline int factor_rank(const Factor& f) { return f.kind == Factor::T ? 1 : (f.idx < 0 ? 0 : 2); }
}  // namespace detail

// rewrite into E_-(..)...E_-(..) T E_+(..)...E_+(..) using commutation, the
// rank-one refactorization E_i(x)E_{-i}(y) = s^{alpha_i^vee} E_{-i}(ys) E_i(x/s), s = 1+xy,
// and t^{alpha_i^vee} E_{+-k}(a) = E_{+-k}(a t^{+-C_ik}) t^{alpha_i^vee}
inline std::vector<Factor> normal_form(std::vector<Factor> fs, const CartanData& c) {
  int r = c.rank;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < fs.size(); ++p) {
      Factor& x = fs[p];
      Factor& y = fs[p + 1];
      if (x.kind == Factor::T && y.kind == Factor::T) {
        for (int i = 0; i < r; ++i) x.t[i] *= y.t[i];
        fs.erase(fs.begin() + p + 1);
        changed = true;
        break;
      }
      if (detail::factor_rank(x) <= detail::factor_rank(y)) continue;
      if (x.kind == Factor::E && y.kind == Factor::E) {
        if (x.idx != -y.idx) {
          std::swap(x, y);
        } else {
          int i = x.idx;
          Q s = 1 + x.a * y.a;
          std::vector<Q> ts(r, Q(1));
          ts[i - 1] = s;
          Factor neg = fE(-i, y.a * s), pos = fE(i, x.a / s);
          fs[p] = fT(ts);
          fs[p + 1] = neg;
          fs.insert(fs.begin() + p + 2, pos);
        }
      } else if (x.kind == Factor::T) {  // T E_{-k}
        y.a *= detail::torus_power(x.t, c, -y.idx, -1);
        std::swap(x, y);
      } else {  // E_{+k} T
        x.a *= detail::torus_power(y.t, c, x.idx, -1);
        std::swap(x, y);
      }
      changed = true;
      break;
    }
  }
  return fs;
}

// read E_{-u}(b) T(t') E_v(x) as an unmixed factorization point
inline FactorizationPoint read_unmixed(const std::vector<Factor>& fs, const CartanData& c, Word* u = nullptr,
                                       Word* v = nullptr) {
  int r = c.rank;
  FactorizationPoint fp{std::vector<Q>(r, Q(0)), {}};
  std::vector<Q> b(r + 1, Q(0)), x(r + 1, Q(0));
  Word uu, vv;
  int tori = 0;
  for (const auto& f : fs) {
    if (f.kind == Factor::T) {
      fp.t = f.t;
      ++tori;
    } else if (f.idx < 0) {
      b[-f.idx] = f.a;
      uu.push_back(-f.idx);
    } else {
      x[f.idx] = f.a;
      vv.push_back(f.idx);
    }
  }
  if (tori != 1) throw invariant_error("normal form without a single torus factor");
  check_coxeter_word(uu, r);
  check_coxeter_word(vv, r);
  for (int k = 1; k <= r; ++k) fp.c[k - 1] = b[k] * x[k];
  if (u) *u = uu;
  if (v) *v = vv;
  return fp;
}

inline std::vector<Factor> unmixed_factors(const Word& u, const Word& v, const FactorizationPoint& fp) {
  std::vector<Factor> fs;
  for (int k : u) fs.push_back(fE(-k, 1));
  fs.push_back(fT(fp.t));
  for (int k : v) fs.push_back(fE(k, fp.c[k - 1]));
  return fs;
}

// forward move by conjugation followed by refactorization of the factor list
inline FactorizationPoint rho_tau_refactor(const BDMove& m, const FactorizationPoint& fp, const CartanData& c) {
  if (m.dir != Direction::forward) throw param_error("refactorization route is implemented for forward moves");
  auto fs = unmixed_factors(m.source.u, m.source.v, fp);
  if (m.which == MoveCase::source_u)
    std::rotate(fs.begin(), fs.begin() + 1, fs.end());  // E_{-k}(1) to the back
  else
    std::rotate(fs.rbegin(), fs.rbegin() + 1, fs.rend());  // E_k(c_k) to the front
  Word u, v;
  auto out = read_unmixed(normal_form(fs, c), c, &u, &v);
  if (u != m.target.u || v != m.target.v) throw invariant_error("refactorization landed in an unexpected cell");
  return out;
}

// ---- the factorization mapping on G^{w,w}/H ----

inline std::vector<BDMove> factorization_moves(const Word& w, const CartanData& c) {
  std::vector<BDMove> moves;
  CoxeterPair p{w, w};
  for (int k : w) {
    moves.push_back(make_move(p, k, MoveCase::source_u, c));
    p = moves.back().target;
  }
  return moves;
}

inline FactorizationPoint factorization_map(const FactorizationPoint& fp, const CartanData& c, const Word& w) {
  check_coxeter_word(w, c.rank);
  FactorizationPoint x = fp;
  for (const auto& m : factorization_moves(w, c)) x = rho_tau(m, x, c);
  return x;
}
inline FactorizationPoint factorization_map(const FactorizationPoint& fp, const CartanData& c) {
  return factorization_map(fp, c, standard_coxeter(c.rank));
}

// D(t) E_w(c) E_{-w}(1) refactored back into E_{-w}(1) D(t') E_w(c')
inline FactorizationPoint factorization_map_refactor(const FactorizationPoint& fp, const CartanData& c, const Word& w) {
  check_coxeter_word(w, c.rank);
  check_positive(fp, c.rank);
  std::vector<Factor> fs{fT(fp.t)};
  for (int k : w) fs.push_back(fE(k, fp.c[k - 1]));
  for (int k : w) fs.push_back(fE(-k, 1));
  Word u, v;
  auto out = read_unmixed(normal_form(fs, c), c, &u, &v);
  if (u != w || v != w) throw invariant_error("factorization map left the cell");
  return out;
}
inline FactorizationPoint factorization_map_refactor(const FactorizationPoint& fp, const CartanData& c) {
  return factorization_map_refactor(fp, c, standard_coxeter(c.rank));
}

// ---- preservation reports ----

struct PreservationRow {
  std::string move;
  int j;
  std::string before, after;
  bool equal;
};

inline std::vector<PreservationRow> compare_traces(const std::string& label, Family f, int r, const DoubleReducedWord& w0,
                                                   const FactorizationPoint& p0, const DoubleReducedWord& w1,
                                                   const FactorizationPoint& p1) {
  std::vector<PreservationRow> rows;
  auto g = generators(f, r);
  auto a = char_poly_coeffs(element(g, w0, p0));
  auto b = char_poly_coeffs(element(g, w1, p1));
  for (std::size_t j = 0; j < a.size(); ++j) rows.push_back({label, (int)j, a[j].str(), b[j].str(), a[j] == b[j]});
  for (auto which : spin_reps(f)) {
    auto sb = spin_basis(f, r, which);
    Q x = spin_element(sb, w0, p0).trace(), y = spin_element(sb, w1, p1).trace();
    int j = (which == SpinRep::halfspin_odd) ? r - 1 : r;
    rows.push_back({label + "/" + spin_rep_name(which), j, to_pq(x), to_pq(y), x == y});
  }
  return rows;
}

inline std::vector<PreservationRow> verify_preservation(const BDMove& m, const FactorizationPoint& fp, Family f, int r) {
  auto c = cartan(f, r);
  auto out = rho_tau(m, fp, c);
  return compare_traces(m.name(), f, r, unmixed_word(m.source.u, m.source.v), fp, unmixed_word(m.target.u, m.target.v),
                        out);
}

inline std::vector<PreservationRow> verify_factorization_map(const FactorizationPoint& fp, Family f, int r) {
  auto c = cartan(f, r);
  auto w = standard_coxeter(r);
  auto uw = unmixed_word(w, w);
  return compare_traces("factorization_map", f, r, uw, fp, uw, factorization_map(fp, c, w));
}

inline bool all_equal(const std::vector<PreservationRow>& rows) {
  for (auto& x : rows)
    if (!x.equal) return false;
  return true;
}

}  // namespace ctoda
