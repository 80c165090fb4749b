#pragma once

#include "ctoda/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ctoda {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  static const std::map<std::string, Family> m = {
      {"A", Family::A},   {"B", Family::B},   {"C", Family::C},   {"D", Family::D},  {"E6", Family::E6},
      {"E7", Family::E7}, {"E8", Family::E8}, {"F4", Family::F4}, {"G2", Family::G2}};
  auto it = m.find(s);
  if (it == m.end()) throw param_error("unknown family '" + s + "'");
  return it->second;
}

inline bool is_classical(Family f) {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

// smallest admissible rank per family; exceptional families have a fixed rank
inline int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 3;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
  }
  return 1;
}

inline bool valid_rank(Family f, int r) {
  if (!is_classical(f)) return r == min_rank(f);
  return r >= min_rank(f);
}

// C_ij = alpha_j(alpha_i^vee); rows/cols 0-based internally, 1-based in docs
struct CartanData {
  Family family;
  int rank;
  std::vector<std::vector<int>> C;
  std::vector<int> d;

  int operator()(int i, int j) const { return C[i - 1][j - 1]; }  // 1-based
  int dd(int i) const { return d[i - 1]; }

  QMatrix matrix() const {
    QMatrix m(rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) m(i, j) = C[i][j];
    return m;
  }
  bool adjacent(int i, int j) const { return i != j && C[i - 1][j - 1] != 0; }
};

inline CartanData cartan(Family f, int r) {
  if (!valid_rank(f, r)) throw param_error("invalid rank " + std::to_string(r) + " for " + family_name(f));
  CartanData cd{f, r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)), std::vector<int>(r, 1)};
  auto& C = cd.C;
  for (int i = 0; i < r; ++i) C[i][i] = 2;
  auto link = [&](int i, int j) {  // simple bond, 1-based
    C[i - 1][j - 1] = -1;
    C[j - 1][i - 1] = -1;
  };
  switch (f) {
    case Family::A:
      for (int i = 1; i < r; ++i) link(i, i + 1);
      break;
    case Family::B:
      // alpha_r short
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      C[r - 2][r - 1] = -1;
      C[r - 1][r - 2] = -2;
      for (int i = 0; i < r - 1; ++i) cd.d[i] = 2;
      break;
    case Family::C:
      // alpha_r long
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      C[r - 2][r - 1] = -2;
      C[r - 1][r - 2] = -1;
      cd.d[r - 1] = 2;
      break;
    case Family::D:
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      link(r - 2, r);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      // Bourbaki: chain 1-3-4-5-...-r, node 2 attached to 4
      link(1, 3);
      for (int i = 3; i < r; ++i) link(i, i + 1);
      link(2, 4);
      break;
    case Family::F4:
      link(1, 2);
      link(3, 4);
      C[1][2] = -1;
      C[2][1] = -2;
      cd.d = {2, 2, 1, 1};
      break;
    case Family::G2:
      // alpha_1 short
      C[0][1] = -3;
      C[1][0] = -1;
      cd.d = {1, 3};
      break;
  }
  return cd;
}

// ---- Coxeter words and Dynkin orientations ----

using Word = std::vector<int>;  // Coxeter word: permutation of 1..r

inline void check_coxeter_word(const Word& w, int r) {
  if ((int)w.size() != r) throw param_error("Coxeter word must have length r");
  std::vector<bool> seen(r + 1, false);
  for (int x : w) {
    if (x < 1 || x > r) throw param_error("index out of range in Coxeter word");
    if (seen[x]) throw param_error("repeated index in Coxeter word");
    seen[x] = true;
  }
}

struct DynkinOrientation {
  CartanData base;
  std::set<std::pair<int, int>> edges;  // directed (i -> j), 1-based
  friend bool operator==(const DynkinOrientation& a, const DynkinOrientation& b) { return a.edges == b.edges; }
};

inline std::vector<std::pair<int, int>> dynkin_edges(const CartanData& cd) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= cd.rank; ++i)
    for (int j = i + 1; j <= cd.rank; ++j)
      if (cd.adjacent(i, j)) e.push_back({i, j});
  return e;
}

inline DynkinOrientation orientation_from_coxeter(const Word& w, const CartanData& cd) {
  check_coxeter_word(w, cd.rank);
  std::vector<int> pos(cd.rank + 1);
  for (int p = 0; p < cd.rank; ++p) pos[w[p]] = p;
  DynkinOrientation o{cd, {}};
  for (auto [i, j] : dynkin_edges(cd)) {
    if (pos[i] < pos[j])
      o.edges.insert({i, j});
    else
      o.edges.insert({j, i});
  }
  return o;
}

// strip sources repeatedly, smallest label first within a round
inline Word coxeter_from_orientation(const DynkinOrientation& o) {
  int r = o.base.rank;
  std::set<int> left;
  for (int i = 1; i <= r; ++i) left.insert(i);
  std::set<std::pair<int, int>> edges = o.edges;
  Word w;
  while (!left.empty()) {
    std::vector<int> sources;
    for (int v : left) {
      bool src = true;
      for (auto& [a, b] : edges)
        if (b == v) src = false;
      if (src) sources.push_back(v);
    }
    if (sources.empty()) throw invariant_error("orientation has a cycle");
    for (int v : sources) {
      w.push_back(v);
      left.erase(v);
      for (auto it = edges.begin(); it != edges.end();)
        it = (it->first == v || it->second == v) ? edges.erase(it) : std::next(it);
    }
  }
  return w;
}

// canonical representative of the Coxeter element of w
inline Word canonical_coxeter(const Word& w, const CartanData& cd) {
  return coxeter_from_orientation(orientation_from_coxeter(w, cd));
}

inline bool same_coxeter_element(const Word& a, const Word& b, const CartanData& cd) {
  return orientation_from_coxeter(a, cd) == orientation_from_coxeter(b, cd);
}

// one canonical word per Coxeter element (2^{#edges} of them)
inline std::vector<Word> all_coxeter_elements(const CartanData& cd) {
  auto e = dynkin_edges(cd);
  std::vector<Word> out;
  for (unsigned mask = 0; mask < (1u << e.size()); ++mask) {
    DynkinOrientation o{cd, {}};
    for (std::size_t k = 0; k < e.size(); ++k) {
      auto [i, j] = e[k];
      if (mask >> k & 1)
        o.edges.insert({j, i});
      else
        o.edges.insert({i, j});
    }
    out.push_back(coxeter_from_orientation(o));
  }
  return out;
}

inline bool is_source(const Word& w, int k, const CartanData& cd) {
  auto o = orientation_from_coxeter(w, cd);
  for (auto& [a, b] : o.edges)
    if (b == k) return false;
  return true;
}
inline bool is_sink(const Word& w, int k, const CartanData& cd) {
  auto o = orientation_from_coxeter(w, cd);
  for (auto& [a, b] : o.edges)
    if (a == k) return false;
  return true;
}

// equivalent word with k moved to the front (k must be a source)
inline Word move_to_front(const Word& w, int k, const CartanData& cd) {
  if (!is_source(w, k, cd)) throw param_error("index is not a source of the orientation");
  Word out{k};
  for (int x : w)
    if (x != k) out.push_back(x);
  return out;
}
inline Word move_to_back(const Word& w, int k, const CartanData& cd) {
  if (!is_sink(w, k, cd)) throw param_error("index is not a sink of the orientation");
  Word out;
  for (int x : w)
    if (x != k) out.push_back(x);
  out.push_back(k);
  return out;
}

// ---- double reduced words ----

struct DoubleReducedWord {
  std::vector<int> entries;

  int size() const { return (int)entries.size(); }
  bool unmixed() const {
    bool seen_pos = false;
    for (int x : entries) {
      if (x > 0) seen_pos = true;
      if (x < 0 && seen_pos) return false;
    }
    return true;
  }
  // 1-based position of -k / +k
  int pos_minus(int k) const { return find(-k); }
  int pos_plus(int k) const { return find(k); }
  // k_- / k_+: first and second occurrence of +-k
  int first(int k) const { return std::min(pos_minus(k), pos_plus(k)); }
  int second(int k) const { return std::max(pos_minus(k), pos_plus(k)); }
  // epsilon_k = 1 iff the positive occurrence comes first
  int eps(int k) const { return pos_plus(k) < pos_minus(k) ? 1 : -1; }
  Word u() const {
    Word w;
    for (int x : entries)
      if (x < 0) w.push_back(-x);
    return w;
  }
  Word v() const {
    Word w;
    for (int x : entries)
      if (x > 0) w.push_back(x);
    return w;
  }
  friend bool operator==(const DoubleReducedWord& a, const DoubleReducedWord& b) { return a.entries == b.entries; }

 private:
  int find(int x) const {
    for (int p = 0; p < size(); ++p)
      if (entries[p] == x) return p + 1;
    throw param_error("index missing from double reduced word");
  }
};

inline void check_coxeter_pair(const DoubleReducedWord& w, int r) {
  if (w.size() != 2 * r) throw param_error("Coxeter-pair word must have length 2r");
  check_coxeter_word(w.u(), r);
  check_coxeter_word(w.v(), r);
}

inline DoubleReducedWord unmixed_word(const Word& u, const Word& v) {
  if (u.size() != v.size()) throw param_error("u and v must have the same rank");
  DoubleReducedWord w;
  for (int x : u) w.entries.push_back(-x);
  for (int x : v) w.entries.push_back(x);
  return w;
}

inline Word standard_coxeter(int r) {
  Word w;
  for (int i = 1; i <= r; ++i) w.push_back(i);
  return w;
}

// all shuffles of -u and v (used to exercise the general-word formulas)
inline std::vector<DoubleReducedWord> all_shuffles(const Word& u, const Word& v) {
  int r = (int)u.size();
  std::vector<DoubleReducedWord> out;
  for (unsigned mask = 0; mask < (1u << (2 * r)); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    DoubleReducedWord w;
    int a = 0, b = 0;
    for (int p = 0; p < 2 * r; ++p) w.entries.push_back((mask >> p & 1) ? -u[a++] : v[b++]);
    out.push_back(w);
  }
  return out;
}

}  // namespace ctoda
