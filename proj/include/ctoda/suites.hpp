#pragma once

// verification suites shared by the CLI and the acceptance runner

#include "ctoda/backlund.hpp"
#include "ctoda/cluster.hpp"
#include "ctoda/io.hpp"
#include "ctoda/network.hpp"
#include "ctoda/qsystem.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ctoda {

struct Scope {
  std::optional<Family> family;
  std::optional<int> rank;
  int trials = 5;
  int steps = 10;
  unsigned long seed = 1;
};

struct SuiteReport {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  json rows = json::array();
  double seconds = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 50) failures.push_back(what);
    if (!ok && failures.size() == 50) failures.push_back("(further failures omitted)");
  }
  bool ok() const { return failures.empty(); }
  json to_json() const {
    return {{"suite", name}, {"pass", ok()},       {"checks", checks},
            {"failures", failures}, {"seconds", seconds}, {"rows", rows}};
  }
};

namespace detail {

inline std::string tag(Family f, int r) { return family_name(f) + std::to_string(r); }

// (family, rank) cases in scope; default ranks min..max_rank(f)
inline std::vector<std::pair<Family, int>> cases(const Scope& s, const std::vector<Family>& fams,
                                                 const std::function<int(Family)>& max_rank) {
  std::vector<std::pair<Family, int>> out;
  for (Family f : fams) {
    if (s.family && *s.family != f) continue;
    if (s.rank) {
      if (valid_rank(f, *s.rank)) out.push_back({f, *s.rank});
      continue;
    }
    for (int r = min_rank(f); r <= max_rank(f); ++r)
      if (valid_rank(f, r)) out.push_back({f, r});
  }
  return out;
}

inline const std::vector<Family>& classical() {
  static const std::vector<Family> v{Family::A, Family::B, Family::C, Family::D};
  return v;
}

// runs body, times it, converts stray exceptions into failures
inline SuiteReport timed(const std::string& name, const std::function<void(SuiteReport&)>& body) {
  SuiteReport rep;
  rep.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const std::exception& e) {
    rep.check(false, std::string("exception: ") + e.what());
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline QMatrix qmat(const std::vector<std::vector<long>>& rows, const std::vector<std::vector<long>>& dens = {}) {
  int n = (int)rows.size();
  QMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = dens.empty() ? Q(rows[i][j]) : qfrac(rows[i][j], dens[i][j]);
  return m;
}

}  // namespace detail

// 1. printed exchange matrices for Sp_4, i = (-1,-2,1,2)
inline SuiteReport check_golden(const Scope&) {
  return detail::timed("golden-matrices", [](SuiteReport& rep) {
    auto c = cartan(Family::C, 2);
    DoubleReducedWord w{{-1, -2, 1, 2}};
    auto face = build_face_seed(w, c);
    std::vector<std::vector<long>> num{{0, 1, -1, 0, 0, 0}, {-1, 0, 1, -1, 0, 0}, {1, -2, 0, 0, 1, 0},
                                       {0, 1, 0, 0, -1, 1}, {0, 0, -1, 2, 0, -1}, {0, 0, 0, -1, 1, 0}};
    std::vector<std::vector<long>> den(6, std::vector<long>(6, 1));
    den[1][0] = 2;
    den[5][4] = 2;
    rep.check(face.B == detail::qmat(num, den), "face seed matrix");
    rep.check(face.indices == std::vector<int>({-1, -2, 1, 2, 3, 4}), "face seed index order");
    auto bt = build_Btilde(w, c);
    rep.check(bt.B == detail::qmat({{0, 0, 2, -2}, {0, 0, -1, 2}, {-2, 2, 0, 0}, {1, -2, 0, 0}}), "amalgamated matrix");
    rep.check(bt.indices == std::vector<int>({-1, -2, 1, 2}), "amalgamated index order");
    rep.check(amalgamate(face, w, c).B == bt.B, "amalgamation of the face seed");
    rep.rows.push_back({{"face", seed_to_json(face)}, {"amalgamated", seed_to_json(bt)}});
  });
}

// 2. sigma-period and A-mutation = Q-system recurrence
inline SuiteReport check_sigma_qsystem(const Scope& s) {
  return detail::timed("sigma-period-qsystem", [&](SuiteReport& rep) {
    std::vector<Family> fams{Family::A, Family::B, Family::C, Family::D, Family::E6, Family::F4, Family::G2};
    if (s.family) fams = {*s.family};
    RatGen rg(s.seed);
    for (auto [f, r] : detail::cases(s, fams, [](Family f) { return is_classical(f) ? 6 : min_rank(f); })) {
      auto c = cartan(f, r);
      Seed q = qsystem_seed(c);
      rep.check(skew_symmetrizable(q), "skew-symmetrizable " + detail::tag(f, r));
      rep.check(is_sigma_period(q, r), "sigma period " + detail::tag(f, r));
      for (int n = 0; n < s.trials; ++n) {
        QState st = random_state(r, rg);
        std::vector<Q> A = st.R0;
        A.insert(A.end(), st.R1.begin(), st.R1.end());
        Seed cur = q;
        bool same = true;
        for (int k = 0; k < s.steps && same; ++k) {
          for (int i = 1; i <= r; ++i) {
            A = mutate_A(A, cur, i);
            cur = mutate_exchange(cur, i);
          }
          cur = permute(cur, half_shift(r));
          std::rotate(A.begin(), A.begin() + r, A.end());
          st = qsystem_step(st, c);
          std::vector<Q> direct = st.R0;
          direct.insert(direct.end(), st.R1.begin(), st.R1.end());
          same = cur == q && A == direct;
        }
        rep.check(same, "A-mutation vs recurrence " + detail::tag(f, r));
      }
    }
  });
}

// 3. path sums of the network = chip product
inline SuiteReport check_chips(const Scope& s) {
  return detail::timed("chip-consistency", [&](SuiteReport& rep) {
    RatGen rg(s.seed);
    for (auto [f, r] : detail::cases(s, detail::classical(), [](Family) { return 4; })) {
      auto c = cartan(f, r);
      auto g = generators(f, r);
      auto cox = all_coxeter_elements(c);
      for (int n = 0; n < s.trials; ++n) {
        auto fp = random_point(r, rg);
        auto w = standard_coxeter(r);
        rep.check(path_sum_matrix(build_cc_network(f, r, fp)) == element(g, unmixed_word(w, w), fp),
                  "standard word " + detail::tag(f, r));
        auto& u = cox[rg.engine()() % cox.size()];
        auto& v = cox[rg.engine()() % cox.size()];
        auto uw = unmixed_word(u, v);
        rep.check(path_sum_matrix(build_network(f, r, uw, fp)) == element(g, uw, fp), "Coxeter pair " + detail::tag(f, r));
      }
    }
  });
}

// 4. LGV = char-poly H_j = conserved quantity on the state
inline SuiteReport check_three_routes(const Scope& s) {
  return detail::timed("three-route-hamiltonians", [&](SuiteReport& rep) {
    RatGen rg(s.seed);
    for (auto [f, r] : detail::cases(s, detail::classical(), [](Family f) { return f == Family::B ? 4 : 5; })) {
      auto c = cartan(f, r);
      auto g = generators(f, r);
      auto w = standard_coxeter(r);
      for (int n = 0; n < s.trials; ++n) {
        QState st = random_state(r, rg);
        auto fp = factorization_from_state(st, c);
        auto fc = char_poly_coeffs(element(g, unmixed_word(w, w), fp));
        auto H = hamiltonian_H_from_f(f, r, fc);
        auto net = build_cc_network(f, r, fp);
        auto paths = all_paths(net);
        std::vector<QSqrt2> lf;
        for (int j = 0; j <= net.levels; ++j) lf.push_back(lgv_f(net, j, paths));
        rep.check(lf == fc, "LGV coefficients " + detail::tag(f, r));
        auto lH = hamiltonian_H_from_f(f, r, lf);
        for (int j = 1; j <= conserved_range(f, r); ++j) {
          QSqrt2 cq(conserved_quantity(f, r, j, st));
          // type C: the conserved quantity is the coefficient itself
          QSqrt2 mat = f == Family::C ? fc[j] : H[j - 1];
          QSqrt2 lgv = f == Family::C ? lf[j] : lH[j - 1];
          rep.check(mat == cq && lgv == cq, "j=" + std::to_string(j) + " " + detail::tag(f, r));
        }
      }
    }
  });
}

// 5. conservation along the Q-system
inline SuiteReport check_conservation(const Scope& s) {
  return detail::timed("conservation", [&](SuiteReport& rep) {
    RatGen rg(s.seed);
    for (auto [f, r] : detail::cases(s, detail::classical(), [](Family) { return 6; })) {
      auto c = cartan(f, r);
      for (int n = 0; n <= s.trials; ++n) {
        QState st = n == 0 ? unit_state(r) : random_state(r, rg);  // unit seed first
        auto c0 = conserved_quantities(f, r, st);
        if (n == 0) rep.rows.push_back(evolve_row_json(f, r, 0, c0));
        bool same = true;
        for (int k = 0; k < s.steps; ++k) {
          st = qsystem_step(st, c);
          same = same && conserved_quantities(f, r, st) == c0;
        }
        rep.check(same, "C_j drift " + detail::tag(f, r));
        if (f == Family::A && r == 1 && n == 0) rep.check(c0[0] == 3, "A1 unit seed C_1 = 3");
      }
    }
    for (auto [f, r] : detail::cases(s, {Family::B, Family::D}, [](Family) { return 8; })) {
      auto c = cartan(f, r);
      for (auto which : spin_reps(f))
        for (int n = 0; n < s.trials; ++n) {
          QState st = random_state(r, rg);
          Q z0 = spin_conserved(f, r, which, st);
          bool same = true;
          for (int k = 0; k < s.steps; ++k) {
            st = qsystem_step(st, c);
            same = same && spin_conserved(f, r, which, st) == z0;
          }
          rep.check(same, spin_rep_name(which) + " drift " + detail::tag(f, r));
        }
    }
  });
}

// 6. Backlund-Darboux moves preserve f_j; closed form = refactorization route
inline SuiteReport check_backlund(const Scope& s) {
  return detail::timed("backlund-preservation", [&](SuiteReport& rep) {
    RatGen rg(s.seed);
    for (auto [f, r] : detail::cases(s, detail::classical(), [](Family) { return 4; })) {
      auto c = cartan(f, r);
      auto cox = all_coxeter_elements(c);
      for (int n = 0; n < s.trials; ++n) {
        for (auto& u : cox)
          for (auto& v : cox)
            for (int k = 1; k <= r; ++k)
              for (auto which : {MoveCase::source_u, MoveCase::sink_v}) {
                CoxeterPair p{u, v};
                if (!can_flip(p, k, (int)which, c)) continue;
                auto m = make_move(p, k, which, c);
                auto fp = random_point(r, rg);
                auto rows = verify_preservation(m, fp, f, r);
                std::string what = m.name() + " " + detail::tag(f, r);
                rep.check(all_equal(rows), "f_j changed by " + what);
                auto a = rho_tau(m, fp, c), b = rho_tau_refactor(m, fp, c);
                rep.check(a.t == b.t && a.c == b.c, "routes differ for " + what);
                auto back = rho_tau(inverse_move(m), a, c);
                rep.check(back.t == fp.t && back.c == fp.c, "inverse fails for " + what);
                if (n == 0)
                  for (auto& x : rows) rep.rows.push_back(report_to_json(x));
              }
        auto st = random_state(r, rg);
        auto fp = factorization_from_state(st, c);
        auto rows = verify_factorization_map(fp, f, r);
        rep.check(all_equal(rows), "f_j changed by factorization map " + detail::tag(f, r));
        auto a = factorization_map(fp, c), b = factorization_map_refactor(fp, c);
        rep.check(a.t == b.t && a.c == b.c, "factorization map routes " + detail::tag(f, r));
        auto q = factorization_from_state(qsystem_step(st, c), c);
        rep.check(a.t == q.t && a.c == q.c, "factorization map vs Q-system step " + detail::tag(f, r));
        if (n == 0)
          for (auto& x : rows) rep.rows.push_back(report_to_json(x));
      }
    }
  });
}

// 7. rank-one refactorization as a matrix identity; local swaps against matrices
inline SuiteReport check_refactorization(const Scope& s) {
  return detail::timed("refactorization-identity", [&](SuiteReport& rep) {
    RatGen rg(s.seed);
    for (auto [f, r] : detail::cases(s, detail::classical(), [](Family) { return 6; })) {
      auto g = generators(f, r);
      for (int i = 1; i <= r; ++i)
        for (int n = 0; n < s.trials; ++n)
          rep.check(refactorization_identity(g, i, rg(), rg()), "i=" + std::to_string(i) + " " + detail::tag(f, r));
    }
    for (auto [f, r] : detail::cases(s, detail::classical(), [](Family) { return 3; })) {
      if (r > 3) continue;
      auto c = cartan(f, r);
      auto g = generators(f, r);
      auto cox = all_coxeter_elements(c);
      for (int n = 0; n < s.trials; ++n) {
        auto& u = cox[rg.engine()() % cox.size()];
        auto& v = cox[rg.engine()() % cox.size()];
        for (auto& w : all_shuffles(u, v)) {
          CellPoint cp{w, rg.vec(r), rg.vec(r)};
          auto X = cell_matrix(g, cp);
          for (int l = 1; l < w.size(); ++l)
            if (w.entries[l - 1] == -w.entries[l])
              rep.check(diagonally_conjugate(X, cell_matrix(g, refactor_swap(cp, l, c))), "local swap " + detail::tag(f, r));
        }
      }
    }
  });
}

// 8. Lambda B = -D and the cross identity on every pair reachable by flips
inline SuiteReport check_poisson(const Scope& s) {
  return detail::timed("poisson-compatibility", [&](SuiteReport& rep) {
    for (auto [f, r] : detail::cases(s, detail::classical(), [](Family) { return 3; })) {
      auto c = cartan(f, r);
      auto canon = [&](CoxeterPair p) { return CoxeterPair{canonical_coxeter(p.u, c), canonical_coxeter(p.v, c)}; };
      std::set<CoxeterPair> seen{canon({standard_coxeter(r), standard_coxeter(r)})};
      std::vector<CoxeterPair> todo(seen.begin(), seen.end());
      while (!todo.empty()) {
        auto p = todo.back();
        todo.pop_back();
        auto B = build_Btilde(unmixed_word(p.u, p.v), c);
        auto L = lambda_matrix(B);
        std::string what = detail::tag(f, r);
        rep.check(lambda_compatible(B, L), "Lambda B != -D " + what);
        rep.check(lambda_cross_identity(B, L, r), "cross identity " + what);
        for (int k = 1; k <= r; ++k)
          for (int which : {1, 2}) {
            if (!can_flip(p, k, which, c)) continue;
            auto m = make_move(p, k, (MoveCase)which, c);
            rep.check(build_Btilde(unmixed_word(m.target.u, m.target.v), c) == tau(B, k), "tau_k mismatch " + what);
            auto q = canon(m.target);
            if (seen.insert(q).second) todo.push_back(q);
          }
      }
      rep.check((int)seen.size() == (int)std::pow(all_coxeter_elements(c).size(), 2),
                "flip chains miss some Coxeter pairs " + detail::tag(f, r));
    }
  });
}

// 9. spin trace formula = direct trace; bundled = unbundled
inline SuiteReport check_spin(const Scope& s) {
  return detail::timed("spin-equivalences", [&](SuiteReport& rep) {
    RatGen rg(s.seed);
    for (auto [f, r] : detail::cases(s, {Family::B, Family::D}, [](Family) { return 8; })) {
      auto c = cartan(f, r);
      for (auto which : spin_reps(f)) {
        auto sb = spin_basis(f, r, which);
        std::string what = spin_rep_name(which) + " " + detail::tag(f, r);
        for (int n = 0; n < s.trials; ++n) {
          QState st = random_state(r, rg);
          auto fp = factorization_from_state(st, c);
          Q tr = spin_element(sb, fp).trace();
          rep.check(spin_trace_formula(sb, fp) == tr, "trace formula " + what);
          Q z = spin_conserved(f, r, which, st);
          rep.check(z == tr, "unbundled sum " + what);
          rep.check(bundled_spin_conserved(f, r, which, st) == z, "bundled sum " + what);
        }
      }
    }
  });
}

// 10. spot values and the gap description of independent sets in G_A
inline SuiteReport check_spot_values(const Scope& s) {
  return detail::timed("spot-values", [&](SuiteReport& rep) {
    if (!s.family || *s.family == Family::A) {
      auto c1 = cartan(Family::A, 1);
      QState st = unit_state(1);
      std::vector<std::vector<Q>> orbit{{1, 1}, {1, 2}, {2, 5}};
      for (auto& o : orbit) {
        rep.check(st.R0[0] == o[0] && st.R1[0] == o[1], "A1 orbit");
        rep.check(conserved_quantity(Family::A, 1, 1, st) == 3, "A1 C_1 = 3");
        st = qsystem_step(st, c1);
      }
      QState s2 = unit_state(2);
      rep.check(conserved_quantity(Family::A, 2, 1, s2) == 5 && conserved_quantity(Family::A, 2, 2, s2) == 5,
                "A2 C_1 = C_2 = 5");
    }
    for (auto [f, r] : detail::cases(s, {Family::A}, [](Family) { return 6; })) {
      auto G = hp_graph(Family::A, r, unit_state(r));
      for (int j = 0; j <= r + 1; ++j) {
        std::set<std::vector<int>> rule, ind;
        for (auto& v : gap_rule_sets(2 * r + 1, j)) rule.insert(v);
        for_each_independent_set(G, j, [&](std::uint64_t mask, int size) {
          if (size != j) return;
          std::vector<int> v;
          for (int i = 0; i < G.size(); ++i)
            if (mask >> i & 1) v.push_back(G.vertices[i].a);
          std::sort(v.begin(), v.end());
          ind.insert(v);
        });
        rep.check(rule == ind, "gap rule r=" + std::to_string(r) + " j=" + std::to_string(j));
      }
    }
  });
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<SuiteReport(const Scope&)> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> v{
      {1, "golden exchange matrices (Sp4)", 1, check_golden},
      {2, "sigma-period and A-mutation = Q-system", 10, check_sigma_qsystem},
      {3, "network path sums = chip products", 30, check_chips},
      {4, "three-route Hamiltonian identity", 300, check_three_routes},
      {5, "conservation along the Q-system", 120, check_conservation},
      {6, "Backlund-Darboux preservation and routes", 120, check_backlund},
      {7, "refactorization identity", 10, check_refactorization},
      {8, "Poisson compatibility over flip chains", 30, check_poisson},
      {9, "spin trace and bundled formulas", 60, check_spin},
      {10, "combinatorial spot values", 5, check_spot_values},
  };
  return v;
}

// criteria ids per CLI suite
inline std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "cluster") return {1, 2, 8};
  if (suite == "networks") return {3, 4};
  if (suite == "conserved") return {5, 10};
  if (suite == "backlund") return {6, 7};
  if (suite == "spin") return {9};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw param_error("unknown suite '" + suite + "'");
}

}  // namespace ctoda
