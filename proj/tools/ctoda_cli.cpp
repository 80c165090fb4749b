// ctoda: verify / evolve / emit
#include "ctoda/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace ctoda;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string family;
  int rank = 0;  // 0: unset
  int steps = 10;
  int trials = 5;
  unsigned long seed = 1;
  std::string format = "json";
  std::string out;
};

// write to --out or stdout; failures are I/O errors
void emit_text(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  write_text(cfg.out, text);
}

Family need_family(const Config& cfg) {
  if (cfg.family.empty()) throw Usage("--family is required");
  return parse_family(cfg.family);
}

int need_rank(const Config& cfg, Family f) {
  int r = cfg.rank ? cfg.rank : (is_classical(f) ? 0 : min_rank(f));
  if (r == 0) throw Usage("--rank is required for classical families");
  if (!valid_rank(f, r)) throw Usage("invalid rank " + std::to_string(r) + " for " + family_name(f));
  return r;
}

void check_common(const Config& cfg, CLI::App* sub) {
  if (sub->count("--rank") && cfg.rank < 1) throw Usage("rank must be >= 1");
  if (cfg.steps < 0) throw Usage("steps must be >= 0");
  if (cfg.trials < 1) throw Usage("trials must be >= 1");
}

int cmd_verify(const std::string& suite, const Config& cfg, CLI::App* sub) {
  Scope scope;
  scope.trials = cfg.trials;
  scope.steps = cfg.steps;
  scope.seed = cfg.seed;
  if (!cfg.family.empty()) scope.family = parse_family(cfg.family);
  if (sub->count("--rank")) {
    scope.rank = cfg.rank;
    if (scope.family && !valid_rank(*scope.family, cfg.rank))
      throw Usage("invalid rank " + std::to_string(cfg.rank) + " for " + cfg.family);
  }
  if (cfg.format == "dot") throw Usage("verify reports are json or table");
  std::vector<SuiteReport> reps;
  for (int id : suite_criteria(suite)) reps.push_back(criteria()[id - 1].run(scope));
  bool ok = true;
  for (auto& r : reps) ok = ok && r.ok();

  std::ostringstream os;
  if (cfg.format == "table") {
    for (auto& r : reps) {
      os << (r.ok() ? "PASS " : "FAIL ") << r.name << "  checks=" << r.checks << "  " << r.seconds << "s\n";
      for (auto& f : r.failures) os << "    " << f << "\n";
    }
  } else {
    json j{{"suite", suite}, {"pass", ok}, {"seed", cfg.seed}, {"reports", json::array()}};
    for (auto& r : reps) j["reports"].push_back(r.to_json());
    os << j.dump(2) << "\n";
  }
  emit_text(cfg, os.str());
  return ok ? 0 : 1;
}

std::vector<Q> parse_list(const std::vector<std::string>& v) {
  std::vector<Q> out;
  for (auto& s : v) out.push_back(parse_q(s));
  return out;
}

int cmd_evolve(const Config& cfg, const std::vector<std::string>& r0, const std::vector<std::string>& r1, bool random) {
  Family f = need_family(cfg);
  int r = need_rank(cfg, f);
  if (cfg.format == "dot") throw Usage("evolve prints json or table");
  auto c = cartan(f, r);
  QState st = unit_state(r);
  if (random) {
    RatGen rg(cfg.seed);
    st = random_state(r, rg);
  }
  if (!r0.empty() || !r1.empty()) {
    if (random) throw Usage("--R0/--R1 and --random are exclusive");
    st.R0 = parse_list(r0);
    st.R1 = parse_list(r1);
    try {
      check_state(st);
    } catch (const param_error& e) {
      throw Usage(e.what());
    }
  }

  bool has_c = is_classical(f);
  std::vector<Q> c0;
  bool drift = false;
  json rows = json::array();
  std::ostringstream table;
  for (int k = 0; k <= cfg.steps; ++k) {
    std::vector<Q> C = has_c ? conserved_quantities(f, r, st) : std::vector<Q>{};
    if (k == 0) c0 = C;
    bool moved = C != c0;
    drift = drift || moved;
    json row = evolve_row_json(f, r, k, C);
    row["R"] = q_array(st.R0);
    if (moved) row["drift"] = true;
    rows.push_back(row);
    table << k;
    for (auto& x : st.R0) table << "\t" << to_pq(x);
    table << "\t|";
    for (auto& x : C) table << "\t" << to_pq(x);
    if (moved) table << "\tDRIFT";
    table << "\n";
    st = qsystem_step(st, c);
  }
  if (cfg.format == "table") {
    std::ostringstream head;
    head << "k";
    for (int a = 1; a <= r; ++a) head << "\tR" << a;
    head << "\t|";
    for (std::size_t j = 1; j <= c0.size(); ++j) head << "\tC" << j;
    emit_text(cfg, head.str() + "\n" + table.str());
  } else {
    emit_text(cfg, rows.dump(2) + "\n");
  }
  if (drift) std::cerr << "conserved quantity drift detected\n";
  return drift ? 1 : 0;
}

int cmd_emit(const std::string& what, const Config& cfg, CLI::App* sub) {
  Family f = need_family(cfg);
  int r = need_rank(cfg, f);
  auto c = cartan(f, r);
  auto w = standard_coxeter(r);
  auto uw = unmixed_word(w, w);
  bool fmt_given = sub->count("--format") > 0;
  if (what == "network-dot") {
    if (!is_classical(f)) throw Usage("networks exist for classical families only");
    if (fmt_given && cfg.format != "dot") throw Usage("network-dot is emitted as dot");
    FactorizationPoint one{std::vector<Q>(r, Q(1)), std::vector<Q>(r, Q(1))};
    emit_text(cfg, emit_dot(build_cc_network(f, r, one)));
    return 0;
  }
  if (fmt_given && cfg.format != "json") throw Usage(what + " is emitted as json");
  if (what == "seed-json") {
    json j = seed_to_json(build_Btilde(uw, c));
    j["family"] = family_name(f);
    j["rank"] = r;
    emit_text(cfg, j.dump(2) + "\n");
    return 0;
  }
  if (what == "matrix-json") {
    if (!is_classical(f)) throw Usage("defining-representation matrices exist for classical families only");
    RatGen rg(cfg.seed);
    auto fp = random_point(r, rg);
    json j{{"family", family_name(f)},
           {"rank", r},
           {"word", uw.entries},
           {"t", q_array(fp.t)},
           {"c", q_array(fp.c)},
           {"matrix", matrix_to_json(element(f, r, uw, fp))}};
    emit_text(cfg, j.dump(2) + "\n");
    return 0;
  }
  throw Usage("unknown emit target '" + what + "'");
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--family", cfg.family, "A, B, C, D, E6, E7, E8, F4 or G2")
      ->check(CLI::IsMember({"A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2"}));
  sub->add_option("--rank", cfg.rank, "rank r");
  sub->add_option("--steps", cfg.steps, "Q-system steps");
  sub->add_option("--trials", cfg.trials, "random points per identity");
  sub->add_option("--seed", cfg.seed, "rng seed");
  sub->add_option("--format", cfg.format, "json, table or dot")->check(CLI::IsMember({"json", "table", "dot"}));
  sub->add_option("--out", cfg.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter-Toda / Q-system verification tool"};
  app.require_subcommand(1);
  Config cfg;

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "cluster, networks, conserved, backlund, spin or all")
      ->required()
      ->check(CLI::IsMember({"cluster", "networks", "conserved", "backlund", "spin", "all"}));
  add_common(verify, cfg);

  std::vector<std::string> r0, r1;
  bool random = false;
  auto* evolve = app.add_subcommand("evolve", "iterate the Q-system and print conserved quantities");
  add_common(evolve, cfg);
  evolve->add_option("--R0", r0, "initial R_{a,0} as p/q")->delimiter(',');
  evolve->add_option("--R1", r1, "initial R_{a,1} as p/q")->delimiter(',');
  evolve->add_flag("--random", random, "random initial state from --seed");

  std::string what;
  auto* emit = app.add_subcommand("emit", "write an artifact");
  emit->add_option("what", what, "network-dot, seed-json or matrix-json")
      ->required()
      ->check(CLI::IsMember({"network-dot", "seed-json", "matrix-json"}));
  add_common(emit, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    check_common(cfg, sub);
    if (sub == verify) return cmd_verify(suite, cfg, sub);
    if (sub == evolve) return cmd_evolve(cfg, r0, r1, random);
    return cmd_emit(what, cfg, sub);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const param_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
