#pragma once

#include "ctoda/backlund.hpp"
#include "ctoda/cluster.hpp"
#include "ctoda/qsystem.hpp"

#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

namespace ctoda {

using json = nlohmann::json;

inline json q_array(const std::vector<Q>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_pq(x));
  return a;
}

inline std::vector<Q> parse_q_array(const json& j) {
  if (!j.is_array()) throw param_error("expected an array of rationals");
  std::vector<Q> v;
  for (const auto& x : j) {
    if (!x.is_string()) throw param_error("rationals must be \"p/q\" strings");
    v.push_back(parse_q(x.get<std::string>()));
  }
  return v;
}

template <class T>
std::string exact_str(const T& x) {
  if constexpr (std::is_same_v<T, Q>)
    return to_pq(x);
  else
    return x.str();
}

template <class T>
json matrix_to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(exact_str(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline GMatrix gmatrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw param_error("matrix must be a non-empty array of rows");
  int n = (int)j.size(), m = (int)j[0].size();
  GMatrix out(n, m);
  for (int a = 0; a < n; ++a) {
    if ((int)j[a].size() != m) throw param_error("ragged matrix");
    for (int b = 0; b < m; ++b) out(a, b) = parse_qsqrt2(j[a][b].get<std::string>());
  }
  return out;
}

inline QMatrix qmatrix_from_json(const json& j) {
  GMatrix g = gmatrix_from_json(j);
  QMatrix out(g.rows(), g.cols());
  for (int a = 0; a < g.rows(); ++a)
    for (int b = 0; b < g.cols(); ++b) {
      if (!g(a, b).is_rational()) throw param_error("irrational entry in rational matrix");
      out(a, b) = g(a, b).a;
    }
  return out;
}

inline json seed_to_json(const Seed& s) {
  return {{"indices", s.indices}, {"frozen", s.frozen}, {"B", matrix_to_json(s.B)}, {"d", s.d}};
}

inline Seed seed_from_json(const json& j) {
  Seed s;
  s.indices = j.at("indices").get<std::vector<int>>();
  s.frozen = j.at("frozen").get<std::vector<bool>>();
  s.B = qmatrix_from_json(j.at("B"));
  s.d = j.at("d").get<std::vector<int>>();
  int n = s.size();
  if ((int)s.frozen.size() != n || (int)s.d.size() != n || s.B.rows() != n || s.B.cols() != n)
    throw param_error("inconsistent seed sizes");
  return s;
}

inline json report_to_json(const PreservationRow& r) {
  return {{"move", r.move}, {"j", r.j}, {"before", r.before}, {"after", r.after}, {"equal", r.equal}};
}

inline json evolve_row_json(Family f, int r, long step, const std::vector<Q>& C) {
  return {{"family", family_name(f)}, {"rank", r}, {"step", step}, {"C", q_array(C)}};
}

inline json state_to_json(const QState& s) { return {{"R0", q_array(s.R0)}, {"R1", q_array(s.R1)}}; }

inline QState state_from_json(const json& j) {
  QState s;
  s.R0 = parse_q_array(j.at("R0"));
  s.R1 = parse_q_array(j.at("R1"));
  s.r = (int)s.R0.size();
  check_state(s);
  return s;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << text;
  if (!os) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace ctoda
