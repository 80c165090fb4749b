#include "ctoda/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace ctoda;

TEST(Json, SeedRoundTrip) {
  auto c = cartan(Family::C, 2);
  DoubleReducedWord w{{-1, -2, 1, 2}};
  for (const auto& s : {build_face_seed(w, c), build_Btilde(w, c), qsystem_seed(cartan(Family::G2, 2))}) {
    auto j = seed_to_json(s);
    EXPECT_EQ(seed_from_json(json::parse(j.dump())), s);
  }
  auto j = seed_to_json(build_face_seed(w, c));
  EXPECT_EQ(j["B"][1][0], "-1/2");
  EXPECT_EQ(j["B"][0][1], "1/1");
  EXPECT_EQ(j["indices"], json({-1, -2, 1, 2, 3, 4}));
}

TEST(Json, SeedRejectsBadInput) {
  json j = seed_to_json(qsystem_seed(cartan(Family::A, 1)));
  j["d"] = {1};
  EXPECT_THROW(seed_from_json(j), param_error);
  j = seed_to_json(qsystem_seed(cartan(Family::A, 1)));
  j["B"][0][1] = "1/2+1/1√2";
  EXPECT_THROW(seed_from_json(j), param_error);
}

TEST(Json, MatrixRoundTrip) {
  RatGen rg(3);
  auto fp = random_point(2, rg);
  auto m = element(Family::B, 2, unmixed_word({1, 2}, {1, 2}), fp);
  auto j = matrix_to_json(m);
  bool irrational = false;
  for (auto& row : j)
    for (auto& x : row) irrational = irrational || x.get<std::string>().find("√2") != std::string::npos;
  EXPECT_TRUE(irrational);
  EXPECT_EQ(gmatrix_from_json(json::parse(j.dump())), m);
  QMatrix q = QMatrix::identity(3);
  q(0, 2) = qfrac(-5, 3);
  EXPECT_EQ(qmatrix_from_json(matrix_to_json(q)), q);
}

TEST(Json, ReportAndEvolveRows) {
  PreservationRow row{"rho[1,u]", 2, "3/1", "3/1", true};
  auto j = report_to_json(row);
  EXPECT_EQ(j, json::parse(R"({"move":"rho[1,u]","j":2,"before":"3/1","after":"3/1","equal":true})"));
  auto e = evolve_row_json(Family::A, 1, 4, {Q(3)});
  EXPECT_EQ(e, json::parse(R"({"family":"A","rank":1,"step":4,"C":["3/1"]})"));
}

TEST(Json, StateRoundTrip) {
  RatGen rg(4);
  auto s = random_state(3, rg);
  EXPECT_EQ(state_from_json(state_to_json(s)), s);
  EXPECT_THROW(state_from_json(json::parse(R"({"R0":["1/1"],"R1":["-1/1"]})")), param_error);
  EXPECT_THROW(state_from_json(json::parse(R"({"R0":[1],"R1":["1/1"]})")), param_error);
}

TEST(Files, WriteFailureIsReported) {
  EXPECT_THROW(write_text("/nonexistent-dir/x.json", "{}"), std::runtime_error);
  std::string path = ::testing::TempDir() + "ctoda_io_test.txt";
  write_text(path, "abc");
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  EXPECT_EQ(ss.str(), "abc");
  std::remove(path.c_str());
}
