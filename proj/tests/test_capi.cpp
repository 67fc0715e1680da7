#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "ultraembed.h"

namespace {

struct Metric {
  ue_metric* m = nullptr;
  ~Metric() { ue_metric_free(m); }
};

struct Str {
  char* s = nullptr;
  ~Str() { ue_string_free(s); }
};

}  // namespace

TEST_CASE("create, query and free a metric") {
  const double d[9] = {0, 1, 2, 1, 0, 2, 2, 2, 0};
  Metric m;
  REQUIRE(ue_metric_create(3, d, &m.m) == UE_OK);
  CHECK(ue_metric_size(m.m) == 3);
  CHECK(ue_metric_distance(m.m, 0, 2) == 2.0);
  CHECK(ue_metric_distance(m.m, 0, 7) == -1.0);
}

TEST_CASE("invalid matrices are rejected with a message") {
  const double d[9] = {0, 1, 3, 1, 0, 1, 3, 1, 0};  // 3 > 1 + 1
  ue_metric* m = nullptr;
  CHECK(ue_metric_create(3, d, &m) == UE_NOT_METRIC);
  CHECK(std::strlen(ue_last_error()) > 0);
  CHECK(m == nullptr);
}

TEST_CASE("CSV and JSON parsing round-trip") {
  Metric m;
  REQUIRE(ue_metric_from_csv("0,5\n5,0\n", &m.m) == UE_OK);
  Str csv;
  REQUIRE(ue_metric_to_csv(m.m, &csv.s) == UE_OK);
  Metric back;
  REQUIRE(ue_metric_from_csv(csv.s, &back.m) == UE_OK);
  CHECK(ue_metric_distance(back.m, 0, 1) == 5.0);

  Str json;
  REQUIRE(ue_metric_to_json(m.m, &json.s) == UE_OK);
  Metric back2;
  REQUIRE(ue_metric_from_json(json.s, &back2.m) == UE_OK);
  CHECK(ue_metric_distance(back2.m, 0, 1) == 5.0);
}

TEST_CASE("ultrametric test and subdominant fit") {
  const double d[9] = {0, 1, 2, 1, 0, 1, 2, 1, 0};  // collinear (1,1,2)
  Metric m;
  REQUIRE(ue_metric_create(3, d, &m.m) == UE_OK);
  int flag = -1;
  REQUIRE(ue_is_ultrametric(m.m, 0.0, &flag) == UE_OK);
  CHECK(flag == 0);
  Metric u;
  REQUIRE(ue_subdominant(m.m, &u.m) == UE_OK);
  CHECK(ue_metric_distance(u.m, 0, 2) == 1.0);
  REQUIRE(ue_is_ultrametric(u.m, 0.0, &flag) == UE_OK);
  CHECK(flag == 1);
  double opt = 0.0;
  REQUIRE(ue_oracle_optimal_distortion(m.m, &opt) == UE_OK);
  CHECK(opt == 2.0);
}

TEST_CASE("distortion through the C API") {
  const double src[9] = {0, 1, 2, 1, 0, 1, 2, 1, 0};
  const double dst[9] = {0, 1, 1, 1, 0, 1, 1, 1, 0};
  Metric a, b;
  REQUIRE(ue_metric_create(3, src, &a.m) == UE_OK);
  REQUIRE(ue_metric_create(3, dst, &b.m) == UE_OK);
  const size_t f[3] = {0, 1, 2};
  double dist = 0.0, scale = 0.0;
  REQUIRE(ue_distortion(a.m, b.m, f, 3, &dist, &scale) == UE_OK);
  CHECK(dist == doctest::Approx(2.0));
  CHECK(scale == doctest::Approx(0.5));
}

TEST_CASE("tree serialization") {
  const double d[4] = {0, 7.5, 7.5, 0};
  Metric m;
  REQUIRE(ue_metric_create(2, d, &m.m) == UE_OK);
  Str nwk;
  REQUIRE(ue_tree_newick(m.m, &nwk.s) == UE_OK);
  CHECK(std::string(nwk.s) == "(p0:7.5,p1:7.5):7.5;");
}

TEST_CASE("generator and full pipeline run") {
  Metric m;
  REQUIRE(ue_generate(R"({"kind":"powers","n":6,"base":10})", &m.m) == UE_OK);
  CHECK(ue_metric_size(m.m) == 6);

  Str report, rendered;
  int exit_code = -1;
  REQUIRE(ue_run_json(
              R"({"command":"pipeline","epsilon":1.0,"target":4,
                  "generator":{"kind":"powers","n":12,"base":10}})",
              &report.s, &rendered.s, &exit_code) == UE_OK);
  CHECK(exit_code == 0);
  auto j = nlohmann::json::parse(report.s);
  CHECK(j["distortion"].get<double>() <= 2.0 * (1 + 1e-9));
}

TEST_CASE("oracle subset search and Hilbert coordinates") {
  Metric m;
  REQUIRE(ue_generate(R"({"kind":"grid","n":6,"step":1})", &m.m) == UE_OK);
  Str res;
  REQUIRE(ue_oracle_best_subset(m.m, 1.2, 16, &res.s) == UE_OK);
  auto j = nlohmann::json::parse(res.s);
  CHECK(j["subset"].size() == 2);

  Metric u;
  REQUIRE(ue_subdominant(m.m, &u.m) == UE_OK);
  Str csv;
  REQUIRE(ue_hilbert_coordinates(u.m, &csv.s) == UE_OK);
  CHECK(std::strlen(csv.s) > 0);
}

TEST_CASE("null arguments are reported, not crashed on") {
  CHECK(ue_metric_from_csv(nullptr, nullptr) == UE_INVALID_ARGUMENT);
  CHECK(ue_run_json(nullptr, nullptr, nullptr, nullptr) ==
        UE_INVALID_ARGUMENT);
}
