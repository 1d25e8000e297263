// Copyright 2026 The Matroidx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exercises the shared library strictly through the C interface.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "matroidx.h"

namespace {

struct Instance {
  mx_instance* p = nullptr;
  ~Instance() { mx_instance_free(p); }
};

struct Result {
  mx_result* p = nullptr;
  ~Result() { mx_result_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  mx_string_free(s);
  return out;
}

constexpr const char* kPath3 = MATROIDX_DATA_DIR "/PATH3.json";

}  // namespace

TEST_CASE("load, inspect, and round-trip an instance") {
  Instance inst;
  REQUIRE(mx_instance_load(kPath3, &inst.p) == MX_OK);
  CHECK(mx_instance_ground_size(inst.p) == 3);
  CHECK(mx_instance_known_optimum(inst.p) == 2);

  char* json = nullptr;
  REQUIRE(mx_instance_to_json(inst.p, &json) == MX_OK);
  std::string text = take(json);
  Instance back;
  REQUIRE(mx_instance_parse(text.c_str(), &back.p) == MX_OK);
  CHECK(mx_instance_ground_size(back.p) == 3);
}

TEST_CASE("error paths set status and detail") {
  mx_instance* out = nullptr;
  CHECK(mx_instance_parse("nonsense", &out) == MX_PARSE_ERROR);
  CHECK(out == nullptr);
  CHECK(std::string(mx_last_error()).find("instance") != std::string::npos);
  CHECK(mx_instance_load("/no/such/file.json", &out) == MX_IO_ERROR);
  CHECK(mx_instance_parse(nullptr, &out) == MX_INVALID_ARGUMENT);
  CHECK(mx_instance_generate("ring", "{}", 1, &out) == MX_INVALID_ARGUMENT);
  CHECK(std::string(mx_status_message(MX_PARSE_ERROR)) == "parse error");
}

TEST_CASE("optima and greedy through the C interface") {
  Instance inst;
  REQUIRE(mx_instance_load(kPath3, &inst.p) == MX_OK);
  int brute = 0, exact = 0;
  REQUIRE(mx_brute_force_optimum(inst.p, &brute) == MX_OK);
  REQUIRE(mx_exact_optimum(inst.p, &exact) == MX_OK);
  CHECK(brute == 2);
  CHECK(exact == 2);

  Result greedy;
  REQUIRE(mx_greedy(inst.p, 0, 0, &greedy.p) == MX_OK);
  CHECK(mx_result_size(greedy.p) == 2);
}

TEST_CASE("solve and result members") {
  Instance inst;
  REQUIRE(mx_instance_load(kPath3, &inst.p) == MX_OK);
  Result res;
  REQUIRE(mx_solve(inst.p, 0.1, 0, 0, 0, &res.p) == MX_OK);
  REQUIRE(mx_result_size(res.p) == 2);

  int members[2] = {-1, -1};
  int len = 0;
  REQUIRE(mx_result_members(res.p, members, 2, &len) == MX_OK);
  CHECK(len == 2);
  CHECK(members[0] == 0);
  CHECK(members[1] == 2);
  int tiny[1];
  CHECK(mx_result_members(res.p, tiny, 1, nullptr) == MX_INVALID_ARGUMENT);

  char* json = nullptr;
  REQUIRE(mx_result_report_json(res.p, &json) == MX_OK);
  std::string report = take(json);
  CHECK(report.find("\"result_size\":2") != std::string::npos);
  CHECK(report.find("\"branch\"") != std::string::npos);

  CHECK(mx_solve(inst.p, 2.0, 0, 0, 0, &res.p) == MX_INVALID_ARGUMENT);
}

TEST_CASE("rank mode and seeded orders") {
  Instance inst;
  REQUIRE(mx_instance_load(kPath3, &inst.p) == MX_OK);
  Result res;
  REQUIRE(mx_solve(inst.p, 0.1, 1, 7, 1, &res.p) == MX_OK);
  CHECK(mx_result_size(res.p) == 2);
  char* json = nullptr;
  REQUIRE(mx_result_report_json(res.p, &json) == MX_OK);
  std::string report = take(json);
  CHECK(report.find("\"mode\":\"rank\"") != std::string::npos);
  CHECK(report.find("\"independence_queries\":0") != std::string::npos);
}

TEST_CASE("streaming through the C interface") {
  Instance inst;
  REQUIRE(mx_instance_load(kPath3, &inst.p) == MX_OK);
  Result res;
  REQUIRE(mx_stream_solve(inst.p, 0.1, 0, 0, 1, 0, &res.p) == MX_OK);
  CHECK(mx_result_size(res.p) == 2);
  char* json = nullptr;
  REQUIRE(mx_result_report_json(res.p, &json) == MX_OK);
  std::string report = take(json);
  CHECK(report.find("\"passes\":") != std::string::npos);
  CHECK(report.find("\"access_violations\":0") != std::string::npos);
}

TEST_CASE("generation through the C interface is deterministic") {
  const char* params = R"({"left":4,"right":4,"edges":8})";
  Instance a, b;
  REQUIRE(mx_instance_generate("bipartite", params, 5, &a.p) == MX_OK);
  REQUIRE(mx_instance_generate("bipartite", params, 5, &b.p) == MX_OK);
  char *ja = nullptr, *jb = nullptr;
  REQUIRE(mx_instance_to_json(a.p, &ja) == MX_OK);
  REQUIRE(mx_instance_to_json(b.p, &jb) == MX_OK);
  CHECK(take(ja) == take(jb));
  CHECK(mx_instance_ground_size(a.p) == 8);
}
