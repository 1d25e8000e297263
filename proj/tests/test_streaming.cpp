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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "matroidx/instance.hpp"
#include "matroidx/streaming.hpp"
#include "naive.hpp"

using namespace matroidx;
using matroidx::testing::OraclePair;

TEST_CASE("stream session meters passes and enforces the access rule") {
  OraclePair oracles(path3_instance());
  StreamSession session(3, {0, 1, 2}, false);
  session.attach(oracles.o1, oracles.o2);

  session.run_pass([&](int v) {
    oracles.view1().is_independent(ElementSet::of({v}));
  });
  CHECK(session.pass_count() == 1);
  CHECK(session.violations() == 0);

  // Querying an element that is neither stored nor arriving.
  session.run_pass([&](int v) {
    if (v == 0) oracles.view1().is_independent(ElementSet::of({2}));
  });
  CHECK(session.violations() == 1);

  session.allow(2);
  session.run_pass([&](int v) {
    if (v == 0) oracles.view1().is_independent(ElementSet::of({2}));
  });
  CHECK(session.violations() == 1);

  // Queries between passes may only touch stored elements.
  CHECK(session.pass_count() == 3);
  oracles.view1().is_independent(ElementSet::of({2}));
  CHECK(session.violations() == 1);
  oracles.view1().is_independent(ElementSet::of({0}));
  CHECK(session.violations() == 2);

  session.note_memory(5);
  session.note_memory(3);
  CHECK(session.peak_memory_items() == 5);
  session.charge_pass(2);
  CHECK(session.pass_count() == 5);

  session.detach();
  oracles.view1().is_independent(ElementSet::of({0}));
  CHECK(session.violations() == 2);
}

TEST_CASE("strict sessions throw on violations; nested passes are protocol "
          "errors") {
  OraclePair oracles(path3_instance());
  StreamSession session(3, {0, 1, 2}, true);
  session.attach(oracles.o1, oracles.o2);
  CHECK_THROWS_AS(session.run_pass([&](int v) {
    if (v == 0) oracles.view1().is_independent(ElementSet::of({1}));
  }),
                  Error);
  CHECK_THROWS_AS(
      session.run_pass([&](int) { session.run_pass([](int) {}); }), Error);
}

TEST_CASE("stream order must be a permutation") {
  CHECK_THROWS_AS(StreamSession(3, {0, 1}, false), Error);
  CHECK_THROWS_AS(StreamSession(3, {0, 1, 1}, false), Error);
  CHECK_THROWS_AS(StreamSession(3, {0, 1, 3}, false), Error);
}

TEST_CASE("streaming greedy and D2 on PATH3, order (1,0,2)") {
  OraclePair oracles(path3_instance());
  StreamSession session(3, {1, 0, 2}, true);
  session.attach(oracles.o1, oracles.o2);
  StreamingState state;
  streaming_greedy_and_d2(session, state, oracles.view1(), oracles.view2());
  CHECK(state.s == ElementSet::of({1}));
  CHECK(state.d2 == ElementSet::of({1}));
  CHECK(state.f2 == ElementSet::of({1}));
  CHECK(session.pass_count() == 2);
  CHECK(session.violations() == 0);
}

TEST_CASE("streaming greedy and D2 on CROSS4") {
  OraclePair oracles(cross4_instance());
  StreamSession session(4, {0, 1, 2, 3}, true);
  session.attach(oracles.o1, oracles.o2);
  StreamingState state;
  streaming_greedy_and_d2(session, state, oracles.view1(), oracles.view2());
  CHECK(state.s == ElementSet::of({0, 3}));
  CHECK(state.d2.empty());
  CHECK(session.pass_count() == 2);
}

TEST_CASE("classify_arrival on PATH3 after pass 2") {
  OraclePair oracles(path3_instance());
  StreamingState state;
  state.s = ElementSet::of({1});
  state.d2 = ElementSet::of({1});
  state.f2 = state.d2;
  MatroidView m1 = oracles.view1();
  CHECK(classify_arrival(2, state, m1) == ArrivalType::kD1Fresh);
  CHECK(classify_arrival(0, state, m1) == ArrivalType::kD3Fresh);
  CHECK(classify_arrival(1, state, m1) == ArrivalType::kOther);

  state.b1 = ElementSet::of({2});
  CHECK(classify_arrival(2, state, m1) == ArrivalType::kD1Selected);
  state.b1 = ElementSet{};
  state.r1_sel = ElementSet::of({2});
  CHECK(classify_arrival(2, state, m1) == ArrivalType::kD1Removed);

  // Snapshot replay recovers fresh->removed demotions with no stored set.
  state.r1_sel = ElementSet{};
  state.snapshots.push_back({0, ElementSet{}, ElementSet{}});
  CHECK(classify_arrival(2, state, m1) == ArrivalType::kD1Removed);
}

TEST_CASE("update_aba with no fresh elements: two passes, one snapshot") {
  OraclePair oracles(cross4_instance());
  StreamSession session(4, {0, 1, 2, 3}, true);
  session.attach(oracles.o1, oracles.o2);
  StreamingState state;
  streaming_greedy_and_d2(session, state, oracles.view1(), oracles.view2());
  update_aba(session, state, 0, oracles.view1(), oracles.view2());
  CHECK(session.pass_count() == 4);
  CHECK(state.snapshots.size() == 1);
  CHECK(state.b1.empty());
}

TEST_CASE("streaming PATH3 golden run, order (1,0,2)") {
  OraclePair oracles(path3_instance());
  StreamOptions options;
  options.epsilon = 0.1;
  options.order = {1, 0, 2};
  options.strict = true;
  StreamCapture capture;
  StreamResult r =
      streaming_two_thirds(oracles.o1, oracles.o2, options, &capture);
  CHECK(r.set == ElementSet::of({0, 2}));
  CHECK(r.report.result_size == 2);
  CHECK(r.report.r_bar == 1);
  CHECK(r.report.branch == "augment");
  CHECK(r.report.refine_calls == 2);
  CHECK(r.report.passes == 15);  // 3 setup + 2 refine calls x 6
  CHECK(r.report.access_violations == 0);
  CHECK(r.report.peak_memory_items == 8);

  // Selection-pass capture, one entry per UpdateABA call (k=1 then k=0).
  REQUIRE(capture.pass_a_selected.size() == 4);
  CHECK(capture.pass_a_selected[0].empty());
  CHECK(capture.pass_a_selected[1] == ElementSet::of({2}));
  CHECK(capture.pass_a_selected[2] == ElementSet::of({0}));
  CHECK(capture.pass_a_selected[3].empty());
}

TEST_CASE("streaming CROSS4 returns early after three passes") {
  OraclePair oracles(cross4_instance());
  StreamOptions options;
  options.epsilon = 0.2;
  options.strict = true;
  StreamResult r = streaming_two_thirds(oracles.o1, oracles.o2, options);
  CHECK(r.set == ElementSet::of({0, 3}));
  CHECK(r.report.branch == "distance>4");
  CHECK(r.report.passes == 3);
}

TEST_CASE("streaming empty ground set uses two passes") {
  MatroidSpec zero{0, UniformSpec{0}};
  OraclePair oracles(InstanceFile{0, zero, zero, std::nullopt});
  StreamOptions options;
  options.strict = true;
  StreamResult r = streaming_two_thirds(oracles.o1, oracles.o2, options);
  CHECK(r.report.result_size == 0);
  CHECK(r.report.branch == "empty");
  CHECK(r.report.passes == 2);
}

TEST_CASE("strict paper mode charges the full schedule") {
  OraclePair oracles(path3_instance());
  StreamOptions options;
  options.epsilon = 0.1;
  options.order = {1, 0, 2};
  options.strict_paper_passes = true;
  StreamResult r = streaming_two_thirds(oracles.o1, oracles.o2, options);
  CHECK(r.report.result_size == 2);
  // 3 setup + 2 refine calls x (2+2+2+2 per k, two k values).
  CHECK(r.report.passes == 35);
  CHECK(r.report.strict_paper_passes);
}

TEST_CASE("streaming matches the bound and the non-streaming result size on "
          "random instances") {
  for (const char* family : {"bipartite", "graphic_partition",
                             "linear_partition", "partition_partition"}) {
    for (unsigned long long seed = 1; seed <= 8; ++seed) {
      GenParams params;
      params.left = 5;
      params.right = 5;
      params.edges = 13;
      params.n = 13;
      params.vertices = 6;
      params.p = 3;
      InstanceFile file = gen_random_instance(family, params, seed);
      Matroid m1 = build_matroid(file.matroid1);
      Matroid m2 = build_matroid(file.matroid2);
      int r = brute_force_max_common(m1, m2);
      for (double eps : {0.1, 0.2}) {
        OraclePair oracles(file);
        StreamOptions options;
        options.epsilon = eps;
        options.strict = true;
        StreamResult out = streaming_two_thirds(oracles.o1, oracles.o2,
                                                options);
        CHECK(m1.indep(out.set));
        CHECK(m2.indep(out.set));
        CHECK(out.report.result_size >= testing::approx_bound(eps, r));
        CHECK(out.report.passes <=
              6 + 10 * static_cast<int>(std::ceil(1.0 / eps)));
        CHECK(out.report.access_violations == 0);
      }
    }
  }
}
