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

#include <algorithm>

#include "matroidx/element_set.hpp"
#include "matroidx/errors.hpp"
#include "matroidx/instance.hpp"
#include "matroidx/oracle.hpp"
#include "naive.hpp"

using namespace matroidx;

TEST_CASE("element set basics") {
  ElementSet s = ElementSet::of({3, 1, 2, 1});
  CHECK(s.size() == 3);
  CHECK(s.str() == "{1,2,3}");
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(0));
  CHECK(s.with(0).str() == "{0,1,2,3}");
  CHECK(s.without(2).str() == "{1,3}");
  CHECK(s == ElementSet::from_unsorted({2, 3, 1}));
  CHECK(s.max_id() == 3);
  CHECK(ElementSet{}.max_id() == -1);
}

TEST_CASE("element set algebra") {
  ElementSet a = ElementSet::of({0, 1, 2});
  ElementSet b = ElementSet::of({2, 3});
  CHECK((a + b).str() == "{0,1,2,3}");
  CHECK((a - b).str() == "{0,1}");
  CHECK(a.intersect(b).str() == "{2}");
  CHECK(b.is_subset_of(a + b));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(ElementSet{}.is_subset_of(a));
  CHECK(ElementSet::full(3) == ElementSet::of({0, 1, 2}));
}

TEST_CASE("error codes carried by exceptions") {
  try {
    fail(ErrorCode::kParse, "boom");
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()) == "boom");
  }
}

TEST_CASE("oracle counts queries and checks ranges") {
  auto ledger = std::make_shared<QueryLedger>();
  Oracle o(3, [](const ElementSet& s) { return s.size() <= 2; },
           [](const ElementSet& s) { return std::min(s.size(), 2); }, ledger);
  CHECK(o.query_independent(ElementSet::of({0, 1})));
  CHECK_FALSE(o.query_independent(ElementSet::of({0, 1, 2})));
  CHECK(o.query_rank(ElementSet::of({0, 1, 2})) == 2);
  CHECK(ledger->independence_queries == 2);
  CHECK(ledger->rank_queries == 1);
  CHECK(o.raw_independent(ElementSet::of({0})));
  CHECK(ledger->independence_queries == 2);

  CHECK_THROWS_AS(o.query_independent(ElementSet::of({3})), Error);
  ledger->reset();
  CHECK(ledger->independence_queries == 0);
}

TEST_CASE("query guard sees every counted query") {
  auto ledger = std::make_shared<QueryLedger>();
  Oracle o(4, [](const ElementSet&) { return true; },
           [](const ElementSet& s) { return s.size(); }, ledger);
  int guarded = 0;
  o.set_query_guard([&](const ElementSet&) { ++guarded; });
  o.query_independent(ElementSet::of({0}));
  o.query_rank(ElementSet::of({1}));
  o.raw_independent(ElementSet::of({2}));
  CHECK(guarded == 2);
  o.clear_query_guard();
  o.query_independent(ElementSet::of({0}));
  CHECK(guarded == 2);
}

TEST_CASE("matroid view rank mode charges rank queries only") {
  testing::OraclePair oracles(path3_instance());
  MatroidView rank_view = oracles.view1(Mode::kRank);
  CHECK(rank_view.is_independent(ElementSet::of({0, 2})));
  CHECK_FALSE(rank_view.is_independent(ElementSet::of({0, 1})));
  CHECK(oracles.ledger1->independence_queries == 0);
  CHECK(oracles.ledger1->rank_queries == 2);
}

TEST_CASE("greedy maximal on PATH3 depends on scan order") {
  testing::OraclePair oracles(path3_instance());
  CHECK(greedy_maximal(oracles.view1(), oracles.view2(), {0, 1, 2}) ==
        ElementSet::of({0, 2}));
  CHECK(greedy_maximal(oracles.view1(), oracles.view2(), {1, 0, 2}) ==
        ElementSet::of({1}));
}

TEST_CASE("greedy maximal uses at most 2n queries") {
  InstanceFile file = gen_random_instance(
      "partition_partition",
      [] {
        GenParams p;
        p.n = 12;
        return p;
      }(),
      5);
  testing::OraclePair oracles(file);
  ElementSet s =
      greedy_maximal(oracles.view1(), oracles.view2(), ascending_order(12));
  CHECK(oracles.total_queries() <= 24);

  // Maximality: no element extends s in both matroids.
  Matroid m1 = build_matroid(file.matroid1);
  Matroid m2 = build_matroid(file.matroid2);
  for (int v : ElementSet::full(12) - s) {
    bool extends_both = m1.indep(s.with(v)) && m2.indep(s.with(v));
    CHECK_FALSE(extends_both);
  }
}

TEST_CASE("orders") {
  CHECK(ascending_order(3) == std::vector<int>{0, 1, 2});
  CHECK(ascending_order(0).empty());
  std::vector<int> a = seeded_order(50, 7);
  CHECK(a == seeded_order(50, 7));
  CHECK(a != seeded_order(50, 8));
  std::vector<int> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == ascending_order(50));
}
