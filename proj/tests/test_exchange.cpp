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
#include <optional>
#include <random>

#include "matroidx/exchange.hpp"
#include "matroidx/instance.hpp"
#include "naive.hpp"

using namespace matroidx;
using matroidx::testing::OraclePair;

namespace {

std::optional<int> linear_scan_exchange(const Matroid& m, const ElementSet& s,
                                        int v, const ElementSet& t) {
  for (int u : t)
    if (m.indep(s.with(v).without(u))) return u;
  return std::nullopt;
}

GenParams small_params(int n) {
  GenParams p;
  p.left = 4;
  p.right = 4;
  p.edges = n;
  p.n = n;
  p.vertices = std::max(3, n / 2);
  p.p = 3;
  return p;
}

const char* kFamilies[] = {"bipartite", "graphic_partition",
                           "linear_partition", "partition_partition"};

}  // namespace

TEST_CASE("find_exchange agrees with a linear scan and keeps its query "
          "budget") {
  std::mt19937_64 rng(11);
  int calls = 0;
  for (const char* family : kFamilies) {
    for (unsigned long long seed = 1; seed <= 10; ++seed) {
      InstanceFile file = gen_random_instance(family, small_params(12), seed);
      Matroid raw2 = build_matroid(file.matroid2);
      OraclePair oracles(file);
      ElementSet s = greedy_maximal(oracles.view1(), oracles.view2(),
                                    ascending_order(file.n));
      for (int v = 0; v < file.n; ++v) {
        if (s.contains(v)) continue;
        // Alternate between the full set and a random subset of s.
        ElementSet t = s;
        if (rng() % 2) {
          ElementSet sub;
          for (int u : s)
            if (rng() % 2) sub.insert(u);
          t = sub;
        }
        long long before = oracles.ledger2->independence_queries;
        std::optional<int> got = find_exchange(oracles.view2(), s, v, t);
        long long used = oracles.ledger2->independence_queries - before;
        std::optional<int> want = linear_scan_exchange(raw2, s, v, t);
        REQUIRE(got == want);
        if (!got) {
          CHECK(used == (t.empty() ? 0 : 1));
        } else {
          int budget =
              2 * static_cast<int>(std::ceil(std::log2(t.size()))) + 1;
          CHECK(used <= budget);
        }
        ++calls;
      }
    }
  }
  CHECK(calls > 100);
}

TEST_CASE("find_exchange returns the smallest qualifying id") {
  // M = uniform of rank 2: any u in t qualifies once |s|=2.
  MatroidSpec spec{4, UniformSpec{2}};
  OraclePair oracles(InstanceFile{4, spec, spec, std::nullopt});
  ElementSet s = ElementSet::of({1, 3});
  CHECK(find_exchange(oracles.view1(), s, 0, s) == 1);
  CHECK(find_exchange(oracles.view1(), s, 0, ElementSet::of({3})) == 3);
}

TEST_CASE("find_exchange contract checks") {
  OraclePair oracles(path3_instance());
  ElementSet s = ElementSet::of({1});
  CHECK(find_exchange(oracles.view2(), s, 0, ElementSet{}) == std::nullopt);
  CHECK(oracles.ledger2->independence_queries == 0);
  CHECK_THROWS_AS(find_exchange(oracles.view2(), s, 1, s), Error);
  CHECK_THROWS_AS(
      find_exchange(oracles.view2(), s, 0, ElementSet::of({0, 1})), Error);
}

TEST_CASE("PATH3 layers") {
  InstanceFile file = path3_instance();
  OraclePair oracles(file);
  ElementSet s = ElementSet::of({1});
  DistanceLayers layers = get_distance_layers(oracles.view1(),
                                              oracles.view2(), s);
  CHECK(layers.d1 == ElementSet::of({2}));
  CHECK(layers.d2 == ElementSet::of({1}));
  CHECK(layers.d3 == ElementSet::of({0}));
  CHECK_FALSE(dist_exceeds_four(oracles.view2(), s, layers));

  DistanceLayers by_rank = get_distance_layers_rank(oracles.o1, oracles.o2, s);
  CHECK(by_rank.d1 == layers.d1);
  CHECK(by_rank.d2 == layers.d2);
  CHECK(by_rank.d3 == layers.d3);
}

TEST_CASE("CROSS4 layers are empty at the maximum") {
  InstanceFile file = cross4_instance();
  OraclePair oracles(file);
  ElementSet s = ElementSet::of({0, 3});
  DistanceLayers layers = get_distance_layers(oracles.view1(),
                                              oracles.view2(), s);
  CHECK(layers.all_empty());
  CHECK(dist_exceeds_four(oracles.view2(), s, layers));
}

TEST_CASE("layer routines match the naive BFS on random instances") {
  for (const char* family : kFamilies) {
    for (unsigned long long seed = 1; seed <= 8; ++seed) {
      InstanceFile file = gen_random_instance(family, small_params(14), seed);
      Matroid m1 = build_matroid(file.matroid1);
      Matroid m2 = build_matroid(file.matroid2);
      OraclePair oracles(file);
      ElementSet s = greedy_maximal(oracles.view1(), oracles.view2(),
                                    ascending_order(file.n));
      DistanceLayers want = testing::naive_layers(m1, m2, s);
      DistanceLayers by_ind = get_distance_layers(oracles.view1(),
                                                  oracles.view2(), s);
      DistanceLayers by_rank =
          get_distance_layers_rank(oracles.o1, oracles.o2, s);
      CHECK(by_ind.d1 == want.d1);
      CHECK(by_ind.d2 == want.d2);
      CHECK(by_ind.d3 == want.d3);
      CHECK(by_rank.d1 == want.d1);
      CHECK(by_rank.d2 == want.d2);
      CHECK(by_rank.d3 == want.d3);
    }
  }
}

TEST_CASE("rank-mode layers use only rank queries, O(n) many") {
  InstanceFile file = gen_random_instance("bipartite", small_params(12), 3);
  OraclePair oracles(file);
  ElementSet s = greedy_maximal(oracles.view1(Mode::kRank),
                                oracles.view2(Mode::kRank),
                                ascending_order(file.n));
  oracles.ledger1->reset();
  oracles.ledger2->reset();
  get_distance_layers_rank(oracles.o1, oracles.o2, s);
  CHECK(oracles.ledger1->independence_queries == 0);
  CHECK(oracles.ledger2->independence_queries == 0);
  CHECK(oracles.ledger1->rank_queries + oracles.ledger2->rank_queries <=
        2 * file.n + 1);
}

TEST_CASE("layer preconditions rejected") {
  OraclePair oracles(path3_instance());
  ElementSet bad = ElementSet::of({0, 1});  // dependent in matroid 1
  CHECK_THROWS_AS(
      get_distance_layers(oracles.view1(), oracles.view2(), bad), Error);
  CHECK_THROWS_AS(get_distance_layers_rank(oracles.o1, oracles.o2, bad),
                  Error);
}

TEST_CASE("exact baseline matches brute force") {
  for (const char* family : kFamilies) {
    for (unsigned long long seed = 1; seed <= 10; ++seed) {
      InstanceFile file = gen_random_instance(family, small_params(12), seed);
      Matroid m1 = build_matroid(file.matroid1);
      Matroid m2 = build_matroid(file.matroid2);
      int augments = 0;
      ElementSet s = exact_baseline(m1, m2, [&](int, int path_length) {
        ++augments;
        CHECK(path_length >= 2);
        CHECK(path_length % 2 == 0);
      });
      CHECK(m1.indep(s));
      CHECK(m2.indep(s));
      CHECK(s.size() == brute_force_max_common(m1, m2));
      CHECK(augments == s.size());
    }
  }
}
