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

#include "matroidx/exchange.hpp"

#include <cassert>
#include <deque>

namespace matroidx {

std::optional<int> find_exchange(const MatroidView& m, const ElementSet& s,
                                 int v, const ElementSet& t) {
  if (s.contains(v))
    fail(ErrorCode::kContract, "find_exchange: v must lie outside s");
  if (!t.is_subset_of(s))
    fail(ErrorCode::kContract, "find_exchange: t must be a subset of s");
  if (t.empty()) return std::nullopt;

  const ElementSet sv = s.with(v);
  // A qualifying u exists iff s + v - t is independent (unique-circuit
  // argument); the nullopt case therefore costs exactly one query.
  if (!m.is_independent(sv - t)) return std::nullopt;

  // Halve towards the smallest qualifying id: the left half contains a
  // qualifying element iff removing it makes s + v independent.
  const std::vector<int>& ids = t.ids();
  size_t lo = 0, hi = ids.size();
  while (hi - lo > 1) {
    size_t mid = lo + (hi - lo) / 2;
    ElementSet left = ElementSet::from_sorted(
        std::vector<int>(ids.begin() + static_cast<long>(lo),
                         ids.begin() + static_cast<long>(mid)));
    if (m.is_independent(sv - left))
      hi = mid;
    else
      lo = mid;
  }
  return ids[lo];
}

namespace {

void check_common_independent(const MatroidView& m1, const MatroidView& m2,
                              const ElementSet& s, const char* who) {
  // Uncounted precondition assertion; not part of the algorithm's queries.
  if (!m1.oracle->raw_independent(s) || !m2.oracle->raw_independent(s))
    fail(ErrorCode::kContract,
         std::string(who) + ": s is not a common independent set");
}

}  // namespace

DistanceLayers get_distance_layers(const MatroidView& m1, const MatroidView& m2,
                                   const ElementSet& s) {
  check_common_independent(m1, m2, s, "get_distance_layers");
  const int n = m1.oracle->ground_size();
  DistanceLayers layers;

  for (int v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    if (m1.is_independent(s.with(v))) layers.d1.insert(v);
  }

  ElementSet t = s;
  for (int v : layers.d1) {
    while (auto u = find_exchange(m2, s, v, t)) {
      layers.d2.insert(*u);
      t.erase(*u);
    }
  }

  for (int v = 0; v < n; ++v) {
    if (s.contains(v) || layers.d1.contains(v)) continue;
    if (m1.is_independent(s.with(v) - layers.d2)) layers.d3.insert(v);
  }
  return layers;
}

DistanceLayers get_distance_layers_rank(const Oracle& m1, const Oracle& m2,
                                        const ElementSet& s) {
  if (!m1.raw_independent(s) || !m2.raw_independent(s))
    fail(ErrorCode::kContract,
         "get_distance_layers_rank: s is not a common independent set");
  const int n = m1.ground_size();
  DistanceLayers layers;

  for (int v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    if (m1.query_rank(s.with(v)) == s.size() + 1) layers.d1.insert(v);
  }

  // u is in d2 iff rank_2(S + D1 - u) does not drop below rank_2(S).
  const int rank2_s = m2.query_rank(s);
  const ElementSet s_plus_d1 = s + layers.d1;
  for (int u : s)
    if (m2.query_rank(s_plus_d1.without(u)) >= rank2_s) layers.d2.insert(u);

  const int d3_size = s.size() + 1 - layers.d2.size();
  for (int v = 0; v < n; ++v) {
    if (s.contains(v) || layers.d1.contains(v)) continue;
    if (m1.query_rank(s.with(v) - layers.d2) == d3_size) layers.d3.insert(v);
  }
  return layers;
}

bool dist_exceeds_four(const MatroidView& m2, const ElementSet& s,
                       const DistanceLayers& layers) {
  for (int v : layers.d3)
    if (m2.is_independent(s.with(v))) return false;
  return true;
}

ElementSet exact_baseline(const Matroid& m1, const Matroid& m2,
                          const AugmentObserver& observer) {
  const int n = m1.n;
  ElementSet s;
  while (true) {
    // BFS over the exchange graph, testing edges on demand.
    std::vector<int> parent(static_cast<size_t>(n), -2);  // -1 marks source
    std::deque<int> queue;
    for (int v = 0; v < n; ++v) {
      if (s.contains(v)) continue;
      if (m1.indep(s.with(v))) {
        parent[static_cast<size_t>(v)] = -1;
        queue.push_back(v);
      }
    }

    int end = -1;
    while (!queue.empty() && end == -1) {
      int x = queue.front();
      queue.pop_front();
      if (!s.contains(x)) {
        if (m2.indep(s.with(x))) {
          end = x;
          break;
        }
        for (int u : s) {
          if (parent[static_cast<size_t>(u)] != -2) continue;
          if (m2.indep(s.without(u).with(x))) {
            parent[static_cast<size_t>(u)] = x;
            queue.push_back(u);
          }
        }
      } else {
        for (int w = 0; w < n; ++w) {
          if (s.contains(w) || parent[static_cast<size_t>(w)] != -2) continue;
          if (m1.indep(s.without(x).with(w))) {
            parent[static_cast<size_t>(w)] = x;
            queue.push_back(w);
          }
        }
      }
    }
    if (end == -1) return s;

    std::vector<int> path;
    for (int x = end; x != -1; x = parent[static_cast<size_t>(x)])
      path.push_back(x);
    // path is v_k, u_{k-1}, ..., v_1 (odd length, alternating outside/inside).
    const int size_before = s.size();
    for (size_t i = 0; i < path.size(); ++i) {
      if (i % 2 == 0)
        s.insert(path[i]);
      else
        s.erase(path[i]);
    }
    assert(m1.indep(s) && m2.indep(s));
    if (observer) observer(size_before, static_cast<int>(path.size()) + 1);
  }
}

}  // namespace matroidx
