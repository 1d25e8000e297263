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

#ifndef MATROIDX_EXCHANGE_HPP
#define MATROIDX_EXCHANGE_HPP

#include <functional>
#include <optional>

#include "matroidx/matroid.hpp"
#include "matroidx/oracle.hpp"

namespace matroidx {

/// BFS layers of the exchange graph G(S): d1 and d3 outside S, d2 inside S.
struct DistanceLayers {
  ElementSet d1;
  ElementSet d2;
  ElementSet d3;

  bool all_empty() const { return d1.empty() && d2.empty() && d3.empty(); }
};

/// Binary-search edge discovery: returns the smallest u in t with
/// s + v - u independent, or nullopt. Uses exactly one query in the
/// nullopt case (none when t is empty) and at most 2*ceil(log2 |t|) + 1
/// queries otherwise.
std::optional<int> find_exchange(const MatroidView& m, const ElementSet& s,
                                 int v, const ElementSet& t);

/// Distance layers via independence queries (FindExchange inner loop).
/// Precondition: s is independent in both matroids.
DistanceLayers get_distance_layers(const MatroidView& m1, const MatroidView& m2,
                                   const ElementSet& s);

/// Distance layers with O(n) rank queries and no logarithmic factor.
DistanceLayers get_distance_layers_rank(const Oracle& m1, const Oracle& m2,
                                        const ElementSet& s);

/// True iff no v in d3 has s + v independent in m2, i.e. every augmenting
/// path has length at least 6 (or none exists). Assumes s is maximal.
bool dist_exceeds_four(const MatroidView& m2, const ElementSet& s,
                       const DistanceLayers& layers);

/// Called once per augmentation with (|S| before, path length in edges, r so
/// far unknown); used by tests to sample the shortest-path length bound.
using AugmentObserver = std::function<void(int s_size, int path_length)>;

/// Maximum common independent set by repeated shortest augmenting paths over
/// a naively materialized exchange graph. Test/benchmark oracle; uses the
/// uncounted matroid evaluators.
ElementSet exact_baseline(const Matroid& m1, const Matroid& m2,
                          const AugmentObserver& observer = nullptr);

}  // namespace matroidx

#endif  // MATROIDX_EXCHANGE_HPP
