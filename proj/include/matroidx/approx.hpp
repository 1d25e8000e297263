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

#ifndef MATROIDX_APPROX_HPP
#define MATROIDX_APPROX_HPP

#include <optional>
#include <string>
#include <vector>

#include "matroidx/augset.hpp"
#include "matroidx/exchange.hpp"

namespace matroidx {

struct RunReport {
  int result_size = 0;
  double epsilon = 0.0;
  int r_bar = 0;  // greedy maximal size
  Mode mode = Mode::kIndependence;
  long long independence_queries = 0;
  long long rank_queries = 0;
  int refine_calls = 0;
  std::string branch;  // "empty", "distance>4", or "augment"
  std::optional<int> exact_optimum;

  std::string to_json() const;
};

struct ApproxResult {
  ElementSet set;
  RunReport report;
};

/// The (2/3 - eps)-approximation pipeline: greedy maximal set, distance
/// layers, early exit when the (s,t)-distance exceeds 4, otherwise refine
/// to gap eps * r_bar, extract an augmenting set, and augment.
///
/// The oracles' ledgers are reset at entry; the report carries the final
/// query counts for both matroids combined.
ApproxResult two_thirds_approx(const Oracle& m1, const Oracle& m2, double eps,
                               Mode mode, const std::vector<int>& order);

// Convenience overload: ascending scan order.
ApproxResult two_thirds_approx(const Oracle& m1, const Oracle& m2, double eps,
                               Mode mode);

}  // namespace matroidx

#endif  // MATROIDX_APPROX_HPP
