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

#include "matroidx/oracle.hpp"

#include <numeric>
#include <random>

namespace matroidx {

ElementSet greedy_maximal(const MatroidView& m1, const MatroidView& m2,
                          const std::vector<int>& order) {
  ElementSet s;
  for (int v : order) {
    ElementSet candidate = s.with(v);
    if (m1.is_independent(candidate) && m2.is_independent(candidate))
      s = std::move(candidate);
  }
  return s;
}

std::vector<int> ascending_order(int n) {
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<int> seeded_order(int n, unsigned long long seed) {
  std::vector<int> order = ascending_order(n);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace matroidx
