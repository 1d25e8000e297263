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

#ifndef MATROIDX_MATROID_HPP
#define MATROIDX_MATROID_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "matroidx/oracle.hpp"

namespace matroidx {

struct UniformSpec {
  int k = 0;
};

struct PartitionSpec {
  std::vector<std::vector<int>> parts;  // disjointly cover [0, n)
  std::vector<int> capacities;          // one per part, >= 0
};

struct GraphicSpec {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // element i is edge i
};

struct LinearSpec {
  long long p = 2;                              // prime modulus, <= 2^31
  std::vector<std::vector<long long>> columns;  // element i is column i
};

/// Description of one matroid over a ground set of size n.
struct MatroidSpec {
  int n = 0;
  std::variant<UniformSpec, PartitionSpec, GraphicSpec, LinearSpec> kind;

  // Throws kInvalidArgument with a field diagnosis on a bad spec.
  void validate() const;
};

/// Concrete evaluators for one matroid. Not thread-safe: the partition and
/// graphic evaluators reuse per-matroid scratch buffers (a run is
/// single-threaded; build a separate instance per concurrent run).
struct Matroid {
  int n = 0;
  IndepFn indep;
  RankFn rank;
};

Matroid build_matroid(const MatroidSpec& spec);

/// Counted oracle over a freshly built matroid. Independence and rank answers
/// are consistent by construction: indep(s) iff rank(s) == |s|.
Oracle build_oracle(const MatroidSpec& spec,
                    std::shared_ptr<QueryLedger> ledger);

}  // namespace matroidx

#endif  // MATROIDX_MATROID_HPP
