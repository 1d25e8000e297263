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

#ifndef MATROIDX_INSTANCE_HPP
#define MATROIDX_INSTANCE_HPP

#include <optional>
#include <string>

#include "matroidx/matroid.hpp"

namespace matroidx {

/// A matroid intersection instance: two matroids over the same ground set.
struct InstanceFile {
  int n = 0;
  MatroidSpec matroid1;
  MatroidSpec matroid2;
  std::optional<int> known_optimum;

  void validate() const;
};

// JSON (de)serialization; format documented in the README.
InstanceFile parse_instance(const std::string& json_text);
InstanceFile load_instance(const std::string& path);
std::string instance_to_json(const InstanceFile& instance);
void save_instance(const InstanceFile& instance, const std::string& path);

/// Exhaustive maximum common independent set size. Refuses n > 20.
int brute_force_max_common(const Matroid& m1, const Matroid& m2);

/// Parameters for the random instance families. Unused fields are ignored by
/// families that do not need them.
struct GenParams {
  // bipartite: matching on a random bipartite graph, encoded as two
  // partition matroids (one per side, capacity 1 per vertex).
  int left = 0;
  int right = 0;
  double edge_prob = -1.0;  // sample each pair independently
  int edges = -1;           // or: sample exactly this many distinct pairs

  // graphic_partition / linear_partition / partition_partition
  int n = 0;          // ground-set size
  int vertices = 0;   // graphic: vertex count
  int parts = 0;      // partition side: number of parts (0 -> heuristic)
  int capacity = 1;   // partition side: per-part capacity
  int dimension = 0;  // linear: column dimension (0 -> heuristic)
  long long p = 2;    // linear: field modulus

  bool fill_known_optimum = false;  // brute-force r when n <= 16
};

/// Deterministic for a fixed seed. Families: "bipartite",
/// "graphic_partition", "linear_partition", "partition_partition".
InstanceFile gen_random_instance(const std::string& family,
                                 const GenParams& params,
                                 unsigned long long seed);

// Named fixtures used throughout the tests.
InstanceFile path3_instance();
InstanceFile cross4_instance();

}  // namespace matroidx

#endif  // MATROIDX_INSTANCE_HPP
