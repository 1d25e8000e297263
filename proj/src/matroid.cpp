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

#include "matroidx/matroid.hpp"

#include <algorithm>
#include <string>

namespace matroidx {
namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Epoch-stamped counters so a query costs O(|s|), not O(#parts).
struct PartitionScratch {
  std::vector<int> count;
  std::vector<long long> stamp;
  long long epoch = 0;
};

// Union-find rebuilt per query (the oracle cost model is per-query).
// Epoch stamps make the rebuild O(|s| alpha), not O(#vertices).
struct GraphicScratch {
  std::vector<int> parent;
  std::vector<long long> stamp;
  long long epoch = 0;

  int find(int x) {
    if (stamp[static_cast<size_t>(x)] != epoch) {
      stamp[static_cast<size_t>(x)] = epoch;
      parent[static_cast<size_t>(x)] = x;
    }
    int root = x;
    while (parent[static_cast<size_t>(root)] != root)
      root = parent[static_cast<size_t>(root)];
    while (parent[static_cast<size_t>(x)] != root) {
      int next = parent[static_cast<size_t>(x)];
      parent[static_cast<size_t>(x)] = root;
      x = next;
    }
    return root;
  }

  // Returns true when the edge joins two distinct components.
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[static_cast<size_t>(ra)] = rb;
    return true;
  }
};

long long pow_mod(long long base, long long exp, long long mod) {
  long long result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

Matroid build_uniform(int n, const UniformSpec& spec) {
  int k = spec.k;
  return Matroid{
      n,
      [k](const ElementSet& s) { return s.size() <= k; },
      [k](const ElementSet& s) { return std::min(s.size(), k); },
  };
}

Matroid build_partition(int n, const PartitionSpec& spec) {
  auto part_of = std::make_shared<std::vector<int>>(static_cast<size_t>(n));
  for (size_t i = 0; i < spec.parts.size(); ++i)
    for (int id : spec.parts[i]) (*part_of)[static_cast<size_t>(id)] = static_cast<int>(i);
  auto caps = std::make_shared<std::vector<int>>(spec.capacities);
  auto scratch = std::make_shared<PartitionScratch>();
  scratch->count.assign(spec.parts.size(), 0);
  scratch->stamp.assign(spec.parts.size(), 0);

  auto indep = [part_of, caps, scratch](const ElementSet& s) {
    ++scratch->epoch;
    for (int id : s) {
      size_t part = static_cast<size_t>((*part_of)[static_cast<size_t>(id)]);
      if (scratch->stamp[part] != scratch->epoch) {
        scratch->stamp[part] = scratch->epoch;
        scratch->count[part] = 0;
      }
      if (++scratch->count[part] > (*caps)[part]) return false;
    }
    return true;
  };
  auto rank = [part_of, caps, scratch](const ElementSet& s) {
    ++scratch->epoch;
    int total = 0;
    for (int id : s) {
      size_t part = static_cast<size_t>((*part_of)[static_cast<size_t>(id)]);
      if (scratch->stamp[part] != scratch->epoch) {
        scratch->stamp[part] = scratch->epoch;
        scratch->count[part] = 0;
      }
      if (++scratch->count[part] <= (*caps)[part]) ++total;
    }
    return total;
  };
  return Matroid{n, std::move(indep), std::move(rank)};
}

Matroid build_graphic(int n, const GraphicSpec& spec) {
  auto edges = std::make_shared<std::vector<std::pair<int, int>>>(spec.edges);
  auto scratch = std::make_shared<GraphicScratch>();
  scratch->parent.assign(static_cast<size_t>(spec.vertices), 0);
  scratch->stamp.assign(static_cast<size_t>(spec.vertices), 0);

  auto rank = [edges, scratch](const ElementSet& s) {
    ++scratch->epoch;
    int forest_edges = 0;
    for (int id : s) {
      auto [u, v] = (*edges)[static_cast<size_t>(id)];
      if (scratch->unite(u, v)) ++forest_edges;
    }
    return forest_edges;
  };
  auto indep = [edges, scratch](const ElementSet& s) {
    ++scratch->epoch;
    for (int id : s) {
      auto [u, v] = (*edges)[static_cast<size_t>(id)];
      if (!scratch->unite(u, v)) return false;
    }
    return true;
  };
  return Matroid{n, std::move(indep), std::move(rank)};
}

// Exact rank over GF(p) by Gaussian elimination on the selected columns.
Matroid build_linear(int n, const LinearSpec& spec) {
  auto columns =
      std::make_shared<std::vector<std::vector<long long>>>(spec.columns);
  long long p = spec.p;
  size_t dim = spec.columns.empty() ? 0 : spec.columns[0].size();

  auto rank = [columns, p, dim](const ElementSet& s) {
    // Incremental reduction: keep a basis sorted by pivot row (each basis
    // vector is zero before its pivot) and eliminate each selected column
    // against it in pivot order.
    std::vector<std::pair<size_t, std::vector<long long>>> basis;
    int rank_count = 0;
    for (int id : s) {
      std::vector<long long> col = (*columns)[static_cast<size_t>(id)];
      for (auto& x : col) x = ((x % p) + p) % p;
      for (const auto& [pivot, b] : basis) {
        long long factor = col[pivot];
        if (factor == 0) continue;
        for (size_t row = pivot; row < dim; ++row)
          col[row] = ((col[row] - factor * b[row]) % p + p) % p;
      }
      size_t pivot = 0;
      while (pivot < dim && col[pivot] == 0) ++pivot;
      if (pivot == dim) continue;
      long long inv = pow_mod(col[pivot], p - 2, p);
      for (size_t row = pivot; row < dim; ++row) col[row] = col[row] * inv % p;
      auto pos = std::lower_bound(
          basis.begin(), basis.end(), pivot,
          [](const auto& entry, size_t value) { return entry.first < value; });
      basis.emplace(pos, pivot, std::move(col));
      ++rank_count;
    }
    return rank_count;
  };
  auto indep = [rank](const ElementSet& s) { return rank(s) == s.size(); };
  return Matroid{n, std::move(indep), std::move(rank)};
}

}  // namespace

void MatroidSpec::validate() const {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "ground size must be >= 0");
  if (const auto* u = std::get_if<UniformSpec>(&kind)) {
    if (u->k < 0) fail(ErrorCode::kInvalidArgument, "uniform: k must be >= 0");
  } else if (const auto* part = std::get_if<PartitionSpec>(&kind)) {
    if (part->parts.size() != part->capacities.size())
      fail(ErrorCode::kInvalidArgument,
           "partition: parts and capacities differ in length");
    std::vector<int> seen(static_cast<size_t>(n), 0);
    for (const auto& block : part->parts)
      for (int id : block) {
        if (id < 0 || id >= n)
          fail(ErrorCode::kInstanceMismatch,
               "partition: element " + std::to_string(id) + " out of range");
        if (seen[static_cast<size_t>(id)]++)
          fail(ErrorCode::kInvalidArgument,
               "partition: element " + std::to_string(id) + " in two parts");
      }
    for (int id = 0; id < n; ++id)
      if (!seen[static_cast<size_t>(id)])
        fail(ErrorCode::kInvalidArgument,
             "partition: element " + std::to_string(id) + " uncovered");
    for (int cap : part->capacities)
      if (cap < 0)
        fail(ErrorCode::kInvalidArgument, "partition: negative capacity");
  } else if (const auto* g = std::get_if<GraphicSpec>(&kind)) {
    if (static_cast<int>(g->edges.size()) != n)
      fail(ErrorCode::kInvalidArgument,
           "graphic: edge list length " + std::to_string(g->edges.size()) +
               " != n " + std::to_string(n));
    for (auto [u, v] : g->edges)
      if (u < 0 || v < 0 || u >= g->vertices || v >= g->vertices)
        fail(ErrorCode::kInvalidArgument, "graphic: edge endpoint out of range");
  } else if (const auto* lin = std::get_if<LinearSpec>(&kind)) {
    if (static_cast<int>(lin->columns.size()) != n)
      fail(ErrorCode::kInvalidArgument,
           "linear: column count " + std::to_string(lin->columns.size()) +
               " != n " + std::to_string(n));
    if (!is_prime(lin->p) || lin->p > (1LL << 31))
      fail(ErrorCode::kInvalidArgument,
           "linear: p must be prime and <= 2^31, got " + std::to_string(lin->p));
    size_t dim = lin->columns.empty() ? 0 : lin->columns[0].size();
    for (const auto& col : lin->columns)
      if (col.size() != dim)
        fail(ErrorCode::kInvalidArgument, "linear: ragged column dimensions");
  }
}

Matroid build_matroid(const MatroidSpec& spec) {
  spec.validate();
  if (const auto* u = std::get_if<UniformSpec>(&spec.kind))
    return build_uniform(spec.n, *u);
  if (const auto* p = std::get_if<PartitionSpec>(&spec.kind))
    return build_partition(spec.n, *p);
  if (const auto* g = std::get_if<GraphicSpec>(&spec.kind))
    return build_graphic(spec.n, *g);
  return build_linear(spec.n, std::get<LinearSpec>(spec.kind));
}

Oracle build_oracle(const MatroidSpec& spec,
                    std::shared_ptr<QueryLedger> ledger) {
  Matroid m = build_matroid(spec);
  return Oracle(m.n, m.indep, m.rank, std::move(ledger));
}

}  // namespace matroidx
