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

#include "matroidx/instance.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace matroidx {
namespace {

using nlohmann::json;

json spec_to_json(const MatroidSpec& spec) {
  json out;
  if (const auto* u = std::get_if<UniformSpec>(&spec.kind)) {
    out["type"] = "uniform";
    out["k"] = u->k;
  } else if (const auto* part = std::get_if<PartitionSpec>(&spec.kind)) {
    out["type"] = "partition";
    out["parts"] = part->parts;
    out["capacities"] = part->capacities;
  } else if (const auto* g = std::get_if<GraphicSpec>(&spec.kind)) {
    out["type"] = "graphic";
    out["vertices"] = g->vertices;
    json edges = json::array();
    for (auto [u, v] : g->edges) edges.push_back(json::array({u, v}));
    out["edges"] = std::move(edges);
  } else {
    const auto& lin = std::get<LinearSpec>(spec.kind);
    out["type"] = "linear";
    out["p"] = lin.p;
    out["columns"] = lin.columns;
  }
  return out;
}

MatroidSpec spec_from_json(const json& in, int n, const char* field) {
  MatroidSpec spec;
  spec.n = n;
  const std::string type = in.at("type").get<std::string>();
  try {
    if (type == "uniform") {
      spec.kind = UniformSpec{in.at("k").get<int>()};
    } else if (type == "partition") {
      PartitionSpec part;
      part.parts = in.at("parts").get<std::vector<std::vector<int>>>();
      part.capacities = in.at("capacities").get<std::vector<int>>();
      spec.kind = std::move(part);
    } else if (type == "graphic") {
      GraphicSpec g;
      g.vertices = in.at("vertices").get<int>();
      for (const auto& e : in.at("edges"))
        g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      spec.kind = std::move(g);
    } else if (type == "linear") {
      LinearSpec lin;
      lin.p = in.at("p").get<long long>();
      lin.columns = in.at("columns").get<std::vector<std::vector<long long>>>();
      spec.kind = std::move(lin);
    } else {
      fail(ErrorCode::kParse,
           std::string(field) + ": unknown matroid type '" + type + "'");
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, std::string(field) + ": " + e.what());
  }
  return spec;
}

std::vector<std::vector<int>> random_partition(int n, int part_count,
                                               std::mt19937_64& rng) {
  std::vector<int> ids(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<std::vector<int>> parts(static_cast<size_t>(part_count));
  for (int i = 0; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, part_count - 1);
    parts[static_cast<size_t>(pick(rng))].push_back(ids[static_cast<size_t>(i)]);
  }
  // Every part must be nonempty only in the sense of covering [0,n); empty
  // parts are fine, but drop them to keep specs tidy.
  std::vector<std::vector<int>> out;
  for (auto& part : parts)
    if (!part.empty()) {
      std::sort(part.begin(), part.end());
      out.push_back(std::move(part));
    }
  if (out.empty()) out.push_back({});
  return out;
}

MatroidSpec random_partition_spec(int n, int part_count, int capacity,
                                  std::mt19937_64& rng) {
  if (part_count <= 0) part_count = std::max(1, n / 3);
  PartitionSpec part;
  part.parts = random_partition(n, part_count, rng);
  part.capacities.assign(part.parts.size(), capacity);
  MatroidSpec spec;
  spec.n = n;
  spec.kind = std::move(part);
  return spec;
}

InstanceFile gen_bipartite(const GenParams& params, std::mt19937_64& rng) {
  if (params.left <= 0 || params.right <= 0)
    fail(ErrorCode::kInvalidArgument, "bipartite: left/right must be positive");
  if (params.edge_prob < 0 && params.edges < 0)
    fail(ErrorCode::kInvalidArgument,
         "bipartite: one of edge_prob or edges is required");

  std::vector<std::pair<int, int>> edge_list;
  if (params.edges >= 0) {
    long long total = static_cast<long long>(params.left) * params.right;
    if (params.edges > total)
      fail(ErrorCode::kInvalidArgument, "bipartite: edges exceeds left*right");
    // Sample distinct pairs; dense requests fall back to a shuffle.
    if (params.edges * 3LL >= total) {
      std::vector<std::pair<int, int>> all;
      all.reserve(static_cast<size_t>(total));
      for (int l = 0; l < params.left; ++l)
        for (int r = 0; r < params.right; ++r) all.emplace_back(l, r);
      std::shuffle(all.begin(), all.end(), rng);
      edge_list.assign(all.begin(), all.begin() + params.edges);
    } else {
      std::vector<char> used(static_cast<size_t>(total), 0);
      std::uniform_int_distribution<int> pick_l(0, params.left - 1);
      std::uniform_int_distribution<int> pick_r(0, params.right - 1);
      while (static_cast<int>(edge_list.size()) < params.edges) {
        int l = pick_l(rng), r = pick_r(rng);
        size_t key = static_cast<size_t>(l) * static_cast<size_t>(params.right) +
                     static_cast<size_t>(r);
        if (used[key]) continue;
        used[key] = 1;
        edge_list.emplace_back(l, r);
      }
    }
    std::sort(edge_list.begin(), edge_list.end());
  } else {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int l = 0; l < params.left; ++l)
      for (int r = 0; r < params.right; ++r)
        if (coin(rng) <= params.edge_prob) edge_list.emplace_back(l, r);
  }

  int n = static_cast<int>(edge_list.size());
  PartitionSpec by_left, by_right;
  by_left.parts.resize(static_cast<size_t>(params.left));
  by_right.parts.resize(static_cast<size_t>(params.right));
  for (int i = 0; i < n; ++i) {
    by_left.parts[static_cast<size_t>(edge_list[static_cast<size_t>(i)].first)]
        .push_back(i);
    by_right.parts[static_cast<size_t>(edge_list[static_cast<size_t>(i)].second)]
        .push_back(i);
  }
  auto finalize = [n](PartitionSpec& spec) {
    spec.parts.erase(
        std::remove_if(spec.parts.begin(), spec.parts.end(),
                       [](const auto& part) { return part.empty(); }),
        spec.parts.end());
    if (spec.parts.empty() && n == 0) spec.parts.push_back({});
    spec.capacities.assign(spec.parts.size(), 1);
  };
  finalize(by_left);
  finalize(by_right);

  InstanceFile instance;
  instance.n = n;
  instance.matroid1.n = n;
  instance.matroid1.kind = std::move(by_left);
  instance.matroid2.n = n;
  instance.matroid2.kind = std::move(by_right);
  return instance;
}

InstanceFile gen_graphic_partition(const GenParams& params,
                                   std::mt19937_64& rng) {
  if (params.n <= 0 || params.vertices <= 1)
    fail(ErrorCode::kInvalidArgument,
         "graphic_partition: n and vertices must be positive");
  GraphicSpec g;
  g.vertices = params.vertices;
  std::uniform_int_distribution<int> pick(0, params.vertices - 1);
  for (int i = 0; i < params.n; ++i) {
    int u = pick(rng), v = pick(rng);
    while (v == u) v = pick(rng);  // no self-loops; keeps D1 nonempty early
    g.edges.emplace_back(u, v);
  }
  InstanceFile instance;
  instance.n = params.n;
  instance.matroid1.n = params.n;
  instance.matroid1.kind = std::move(g);
  instance.matroid2 =
      random_partition_spec(params.n, params.parts, params.capacity, rng);
  return instance;
}

InstanceFile gen_linear_partition(const GenParams& params,
                                  std::mt19937_64& rng) {
  if (params.n <= 0)
    fail(ErrorCode::kInvalidArgument, "linear_partition: n must be positive");
  LinearSpec lin;
  lin.p = params.p;
  int dim = params.dimension > 0 ? params.dimension
                                 : std::max(2, params.n / 3);
  std::uniform_int_distribution<long long> coeff(0, lin.p - 1);
  for (int i = 0; i < params.n; ++i) {
    std::vector<long long> col(static_cast<size_t>(dim));
    bool nonzero = false;
    for (auto& x : col) {
      x = coeff(rng);
      nonzero |= x != 0;
    }
    if (!nonzero) col[static_cast<size_t>(i % dim)] = 1;
    lin.columns.push_back(std::move(col));
  }
  InstanceFile instance;
  instance.n = params.n;
  instance.matroid1.n = params.n;
  instance.matroid1.kind = std::move(lin);
  instance.matroid2 =
      random_partition_spec(params.n, params.parts, params.capacity, rng);
  return instance;
}

InstanceFile gen_partition_partition(const GenParams& params,
                                     std::mt19937_64& rng) {
  if (params.n <= 0)
    fail(ErrorCode::kInvalidArgument,
         "partition_partition: n must be positive");
  InstanceFile instance;
  instance.n = params.n;
  instance.matroid1 =
      random_partition_spec(params.n, params.parts, params.capacity, rng);
  instance.matroid2 =
      random_partition_spec(params.n, params.parts, params.capacity, rng);
  return instance;
}

}  // namespace

void InstanceFile::validate() const {
  if (matroid1.n != n || matroid2.n != n)
    fail(ErrorCode::kInvalidArgument, "instance: matroid ground sizes differ");
  matroid1.validate();
  matroid2.validate();
}

InstanceFile parse_instance(const std::string& json_text) {
  json in;
  try {
    in = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, std::string("instance: ") + e.what());
  }
  InstanceFile instance;
  try {
    instance.n = in.at("n").get<int>();
    instance.matroid1 = spec_from_json(in.at("matroid1"), instance.n, "matroid1");
    instance.matroid2 = spec_from_json(in.at("matroid2"), instance.n, "matroid2");
    if (in.contains("known_optimum") && !in["known_optimum"].is_null())
      instance.known_optimum = in["known_optimum"].get<int>();
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, std::string("instance: ") + e.what());
  }
  instance.validate();
  return instance;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string instance_to_json(const InstanceFile& instance) {
  json out;
  out["n"] = instance.n;
  out["matroid1"] = spec_to_json(instance.matroid1);
  out["matroid2"] = spec_to_json(instance.matroid2);
  if (instance.known_optimum) out["known_optimum"] = *instance.known_optimum;
  return out.dump(2) + "\n";
}

void save_instance(const InstanceFile& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path);
  out << instance_to_json(instance);
}

int brute_force_max_common(const Matroid& m1, const Matroid& m2) {
  int n = m1.n;
  if (n > 20)
    fail(ErrorCode::kBudget,
         "brute force refused: n = " + std::to_string(n) + " > 20");
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits <= best) continue;
    std::vector<int> ids;
    ids.reserve(static_cast<size_t>(bits));
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) ids.push_back(i);
    ElementSet s = ElementSet::from_sorted(std::move(ids));
    if (m1.indep(s) && m2.indep(s)) best = bits;
  }
  return best;
}

InstanceFile gen_random_instance(const std::string& family,
                                 const GenParams& params,
                                 unsigned long long seed) {
  std::mt19937_64 rng(seed);
  InstanceFile instance;
  if (family == "bipartite") {
    instance = gen_bipartite(params, rng);
  } else if (family == "graphic_partition") {
    instance = gen_graphic_partition(params, rng);
  } else if (family == "linear_partition") {
    instance = gen_linear_partition(params, rng);
  } else if (family == "partition_partition") {
    instance = gen_partition_partition(params, rng);
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown family '" + family + "'");
  }
  instance.validate();
  if (params.fill_known_optimum && instance.n <= 16)
    instance.known_optimum = brute_force_max_common(
        build_matroid(instance.matroid1), build_matroid(instance.matroid2));
  return instance;
}

InstanceFile path3_instance() {
  InstanceFile instance;
  instance.n = 3;
  instance.matroid1.n = 3;
  instance.matroid1.kind = PartitionSpec{{{0, 1}, {2}}, {1, 1}};
  instance.matroid2.n = 3;
  instance.matroid2.kind = PartitionSpec{{{0}, {1, 2}}, {1, 1}};
  instance.known_optimum = 2;
  return instance;
}

InstanceFile cross4_instance() {
  InstanceFile instance;
  instance.n = 4;
  instance.matroid1.n = 4;
  instance.matroid1.kind = PartitionSpec{{{0, 1}, {2, 3}}, {1, 1}};
  instance.matroid2.n = 4;
  instance.matroid2.kind = PartitionSpec{{{0, 2}, {1, 3}}, {1, 1}};
  instance.known_optimum = 2;
  return instance;
}

}  // namespace matroidx
