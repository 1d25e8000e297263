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

// Command-line front end over the matroidx C API: solve, bench, stream,
// verify, and gen subcommands. All output is byte-stable for fixed inputs
// and seeds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matroidx.h"

namespace {

struct InstanceDeleter {
  void operator()(mx_instance* p) const { mx_instance_free(p); }
};
struct ResultDeleter {
  void operator()(mx_result* p) const { mx_result_free(p); }
};
using InstancePtr = std::unique_ptr<mx_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<mx_result, ResultDeleter>;

[[noreturn]] void die(mx_status status, const std::string& context) {
  std::cerr << "error: " << context << ": " << mx_status_message(status)
            << " (" << mx_last_error() << ")\n";
  std::exit(1);
}

void check(mx_status status, const std::string& context) {
  if (status != MX_OK) die(status, context);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  mx_string_free(s);
  return out;
}

InstancePtr load(const std::string& path) {
  mx_instance* raw = nullptr;
  check(mx_instance_load(path.c_str(), &raw), "loading " + path);
  return InstancePtr(raw);
}

nlohmann::json result_report(const mx_result* res) {
  char* json = nullptr;
  check(mx_result_report_json(res, &json), "reading result report");
  return nlohmann::json::parse(take_string(json));
}

// seed string: "ascending" or a decimal seed.
void parse_order(const std::string& order, uint64_t* seed, int* use_seed) {
  if (order == "ascending") {
    *seed = 0;
    *use_seed = 0;
    return;
  }
  try {
    size_t pos = 0;
    *seed = std::stoull(order, &pos);
    if (pos != order.size()) throw std::invalid_argument(order);
  } catch (const std::exception&) {
    std::cerr << "error: --order must be \"ascending\" or a decimal seed, got "
              << order << "\n";
    std::exit(2);
  }
  *use_seed = 1;
}

// Smallest integer >= (2/3 - eps) * r, computed away from float edges.
int approx_floor_bound(double eps, int r) {
  double t = (2.0 / 3.0 - eps) * r;
  int k = static_cast<int>(std::ceil(t - 1e-9));
  return std::max(k, 0);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Known optimum when declared, otherwise the exact baseline for feasible
// sizes; -1 when unavailable.
int optimum_of(const mx_instance* inst, int baseline_limit) {
  int known = mx_instance_known_optimum(inst);
  if (known >= 0) return known;
  if (mx_instance_ground_size(inst) > baseline_limit) return -1;
  int r = 0;
  check(mx_exact_optimum(inst, &r), "exact baseline");
  return r;
}

std::string format_ratio(int size, int r) {
  if (r < 0) return "";
  double ratio = r == 0 ? 1.0 : static_cast<double>(size) / r;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", ratio);
  return buf;
}

std::string format_eps(double eps) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", eps);
  return buf;
}

bool env_strict() {
  const char* v = std::getenv("MATROIDX_STRICT");
  return v && std::string(v) == "1";
}

constexpr const char* kCsvHeader =
    "instance,n,r,eps,mode,size,ratio,ind_q,rank_q,passes\n";

std::string csv_row(const std::string& instance, int n, int r, double eps,
                    const std::string& mode, int size, long long ind_q,
                    long long rank_q, long long passes) {
  std::ostringstream row;
  row << instance << ',' << n << ',' << (r >= 0 ? std::to_string(r) : "")
      << ',' << format_eps(eps) << ',' << mode << ',' << size << ','
      << format_ratio(size, r) << ',' << ind_q << ',' << rank_q << ','
      << passes << '\n';
  return row.str();
}

int cmd_solve(const std::string& path, double eps, const std::string& mode,
              const std::string& order) {
  uint64_t seed = 0;
  int use_seed = 0;
  parse_order(order, &seed, &use_seed);
  InstancePtr inst = load(path);

  mx_result* raw = nullptr;
  check(mx_solve(inst.get(), eps, mode == "rank" ? 1 : 0, seed, use_seed,
                 &raw),
        "solving " + path);
  ResultPtr res(raw);

  nlohmann::json report = result_report(res.get());
  report["instance"] = path;
  report["size"] = mx_result_size(res.get());
  int r = optimum_of(inst.get(), 2000);
  if (r >= 0) {
    report["exact_optimum"] = r;
    report["ratio"] =
        r == 0 ? 1.0 : static_cast<double>(mx_result_size(res.get())) / r;
  }
  std::cout << report.dump() << "\n";
  return 0;
}

int cmd_stream(const std::string& path, double eps, const std::string& order,
               bool strict_paper, const std::string& report_format) {
  uint64_t seed = 0;
  int use_seed = 0;
  parse_order(order, &seed, &use_seed);
  InstancePtr inst = load(path);

  mx_result* raw = nullptr;
  check(mx_stream_solve(inst.get(), eps, seed, use_seed, env_strict() ? 1 : 0,
                        strict_paper ? 1 : 0, &raw),
        "streaming " + path);
  ResultPtr res(raw);

  nlohmann::json report = result_report(res.get());
  int size = mx_result_size(res.get());
  int r = optimum_of(inst.get(), 2000);

  if (report_format == "csv") {
    std::cout << kCsvHeader
              << csv_row(path, mx_instance_ground_size(inst.get()), r, eps,
                         "stream", size,
                         report["independence_queries"].get<long long>(),
                         report["rank_queries"].get<long long>(),
                         report["passes"].get<long long>());
    return 0;
  }
  report["instance"] = path;
  report["size"] = size;
  if (r >= 0) {
    report["exact_optimum"] = r;
    report["ratio"] = r == 0 ? 1.0 : static_cast<double>(size) / r;
  }
  std::cout << report.dump() << "\n";
  return 0;
}

int cmd_bench(const std::string& family, const std::vector<int>& sizes,
              const std::vector<double>& eps_grid,
              const std::vector<uint64_t>& seeds, const std::string& mode,
              const std::string& out_path) {
  std::vector<std::string> modes;
  if (mode == "both")
    modes = {"independence", "rank"};
  else
    modes = {mode};

  std::ostringstream out;
  out << kCsvHeader;
  for (int n : sizes) {
    for (uint64_t seed : seeds) {
      nlohmann::json params;
      if (family == "bipartite") {
        params["left"] = std::max(1, n / 8);
        params["right"] = std::max(1, n / 8);
        params["edges"] = n;
      } else {
        params["n"] = n;
      }
      mx_instance* raw_inst = nullptr;
      check(mx_instance_generate(family.c_str(), params.dump().c_str(), seed,
                                 &raw_inst),
            "generating " + family + " instance");
      InstancePtr inst(raw_inst);
      int r = optimum_of(inst.get(), 2000);
      std::string name =
          family + "-n" + std::to_string(n) + "-s" + std::to_string(seed);

      for (double eps : eps_grid) {
        for (const std::string& m : modes) {
          mx_result* raw = nullptr;
          check(mx_solve(inst.get(), eps, m == "rank" ? 1 : 0, 0, 0, &raw),
                "solving " + name);
          ResultPtr res(raw);
          nlohmann::json report = result_report(res.get());
          out << csv_row(name, n, r, eps, m, mx_result_size(res.get()),
                         report["independence_queries"].get<long long>(),
                         report["rank_queries"].get<long long>(), 0);
        }
      }
    }
  }

  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    f << out.str();
  }
  return 0;
}

int cmd_verify(const std::string& dir, double eps) {
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  }
  if (ec) {
    std::cerr << "error: cannot read corpus directory " << dir << "\n";
    return 2;
  }
  if (files.empty()) {
    std::cerr << "error: corpus directory " << dir
              << " contains no .json instances\n";
    return 2;
  }
  std::sort(files.begin(), files.end());

  int failures = 0;
  auto report_failure = [&](const std::string& path, const std::string& what,
                            const mx_instance* inst) {
    ++failures;
    std::cerr << "FAIL " << path << ": " << what << "\n";
    char* json = nullptr;
    if (mx_instance_to_json(inst, &json) == MX_OK)
      std::cerr << take_string(json);
  };

  for (const std::string& path : files) {
    InstancePtr inst = load(path);
    int n = mx_instance_ground_size(inst.get());
    if (n > 16) {
      std::cerr << "error: verify expects instances with n <= 16, " << path
                << " has n = " << n << "\n";
      return 2;
    }

    int r_brute = 0, r_exact = 0;
    check(mx_brute_force_optimum(inst.get(), &r_brute), "brute force " + path);
    check(mx_exact_optimum(inst.get(), &r_exact), "exact baseline " + path);
    if (r_brute != r_exact) {
      report_failure(path,
                     "exact baseline " + std::to_string(r_exact) +
                         " != brute force " + std::to_string(r_brute),
                     inst.get());
      continue;
    }
    int known = mx_instance_known_optimum(inst.get());
    if (known >= 0 && known != r_brute) {
      report_failure(path,
                     "known_optimum " + std::to_string(known) +
                         " != brute force " + std::to_string(r_brute),
                     inst.get());
      continue;
    }

    mx_result* raw = nullptr;
    check(mx_greedy(inst.get(), 0, 0, &raw), "greedy " + path);
    ResultPtr greedy(raw);
    if (mx_result_size(greedy.get()) < ceil_div(r_brute, 2)) {
      report_failure(path,
                     "greedy size " +
                         std::to_string(mx_result_size(greedy.get())) +
                         " below ceil(r/2) with r = " +
                         std::to_string(r_brute),
                     inst.get());
      continue;
    }

    const int bound = approx_floor_bound(eps, r_brute);
    bool bad = false;
    for (int rank_mode : {0, 1}) {
      raw = nullptr;
      check(mx_solve(inst.get(), eps, rank_mode, 0, 0, &raw), "solve " + path);
      ResultPtr res(raw);
      if (mx_result_size(res.get()) < bound) {
        report_failure(path,
                       std::string(rank_mode ? "rank" : "independence") +
                           "-mode size " +
                           std::to_string(mx_result_size(res.get())) +
                           " below (2/3-eps)r bound " + std::to_string(bound),
                       inst.get());
        bad = true;
        break;
      }
    }
    if (bad) continue;

    raw = nullptr;
    check(mx_stream_solve(inst.get(), eps, 0, 0, 1, 0, &raw),
          "stream " + path);
    ResultPtr stream(raw);
    nlohmann::json report = result_report(stream.get());
    long long passes = report["passes"].get<long long>();
    long long pass_budget =
        6 + 10 * static_cast<long long>(std::ceil(1.0 / eps));
    if (mx_result_size(stream.get()) < bound) {
      report_failure(path,
                     "stream size " +
                         std::to_string(mx_result_size(stream.get())) +
                         " below (2/3-eps)r bound " + std::to_string(bound),
                     inst.get());
      continue;
    }
    if (passes > pass_budget) {
      report_failure(path,
                     "stream passes " + std::to_string(passes) +
                         " above budget " + std::to_string(pass_budget),
                     inst.get());
      continue;
    }
  }

  if (failures > 0) {
    std::cerr << failures << " of " << files.size() << " instances failed\n";
    return 1;
  }
  std::cout << "verified " << files.size() << " instances: all pass\n";
  return 0;
}

int cmd_gen(const std::string& family, uint64_t seed,
            const nlohmann::json& params, const std::string& out_path) {
  mx_instance* raw = nullptr;
  check(mx_instance_generate(family.c_str(), params.dump().c_str(), seed,
                             &raw),
        "generating " + family + " instance");
  InstancePtr inst(raw);
  char* json = nullptr;
  check(mx_instance_to_json(inst.get(), &json), "serializing instance");
  std::string text = take_string(json);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    f << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "matroidx: (2/3-eps)-approximate matroid intersection in the "
      "independence, rank, and semi-streaming oracle models"};
  app.require_subcommand(1);

  std::string instance_path, mode = "independence", order = "ascending";
  double eps = 0.1;

  CLI::App* solve = app.add_subcommand(
      "solve", "Approximate one instance and print a JSON report");
  solve->add_option("--instance", instance_path, "instance file")->required();
  solve->add_option("--eps", eps, "epsilon in (0,1)");
  solve->add_option("--mode", mode, "oracle mode")
      ->check(CLI::IsMember({"independence", "rank"}));
  solve->add_option("--order", order, "scan order: ascending or a seed");

  std::string report_format = "json";
  bool strict_paper = false;
  CLI::App* stream = app.add_subcommand(
      "stream", "Semi-streaming run; MATROIDX_STRICT=1 makes access "
                "violations fatal");
  stream->add_option("--instance", instance_path, "instance file")
      ->required();
  stream->add_option("--eps", eps, "epsilon in (0,1)");
  stream->add_option("--order", order, "stream order: ascending or a seed");
  stream->add_flag("--strict-paper-passes", strict_paper,
                   "charge the full 2-pass schedule for every refine step");
  stream->add_option("--report", report_format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string family = "bipartite", out_path;
  std::vector<int> sizes;
  std::vector<double> eps_grid;
  std::vector<uint64_t> seeds{1};
  std::string bench_mode = "independence";
  CLI::App* bench = app.add_subcommand(
      "bench", "Generate instances and emit one CSV row per (instance, eps, "
               "mode); columns: instance,n,r,eps,mode,size,ratio,ind_q,"
               "rank_q,passes");
  bench->add_option("--family", family,
                    "bipartite, graphic_partition, linear_partition, or "
                    "partition_partition");
  bench->add_option("--sizes", sizes, "ground-set sizes")->required();
  bench->add_option("--eps", eps_grid, "epsilon grid")->required();
  bench->add_option("--seeds", seeds, "generator seeds");
  bench->add_option("--mode", bench_mode, "oracle mode")
      ->check(CLI::IsMember({"independence", "rank", "both"}));
  bench->add_option("--out", out_path, "output file (default stdout)");

  std::string corpus_dir;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check every instance in a corpus directory (n <= 16) "
                "against brute force, the exact baseline, and all solver "
                "modes");
  verify->add_option("dir", corpus_dir, "corpus directory")->required();
  verify->add_option("--eps", eps, "epsilon for the approximation bounds");

  uint64_t gen_seed = 1;
  int g_left = 0, g_right = 0, g_edges = -1, g_n = 0, g_vertices = 0,
      g_parts = 0, g_capacity = 1, g_dimension = 0;
  long long g_p = 2;
  double g_edge_prob = -1.0;
  bool g_fill = false;
  CLI::App* gen =
      app.add_subcommand("gen", "Generate a random instance as JSON");
  gen->add_option("--family", family,
                  "bipartite, graphic_partition, linear_partition, or "
                  "partition_partition");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--left", g_left, "bipartite: left vertices");
  gen->add_option("--right", g_right, "bipartite: right vertices");
  gen->add_option("--edges", g_edges, "bipartite: exact edge count");
  gen->add_option("--edge-prob", g_edge_prob, "bipartite: edge probability");
  gen->add_option("--n", g_n, "ground-set size");
  gen->add_option("--vertices", g_vertices, "graphic: vertex count");
  gen->add_option("--parts", g_parts, "partition side: part count");
  gen->add_option("--capacity", g_capacity, "partition side: capacity");
  gen->add_option("--dimension", g_dimension, "linear: column dimension");
  gen->add_option("--p", g_p, "linear: field modulus");
  gen->add_flag("--fill-known-optimum", g_fill,
                "record the brute-force optimum (n <= 16)");
  gen->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) return cmd_solve(instance_path, eps, mode, order);
  if (stream->parsed())
    return cmd_stream(instance_path, eps, order, strict_paper, report_format);
  if (bench->parsed()) {
    if (sizes.empty() || eps_grid.empty() || seeds.empty()) {
      std::cerr << "error: bench grids must be nonempty\n";
      return 2;
    }
    return cmd_bench(family, sizes, eps_grid, seeds, bench_mode, out_path);
  }
  if (verify->parsed()) return cmd_verify(corpus_dir, eps);
  if (gen->parsed()) {
    nlohmann::json params;
    params["left"] = g_left;
    params["right"] = g_right;
    params["edges"] = g_edges;
    params["edge_prob"] = g_edge_prob;
    params["n"] = g_n;
    params["vertices"] = g_vertices;
    params["parts"] = g_parts;
    params["capacity"] = g_capacity;
    params["dimension"] = g_dimension;
    params["p"] = g_p;
    params["fill_known_optimum"] = g_fill;
    return cmd_gen(family, gen_seed, params, out_path);
  }
  return 2;
}
