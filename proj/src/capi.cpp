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

#include "matroidx.h"

#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "matroidx/approx.hpp"
#include "matroidx/instance.hpp"
#include "matroidx/streaming.hpp"

struct mx_instance {
  matroidx::InstanceFile file;
};

struct mx_result {
  matroidx::ElementSet set;
  std::string report_json;
};

namespace {

thread_local std::string g_last_error;

mx_status status_of(matroidx::ErrorCode code) {
  using matroidx::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return MX_INVALID_ARGUMENT;
    case ErrorCode::kInstanceMismatch: return MX_INSTANCE_MISMATCH;
    case ErrorCode::kParse: return MX_PARSE_ERROR;
    case ErrorCode::kBudget: return MX_BUDGET_EXCEEDED;
    case ErrorCode::kContract: return MX_CONTRACT_VIOLATION;
    case ErrorCode::kStateCorruption: return MX_STATE_CORRUPTION;
    case ErrorCode::kExtractionFailure: return MX_EXTRACTION_FAILURE;
    case ErrorCode::kAlgorithmBug: return MX_ALGORITHM_BUG;
    case ErrorCode::kProtocol: return MX_PROTOCOL_ERROR;
    case ErrorCode::kStreamingViolation: return MX_STREAMING_VIOLATION;
    case ErrorCode::kIo: return MX_IO_ERROR;
  }
  return MX_INTERNAL_ERROR;
}

template <typename Fn>
mx_status guarded(Fn&& fn) {
  try {
    fn();
    return MX_OK;
  } catch (const matroidx::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MX_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return MX_INTERNAL_ERROR;
  }
}

mx_status require(bool ok, const char* message) {
  if (ok) return MX_OK;
  g_last_error = message;
  return MX_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<int> pick_order(int n, uint64_t seed, int use_seed) {
  return use_seed ? matroidx::seeded_order(n, seed)
                  : matroidx::ascending_order(n);
}

struct BuiltOracles {
  std::shared_ptr<matroidx::QueryLedger> ledger1;
  std::shared_ptr<matroidx::QueryLedger> ledger2;
  std::unique_ptr<matroidx::Oracle> o1;
  std::unique_ptr<matroidx::Oracle> o2;
};

BuiltOracles build_oracles(const matroidx::InstanceFile& file) {
  BuiltOracles b;
  b.ledger1 = std::make_shared<matroidx::QueryLedger>();
  b.ledger2 = std::make_shared<matroidx::QueryLedger>();
  b.o1 = std::make_unique<matroidx::Oracle>(
      matroidx::build_oracle(file.matroid1, b.ledger1));
  b.o2 = std::make_unique<matroidx::Oracle>(
      matroidx::build_oracle(file.matroid2, b.ledger2));
  return b;
}

}  // namespace

extern "C" {

const char* mx_status_message(mx_status status) {
  switch (status) {
    case MX_OK: return "ok";
    case MX_INVALID_ARGUMENT: return "invalid argument";
    case MX_INSTANCE_MISMATCH: return "instance mismatch";
    case MX_PARSE_ERROR: return "parse error";
    case MX_BUDGET_EXCEEDED: return "budget exceeded";
    case MX_CONTRACT_VIOLATION: return "contract violation";
    case MX_STATE_CORRUPTION: return "state corruption";
    case MX_EXTRACTION_FAILURE: return "extraction failure";
    case MX_ALGORITHM_BUG: return "algorithm bug";
    case MX_PROTOCOL_ERROR: return "protocol error";
    case MX_STREAMING_VIOLATION: return "streaming access violation";
    case MX_IO_ERROR: return "io error";
    case MX_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* mx_last_error(void) { return g_last_error.c_str(); }

void mx_string_free(char* s) { delete[] s; }

mx_status mx_instance_parse(const char* json_text, mx_instance** out) {
  if (mx_status s = require(json_text && out, "null argument"); s != MX_OK)
    return s;
  return guarded([&] {
    auto inst = std::make_unique<mx_instance>();
    inst->file = matroidx::parse_instance(json_text);
    *out = inst.release();
  });
}

mx_status mx_instance_load(const char* path, mx_instance** out) {
  if (mx_status s = require(path && out, "null argument"); s != MX_OK)
    return s;
  return guarded([&] {
    auto inst = std::make_unique<mx_instance>();
    inst->file = matroidx::load_instance(path);
    *out = inst.release();
  });
}

mx_status mx_instance_generate(const char* family, const char* params_json,
                               uint64_t seed, mx_instance** out) {
  if (mx_status s = require(family && out, "null argument"); s != MX_OK)
    return s;
  return guarded([&] {
    matroidx::GenParams params;
    if (params_json && *params_json) {
      nlohmann::json j = nlohmann::json::parse(params_json, nullptr, false);
      if (j.is_discarded() || !j.is_object())
        matroidx::fail(matroidx::ErrorCode::kParse,
                       "generator parameters must be a JSON object");
      params.left = j.value("left", params.left);
      params.right = j.value("right", params.right);
      params.edge_prob = j.value("edge_prob", params.edge_prob);
      params.edges = j.value("edges", params.edges);
      params.n = j.value("n", params.n);
      params.vertices = j.value("vertices", params.vertices);
      params.parts = j.value("parts", params.parts);
      params.capacity = j.value("capacity", params.capacity);
      params.dimension = j.value("dimension", params.dimension);
      params.p = j.value("p", params.p);
      params.fill_known_optimum =
          j.value("fill_known_optimum", params.fill_known_optimum);
    }
    auto inst = std::make_unique<mx_instance>();
    inst->file = matroidx::gen_random_instance(family, params, seed);
    *out = inst.release();
  });
}

mx_status mx_instance_to_json(const mx_instance* inst, char** out_json) {
  if (mx_status s = require(inst && out_json, "null argument"); s != MX_OK)
    return s;
  return guarded(
      [&] { *out_json = copy_string(matroidx::instance_to_json(inst->file)); });
}

int mx_instance_ground_size(const mx_instance* inst) {
  return inst ? inst->file.n : -1;
}

int mx_instance_known_optimum(const mx_instance* inst) {
  if (!inst || !inst->file.known_optimum) return -1;
  return *inst->file.known_optimum;
}

void mx_instance_free(mx_instance* inst) { delete inst; }

mx_status mx_brute_force_optimum(const mx_instance* inst, int* out_size) {
  if (mx_status s = require(inst && out_size, "null argument"); s != MX_OK)
    return s;
  return guarded([&] {
    matroidx::Matroid m1 = matroidx::build_matroid(inst->file.matroid1);
    matroidx::Matroid m2 = matroidx::build_matroid(inst->file.matroid2);
    *out_size = matroidx::brute_force_max_common(m1, m2);
  });
}

mx_status mx_exact_optimum(const mx_instance* inst, int* out_size) {
  if (mx_status s = require(inst && out_size, "null argument"); s != MX_OK)
    return s;
  return guarded([&] {
    matroidx::Matroid m1 = matroidx::build_matroid(inst->file.matroid1);
    matroidx::Matroid m2 = matroidx::build_matroid(inst->file.matroid2);
    *out_size = matroidx::exact_baseline(m1, m2).size();
  });
}

mx_status mx_greedy(const mx_instance* inst, uint64_t order_seed, int use_seed,
                    mx_result** out) {
  if (mx_status s = require(inst && out, "null argument"); s != MX_OK)
    return s;
  return guarded([&] {
    BuiltOracles b = build_oracles(inst->file);
    matroidx::MatroidView v1{b.o1.get(), matroidx::Mode::kIndependence};
    matroidx::MatroidView v2{b.o2.get(), matroidx::Mode::kIndependence};
    matroidx::ElementSet s = matroidx::greedy_maximal(
        v1, v2, pick_order(inst->file.n, order_seed, use_seed));
    nlohmann::json report;
    report["result_size"] = s.size();
    report["independence_queries"] =
        b.ledger1->independence_queries + b.ledger2->independence_queries;
    report["rank_queries"] = b.ledger1->rank_queries + b.ledger2->rank_queries;
    auto res = std::make_unique<mx_result>();
    res->set = std::move(s);
    res->report_json = report.dump();
    *out = res.release();
  });
}

mx_status mx_solve(const mx_instance* inst, double epsilon, int rank_mode,
                   uint64_t order_seed, int use_seed, mx_result** out) {
  if (mx_status s = require(inst && out, "null argument"); s != MX_OK)
    return s;
  return guarded([&] {
    BuiltOracles b = build_oracles(inst->file);
    matroidx::Mode mode = rank_mode ? matroidx::Mode::kRank
                                    : matroidx::Mode::kIndependence;
    matroidx::ApproxResult r = matroidx::two_thirds_approx(
        *b.o1, *b.o2, epsilon, mode,
        pick_order(inst->file.n, order_seed, use_seed));
    auto res = std::make_unique<mx_result>();
    res->set = std::move(r.set);
    res->report_json = r.report.to_json();
    *out = res.release();
  });
}

mx_status mx_stream_solve(const mx_instance* inst, double epsilon,
                          uint64_t order_seed, int use_seed, int strict,
                          int strict_paper_passes, mx_result** out) {
  if (mx_status s = require(inst && out, "null argument"); s != MX_OK)
    return s;
  return guarded([&] {
    BuiltOracles b = build_oracles(inst->file);
    matroidx::StreamOptions options;
    options.epsilon = epsilon;
    options.order = pick_order(inst->file.n, order_seed, use_seed);
    options.strict = strict != 0;
    options.strict_paper_passes = strict_paper_passes != 0;
    matroidx::StreamResult r =
        matroidx::streaming_two_thirds(*b.o1, *b.o2, options);
    auto res = std::make_unique<mx_result>();
    res->set = std::move(r.set);
    res->report_json = r.report.to_json();
    *out = res.release();
  });
}

int mx_result_size(const mx_result* res) { return res ? res->set.size() : -1; }

mx_status mx_result_members(const mx_result* res, int* buffer, int buffer_len,
                            int* out_len) {
  if (mx_status s = require(res && (buffer || buffer_len == 0),
                            "null argument");
      s != MX_OK)
    return s;
  if (mx_status s = require(buffer_len >= res->set.size(),
                            "buffer too small for result members");
      s != MX_OK)
    return s;
  const std::vector<int>& ids = res->set.ids();
  for (size_t i = 0; i < ids.size(); ++i) buffer[i] = ids[i];
  if (out_len) *out_len = res->set.size();
  return MX_OK;
}

mx_status mx_result_report_json(const mx_result* res, char** out_json) {
  if (mx_status s = require(res && out_json, "null argument"); s != MX_OK)
    return s;
  return guarded([&] { *out_json = copy_string(res->report_json); });
}

void mx_result_free(mx_result* res) { delete res; }

}  // extern "C"
