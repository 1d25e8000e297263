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

#include "matroidx/approx.hpp"

#include <json.hpp>

namespace matroidx {

std::string RunReport::to_json() const {
  nlohmann::json out;
  out["result_size"] = result_size;
  out["epsilon"] = epsilon;
  out["r_bar"] = r_bar;
  out["mode"] = mode == Mode::kRank ? "rank" : "independence";
  out["independence_queries"] = independence_queries;
  out["rank_queries"] = rank_queries;
  out["refine_calls"] = refine_calls;
  out["branch"] = branch;
  if (exact_optimum) out["exact_optimum"] = *exact_optimum;
  return out.dump();
}

ApproxResult two_thirds_approx(const Oracle& m1, const Oracle& m2, double eps,
                               Mode mode, const std::vector<int>& order) {
  if (!(eps > 0.0 && eps < 1.0))
    fail(ErrorCode::kInvalidArgument,
         "epsilon must lie in (0,1), got " + std::to_string(eps));
  if (static_cast<int>(order.size()) != m1.ground_size())
    fail(ErrorCode::kInvalidArgument,
         "scan order must be a permutation of the ground set");

  m1.ledger().reset();
  m2.ledger().reset();

  const MatroidView v1{&m1, mode};
  const MatroidView v2{&m2, mode};

  ApproxResult out;
  out.report.epsilon = eps;
  out.report.mode = mode;

  ElementSet s = greedy_maximal(v1, v2, order);
  const int r_bar = s.size();
  out.report.r_bar = r_bar;

  auto finish = [&](ElementSet result, const char* branch, int refine_calls) {
    out.set = std::move(result);
    out.report.result_size = out.set.size();
    out.report.branch = branch;
    out.report.refine_calls = refine_calls;
    out.report.independence_queries =
        m1.ledger().independence_queries + m2.ledger().independence_queries;
    out.report.rank_queries =
        m1.ledger().rank_queries + m2.ledger().rank_queries;
    return out;
  };

  if (r_bar == 0) return finish(std::move(s), "empty", 0);

  DistanceLayers layers = mode == Mode::kRank
                              ? get_distance_layers_rank(m1, m2, s)
                              : get_distance_layers(v1, v2, s);

  // S is maximal, so there is no length-2 path; if no length-4 path exists
  // either, S is already a 2/3-approximation.
  if (dist_exceeds_four(v2, s, layers))
    return finish(std::move(s), "distance>4", 0);

  LayerState state = init_layer_state(layers);
  RefineResult refined = refine_until_gap(state, eps * r_bar, v1, v2, s);
  AugmentingSet pi = extract_augmenting_set(s, refined.phi, v1, v2);
  ElementSet augmented = apply_augmenting(s, pi);
  return finish(std::move(augmented), "augment", refined.refine_calls);
}

ApproxResult two_thirds_approx(const Oracle& m1, const Oracle& m2, double eps,
                               Mode mode) {
  return two_thirds_approx(m1, m2, eps, mode,
                           ascending_order(m1.ground_size()));
}

}  // namespace matroidx
