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

#ifndef MATROIDX_ORACLE_HPP
#define MATROIDX_ORACLE_HPP

#include <functional>
#include <memory>
#include <vector>

#include "matroidx/element_set.hpp"
#include "matroidx/errors.hpp"

namespace matroidx {

/// Counts every oracle call issued against a matroid during one run.
struct QueryLedger {
  long long independence_queries = 0;
  long long rank_queries = 0;

  void reset() {
    independence_queries = 0;
    rank_queries = 0;
  }
};

using IndepFn = std::function<bool(const ElementSet&)>;
using RankFn = std::function<int(const ElementSet&)>;

// Installed by a streaming session to enforce the access rule on every query.
using QueryGuard = std::function<void(const ElementSet&)>;

/// Query access to one matroid. Both the independence and the rank oracle are
/// available; the algorithms pick one through `Mode` and every call is charged
/// to the ledger.
class Oracle {
 public:
  Oracle(int ground_size, IndepFn indep, RankFn rank,
         std::shared_ptr<QueryLedger> ledger)
      : n_(ground_size),
        indep_(std::move(indep)),
        rank_(std::move(rank)),
        ledger_(std::move(ledger)) {}

  int ground_size() const { return n_; }
  QueryLedger& ledger() const { return *ledger_; }
  std::shared_ptr<QueryLedger> ledger_ptr() const { return ledger_; }

  bool query_independent(const ElementSet& s) const {
    check_range(s);
    if (guard_) guard_(s);
    ++ledger_->independence_queries;
    return indep_(s);
  }

  int query_rank(const ElementSet& s) const {
    check_range(s);
    if (guard_) guard_(s);
    ++ledger_->rank_queries;
    return rank_(s);
  }

  // Uncounted access, reserved for test oracles and debug assertions.
  bool raw_independent(const ElementSet& s) const { return indep_(s); }
  int raw_rank(const ElementSet& s) const { return rank_(s); }

  void set_query_guard(QueryGuard guard) { guard_ = std::move(guard); }
  void clear_query_guard() { guard_ = nullptr; }

 private:
  void check_range(const ElementSet& s) const {
    if (s.max_id() >= n_)
      fail(ErrorCode::kInstanceMismatch,
           "element id " + std::to_string(s.max_id()) +
               " outside ground set of size " + std::to_string(n_));
  }

  int n_;
  IndepFn indep_;
  RankFn rank_;
  std::shared_ptr<QueryLedger> ledger_;
  QueryGuard guard_;
};

enum class Mode { kIndependence, kRank };

/// One matroid plus the oracle model the current run is charged in. In rank
/// mode an independence test costs one rank query.
struct MatroidView {
  const Oracle* oracle = nullptr;
  Mode mode = Mode::kIndependence;

  bool is_independent(const ElementSet& s) const {
    if (mode == Mode::kRank) return oracle->query_rank(s) == s.size();
    return oracle->query_independent(s);
  }

  int rank(const ElementSet& s) const { return oracle->query_rank(s); }
};

/// Greedy scan in the given order; keeps an element whenever both matroids
/// stay independent. Uses at most 2n queries.
ElementSet greedy_maximal(const MatroidView& m1, const MatroidView& m2,
                          const std::vector<int>& order);

/// Identity permutation [0, n).
std::vector<int> ascending_order(int n);

/// Seed-permuted order of [0, n); deterministic for a fixed seed.
std::vector<int> seeded_order(int n, unsigned long long seed);

}  // namespace matroidx

#endif  // MATROIDX_ORACLE_HPP
