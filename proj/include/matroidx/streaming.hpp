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

#ifndef MATROIDX_STREAMING_HPP
#define MATROIDX_STREAMING_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "matroidx/augset.hpp"
#include "matroidx/oracle.hpp"

namespace matroidx {

/// Pass-metered element arrival with access-rule enforcement: while a session
/// is attached, every oracle query may touch only stored elements plus the
/// element currently arriving. Violations are counted; in strict mode they
/// throw.
class StreamSession {
 public:
  StreamSession(int n, std::vector<int> order, bool strict);
  ~StreamSession();

  StreamSession(const StreamSession&) = delete;
  StreamSession& operator=(const StreamSession&) = delete;

  void attach(Oracle& m1, Oracle& m2);
  void detach();

  void run_pass(const std::function<void(int element)>& visitor);
  void charge_pass(int count = 1);  // accounting-only (strict paper mode)

  // Marks elements as stored: queries about them are allowed from now on.
  void allow(int element);
  void allow_set(const ElementSet& s);

  void note_memory(long long items);

  int pass_count() const { return pass_count_; }
  long long violations() const { return violations_; }
  long long peak_memory_items() const { return peak_memory_items_; }
  const std::vector<int>& order() const { return order_; }
  bool strict() const { return strict_; }

 private:
  void check_query(const ElementSet& s);

  int n_;
  std::vector<int> order_;
  bool strict_;
  std::vector<char> allowed_;
  int current_ = -1;
  bool pass_open_ = false;
  int pass_count_ = 0;
  long long violations_ = 0;
  long long peak_memory_items_ = 0;
  Oracle* m1_ = nullptr;
  Oracle* m2_ = nullptr;
};

/// Explicitly stored bookkeeping of the streaming refine loop. Types in D1
/// and D3 are kept implicitly: selected and selected->removed elements are
/// stored, fresh->removed demotions are reconstructed by replaying the
/// UpdateABA snapshots.
struct StreamingState {
  ElementSet s;   // the common independent set being augmented
  ElementSet d2;  // full D2 layer (fixed after pass 2)

  ElementSet b1, a1, b2;
  ElementSet f2, r2;             // D2 types, explicit
  ElementSet r1_sel, r3_sel;     // selected -> removed demotions in D1/D3

  struct Snapshot {
    int k;  // the UpdateABA(k) call this was taken in
    ElementSet a_k;
    ElementSet b_k1;
  };
  std::vector<Snapshot> snapshots;

  int gap() const { return b1.size() - b2.size(); }
  long long memory_items() const;
};

enum class ArrivalType {
  kD1Fresh,
  kD1Selected,
  kD1Removed,
  kD3Fresh,
  kD3Selected,
  kD3Removed,
  kOther,
};

/// Resolves the layer and current type of an arriving element from the
/// stored bookkeeping only.
ArrivalType classify_arrival(int v, const StreamingState& state,
                             const MatroidView& m1);

/// Pass 1 builds the maximal common independent set, pass 2 the layer D2;
/// both end up stored in the state. Exactly 2 passes.
void streaming_greedy_and_d2(StreamSession& session, StreamingState& state,
                             const MatroidView& m1, const MatroidView& m2);

/// Streaming replacement for the per-element loop of refine: a selection
/// pass, a snapshot, and a demotion pass (the demotions stay implicit and
/// are recovered by snapshot replay). Exactly 2 passes.
void update_aba(StreamSession& session, StreamingState& state, int k,
                const MatroidView& m1, const MatroidView& m2,
                ElementSet* pass_a_selected = nullptr);

struct StreamOptions {
  double epsilon = 0.1;
  std::vector<int> order;  // empty -> ascending
  bool strict = false;
  bool strict_paper_passes = false;
};

struct StreamReport {
  int result_size = 0;
  int passes = 0;
  long long peak_memory_items = 0;
  double epsilon = 0.0;
  int r_bar = 0;
  long long independence_queries = 0;  // both oracles combined
  long long rank_queries = 0;
  long long m1_independence_queries = 0;
  long long m2_independence_queries = 0;
  int refine_calls = 0;
  long long access_violations = 0;
  bool strict = false;
  bool strict_paper_passes = false;
  std::string branch;

  std::string to_json() const;
};

struct StreamResult {
  ElementSet set;
  StreamReport report;
};

/// Records, per UpdateABA call, which elements the selection pass picked,
/// plus the run's intermediate sets. Used by the equivalence tests against
/// the non-streaming refine.
struct StreamCapture {
  std::vector<ElementSet> pass_a_selected;
  ElementSet greedy_s;
  PartialAugmentingSet phi;  // state when the refine loop stopped
};

/// The full (2/3 - eps) pipeline in the semi-streaming model.
StreamResult streaming_two_thirds(Oracle& m1, Oracle& m2,
                                  const StreamOptions& options,
                                  StreamCapture* capture = nullptr);

}  // namespace matroidx

#endif  // MATROIDX_STREAMING_HPP
