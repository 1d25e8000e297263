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

#include "matroidx/streaming.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace matroidx {

StreamSession::StreamSession(int n, std::vector<int> order, bool strict)
    : n_(n), order_(std::move(order)), strict_(strict), allowed_(n, 0) {
  if (static_cast<int>(order_.size()) != n_)
    fail(ErrorCode::kInvalidArgument,
         "stream order must have exactly " + std::to_string(n_) + " entries");
  std::vector<char> seen(static_cast<size_t>(n_), 0);
  for (int v : order_) {
    if (v < 0 || v >= n_ || seen[static_cast<size_t>(v)])
      fail(ErrorCode::kInvalidArgument,
           "stream order must be a permutation of the ground set");
    seen[static_cast<size_t>(v)] = 1;
  }
}

StreamSession::~StreamSession() { detach(); }

void StreamSession::attach(Oracle& m1, Oracle& m2) {
  if (m1_ || m2_) fail(ErrorCode::kProtocol, "session already attached");
  m1_ = &m1;
  m2_ = &m2;
  QueryGuard guard = [this](const ElementSet& s) { check_query(s); };
  m1_->set_query_guard(guard);
  m2_->set_query_guard(guard);
}

void StreamSession::detach() {
  if (m1_) m1_->clear_query_guard();
  if (m2_) m2_->clear_query_guard();
  m1_ = nullptr;
  m2_ = nullptr;
}

void StreamSession::check_query(const ElementSet& s) {
  for (int id : s) {
    if (allowed_[static_cast<size_t>(id)]) continue;
    if (pass_open_ && id == current_) continue;
    ++violations_;
    if (strict_)
      fail(ErrorCode::kStreamingViolation,
           "query touches element " + std::to_string(id) +
               " which is neither stored nor currently arriving");
    return;
  }
}

void StreamSession::run_pass(const std::function<void(int)>& visitor) {
  if (pass_open_) fail(ErrorCode::kProtocol, "nested stream pass");
  pass_open_ = true;
  try {
    for (int v : order_) {
      current_ = v;
      visitor(v);
    }
  } catch (...) {
    current_ = -1;
    pass_open_ = false;
    throw;
  }
  current_ = -1;
  pass_open_ = false;
  ++pass_count_;
}

void StreamSession::charge_pass(int count) { pass_count_ += count; }

void StreamSession::allow(int element) {
  if (element < 0 || element >= n_)
    fail(ErrorCode::kInvalidArgument,
         "allow: element " + std::to_string(element) + " out of range");
  allowed_[static_cast<size_t>(element)] = 1;
}

void StreamSession::allow_set(const ElementSet& s) {
  for (int id : s) allow(id);
}

void StreamSession::note_memory(long long items) {
  peak_memory_items_ = std::max(peak_memory_items_, items);
}

long long StreamingState::memory_items() const {
  long long items = s.size() + d2.size() + b1.size() + b2.size() +
                    r1_sel.size() + r3_sel.size();
  for (const Snapshot& snap : snapshots)
    items += snap.a_k.size() + snap.b_k1.size();
  return items;
}

ArrivalType classify_arrival(int v, const StreamingState& state,
                             const MatroidView& m1) {
  if (state.s.contains(v)) return ArrivalType::kOther;
  int layer;
  if (m1.is_independent(state.s.with(v)))
    layer = 1;
  else if (m1.is_independent(state.s.with(v) - state.d2))
    layer = 3;
  else
    return ArrivalType::kOther;

  const ElementSet& selected = layer == 1 ? state.b1 : state.b2;
  const ElementSet& demoted = layer == 1 ? state.r1_sel : state.r3_sel;
  if (selected.contains(v))
    return layer == 1 ? ArrivalType::kD1Selected : ArrivalType::kD3Selected;
  if (demoted.contains(v))
    return layer == 1 ? ArrivalType::kD1Removed : ArrivalType::kD3Removed;

  // Fresh -> removed demotions are not stored; replay the snapshots of the
  // matching UpdateABA calls instead.
  const int k = layer == 1 ? 0 : 1;
  for (const StreamingState::Snapshot& snap : state.snapshots) {
    if (snap.k != k) continue;
    if (m1.is_independent(state.s - snap.a_k + snap.b_k1 + ElementSet::of({v})))
      return layer == 1 ? ArrivalType::kD1Removed : ArrivalType::kD3Removed;
  }
  return layer == 1 ? ArrivalType::kD1Fresh : ArrivalType::kD3Fresh;
}

void streaming_greedy_and_d2(StreamSession& session, StreamingState& state,
                             const MatroidView& m1, const MatroidView& m2) {
  session.run_pass([&](int v) {
    ElementSet trial = state.s.with(v);
    if (m1.is_independent(trial) && m2.is_independent(trial)) {
      state.s.insert(v);
      session.allow(v);
    }
  });
  session.note_memory(state.memory_items());

  session.run_pass([&](int v) {
    if (state.s.contains(v)) return;
    if (!m1.is_independent(state.s.with(v))) return;
    for (int u : state.s) {
      if (state.d2.contains(u)) continue;
      if (m2.is_independent(state.s.with(v).without(u))) state.d2.insert(u);
    }
  });
  state.f2 = state.d2;
  session.note_memory(state.memory_items());
}

namespace {

const ElementSet& sel_a(const StreamingState& state, int k) {
  static const ElementSet kEmpty;
  return k == 1 ? state.a1 : kEmpty;
}

ElementSet& sel_b(StreamingState& state, int k) {
  return k == 1 ? state.b1 : state.b2;
}

ArrivalType fresh_type(int k) {
  return k == 0 ? ArrivalType::kD1Fresh : ArrivalType::kD3Fresh;
}

// Base of the second selection test: S - A_{k+1} - F_{2k+2} + B_{k+1}, with
// the imaginary layers A_2 and F_4 empty.
ElementSet second_test_base(const StreamingState& state, int k) {
  if (k == 1) return state.s + state.b2;
  return state.s - state.a1 - state.f2 + state.b1;
}

void stream_refine_ba(StreamSession& session, StreamingState& state, int k,
                      const MatroidView& m2, bool strict_paper) {
  auto in_i2 = [&m2](const ElementSet& x) { return m2.is_independent(x); };
  ElementSet live = (k == 1) ? state.f2 + state.a1 : ElementSet{};
  ElementSet base = state.s - live;

  ElementSet& b = sel_b(state, k);
  ElementSet keep = find_maximal_extension(in_i2, base, b);
  ElementSet& demoted = (k == 1) ? state.r1_sel : state.r3_sel;
  for (int e : b - keep) demoted.insert(e);
  b = std::move(keep);

  if (k == 1) {
    ElementSet base2 = base + state.b1;
    ElementSet still_fresh = find_maximal_extension(in_i2, base2, state.f2);
    state.a1 += state.f2 - still_fresh;
    state.f2 = std::move(still_fresh);
  }

  // Operates on stored sets only; the strict paper accounting still charges
  // the two passes the streaming model reserves for it.
  if (strict_paper) session.charge_pass(2);
  session.note_memory(state.memory_items());
}

void stream_refine_ab(StreamSession& session, StreamingState& state, int k,
                      const MatroidView& m1, bool strict_paper) {
  ElementSet acc = state.s - sel_a(state, k) + sel_b(state, k + 1);
  session.run_pass([&](int v) {
    if (classify_arrival(v, state, m1) != fresh_type(k)) return;
    ElementSet trial = acc.with(v);
    if (m1.is_independent(trial)) {
      acc = std::move(trial);
      sel_b(state, k + 1).insert(v);
      session.allow(v);
    }
  });
  if (strict_paper) session.charge_pass();

  if (k == 1) {
    auto in_i1 = [&m1](const ElementSet& x) { return m1.is_independent(x); };
    ElementSet base2 = state.s - state.a1 + state.b2;
    ElementSet released = find_maximal_extension(in_i1, base2, state.a1);
    state.a1 -= released;
    state.r2 += released;
  }
  session.note_memory(state.memory_items());
}

void stream_refine(StreamSession& session, StreamingState& state,
                   const MatroidView& m1, const MatroidView& m2,
                   bool strict_paper, StreamCapture* capture) {
  for (int k : {1, 0}) {
    stream_refine_ba(session, state, k + 1, m2, strict_paper);
    ElementSet selected;
    update_aba(session, state, k, m1, m2, &selected);
    if (capture) capture->pass_a_selected.push_back(std::move(selected));
    stream_refine_ba(session, state, k + 1, m2, strict_paper);
    stream_refine_ab(session, state, k, m1, strict_paper);
  }
}

}  // namespace

void update_aba(StreamSession& session, StreamingState& state, int k,
                const MatroidView& m1, const MatroidView& m2,
                ElementSet* pass_a_selected) {
  if (k != 0 && k != 1)
    fail(ErrorCode::kContract, "update_aba: k must be 0 or 1");

  ElementSet selected_now;
  session.run_pass([&](int v) {
    if (classify_arrival(v, state, m1) != fresh_type(k)) return;
    ElementSet t1 = state.s - sel_a(state, k) + sel_b(state, k + 1);
    t1.insert(v);
    if (!m1.is_independent(t1)) return;
    ElementSet t2 = second_test_base(state, k);
    t2.insert(v);
    if (!m2.is_independent(t2)) return;
    sel_b(state, k + 1).insert(v);
    session.allow(v);
    selected_now.insert(v);
  });

  state.snapshots.push_back(
      {k, sel_a(state, k), sel_b(state, k + 1)});
  session.note_memory(state.memory_items());

  // The demotion pass: fresh elements of layer 2k+1 that extend
  // S - A_k + B_{k+1} in M1 become removed. Nothing is stored for them;
  // classify_arrival recovers the demotion by replaying the snapshot taken
  // above, so the pass itself carries no queries.
  session.run_pass([](int) {});

  if (pass_a_selected) *pass_a_selected = std::move(selected_now);
}

std::string StreamReport::to_json() const {
  nlohmann::json out;
  out["result_size"] = result_size;
  out["passes"] = passes;
  out["peak_memory_items"] = peak_memory_items;
  out["epsilon"] = epsilon;
  out["r_bar"] = r_bar;
  out["independence_queries"] = independence_queries;
  out["rank_queries"] = rank_queries;
  out["m1_independence_queries"] = m1_independence_queries;
  out["m2_independence_queries"] = m2_independence_queries;
  out["refine_calls"] = refine_calls;
  out["access_violations"] = access_violations;
  out["strict"] = strict;
  out["strict_paper_passes"] = strict_paper_passes;
  out["branch"] = branch;
  return out.dump();
}

StreamResult streaming_two_thirds(Oracle& m1, Oracle& m2,
                                  const StreamOptions& options,
                                  StreamCapture* capture) {
  const int n = m1.ground_size();
  if (m2.ground_size() != n)
    fail(ErrorCode::kInstanceMismatch,
         "matroids disagree on the ground set size");
  if (!(options.epsilon > 0.0 && options.epsilon < 1.0))
    fail(ErrorCode::kInvalidArgument,
         "epsilon must lie in (0,1), got " + std::to_string(options.epsilon));

  std::vector<int> order =
      options.order.empty() ? ascending_order(n) : options.order;

  m1.ledger().reset();
  m2.ledger().reset();

  StreamSession session(n, std::move(order), options.strict);
  session.attach(m1, m2);
  const MatroidView v1{&m1, Mode::kIndependence};
  const MatroidView v2{&m2, Mode::kIndependence};

  StreamResult out;
  out.report.epsilon = options.epsilon;
  out.report.strict = options.strict;
  out.report.strict_paper_passes = options.strict_paper_passes;

  auto finish = [&](ElementSet result, const char* branch, int refine_calls) {
    out.set = std::move(result);
    out.report.result_size = out.set.size();
    out.report.branch = branch;
    out.report.refine_calls = refine_calls;
    out.report.passes = session.pass_count();
    out.report.peak_memory_items = session.peak_memory_items();
    out.report.access_violations = session.violations();
    out.report.m1_independence_queries = m1.ledger().independence_queries;
    out.report.m2_independence_queries = m2.ledger().independence_queries;
    out.report.independence_queries =
        m1.ledger().independence_queries + m2.ledger().independence_queries;
    out.report.rank_queries =
        m1.ledger().rank_queries + m2.ledger().rank_queries;
    session.detach();
    return out;
  };

  StreamingState state;
  streaming_greedy_and_d2(session, state, v1, v2);
  if (capture) capture->greedy_s = state.s;
  const int r_bar = state.s.size();
  out.report.r_bar = r_bar;
  if (r_bar == 0) return finish(state.s, "empty", 0);

  // Pass 3: is there a length-4 augmenting path, i.e. some D3 element whose
  // addition keeps S independent in M2? If not, S is a 2/3-approximation.
  bool path4 = false;
  session.run_pass([&](int v) {
    if (path4) return;
    if (classify_arrival(v, state, v1) != ArrivalType::kD3Fresh) return;
    if (v2.is_independent(state.s.with(v))) path4 = true;
  });
  if (!path4) return finish(state.s, "distance>4", 0);

  const double p = options.epsilon * r_bar;
  const int cap =
      4 * (static_cast<int>(std::ceil(r_bar / std::max(p, 1.0))) + 2);
  int calls = 0;
  do {
    stream_refine(session, state, v1, v2, options.strict_paper_passes,
                  capture);
    ++calls;
  } while (state.gap() > p && calls < cap);
  if (state.gap() > p)
    fail(ErrorCode::kAlgorithmBug,
         "streaming refine: gap " + std::to_string(state.gap()) +
             " still above " + std::to_string(p) + " after " +
             std::to_string(calls) + " calls (cap " + std::to_string(cap) +
             ")");

  // Extraction touches only stored sets; no further passes.
  PartialAugmentingSet phi{state.b1, state.a1, state.b2};
  if (capture) capture->phi = phi;
  AugmentingSet pi = extract_augmenting_set(state.s, phi, v1, v2);
  ElementSet augmented = apply_augmenting(state.s, pi);
  return finish(std::move(augmented), "augment", calls);
}

}  // namespace matroidx
