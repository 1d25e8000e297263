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

#include "matroidx/augset.hpp"

#include <cmath>

namespace matroidx {

const char* elem_type_name(ElemType type) {
  switch (type) {
    case ElemType::kFresh: return "fresh";
    case ElemType::kSelected: return "selected";
    case ElemType::kRemoved: return "removed";
  }
  return "?";
}

LayerState::LayerState(const DistanceLayers& layers) {
  f_[1] = layers.d1;
  f_[2] = layers.d2;
  f_[3] = layers.d3;
}

const ElementSet& LayerState::fresh(int i) const {
  if (i < 1 || i > 3) return empty_;
  return f_[i];
}

const ElementSet& LayerState::removed(int i) const {
  if (i < 1 || i > 3) return empty_;
  return r_[i];
}

const ElementSet& LayerState::selected_b(int k) const {
  if (k == 1) return b1_;
  if (k == 2) return b2_;
  return empty_;
}

const ElementSet& LayerState::selected_a(int k) const {
  if (k == 1) return a1_;
  return empty_;
}

ElementSet LayerState::layer(int i) const {
  ElementSet d = fresh(i) + removed(i);
  if (i == 1) d += b1_;
  if (i == 2) d += a1_;
  if (i == 3) d += b2_;
  return d;
}

void LayerState::take_fresh(int i, int element, const char* op) {
  if (i < 1 || i > 3 || !f_[i].contains(element))
    fail(ErrorCode::kStateCorruption,
         std::string(op) + ": element " + std::to_string(element) +
             " is not fresh in layer " + std::to_string(i));
  f_[i].erase(element);
}

void LayerState::select_b(int k, int element, const char* op) {
  int layer_idx = 2 * k - 1;
  take_fresh(layer_idx, element, op);
  (k == 1 ? b1_ : b2_).insert(element);
  if (hook_)
    hook_({element, layer_idx, ElemType::kFresh, ElemType::kSelected, op});
}

void LayerState::select_a(int element, const char* op) {
  take_fresh(2, element, op);
  a1_.insert(element);
  if (hook_) hook_({element, 2, ElemType::kFresh, ElemType::kSelected, op});
}

void LayerState::remove_fresh(int i, int element, const char* op) {
  take_fresh(i, element, op);
  r_[i].insert(element);
  if (hook_) hook_({element, i, ElemType::kFresh, ElemType::kRemoved, op});
}

void LayerState::remove_selected_b(int k, int element, const char* op) {
  ElementSet& b = (k == 1 ? b1_ : b2_);
  if ((k != 1 && k != 2) || !b.contains(element))
    fail(ErrorCode::kStateCorruption,
         std::string(op) + ": element " + std::to_string(element) +
             " is not selected in B" + std::to_string(k));
  b.erase(element);
  r_[2 * k - 1].insert(element);
  if (hook_)
    hook_({element, 2 * k - 1, ElemType::kSelected, ElemType::kRemoved, op});
}

void LayerState::remove_selected_a(int element, const char* op) {
  if (!a1_.contains(element))
    fail(ErrorCode::kStateCorruption,
         std::string(op) + ": element " + std::to_string(element) +
             " is not selected in A1");
  a1_.erase(element);
  r_[2].insert(element);
  if (hook_) hook_({element, 2, ElemType::kSelected, ElemType::kRemoved, op});
}

bool LayerState::operator==(const LayerState& other) const {
  for (int i = 1; i <= 3; ++i)
    if (f_[i] != other.f_[i] || r_[i] != other.r_[i]) return false;
  return b1_ == other.b1_ && a1_ == other.a1_ && b2_ == other.b2_;
}

std::string LayerState::str() const {
  return "B1=" + b1_.str() + " A1=" + a1_.str() + " B2=" + b2_.str() +
         " F1=" + f_[1].str() + " F2=" + f_[2].str() + " F3=" + f_[3].str() +
         " R1=" + r_[1].str() + " R2=" + r_[2].str() + " R3=" + r_[3].str();
}

LayerState init_layer_state(const DistanceLayers& layers) {
  return LayerState(layers);
}

ElementSet find_maximal_extension(
    const std::function<bool(const ElementSet&)>& predicate,
    const ElementSet& base, const ElementSet& candidates,
    const std::function<bool(const ElementSet&)>& precheck) {
  if (precheck && !precheck(base))
    fail(ErrorCode::kContract,
         "find_maximal_extension: predicate(base) does not hold");
  return find_maximal_extension_ordered(predicate, base, candidates.ids());
}

ElementSet find_maximal_extension_ordered(
    const std::function<bool(const ElementSet&)>& predicate,
    const ElementSet& base, const std::vector<int>& candidates) {
  ElementSet acc = base;
  ElementSet picked;
  for (int c : candidates) {
    ElementSet trial = acc.with(c);
    if (predicate(trial)) {
      acc = std::move(trial);
      picked.insert(c);
    }
  }
  return picked;
}

RefineOrdering RefineOrdering::ascending() {
  RefineOrdering ord;
  ord.inner_loop = [](int, const ElementSet& s) { return s.ids(); };
  ord.fresh_scan = [](int, const ElementSet& s) { return s.ids(); };
  return ord;
}

void refine_ab(LayerState& state, int k, const MatroidView& m1,
               const ElementSet& s, const RefineOrdering& ordering) {
  if (k != 0 && k != 1)
    fail(ErrorCode::kContract, "refine_ab: k must be 0 or 1");
  auto in_i1 = [&m1](const ElementSet& x) { return m1.is_independent(x); };

  // Find maximal B in F_{2k+1} with S - A_k + B_{k+1} + B independent in M1.
  ElementSet base = s - state.selected_a(k) + state.selected_b(k + 1);
  std::vector<int> scan = ordering.fresh_scan(k, state.fresh(2 * k + 1));
  ElementSet grown = find_maximal_extension_ordered(in_i1, base, scan);
  for (int e : grown) state.select_b(k + 1, e, "refine_ab");

  // Find maximal A in A_k with S - A_k + B_{k+1} + A independent in M1;
  // those elements are no longer needed and move to R_{2k}.
  if (k == 1) {
    ElementSet base2 = s - state.selected_a(1) + state.selected_b(2);
    ElementSet released =
        find_maximal_extension(in_i1, base2, state.selected_a(1));
    for (int e : released) state.remove_selected_a(e, "refine_ab");
  }
  // k == 0: A_0 is imaginary and empty.
}

void refine_ba(LayerState& state, int k, const MatroidView& m2,
               const ElementSet& s) {
  if (k != 1 && k != 2)
    fail(ErrorCode::kContract, "refine_ba: k must be 1 or 2");
  auto in_i2 = [&m2](const ElementSet& x) { return m2.is_independent(x); };

  // D_{2k} - R_{2k}: the still-live part of the even layer below B_k.
  ElementSet live =
      (k == 1) ? state.fresh(2) + state.selected_a(1) : ElementSet{};
  ElementSet base = s - live;

  // Keep the maximal B inside B_k with base + B independent in M2; demote
  // the rest to R_{2k-1}.
  ElementSet keep = find_maximal_extension(in_i2, base, state.selected_b(k));
  for (int e : state.selected_b(k) - keep)
    state.remove_selected_b(k, e, "refine_ba");

  // Find maximal A in F_{2k} with base + B_k + A independent in M2; fresh
  // elements outside A become selected into A_k.
  if (k == 1) {
    ElementSet base2 = base + state.selected_b(1);
    ElementSet still_fresh =
        find_maximal_extension(in_i2, base2, state.fresh(2));
    for (int e : state.fresh(2) - still_fresh)
      state.select_a(e, "refine_ba");
  }
  // k == 2: F_4 is imaginary and empty.
}

void refine(LayerState& state, const MatroidView& m1, const MatroidView& m2,
            const ElementSet& s, const RefineOrdering& ordering) {
  for (int k : {1, 0}) {
    refine_ba(state, k + 1, m2, s);

    std::vector<int> order = ordering.inner_loop(k, state.fresh(2 * k + 1));
    for (int x : order) {
      ElementSet t1 = s - state.selected_a(k) + state.selected_b(k + 1);
      t1.insert(x);
      if (!m1.is_independent(t1)) continue;
      ElementSet t2 =
          s - state.selected_a(k + 1) - state.fresh(2 * k + 2) +
          state.selected_b(k + 1);
      t2.insert(x);
      if (m2.is_independent(t2))
        state.select_b(k + 1, x, "refine");
      else
        state.remove_fresh(2 * k + 1, x, "refine");
    }

    refine_ba(state, k + 1, m2, s);
    refine_ab(state, k, m1, s, ordering);
  }
}

RefineResult refine_until_gap(LayerState& state, double p,
                              const MatroidView& m1, const MatroidView& m2,
                              const ElementSet& s,
                              const RefineOrdering& ordering) {
  if (p < 0) fail(ErrorCode::kContract, "refine_until_gap: p must be >= 0");
  const int cap =
      4 * (static_cast<int>(std::ceil(s.size() / std::max(p, 1.0))) + 2);
  RefineResult result;
  do {
    refine(state, m1, m2, s, ordering);
    ++result.refine_calls;
  } while (state.gap() > p && result.refine_calls < cap);
  if (state.gap() > p)
    fail(ErrorCode::kAlgorithmBug,
         "refine_until_gap: gap " + std::to_string(state.gap()) +
             " still above " + std::to_string(p) + " after " +
             std::to_string(result.refine_calls) + " calls (cap " +
             std::to_string(cap) + ")");
  result.phi = PartialAugmentingSet{state.selected_b(1), state.selected_a(1),
                                    state.selected_b(2)};
  return result;
}

AugmentingSet extract_augmenting_set(const ElementSet& s,
                                     const PartialAugmentingSet& phi,
                                     const MatroidView& m1,
                                     const MatroidView& m2) {
  const int width = phi.b2.size();
  auto in_i1 = [&m1](const ElementSet& x) { return m1.is_independent(x); };
  auto in_i2 = [&m2](const ElementSet& x) { return m2.is_independent(x); };

  // Shrink a1: grow S - a1 + b2 back inside a1 under M1. Elements that can
  // return are not needed; the rest form a1' with |a1'| = |b2|.
  ElementSet base = s - phi.a1 + phi.b2;
  if (!m1.is_independent(base))
    fail(ErrorCode::kExtractionFailure,
         "extract: S - A1 + B2 is not independent in M1 (clause (e) fails)");
  ElementSet releasable = find_maximal_extension(in_i1, base, phi.a1);
  ElementSet a1_kept = phi.a1 - releasable;
  if (a1_kept.size() != width)
    fail(ErrorCode::kExtractionFailure,
         "extract: kept " + std::to_string(a1_kept.size()) +
             " of A1, expected width " + std::to_string(width));

  // Shrink b1: extend S - a1' inside b1 under M2; the rank-preservation
  // relaxation guarantees at least `width` elements fit.
  ElementSet extension =
      find_maximal_extension(in_i2, s - a1_kept, phi.b1);
  if (extension.size() < width)
    fail(ErrorCode::kExtractionFailure,
         "extract: only " + std::to_string(extension.size()) +
             " of B1 extend S - A1', need " + std::to_string(width));
  std::vector<int> first_w(extension.ids().begin(),
                           extension.ids().begin() + width);
  return AugmentingSet{ElementSet::from_sorted(std::move(first_w)), a1_kept,
                       phi.b2};
}

ElementSet apply_augmenting(const ElementSet& s, const AugmentingSet& pi) {
  if (pi.b1.size() != pi.a1.size() || pi.a1.size() != pi.b2.size())
    fail(ErrorCode::kContract,
         "apply_augmenting: widths differ (|B1|=" +
             std::to_string(pi.b1.size()) + ", |A1|=" +
             std::to_string(pi.a1.size()) + ", |B2|=" +
             std::to_string(pi.b2.size()) + ")");
  if (!pi.a1.is_subset_of(s))
    fail(ErrorCode::kContract, "apply_augmenting: A1 must be inside S");
  if (!pi.b1.intersect(s).empty() || !pi.b2.intersect(s).empty())
    fail(ErrorCode::kContract, "apply_augmenting: B1/B2 must be outside S");
  return s + pi.b1 - pi.a1 + pi.b2;
}

ValidationReport validate_augmenting_set(const ElementSet& s,
                                         const AugmentingSet& pi,
                                         const DistanceLayers& layers,
                                         const MatroidView& m1,
                                         const MatroidView& m2) {
  if (!pi.b1.is_subset_of(layers.d1) || !pi.a1.is_subset_of(layers.d2) ||
      !pi.b2.is_subset_of(layers.d3))
    return {false, "(a)"};
  if (pi.b1.size() != pi.a1.size() || pi.a1.size() != pi.b2.size())
    return {false, "(b)"};
  if (!m1.is_independent(s + pi.b1)) return {false, "(c)"};
  if (!m2.is_independent(s + pi.b1 - pi.a1)) return {false, "(d)"};
  if (!m1.is_independent(s - pi.a1 + pi.b2)) return {false, "(e)"};
  if (!m2.is_independent(s + pi.b2)) return {false, "(f)"};
  return {true, ""};
}

}  // namespace matroidx
