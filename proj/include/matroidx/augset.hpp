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

#ifndef MATROIDX_AUGSET_HPP
#define MATROIDX_AUGSET_HPP

#include <functional>
#include <string>
#include <vector>

#include "matroidx/exchange.hpp"
#include "matroidx/oracle.hpp"

namespace matroidx {

enum class ElemType { kFresh, kSelected, kRemoved };

const char* elem_type_name(ElemType type);

struct TransitionEvent {
  int element;
  int layer;  // 1, 2, or 3
  ElemType from;
  ElemType to;
  const char* op;
};

using TransitionHook = std::function<void(const TransitionEvent&)>;

/// Fresh/selected/removed bookkeeping for the distance layers D1, D2, D3,
/// including the imaginary empty layers 0 and 4. Transitions are
/// one-directional (fresh -> selected -> removed, or fresh -> removed);
/// any other move raises a state-corruption error.
class LayerState {
 public:
  LayerState() = default;
  explicit LayerState(const DistanceLayers& layers);

  // Layer accessors; indices 0 and 4 are the imaginary empty layers.
  const ElementSet& fresh(int i) const;
  const ElementSet& removed(int i) const;
  const ElementSet& selected_b(int k) const;  // k = 1 or 2 (B1 in D1, B2 in D3)
  const ElementSet& selected_a(int k) const;  // k = 0, 1, or 2 (only A1 real)
  ElementSet layer(int i) const;              // D_i = fresh + selected + removed

  int gap() const { return b1_.size() - b2_.size(); }

  // Guarded transitions.
  void select_b(int k, int element, const char* op);       // F_{2k-1} -> B_k
  void select_a(int element, const char* op);              // F_2 -> A_1
  void remove_fresh(int i, int element, const char* op);   // F_i -> R_i
  void remove_selected_b(int k, int element, const char* op);  // B_k -> R_{2k-1}
  void remove_selected_a(int element, const char* op);         // A_1 -> R_2

  void set_transition_hook(TransitionHook hook) { hook_ = std::move(hook); }

  bool operator==(const LayerState& other) const;
  std::string str() const;

 private:
  void take_fresh(int i, int element, const char* op);

  ElementSet f_[5];
  ElementSet r_[5];
  ElementSet b1_, b2_, a1_;
  ElementSet empty_;
  TransitionHook hook_;
};

/// All elements start fresh.
LayerState init_layer_state(const DistanceLayers& layers);

/// Greedy maximal extension: largest B (under the scan order) within
/// `candidates` such that predicate(base + B) holds. One predicate call per
/// candidate. `precheck`, when given, asserts predicate(base) without
/// spending a counted query.
ElementSet find_maximal_extension(
    const std::function<bool(const ElementSet&)>& predicate,
    const ElementSet& base, const ElementSet& candidates,
    const std::function<bool(const ElementSet&)>& precheck = nullptr);

// Same, with an explicit candidate scan order.
ElementSet find_maximal_extension_ordered(
    const std::function<bool(const ElementSet&)>& predicate,
    const ElementSet& base, const std::vector<int>& candidates);

/// Iteration orders used inside refine. The default scans ascending by id;
/// the streaming equivalence tests replay stream orders through these hooks.
struct RefineOrdering {
  using OrderFn = std::function<std::vector<int>(int k, const ElementSet&)>;
  OrderFn inner_loop;  // per-element loop over F_{2k+1}
  OrderFn fresh_scan;  // maximal-extension scan over F_{2k+1} in refine_ab

  static RefineOrdering ascending();
};

void refine_ab(LayerState& state, int k, const MatroidView& m1,
               const ElementSet& s,
               const RefineOrdering& ordering = RefineOrdering::ascending());

void refine_ba(LayerState& state, int k, const MatroidView& m2,
               const ElementSet& s);

void refine(LayerState& state, const MatroidView& m1, const MatroidView& m2,
            const ElementSet& s,
            const RefineOrdering& ordering = RefineOrdering::ascending());

/// Relaxed augmenting set: |b1| >= |a1| >= |b2| and rank-preservation in M2.
struct PartialAugmentingSet {
  ElementSet b1, a1, b2;
  int gap() const { return b1.size() - b2.size(); }
};

struct AugmentingSet {
  ElementSet b1, a1, b2;
  int width() const { return b2.size(); }
};

struct RefineResult {
  PartialAugmentingSet phi;
  int refine_calls = 0;
};

/// Applies refine until |b1| - |b2| <= p, but at least once. Throws an
/// algorithm-bug error when the iteration cap 4*(ceil(|s|/max(p,1)) + 2)
/// is exceeded.
RefineResult refine_until_gap(
    LayerState& state, double p, const MatroidView& m1, const MatroidView& m2,
    const ElementSet& s,
    const RefineOrdering& ordering = RefineOrdering::ascending());

/// Converts a partial augmenting set into a true augmenting set with
/// b1' subset of b1, a1' subset of a1, b2' = b2, using O(n) queries.
AugmentingSet extract_augmenting_set(const ElementSet& s,
                                     const PartialAugmentingSet& phi,
                                     const MatroidView& m1,
                                     const MatroidView& m2);

/// S + b1 - a1 + b2. Width and containment checks only; full six-clause
/// validation is validate_augmenting_set.
ElementSet apply_augmenting(const ElementSet& s, const AugmentingSet& pi);

struct ValidationReport {
  bool ok = true;
  std::string violated_clause;  // "(a)".."(f)" when !ok
};

/// Checks the six augmenting-set clauses with 4 oracle queries plus set
/// containment tests; reports the first violated clause.
ValidationReport validate_augmenting_set(const ElementSet& s,
                                         const AugmentingSet& pi,
                                         const DistanceLayers& layers,
                                         const MatroidView& m1,
                                         const MatroidView& m2);

}  // namespace matroidx

#endif  // MATROIDX_AUGSET_HPP
