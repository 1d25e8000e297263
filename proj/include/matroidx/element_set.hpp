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

#ifndef MATROIDX_ELEMENT_SET_HPP
#define MATROIDX_ELEMENT_SET_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace matroidx {

/// A finite set of element ids, kept sorted ascending so that every scan in
/// the library iterates in a deterministic order.
class ElementSet {
 public:
  ElementSet() = default;

  static ElementSet of(std::initializer_list<int> ids) {
    return from_unsorted(std::vector<int>(ids));
  }

  static ElementSet from_unsorted(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    ElementSet s;
    s.ids_ = std::move(ids);
    return s;
  }

  // Precondition: ids already sorted ascending with no duplicates.
  static ElementSet from_sorted(std::vector<int> ids) {
    ElementSet s;
    s.ids_ = std::move(ids);
    return s;
  }

  static ElementSet full(int n) {
    std::vector<int> ids(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = i;
    return from_sorted(std::move(ids));
  }

  bool contains(int id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  bool empty() const { return ids_.empty(); }
  int size() const { return static_cast<int>(ids_.size()); }

  void insert(int id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) ids_.insert(it, id);
  }

  void erase(int id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) ids_.erase(it);
  }

  ElementSet with(int id) const {
    ElementSet s = *this;
    s.insert(id);
    return s;
  }

  ElementSet without(int id) const {
    ElementSet s = *this;
    s.erase(id);
    return s;
  }

  bool is_subset_of(const ElementSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }

  ElementSet intersect(const ElementSet& other) const {
    std::vector<int> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  friend ElementSet operator+(const ElementSet& a, const ElementSet& b) {
    std::vector<int> out;
    out.reserve(a.ids_.size() + b.ids_.size());
    std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  friend ElementSet operator-(const ElementSet& a, const ElementSet& b) {
    std::vector<int> out;
    out.reserve(a.ids_.size());
    std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(),
                        b.ids_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  ElementSet& operator+=(const ElementSet& b) { return *this = *this + b; }
  ElementSet& operator-=(const ElementSet& b) { return *this = *this - b; }

  bool operator==(const ElementSet& other) const = default;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<int>& ids() const { return ids_; }
  int max_id() const { return ids_.empty() ? -1 : ids_.back(); }

  std::string str() const {
    std::string out = "{";
    for (size_t i = 0; i < ids_.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(ids_[i]);
    }
    out += "}";
    return out;
  }

 private:
  std::vector<int> ids_;
};

}  // namespace matroidx

#endif  // MATROIDX_ELEMENT_SET_HPP
