// Copyright 2026 The Authors.
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

#ifndef EBASE_CLOSURE_SPACE_HPP_
#define EBASE_CLOSURE_SPACE_HPP_

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ebase/element_set.hpp"

namespace ebase {

// Upper bound on the number of closed sets a space may hold.
inline constexpr std::size_t kMaxClosedSets = std::size_t{1} << 20;

// A covering pair (lower, upper) of closed-set indices: lower is a
// predecessor of upper.
struct Cover {
  int lower;
  int upper;
  bool operator==(const Cover&) const = default;
};

// A finite standard closure space given by its family of closed sets.
//
// Instances are immutable once built and only obtainable through
// space_from_closed_sets(), which rejects (never repairs) families that are
// not intersection-closed, miss the full ground set, or are not standard.
// Closed sets are stored in canonical order (cardinality, then
// lexicographic), so index 0 is always the empty set and the last index is
// the full ground set.
class ClosureSpace {
 public:
  const GroundSet& ground() const { return ground_; }
  int element_count() const { return ground_.size(); }
  ElementSet full() const { return ground_.full(); }

  std::span<const ElementSet> closed_sets() const { return closed_; }
  int closed_count() const { return static_cast<int>(closed_.size()); }
  ElementSet closed_set(int index) const { return closed_.at(static_cast<std::size_t>(index)); }
  // Transitive reduction of inclusion, sorted by (lower, upper).
  std::span<const Cover> covers() const { return covers_; }
  std::span<const int> predecessors(int index) const { return lower_[static_cast<std::size_t>(index)]; }
  std::span<const int> successors(int index) const { return upper_[static_cast<std::size_t>(index)]; }
  // Indices of meet-irreducible closed sets (exactly one successor).
  std::span<const int> meet_irreducibles() const { return meet_irreducible_; }

  std::optional<int> index_of(ElementSet set) const;
  // Like index_of but throws NotClosed.
  int require_index(ElementSet set) const;
  bool is_closed(ElementSet set) const { return index_.contains(set); }

  // Smallest closed set including x. Throws GroundMismatch.
  ElementSet closure(ElementSet x) const;
  // Union of the closures of the singletons of x.
  ElementSet binary_closure(ElementSet x) const;
  // cl({x}).
  ElementSet element_closure(int x) const { return element_closure_.at(static_cast<std::size_t>(x)); }

  // Intersection of closed sets. Throws NotClosed.
  ElementSet meet(ElementSet c1, ElementSet c2) const;
  // Closure of the union of closed sets. Throws NotClosed.
  ElementSet join(ElementSet c1, ElementSet c2) const;
  // All closed sets between the bounds, canonical order. Throws NotClosed or
  // NotComparable.
  std::vector<ElementSet> interval(ElementSet low, ElementSet high) const;

  // C_*: the intersection of the predecessors of the closed set at index;
  // the set itself when it has none.
  ElementSet predecessor_meet(int index) const;
  // Length of the longest chain from the bottom to the top.
  int height() const { return height_; }

  void require_admits(ElementSet x) const;

 private:
  friend ClosureSpace space_from_closed_sets(GroundSet ground, std::vector<ElementSet> family);
  ClosureSpace() = default;

  GroundSet ground_;
  std::vector<ElementSet> closed_;
  std::unordered_map<ElementSet, int> index_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
  std::vector<int> meet_irreducible_;
  std::vector<ElementSet> meet_irreducible_sets_;
  std::vector<ElementSet> element_closure_;
  int height_ = 0;
};

// Builds a space from an explicit family. The family must already contain
// the full ground set and be closed under pairwise intersection; the space
// must be standard. Throws MissingTop, NotIntersectionClosed, NotStandard,
// GroundMismatch or CapacityExceeded.
ClosureSpace space_from_closed_sets(GroundSet ground, std::vector<ElementSet> family);

// Adds the full ground set and all pairwise intersections. Exploratory use
// only; the result still has to pass space_from_closed_sets.
std::vector<ElementSet> close_under_intersection(ElementSet full, std::vector<ElementSet> family);

// The powerset of n labelled elements.
ClosureSpace powerset_space(int n);
// The diamond M_k: bottom, k atoms, top, over k elements.
ClosureSpace diamond_space(int k);

}  // namespace ebase

#endif  // EBASE_CLOSURE_SPACE_HPP_
