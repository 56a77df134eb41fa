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

#include "ebase/closure_space.hpp"

#include <algorithm>
#include <string>

#include "ebase/errors.hpp"

namespace ebase {

namespace {

ElementSet meet_of_supersets(std::span<const ElementSet> family, ElementSet full, ElementSet x) {
  ElementSet out = full;
  for (ElementSet c : family) {
    if (x.subset_of(c)) out &= c;
  }
  return out;
}

}  // namespace

std::optional<int> ClosureSpace::index_of(ElementSet set) const {
  auto it = index_.find(set);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int ClosureSpace::require_index(ElementSet set) const {
  auto it = index_.find(set);
  if (it == index_.end()) {
    throw NotClosed(set, "set " + ground_.render(set) + " is not closed");
  }
  return it->second;
}

void ClosureSpace::require_admits(ElementSet x) const {
  if (!ground_.admits(x)) {
    throw GroundMismatch("set has elements outside the ground set of size " +
                         std::to_string(ground_.size()));
  }
}

ElementSet ClosureSpace::closure(ElementSet x) const {
  require_admits(x);
  return meet_of_supersets(meet_irreducible_sets_, full(), x);
}

ElementSet ClosureSpace::binary_closure(ElementSet x) const {
  require_admits(x);
  ElementSet out;
  for (int i : x) out |= element_closure_[static_cast<std::size_t>(i)];
  return out;
}

ElementSet ClosureSpace::meet(ElementSet c1, ElementSet c2) const {
  require_index(c1);
  require_index(c2);
  return c1 & c2;
}

ElementSet ClosureSpace::join(ElementSet c1, ElementSet c2) const {
  require_index(c1);
  require_index(c2);
  return closure(c1 | c2);
}

std::vector<ElementSet> ClosureSpace::interval(ElementSet low, ElementSet high) const {
  require_index(low);
  require_index(high);
  if (!low.subset_of(high)) {
    throw NotComparable("interval bounds " + ground_.render(low) + " and " + ground_.render(high) +
                        " are not comparable");
  }
  std::vector<ElementSet> out;
  for (ElementSet c : closed_) {
    if (low.subset_of(c) && c.subset_of(high)) out.push_back(c);
  }
  return out;
}

ElementSet ClosureSpace::predecessor_meet(int index) const {
  ElementSet out = closed_set(index);
  for (int p : predecessors(index)) out &= closed_[static_cast<std::size_t>(p)];
  return out;
}

std::vector<ElementSet> close_under_intersection(ElementSet full, std::vector<ElementSet> family) {
  family.push_back(full);
  canonicalize(family);
  std::unordered_map<ElementSet, int> seen;
  for (ElementSet s : family) seen.emplace(s, 0);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet m = family[i] & family[j];
      if (seen.emplace(m, 0).second) family.push_back(m);
      if (family.size() > kMaxClosedSets) {
        throw CapacityExceeded("intersection closure exceeds " + std::to_string(kMaxClosedSets) +
                               " sets");
      }
    }
  }
  canonicalize(family);
  return family;
}

ClosureSpace space_from_closed_sets(GroundSet ground, std::vector<ElementSet> family) {
  if (family.size() > kMaxClosedSets) {
    throw CapacityExceeded("family has " + std::to_string(family.size()) + " sets; at most " +
                           std::to_string(kMaxClosedSets) + " are supported");
  }
  const ElementSet full = ground.full();
  for (ElementSet s : family) {
    if (!ground.admits(s)) {
      throw GroundMismatch("family member uses elements outside the ground set");
    }
  }
  canonicalize(family);

  ClosureSpace space;
  space.ground_ = std::move(ground);
  const GroundSet& g = space.ground_;
  for (std::size_t i = 0; i < family.size(); ++i) space.index_.emplace(family[i], static_cast<int>(i));
  if (!space.index_.contains(full)) {
    throw MissingTop("family does not contain the full ground set " + g.render(full));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!space.index_.contains(family[i] & family[j])) {
        throw NotIntersectionClosed(family[i], family[j],
                                    "intersection of " + g.render(family[i]) + " and " +
                                        g.render(family[j]) + " is missing");
      }
    }
  }
  space.closed_ = std::move(family);
  const auto& closed = space.closed_;
  const std::size_t count = closed.size();

  // Upper covers of C are the minimal sets among cl(C + x), x outside C.
  space.lower_.assign(count, {});
  space.upper_.assign(count, {});
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<ElementSet> candidates;
    for (int x : full - closed[i]) {
      candidates.push_back(meet_of_supersets(closed, full, closed[i].with(x)));
    }
    for (ElementSet up : minimal_members(std::move(candidates))) {
      int j = space.index_.at(up);
      space.upper_[i].push_back(j);
      space.lower_[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
      space.covers_.push_back({static_cast<int>(i), j});
    }
  }
  for (auto& v : space.lower_) std::sort(v.begin(), v.end());
  for (auto& v : space.upper_) std::sort(v.begin(), v.end());
  std::sort(space.covers_.begin(), space.covers_.end(), [](const Cover& a, const Cover& b) {
    return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
  });

  for (std::size_t i = 0; i < count; ++i) {
    if (space.upper_[i].size() == 1) {
      space.meet_irreducible_.push_back(static_cast<int>(i));
      space.meet_irreducible_sets_.push_back(closed[i]);
    }
  }

  space.element_closure_.resize(static_cast<std::size_t>(g.size()));
  for (int x = 0; x < g.size(); ++x) {
    ElementSet c = space.closure(ElementSet::singleton(x));
    space.element_closure_[static_cast<std::size_t>(x)] = c;
    if (!space.index_.contains(c.without(x))) {
      throw NotStandard(x, "space is not standard: closure of " + g.name(x) + " minus " +
                               g.name(x) + " is " + g.render(c.without(x)) + ", not closed");
    }
  }

  std::vector<int> depth(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (int j : space.upper_[i]) {
      depth[static_cast<std::size_t>(j)] = std::max(depth[static_cast<std::size_t>(j)], depth[i] + 1);
    }
  }
  space.height_ = depth[static_cast<std::size_t>(space.index_.at(full))];
  return space;
}

ClosureSpace powerset_space(int n) {
  if (n > 20) throw CapacityExceeded("powerset of more than 20 elements");
  std::vector<ElementSet> family;
  for (ElementSet::Word w = 0; w < (ElementSet::Word{1} << n); ++w) family.emplace_back(w);
  return space_from_closed_sets(GroundSet::letters(n), std::move(family));
}

ClosureSpace diamond_space(int k) {
  std::vector<ElementSet> family{ElementSet(), ElementSet::prefix(k)};
  for (int i = 0; i < k; ++i) family.push_back(ElementSet::singleton(i));
  return space_from_closed_sets(GroundSet::letters(k), std::move(family));
}

}  // namespace ebase
