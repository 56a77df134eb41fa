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

#ifndef EBASE_IMPLICATION_HPP_
#define EBASE_IMPLICATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ebase/closure_space.hpp"
#include "ebase/element_set.hpp"

namespace ebase {

// premise -> conclusion. The stored conclusion never meets the premise.
struct Implication {
  ElementSet premise;
  ElementSet conclusion;

  Implication() = default;
  Implication(ElementSet p, ElementSet c) : premise(p), conclusion(c - p) {}

  bool trivial() const { return conclusion.empty(); }
  // |premise| == 1.
  bool binary() const { return premise.size() == 1; }
  bool operator==(const Implication&) const = default;
};

// Premise in canonical order, then conclusion in canonical order.
bool implication_less(const Implication& a, const Implication& b);

enum class BaseForm { kUnit, kAggregated };

// A list of implications over a ground set, kept in canonical order without
// duplicates or trivial implications.
class ImplicationalBase {
 public:
  ImplicationalBase() = default;
  ImplicationalBase(GroundSet ground, std::vector<Implication> implications,
                    BaseForm form = BaseForm::kUnit);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Implication>& implications() const { return implications_; }
  BaseForm form() const { return form_; }
  std::size_t size() const { return implications_.size(); }
  bool empty() const { return implications_.empty(); }

  // Merges implications with equal premises.
  ImplicationalBase aggregated() const;
  // Splits every implication into single-element conclusions.
  ImplicationalBase unit() const;
  // The implications with premise size > 1.
  ImplicationalBase non_binary() const;
  // Union of two bases over the same ground set, in unit form.
  ImplicationalBase merged(const ImplicationalBase& other) const;

  // Least superset of x closed under every implication (forward chaining).
  ElementSet closure(ElementSet x) const;
  // The result of a single pass over the implications in stored order.
  ElementSet one_pass(ElementSet x) const;

  // One implication per line, "ac -> b".
  std::string render() const;
  std::string render(const Implication& imp) const;

  bool operator==(const ImplicationalBase& o) const {
    return ground_ == o.ground_ && implications_ == o.implications_;
  }

 private:
  GroundSet ground_;
  std::vector<Implication> implications_;
  BaseForm form_ = BaseForm::kUnit;
};

// conclusion ⊆ cl(premise).
bool holds(const ClosureSpace& space, const Implication& imp);

// Closed sets of the implication system: all models, canonical order.
// Enumerated by NextClosure in lectic order.
std::vector<ElementSet> models(const ImplicationalBase& base);

// The lectically next closed set after `current` for a closure operator over
// n elements, or nullopt when `current` is the full set.
template <typename Closure>
std::optional<ElementSet> next_closed(ElementSet current, int n, const Closure& close) {
  for (int i = n - 1; i >= 0; --i) {
    if (current.contains(i)) {
      current.erase(i);
      continue;
    }
    ElementSet candidate = close(current.with(i));
    if (((candidate - current) & ElementSet::prefix(i)).empty()) return candidate;
  }
  return std::nullopt;
}

// Visits every closed set of a closure operator over n elements in lectic
// order (NextClosure).
template <typename Closure, typename Visit>
void next_closure_enumerate(int n, const Closure& close, const Visit& visit) {
  std::optional<ElementSet> current = close(ElementSet());
  while (current) {
    visit(*current);
    current = next_closed(*current, n, close);
  }
}

}  // namespace ebase

#endif  // EBASE_IMPLICATION_HPP_
