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

#include "ebase/implication.hpp"

#include <algorithm>
#include <map>

#include "ebase/errors.hpp"

namespace ebase {

bool implication_less(const Implication& a, const Implication& b) {
  if (a.premise != b.premise) return canonical_less(a.premise, b.premise);
  return canonical_less(a.conclusion, b.conclusion);
}

ImplicationalBase::ImplicationalBase(GroundSet ground, std::vector<Implication> implications,
                                     BaseForm form)
    : ground_(std::move(ground)), form_(form) {
  for (Implication& imp : implications) {
    if (!ground_.admits(imp.premise) || !ground_.admits(imp.conclusion)) {
      throw GroundMismatch("implication uses elements outside the ground set");
    }
    imp.conclusion -= imp.premise;
    if (!imp.trivial()) implications_.push_back(imp);
  }
  std::sort(implications_.begin(), implications_.end(), implication_less);
  implications_.erase(std::unique(implications_.begin(), implications_.end()), implications_.end());
}

ImplicationalBase ImplicationalBase::aggregated() const {
  std::vector<Implication> out;
  for (const Implication& imp : implications_) {
    if (!out.empty() && out.back().premise == imp.premise) {
      out.back().conclusion |= imp.conclusion;
    } else {
      out.push_back(imp);
    }
  }
  return ImplicationalBase(ground_, std::move(out), BaseForm::kAggregated);
}

ImplicationalBase ImplicationalBase::unit() const {
  std::vector<Implication> out;
  for (const Implication& imp : implications_) {
    for (int x : imp.conclusion) out.emplace_back(imp.premise, ElementSet::singleton(x));
  }
  return ImplicationalBase(ground_, std::move(out), BaseForm::kUnit);
}

ImplicationalBase ImplicationalBase::non_binary() const {
  std::vector<Implication> out;
  for (const Implication& imp : implications_) {
    if (imp.premise.size() > 1) out.push_back(imp);
  }
  return ImplicationalBase(ground_, std::move(out), form_);
}

ImplicationalBase ImplicationalBase::merged(const ImplicationalBase& other) const {
  if (!(ground_ == other.ground_)) throw GroundMismatch("merging bases over different ground sets");
  std::vector<Implication> all = unit().implications_;
  for (const Implication& imp : other.unit().implications_) all.push_back(imp);
  return ImplicationalBase(ground_, std::move(all), BaseForm::kUnit);
}

ElementSet ImplicationalBase::closure(ElementSet x) const {
  if (!ground_.admits(x)) throw GroundMismatch("set has elements outside the ground set");
  std::vector<bool> used(implications_.size(), false);
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t i = 0; i < implications_.size(); ++i) {
      if (used[i]) continue;
      const Implication& imp = implications_[i];
      if (imp.premise.subset_of(x)) {
        used[i] = true;
        if (!imp.conclusion.subset_of(x)) {
          x |= imp.conclusion;
          dirty = true;
        }
      }
    }
  }
  return x;
}

ElementSet ImplicationalBase::one_pass(ElementSet x) const {
  ElementSet out = x;
  for (const Implication& imp : implications_) {
    if (imp.premise.subset_of(x)) out |= imp.conclusion;
  }
  return out;
}

std::string ImplicationalBase::render(const Implication& imp) const {
  return ground_.render(imp.premise) + " -> " + ground_.render(imp.conclusion);
}

std::string ImplicationalBase::render() const {
  std::string out;
  for (const Implication& imp : implications_) {
    out += render(imp);
    out += '\n';
  }
  return out;
}

bool holds(const ClosureSpace& space, const Implication& imp) {
  return imp.conclusion.subset_of(space.closure(imp.premise));
}

std::vector<ElementSet> models(const ImplicationalBase& base) {
  std::vector<ElementSet> out;
  next_closure_enumerate(
      base.ground().size(), [&](ElementSet x) { return base.closure(x); },
      [&](ElementSet c) {
        out.push_back(c);
        if (out.size() > kMaxClosedSets) {
          throw CapacityExceeded("implication system has more than " +
                                 std::to_string(kMaxClosedSets) + " closed sets");
        }
      });
  canonicalize(out);
  return out;
}

}  // namespace ebase
