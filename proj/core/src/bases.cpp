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

#include "ebase/bases.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "ebase/errors.hpp"

namespace ebase {

bool is_quasi_closed(const ClosureSpace& space, ElementSet q) {
  const ElementSet c = space.closure(q);
  // Every X ⊆ Q with cl(X) ⊊ cl(Q) lies in Q ∩ E for the closed set E = cl(X).
  for (ElementSet e : space.closed_sets()) {
    if (!e.proper_subset_of(c)) continue;
    if (!space.closure(q & e).subset_of(q)) return false;
  }
  return true;
}

std::vector<ElementSet> pseudo_closed_sets(const ClosureSpace& space) {
  std::vector<Implication> found;
  auto saturate = [&](ElementSet x) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Implication& imp : found) {
        if (imp.premise.proper_subset_of(x) && !imp.conclusion.subset_of(x)) {
          x |= imp.conclusion;
          changed = true;
        }
      }
    }
    return x;
  };
  std::vector<ElementSet> out;
  std::optional<ElementSet> current = saturate(ElementSet());
  while (current) {
    const ElementSet c = space.closure(*current);
    if (c != *current) {
      out.push_back(*current);
      found.emplace_back(*current, c);
    }
    current = next_closed(*current, space.element_count(), saturate);
  }
  canonicalize(out);
  return out;
}

std::vector<EssentialSet> essential_sets(const ClosureSpace& space,
                                         const std::vector<ElementSet>& pseudo_closed) {
  std::map<int, EssentialSet> by_index;
  for (ElementSet p : pseudo_closed) {
    const ElementSet c = space.closure(p);
    const int index = *space.index_of(c);
    EssentialSet& e = by_index[index];
    e.set = c;
    e.pseudo_closed.push_back(p);
  }
  std::vector<EssentialSet> out;
  for (auto& [index, e] : by_index) {
    e.predecessor_meet = space.predecessor_meet(index);
    e.join_irreducible = space.predecessors(index).size() == 1;
    canonicalize(e.pseudo_closed);
    out.push_back(std::move(e));
  }
  return out;
}

SpecialSets special_sets(const ClosureSpace& space) {
  // Non-closed quasi-closed sets are closed under binary closure unless their
  // closure is some cl(x); those are {x} ∪ R with R closed inside x_*.
  std::vector<ElementSet> candidates;
  for_each_binary_closed(space, space.full(), nullptr, [&](ElementSet k) {
    if (!space.is_closed(k)) candidates.push_back(k);
  });
  for (int x = 0; x < space.element_count(); ++x) {
    const ElementSet below = space.element_closure(x).without(x);
    for (ElementSet r : space.closed_sets()) {
      if (r.subset_of(below) && !space.is_closed(r.with(x))) candidates.push_back(r.with(x));
    }
  }
  canonicalize(candidates);

  SpecialSets out;
  for (ElementSet q : candidates) {
    if (is_quasi_closed(space, q)) out.quasi_closed.push_back(q);
  }
  std::map<int, std::vector<ElementSet>> by_closure;
  for (ElementSet q : out.quasi_closed) by_closure[*space.index_of(space.closure(q))].push_back(q);
  for (auto& [index, family] : by_closure) {
    for (ElementSet p : minimal_members(family)) out.pseudo_closed.push_back(p);
  }
  canonicalize(out.pseudo_closed);

  if (out.pseudo_closed != pseudo_closed_sets(space)) {
    throw InvariantViolation("pseudo-closed sets by minimal quasi-closed spanning sets and by "
                             "recursive saturation disagree");
  }
  out.essential = essential_sets(space, out.pseudo_closed);
  return out;
}

ImplicationalBase binary_part(const ClosureSpace& space) {
  std::vector<Implication> imps;
  for (int a = 0; a < space.element_count(); ++a) {
    for (int x : space.element_closure(a).without(a)) {
      imps.emplace_back(ElementSet::singleton(a), ElementSet::singleton(x));
    }
  }
  return ImplicationalBase(space.ground(), std::move(imps));
}

ImplicationalBase canonical_base(const ClosureSpace& space) {
  std::vector<Implication> imps;
  for (ElementSet p : pseudo_closed_sets(space)) imps.emplace_back(p, space.closure(p));
  return ImplicationalBase(space.ground(), std::move(imps), BaseForm::kAggregated);
}

namespace {

ImplicationalBase from_generators(const ClosureSpace& space,
                                  const std::vector<std::vector<ElementSet>>& families,
                                  bool with_binary_part) {
  std::vector<Implication> imps;
  if (with_binary_part) imps = binary_part(space).implications();
  for (int x = 0; x < space.element_count(); ++x) {
    for (ElementSet a : families[static_cast<std::size_t>(x)]) {
      imps.emplace_back(a, ElementSet::singleton(x));
    }
  }
  return ImplicationalBase(space.ground(), std::move(imps));
}

}  // namespace

ImplicationalBase canonical_direct_base(const ClosureSpace& space) {
  std::vector<std::vector<ElementSet>> gen;
  for (int x = 0; x < space.element_count(); ++x) gen.push_back(minimal_generators(space, x));
  return from_generators(space, gen, false);
}

ImplicationalBase d_base(const ClosureSpace& space) {
  std::vector<std::vector<ElementSet>> gen;
  for (int x = 0; x < space.element_count(); ++x) gen.push_back(d_generators(space, x));
  return from_generators(space, gen, true);
}

ImplicationalBase e_base(const ClosureSpace& space) {
  std::vector<std::vector<ElementSet>> gen;
  for (int x = 0; x < space.element_count(); ++x) gen.push_back(e_generators(space, x));
  return from_generators(space, gen, true);
}

BaseBundle all_bases(const ClosureSpace& space, const GeneratorCatalog& catalog) {
  return BaseBundle{
      binary_part(space),
      canonical_base(space),
      from_generators(space, catalog.gen, false),
      from_generators(space, catalog.gen_d, true),
      from_generators(space, catalog.gen_e, true),
  };
}

BaseBundle all_bases(const ClosureSpace& space) {
  return all_bases(space, generator_catalog(space));
}

}  // namespace ebase
