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

#include "ebase/matroid.hpp"

#include <algorithm>

#include "ebase/analysis.hpp"
#include "ebase/bases.hpp"
#include "ebase/errors.hpp"
#include "ebase/generators.hpp"
#include "ebase/implication.hpp"

namespace ebase {

ElementSet circuit_closure(const std::vector<ElementSet>& circuits, ElementSet x) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementSet k : circuits) {
      ElementSet missing = k - x;
      if (missing.size() == 1) {
        x |= missing;
        changed = true;
      }
    }
  }
  return x;
}

ClosureSpace space_from_circuits(const CircuitSystem& system) {
  const GroundSet& g = system.ground;
  const auto& circuits = system.circuits;
  for (ElementSet k : circuits) {
    if (!g.admits(k)) throw GroundMismatch("circuit uses elements outside the ground set");
    if (k.empty()) throw CircuitAxiomViolation(k, k, "the empty set is not a circuit");
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      const ElementSet a = circuits[i];
      const ElementSet b = circuits[j];
      if (a.subset_of(b)) {
        throw CircuitAxiomViolation(a, b, "circuit " + g.render(a) + " is contained in " + g.render(b));
      }
      if (j < i) continue;
      for (int e : a & b) {
        const ElementSet rest = (a | b).without(e);
        bool found = std::any_of(circuits.begin(), circuits.end(),
                                 [rest](ElementSet k) { return k.subset_of(rest); });
        if (!found) {
          throw CircuitAxiomViolation(a, b, "weak elimination fails for circuits " + g.render(a) +
                                                " and " + g.render(b) + " on " + g.name(e));
        }
      }
    }
  }
  std::vector<ElementSet> family;
  next_closure_enumerate(
      g.size(), [&](ElementSet x) { return circuit_closure(circuits, x); },
      [&](ElementSet c) { family.push_back(c); });
  ClosureSpace space = space_from_closed_sets(g, std::move(family));
  if (!is_geometric(space)) {
    throw CircuitAxiomViolation(ElementSet(), ElementSet(), "circuit system does not induce a geometric lattice");
  }
  return space;
}

MatroidView matroid_view(const ClosureSpace& space) {
  if (!is_geometric(space)) throw NotGeometric("matroid view needs a geometric lattice");
  MatroidView view;
  // In an atomistic space binary closure is the identity, so these are the
  // minimal spanning sets of the ground set.
  view.bases = clb_minimal_spanning_sets(space, space.full());
  view.rank = view.bases.empty() ? 0 : view.bases.front().size();
  for (ElementSet b : view.bases) {
    if (b.size() != view.rank) throw InvariantViolation("matroid bases of different sizes");
  }
  for (ElementSet b1 : view.bases) {
    for (ElementSet b2 : view.bases) {
      for (int x : b1 - b2) {
        bool exchanged = false;
        for (int y : b2 - b1) {
          if (std::binary_search(view.bases.begin(), view.bases.end(), b1.without(x).with(y),
                                 CanonicalLess{})) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) throw InvariantViolation("base exchange fails");
      }
    }
  }
  std::vector<ElementSet> circuits;
  for (int x = 0; x < space.element_count(); ++x) {
    for (ElementSet a : minimal_generators(space, x)) circuits.push_back(a.with(x));
  }
  view.circuits = minimal_members(std::move(circuits));
  return view;
}

std::vector<std::string> binary_matroid_violations(const ClosureSpace& space,
                                                   const std::vector<ElementSet>& circuits) {
  std::vector<std::string> out;
  const GroundSet& g = space.ground();
  std::vector<ElementSet> essential;
  for (const EssentialSet& e : essential_sets(space, pseudo_closed_sets(space))) {
    essential.push_back(e.set);
  }
  std::vector<ElementSet> closed_circuits;
  for (ElementSet k : circuits) {
    if (space.is_closed(k)) closed_circuits.push_back(k);
  }
  canonicalize(essential);
  canonicalize(closed_circuits);
  if (essential != closed_circuits) {
    out.push_back("essential sets are not the closed circuits");
  }
  for (ElementSet a : essential) {
    for (ElementSet b : essential) {
      if (a.proper_subset_of(b)) {
        out.push_back("essential sets " + g.render(a) + " and " + g.render(b) +
                      " are comparable");
      }
    }
  }
  if (e_base(space).aggregated() != canonical_base(space)) {
    out.push_back("E-base differs from the canonical base");
  }
  return out;
}

}  // namespace ebase
