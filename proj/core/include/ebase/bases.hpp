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

#ifndef EBASE_BASES_HPP_
#define EBASE_BASES_HPP_

#include <vector>

#include "ebase/closure_space.hpp"
#include "ebase/generators.hpp"
#include "ebase/implication.hpp"

namespace ebase {

struct EssentialSet {
  ElementSet set;
  // The set is cl(x) for some element x.
  bool join_irreducible = false;
  // C_*, the intersection of the predecessors.
  ElementSet predecessor_meet;
  // Pseudo-closed sets whose closure is this set, canonical order.
  std::vector<ElementSet> pseudo_closed;
};

struct SpecialSets {
  // Every quasi-closed set that is not closed.
  std::vector<ElementSet> quasi_closed;
  std::vector<ElementSet> pseudo_closed;
  std::vector<EssentialSet> essential;
};

// For every X ⊆ Q, cl(X) ⊊ cl(Q) implies cl(X) ⊆ Q.
bool is_quasi_closed(const ClosureSpace& space, ElementSet q);

// Pseudo-closed sets by the recursive definition: non-closed sets P such that
// every pseudo-closed Q ⊊ P has cl(Q) ⊆ P. Found in lectic order by
// NextClosure over the saturation operator; returned in canonical order.
std::vector<ElementSet> pseudo_closed_sets(const ClosureSpace& space);

// Essential sets derived from a list of pseudo-closed sets.
std::vector<EssentialSet> essential_sets(const ClosureSpace& space,
                                         const std::vector<ElementSet>& pseudo_closed);

// Full enumeration. Pseudo-closed sets are found twice, as the minimal
// non-closed quasi-closed spanning sets of their closure and by
// pseudo_closed_sets(); a disagreement throws InvariantViolation.
SpecialSets special_sets(const ClosureSpace& space);

// a -> x for every x in cl(a) \ {a}.
ImplicationalBase binary_part(const ClosureSpace& space);
// P -> cl(P) \ P for every pseudo-closed P, aggregated form.
ImplicationalBase canonical_base(const ClosureSpace& space);
// A -> x for every A in gen(x).
ImplicationalBase canonical_direct_base(const ClosureSpace& space);
// Binary part plus A -> x for every D-generator A of x.
ImplicationalBase d_base(const ClosureSpace& space);
// Binary part plus A -> x for every E-generator A of x. Not valid in general.
ImplicationalBase e_base(const ClosureSpace& space);

struct BaseBundle {
  ImplicationalBase binary;
  ImplicationalBase canonical;
  ImplicationalBase canonical_direct;
  ImplicationalBase d_base;
  ImplicationalBase e_base;
};

BaseBundle all_bases(const ClosureSpace& space);
BaseBundle all_bases(const ClosureSpace& space, const GeneratorCatalog& catalog);

}  // namespace ebase

#endif  // EBASE_BASES_HPP_
