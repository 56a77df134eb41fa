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

#ifndef EBASE_GENERATORS_HPP_
#define EBASE_GENERATORS_HPP_

#include <functional>
#include <vector>

#include "ebase/closure_space.hpp"

namespace ebase {

// Inclusion-minimal Y with x outside Y and x in cl(Y), canonical order.
// Computed as the minimal transversals of the complements of the
// meet-irreducibles avoiding x.
std::vector<ElementSet> minimal_generators(const ClosureSpace& space, int x);

// Visits every set K inside `within` that is closed under binary closure,
// in a fixed order. `prune(K, reachable)` may return true to skip the
// subtree below K, where `reachable` bounds every set still to come from K.
void for_each_binary_closed(const ClosureSpace& space, ElementSet within,
                            const std::function<bool(ElementSet, ElementSet)>& prune,
                            const std::function<void(ElementSet)>& visit);

// The elements of K whose closure holds no other element of K. For a set
// closed under binary closure this is the least set with the same binary
// closure.
ElementSet binary_maximal(const ClosureSpace& space, ElementSet k);

// Spanning sets of the closed set C that no proper binary-closure refinement
// still spans. One representative per binary-closure class is returned: the
// inclusion-minimal one. Throws NotClosed.
std::vector<ElementSet> clb_minimal_spanning_sets(const ClosureSpace& space, ElementSet c);

// Generators A of x with x outside cl^b(A) such that no proper binary-closure
// refinement of A generates x; inclusion-minimal representative per
// binary-closure class.
std::vector<ElementSet> d_generators(const ClosureSpace& space, int x);

// Every set sharing the binary closure of a representative A: all B with
// A ⊆ B ⊆ cl^b(A), canonical order.
std::vector<ElementSet> binary_closure_class(const ClosureSpace& space, ElementSet a);

// D-generators whose closure is inclusion-minimal among the closures of the
// D-generators of x.
std::vector<ElementSet> e_generators_by_definition(const ClosureSpace& space, int x);
// Closure-minimal spanning sets A of closed sets C in which x is almost
// prime, with x outside cl^b(A).
std::vector<ElementSet> e_generators_by_characterization(const ClosureSpace& space, int x);
// Both computations; throws InvariantViolation when they differ.
std::vector<ElementSet> e_generators(const ClosureSpace& space, int x);

struct GeneratorCatalog {
  std::vector<std::vector<ElementSet>> gen;
  std::vector<std::vector<ElementSet>> gen_d;
  std::vector<std::vector<ElementSet>> gen_e;
};

GeneratorCatalog generator_catalog(const ClosureSpace& space);

}  // namespace ebase

#endif  // EBASE_GENERATORS_HPP_
