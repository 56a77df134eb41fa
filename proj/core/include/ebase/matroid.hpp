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

#ifndef EBASE_MATROID_HPP_
#define EBASE_MATROID_HPP_

#include <string>
#include <vector>

#include "ebase/closure_space.hpp"

namespace ebase {

struct CircuitSystem {
  GroundSet ground;
  std::vector<ElementSet> circuits;
};

struct MatroidView {
  std::vector<ElementSet> bases;
  int rank = 0;
  std::vector<ElementSet> circuits;
};

// Closed sets of the matroid closure: X is closed when no circuit has all but
// one element inside X. Checks that circuits are non-empty, form an antichain
// and satisfy weak elimination pairwise (CircuitAxiomViolation with the
// offending pair), and that the resulting lattice is geometric. Loops and
// parallel elements yield a non-standard space (NotStandard).
ClosureSpace space_from_circuits(const CircuitSystem& system);

// The closure of X under a circuit system.
ElementSet circuit_closure(const std::vector<ElementSet>& circuits, ElementSet x);

// Bases (minimal spanning sets of the ground set), rank and circuits of a
// geometric space; base exchange is verified exhaustively. Throws
// NotGeometric.
MatroidView matroid_view(const ClosureSpace& space);

// For a circuit system the user declares binary: the essential sets must be
// exactly the circuits that are closed, pairwise incomparable, and the
// aggregated E-base must equal the canonical base. Returns a message per
// failed consequence; representability itself is not checked.
std::vector<std::string> binary_matroid_violations(const ClosureSpace& space,
                                                   const std::vector<ElementSet>& circuits);

}  // namespace ebase

#endif  // EBASE_MATROID_HPP_
