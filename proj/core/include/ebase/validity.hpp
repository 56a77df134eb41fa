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


#ifndef EBASE_VALIDITY_HPP_
#define EBASE_VALIDITY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ebase/bases.hpp"
#include "ebase/closure_space.hpp"
#include "ebase/implication.hpp"

namespace ebase {

struct ValidityCheck {
  bool valid = false;
  // A set X whose closure under the base differs from cl(X); set when invalid.
  std::optional<ElementSet> witness;
};

// The base is valid when every implication holds and forward chaining maps
// every pseudo-closed set to its closure. With at most 12 elements the answer
// is compared against all 2^n subsets; a disagreement throws
// InvariantViolation. Throws GroundMismatch.
ValidityCheck is_valid_ib(const ClosureSpace& space, const ImplicationalBase& base);
ValidityCheck is_valid_ib(const ClosureSpace& space, const ImplicationalBase& base,
                          const std::vector<ElementSet>& pseudo_closed);

enum class Criterion { kHolds, kFails, kNotApplicable };

// "holds", "fails" or "not_applicable".
std::string_view criterion_name(Criterion c);

struct FaultyPseudoClosed {
  ElementSet set;
  ElementSet closure;
  // cl(P) minus the closure of P under the E-base.
  ElementSet gap;
};

struct ValidityReport {
  bool valid = false;
  std::vector<EssentialSet> essential;
  std::vector<ElementSet> faulty_essential;
  std::vector<FaultyPseudoClosed> faulty_pseudo_closed;
  // Semidistributive: valid with as many aggregated E-implications as
  // canonical-base implications.
  Criterion sd_predicts_valid = Criterion::kNotApplicable;
  Criterion modular_criterion = Criterion::kNotApplicable;
  Criterion geometric_criterion = Criterion::kNotApplicable;
  // Non-ji essential sets pairwise incomparable: valid, and equal to the
  // canonical base when atomistic.
  Criterion incomparable_criterion = Criterion::kNotApplicable;
  // Criteria whose verdict contradicts the computed validity. Always empty
  // unless something is wrong.
  std::vector<std::string> inconsistencies;
};

// Faulty pseudo-closed and essential sets of the E-base with every criterion
// evaluated and cross-checked.
ValidityReport faulty_sets(const ClosureSpace& space);

// Modular spaces: every predecessor C' of every non-ji essential C has
// |C' \ C_*| = 1.
Criterion modular_criterion(const ClosureSpace& space);
Criterion modular_criterion(const ClosureSpace& space, const std::vector<EssentialSet>& essential);
// Geometric spaces: the essential sets form an antichain.
Criterion geometric_criterion(const ClosureSpace& space);
Criterion geometric_criterion(const ClosureSpace& space, const std::vector<EssentialSet>& essential);

// Inclusion-minimal faulty essential sets.
std::vector<ElementSet> minimal_faulty(const ClosureSpace& space);

struct AlmostPrimeWitness {
  // Elements almost prime in the whole lattice.
  ElementSet almost_primes;
  // A base with as many almost primes as possible.
  ElementSet base;
  // The larger of the two; it spans the ground set.
  ElementSet spanning;
  ElementSet e_closure;
  int missing = -1;
  // No almost primes: `spanning` is then a faulty pseudo-closed set.
  bool no_almost_primes = false;
};

// Explicit failure of the E-base on a geometric space whose ground set is
// essential while the other essential sets are pairwise incomparable (and
// there is at least one). nullopt when the essential sets are not in that
// configuration. Throws NotGeometric.
std::optional<AlmostPrimeWitness> matroid_almost_prime_witness(const ClosureSpace& space);

}  // namespace ebase

#endif  // EBASE_VALIDITY_HPP_
