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


#ifndef EBASE_LIFTING_HPP_
#define EBASE_LIFTING_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ebase/closure_space.hpp"

namespace ebase {

// Which family a closed set of a lifted space comes from.
enum class FamilyTag {
  kLifted,    // F_i for a lifted C_i
  kKept,      // F_i for any other C_i
  kInserted,  // F_{i,j} = F_i + y_{i,j}
};

std::string_view family_tag_name(FamilyTag tag);

// A fresh element y_{i,j} inserted on the cover C_i < C_j of the source.
struct NewElement {
  int lower;
  int upper;
  int element;  // index in the target ground set
  std::string label;
};

struct LiftRound {
  // Ground set of the space the round started from.
  GroundSet ground;
  std::vector<ElementSet> lifted;
  // Images of the lifted sets in the round's target.
  std::vector<ElementSet> lifted_images;
  int added = 0;
};

struct LiftOutcome {
  ClosureSpace source;
  ClosureSpace target;
  // Closed sets lifted in the last round, in the last round's source.
  std::vector<ElementSet> lifted;
  std::vector<NewElement> new_elements;
  // Per target closed-set index; relative to the last round.
  std::vector<FamilyTag> tags;
  // Per source closed-set index, its image C + f(C) in the target.
  std::vector<ElementSet> embedding;
  std::vector<LiftRound> rounds;
};

// Labels for new elements keyed by source cover (lower, upper); covers not
// listed get "y_<lower>_<upper>", with "_r<round>" appended when round > 0.
using LiftAliases = std::map<std::pair<int, int>, std::string>;

// Subdivides every cover C_i < C_j with C_j in `lifted` by a fresh element.
// The target is rebuilt from its closed sets and checked against the
// closure formula and covering structure of the construction; failures
// throw InvariantViolation. Throws NotClosed or InvalidArgument for a bad
// lift family, LabelCollision and CapacityExceeded.
LiftOutcome lift(const ClosureSpace& space, const std::vector<ElementSet>& lifted, int round = 0,
                 const LiftAliases& aliases = {});

// Repeatedly lifts the minimal faulty essential sets until the E-base is
// valid. More rounds than the height of the source lattice throws
// InvariantViolation, as does a final embedding that is not a sublattice.
LiftOutcome lift_until_valid(const ClosureSpace& space);

// Lifts every non-empty closed set at once; the E-base of the target must be
// valid (InvariantViolation otherwise).
LiftOutcome lift_all(const ClosureSpace& space);

// `map[i]` is the image of the i-th closed set of the source. True when the
// map is injective, an order embedding, and preserves meets and joins.
// Throws InvalidArgument when the map is not total.
bool verify_embedding(const ClosureSpace& source, const ClosureSpace& target,
                      const std::vector<ElementSet>& map);

// Checks of the almost-prime and repair properties of one lift.
struct LiftAudit {
  // Each y_{i,j} below a non-ji lifted F_j is almost prime in its ideal.
  bool inserted_almost_prime = true;
  // No y_{i,j} lies in the binary closure of a binary-closure-minimal
  // spanning set of F_j.
  bool inserted_outside_spanning = true;
  // Every lifted F_j is essential and not faulty.
  bool lifted_essential_not_faulty = true;
  // Every faulty essential set is an unlifted F_j above some lifted one.
  bool faults_above_lifted = true;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

LiftAudit audit_lift(const LiftOutcome& outcome);

}  // namespace ebase

#endif  // EBASE_LIFTING_HPP_
