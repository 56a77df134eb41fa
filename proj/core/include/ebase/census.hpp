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


#ifndef EBASE_CENSUS_HPP_
#define EBASE_CENSUS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "ebase/analysis.hpp"
#include "ebase/closure_space.hpp"
#include "ebase/element_set.hpp"
#include "ebase/matroid.hpp"

namespace ebase {

using Family = std::vector<ElementSet>;

// Largest ground set covered exhaustively by standard_families().
inline constexpr int kExhaustiveCensusLimit = 5;

// Least relabelling of a family over n elements: families are compared as
// sorted bit vectors. Isomorphic families get equal forms.
Family canonical_form(const Family& family, int n);

// One closed-set family per isomorphism class of standard closure systems
// on n elements, sorted. Each system is built from one on n - 1 elements
// and an element whose closure is maximal. Throws CapacityExceeded above
// kExhaustiveCensusLimit.
std::vector<Family> standard_families(int n);

// Standard systems on n + 1 elements whose ideal below a new element's
// complement is one of `sources` (systems on n elements), up to isomorphism.
// Sources that are Boolean are skipped. Every class closed under intervals
// is reached this way from its own members as far as systems with a
// coatom of size n go.
std::vector<Family> coatom_extensions(const std::vector<Family>& sources, int n);

// True for the class flags inherited by intervals (sublattice-closed).
bool interval_hereditary(const std::string& flag);

// Simple matroids of rank at most 3 on 1..max_points points, one circuit
// system per isomorphism class. Rank 3 systems come from families of lines
// with at least 3 points meeting pairwise in at most one point.
std::vector<CircuitSystem> rank3_circuit_systems(int max_points);

struct CensusSpace {
  ClosureSpace space;
  ClassFlags flags;
  // "exhaustive", "coatom-extension" or "matroid".
  std::string source;
};

// Visits census spaces with the class flag set (any space when `flag` is
// empty). Up to kExhaustiveCensusLimit elements the sweep is exhaustive;
// for max_n = 6 it adds coatom extensions of the class members on 5
// elements, which needs an interval-hereditary flag (InvalidArgument
// otherwise). "geometric" sweeps rank 3 matroids on up to max_n <= 7 points.
void for_each_census_space(int max_n, const std::string& flag,
                           const std::function<void(const CensusSpace&)>& visit);

}  // namespace ebase

#endif  // EBASE_CENSUS_HPP_
