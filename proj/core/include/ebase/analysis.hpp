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

#ifndef EBASE_ANALYSIS_HPP_
#define EBASE_ANALYSIS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "ebase/closure_space.hpp"

namespace ebase {

struct IrreducibleCatalog {
  // Per element x: index of cl(x) and the set x_* = cl(x) \ {x}.
  std::vector<int> join_irreducible;
  std::vector<ElementSet> element_predecessor;
  // Meet-irreducible closed-set indices with their unique successor M^*.
  std::vector<int> meet_irreducible;
  std::vector<int> meet_successor;
  std::vector<int> atoms;
  std::vector<int> coatoms;
};

IrreducibleCatalog irreducibles(const ClosureSpace& space);

// Pairs (element, meet-irreducible closed-set index).
using ArrowPair = std::pair<int, int>;

struct ArrowTable {
  std::vector<ArrowPair> up;
  std::vector<ArrowPair> down;
  std::vector<ArrowPair> both;
};

// x up M: M is maximal among closed sets not containing x.
bool arrow_up(const ClosureSpace& space, int x, int m);
// x down M: x is outside M and x_* lies inside it.
bool arrow_down(const ClosureSpace& space, int x, int m);
ArrowTable arrows(const ClosureSpace& space);

struct DRelation {
  // x D a edges over elements, lexicographic.
  std::vector<std::pair<int, int>> edges;
  // M1 D* M2 edges over meet-irreducible closed-set indices.
  std::vector<std::pair<int, int>> dual_edges;
};

// Arrow-based computation, cross-checked against the D-generator based one;
// a disagreement throws InvariantViolation.
DRelation d_relation(const ClosureSpace& space);
bool is_lower_bounded(const ClosureSpace& space);
bool is_upper_bounded(const ClosureSpace& space);

// Elements prime in the whole lattice.
ElementSet primes(const ClosureSpace& space);
// x prime in the ideal of the closed set C: every minimal generator of x
// inside C is a singleton. Throws InvalidArgument when x is outside C and
// NotClosed when C is not closed.
bool is_prime_in_ideal(const ClosureSpace& space, ElementSet c, int x);
// x is not prime in the ideal of C but prime in the ideal of every
// predecessor of C containing x.
bool is_almost_prime(const ClosureSpace& space, ElementSet c, int x);

struct ClassFlags {
  bool distributive = false;
  bool join_semidistributive = false;
  bool meet_semidistributive = false;
  bool semidistributive = false;
  bool modular = false;
  bool upper_semimodular = false;
  bool lower_semimodular = false;
  bool atomistic = false;
  bool geometric = false;
  bool meet_distributive = false;
  bool join_distributive = false;
  bool lower_bounded = false;
  bool upper_bounded = false;

  bool operator==(const ClassFlags&) const = default;
};

// Names of the flags in declaration order, e.g. "join_semidistributive".
const std::vector<std::string>& class_flag_names();
bool class_flag(const ClassFlags& flags, const std::string& name);

// Every flag from its definition; SDj and SDm are checked a second time via
// the arrow characterization (InvariantViolation on disagreement).
ClassFlags classify(const ClosureSpace& space);

// Every cl(x) is a singleton.
bool is_atomistic(const ClosureSpace& space);
// Covers-based semimodular laws.
bool is_upper_semimodular(const ClosureSpace& space);
bool is_lower_semimodular(const ClosureSpace& space);
// Atomistic and upper-semimodular.
bool is_geometric(const ClosureSpace& space);
bool is_join_semidistributive(const ClosureSpace& space);

bool has_exchange_property(const ClosureSpace& space);
bool has_anti_exchange_property(const ClosureSpace& space);

// The unique binary-closure-minimal spanning set of C. Requires a
// join-semidistributive space (NotJoinSemidistributive otherwise).
ElementSet canonical_spanning_set(const ClosureSpace& space, ElementSet c);

// Dense join table over closed-set indices.
class JoinTable {
 public:
  explicit JoinTable(const ClosureSpace& space);
  int join(int i, int j) const { return table_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)]; }
  int meet(int i, int j) const { return meet_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)]; }

 private:
  std::size_t n_;
  std::vector<int> table_;
  std::vector<int> meet_;
};

}  // namespace ebase

#endif  // EBASE_ANALYSIS_HPP_
