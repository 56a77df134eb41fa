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

#include "ebase/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ebase/errors.hpp"
#include "ebase/generators.hpp"

namespace ebase {

namespace {

bool is_cover(const ClosureSpace& space, int lower, int upper) {
  auto succ = space.successors(lower);
  return std::binary_search(succ.begin(), succ.end(), upper);
}

bool has_cycle(int nodes, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  for (auto [a, b] : edges) adj[static_cast<std::size_t>(a)].push_back(b);
  // 0 = unvisited, 1 = on stack, 2 = done.
  std::vector<int> state(static_cast<std::size_t>(nodes), 0);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int s = 0; s < nodes; ++s) {
    if (state[static_cast<std::size_t>(s)] != 0) continue;
    stack.push_back({s, 0});
    state[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& out = adj[static_cast<std::size_t>(v)];
      if (next < out.size()) {
        int w = out[next++];
        if (state[static_cast<std::size_t>(w)] == 1) return true;
        if (state[static_cast<std::size_t>(w)] == 0) {
          state[static_cast<std::size_t>(w)] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

bool join_semidistributive_by_definition(const ClosureSpace& space, const JoinTable& t) {
  const int n = space.closed_count();
  for (int c1 = 0; c1 < n; ++c1) {
    std::map<int, std::vector<int>> by_join;
    for (int c = 0; c < n; ++c) by_join[t.join(c1, c)].push_back(c);
    for (const auto& [j, bucket] : by_join) {
      for (std::size_t a = 0; a < bucket.size(); ++a) {
        for (std::size_t b = a + 1; b < bucket.size(); ++b) {
          if (t.join(c1, t.meet(bucket[a], bucket[b])) != j) return false;
        }
      }
    }
  }
  return true;
}

bool meet_semidistributive_by_definition(const ClosureSpace& space, const JoinTable& t) {
  const int n = space.closed_count();
  for (int c1 = 0; c1 < n; ++c1) {
    std::map<int, std::vector<int>> by_meet;
    for (int c = 0; c < n; ++c) by_meet[t.meet(c1, c)].push_back(c);
    for (const auto& [m, bucket] : by_meet) {
      for (std::size_t a = 0; a < bucket.size(); ++a) {
        for (std::size_t b = a + 1; b < bucket.size(); ++b) {
          if (t.meet(c1, t.join(bucket[a], bucket[b])) != m) return false;
        }
      }
    }
  }
  return true;
}

bool modular_by_definition(const ClosureSpace& space, const JoinTable& t) {
  const int n = space.closed_count();
  for (int c1 = 0; c1 < n; ++c1) {
    for (int c2 = 0; c2 < n; ++c2) {
      if (!space.closed_set(c1).subset_of(space.closed_set(c2))) continue;
      for (int c3 = 0; c3 < n; ++c3) {
        if (t.join(c1, t.meet(c3, c2)) != t.meet(t.join(c1, c3), c2)) return false;
      }
    }
  }
  return true;
}

bool upper_semimodular(const ClosureSpace& space, const JoinTable& t) {
  const int n = space.closed_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && is_cover(space, t.meet(a, b), a) && !is_cover(space, b, t.join(a, b))) return false;
    }
  }
  return true;
}

bool lower_semimodular(const ClosureSpace& space, const JoinTable& t) {
  const int n = space.closed_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && is_cover(space, a, t.join(a, b)) && !is_cover(space, t.meet(a, b), b)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_atomistic(const ClosureSpace& space) {
  for (int x = 0; x < space.element_count(); ++x) {
    if (space.element_closure(x).size() != 1) return false;
  }
  return true;
}

bool is_upper_semimodular(const ClosureSpace& space) { return upper_semimodular(space, JoinTable(space)); }

bool is_lower_semimodular(const ClosureSpace& space) { return lower_semimodular(space, JoinTable(space)); }

bool is_geometric(const ClosureSpace& space) {
  return is_atomistic(space) && is_upper_semimodular(space);
}

bool is_join_semidistributive(const ClosureSpace& space) {
  return join_semidistributive_by_definition(space, JoinTable(space));
}

JoinTable::JoinTable(const ClosureSpace& space) : n_(static_cast<std::size_t>(space.closed_count())) {
  table_.assign(n_ * n_, 0);
  meet_.assign(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      ElementSet a = space.closed_set(static_cast<int>(i));
      ElementSet b = space.closed_set(static_cast<int>(j));
      int jn = *space.index_of(space.closure(a | b));
      int mt = *space.index_of(a & b);
      table_[i * n_ + j] = table_[j * n_ + i] = jn;
      meet_[i * n_ + j] = meet_[j * n_ + i] = mt;
    }
  }
}

IrreducibleCatalog irreducibles(const ClosureSpace& space) {
  IrreducibleCatalog cat;
  for (int x = 0; x < space.element_count(); ++x) {
    ElementSet c = space.element_closure(x);
    cat.join_irreducible.push_back(*space.index_of(c));
    cat.element_predecessor.push_back(c.without(x));
  }
  for (int m : space.meet_irreducibles()) {
    cat.meet_irreducible.push_back(m);
    cat.meet_successor.push_back(space.successors(m)[0]);
  }
  const int top = space.closed_count() - 1;
  if (top > 0) {
    for (int a : space.successors(0)) cat.atoms.push_back(a);
    for (int c : space.predecessors(top)) cat.coatoms.push_back(c);
  }
  return cat;
}

bool arrow_up(const ClosureSpace& space, int x, int m) {
  if (space.closed_set(m).contains(x)) return false;
  for (int s : space.successors(m)) {
    if (!space.closed_set(s).contains(x)) return false;
  }
  return true;
}

bool arrow_down(const ClosureSpace& space, int x, int m) {
  ElementSet mset = space.closed_set(m);
  return !mset.contains(x) && space.element_closure(x).without(x).subset_of(mset);
}

ArrowTable arrows(const ClosureSpace& space) {
  ArrowTable table;
  for (int x = 0; x < space.element_count(); ++x) {
    for (int m : space.meet_irreducibles()) {
      bool up = arrow_up(space, x, m);
      bool down = arrow_down(space, x, m);
      if (up) table.up.push_back({x, m});
      if (down) table.down.push_back({x, m});
      if (up && down) table.both.push_back({x, m});
    }
  }
  return table;
}

DRelation d_relation(const ClosureSpace& space) {
  DRelation rel;
  const int n = space.element_count();
  auto mis = space.meet_irreducibles();
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < n; ++a) {
      if (a == x) continue;
      for (int m : mis) {
        if (arrow_up(space, x, m) && arrow_down(space, a, m)) {
          rel.edges.push_back({x, a});
          break;
        }
      }
    }
  }
  std::vector<std::pair<int, int>> from_generators;
  for (int x = 0; x < n; ++x) {
    ElementSet reached;
    for (ElementSet g : d_generators(space, x)) reached |= g;
    for (int a : reached) from_generators.push_back({x, a});
  }
  if (from_generators != rel.edges) {
    throw InvariantViolation("arrow-based and generator-based D-relations disagree");
  }
  for (int m1 : mis) {
    for (int m2 : mis) {
      if (m1 == m2) continue;
      for (int x = 0; x < n; ++x) {
        if (arrow_down(space, x, m1) && arrow_up(space, x, m2)) {
          rel.dual_edges.push_back({m1, m2});
          break;
        }
      }
    }
  }
  return rel;
}

bool is_lower_bounded(const ClosureSpace& space) {
  return !has_cycle(space.element_count(), d_relation(space).edges);
}

bool is_upper_bounded(const ClosureSpace& space) {
  return !has_cycle(space.closed_count(), d_relation(space).dual_edges);
}

bool is_prime_in_ideal(const ClosureSpace& space, ElementSet c, int x) {
  space.require_index(c);
  if (x < 0 || x >= space.element_count() || !c.contains(x)) {
    throw InvalidArgument("element is not a member of the closed set " + space.ground().render(c));
  }
  // A non-singleton minimal generator of x avoids every y with x in cl(y).
  ElementSet rest = c;
  for (int y : c) {
    if (space.element_closure(y).contains(x)) rest.erase(y);
  }
  return !space.closure(rest).contains(x);
}

bool is_almost_prime(const ClosureSpace& space, ElementSet c, int x) {
  if (is_prime_in_ideal(space, c, x)) return false;
  const int index = space.require_index(c);
  for (int p : space.predecessors(index)) {
    ElementSet pred = space.closed_set(p);
    if (pred.contains(x) && !is_prime_in_ideal(space, pred, x)) return false;
  }
  return true;
}

ElementSet primes(const ClosureSpace& space) {
  ElementSet out;
  for (int x = 0; x < space.element_count(); ++x) {
    if (is_prime_in_ideal(space, space.full(), x)) out.insert(x);
  }
  return out;
}

const std::vector<std::string>& class_flag_names() {
  static const std::vector<std::string> names = {
      "distributive",      "join_semidistributive", "meet_semidistributive", "semidistributive",
      "modular",           "upper_semimodular",     "lower_semimodular",     "atomistic",
      "geometric",         "meet_distributive",     "join_distributive",     "lower_bounded",
      "upper_bounded"};
  return names;
}

bool class_flag(const ClassFlags& f, const std::string& name) {
  if (name == "distributive") return f.distributive;
  if (name == "join_semidistributive") return f.join_semidistributive;
  if (name == "meet_semidistributive") return f.meet_semidistributive;
  if (name == "semidistributive") return f.semidistributive;
  if (name == "modular") return f.modular;
  if (name == "upper_semimodular") return f.upper_semimodular;
  if (name == "lower_semimodular") return f.lower_semimodular;
  if (name == "atomistic") return f.atomistic;
  if (name == "geometric") return f.geometric;
  if (name == "meet_distributive") return f.meet_distributive;
  if (name == "join_distributive") return f.join_distributive;
  if (name == "lower_bounded") return f.lower_bounded;
  if (name == "upper_bounded") return f.upper_bounded;
  throw InvalidArgument("unknown lattice class '" + name + "'");
}

ClassFlags classify(const ClosureSpace& space) {
  const JoinTable t(space);
  const int n = space.closed_count();
  ClassFlags f;

  f.distributive = true;
  for (int a = 0; a < n && f.distributive; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (space.closed_set(t.join(a, b)) != (space.closed_set(a) | space.closed_set(b))) {
        f.distributive = false;
        break;
      }
    }
  }

  f.join_semidistributive = join_semidistributive_by_definition(space, t);
  f.meet_semidistributive = meet_semidistributive_by_definition(space, t);
  f.semidistributive = f.join_semidistributive && f.meet_semidistributive;

  const ArrowTable arr = arrows(space);
  std::map<int, int> per_mi;
  std::vector<int> per_element(static_cast<std::size_t>(space.element_count()), 0);
  for (auto [x, m] : arr.both) {
    ++per_mi[m];
    ++per_element[static_cast<std::size_t>(x)];
  }
  bool sdj_arrows = true;
  for (int m : space.meet_irreducibles()) sdj_arrows = sdj_arrows && per_mi[m] == 1;
  bool sdm_arrows = std::all_of(per_element.begin(), per_element.end(), [](int c) { return c == 1; });
  if (sdj_arrows != f.join_semidistributive || sdm_arrows != f.meet_semidistributive) {
    throw InvariantViolation("semidistributivity by definition and by arrows disagree");
  }

  f.upper_semimodular = upper_semimodular(space, t);
  f.lower_semimodular = lower_semimodular(space, t);
  f.modular = modular_by_definition(space, t);
  if (f.modular != (f.upper_semimodular && f.lower_semimodular)) {
    throw InvariantViolation("modularity disagrees with the two semimodular laws");
  }

  f.atomistic = is_atomistic(space);
  f.geometric = f.atomistic && f.upper_semimodular;
  f.meet_distributive = f.lower_semimodular && f.join_semidistributive;
  f.join_distributive = f.upper_semimodular && f.meet_semidistributive;

  const DRelation rel = d_relation(space);
  f.lower_bounded = !has_cycle(space.element_count(), rel.edges);
  f.upper_bounded = !has_cycle(space.closed_count(), rel.dual_edges);
  return f;
}

bool has_exchange_property(const ClosureSpace& space) {
  for (ElementSet c : space.closed_sets()) {
    ElementSet outside = space.full() - c;
    for (int x : outside) {
      for (int y : outside) {
        if (x == y) continue;
        if (space.closure(c.with(y)).contains(x) && !space.closure(c.with(x)).contains(y)) return false;
      }
    }
  }
  return true;
}

bool has_anti_exchange_property(const ClosureSpace& space) {
  for (ElementSet c : space.closed_sets()) {
    ElementSet outside = space.full() - c;
    for (int x : outside) {
      for (int y : outside) {
        if (x == y) continue;
        if (space.closure(c.with(y)).contains(x) && space.closure(c.with(x)).contains(y)) return false;
      }
    }
  }
  return true;
}

ElementSet canonical_spanning_set(const ClosureSpace& space, ElementSet c) {
  space.require_index(c);
  if (!is_join_semidistributive(space)) {
    throw NotJoinSemidistributive("closed sets have no canonical spanning set: the lattice is not "
                                  "join-semidistributive");
  }
  std::vector<ElementSet> spanning = clb_minimal_spanning_sets(space, c);
  if (spanning.size() != 1) {
    throw InvariantViolation("join-semidistributive lattice with " + std::to_string(spanning.size()) +
                             " closure-minimal spanning sets of " + space.ground().render(c));
  }
  return spanning.front();
}

}  // namespace ebase
