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

#include "ebase/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ebase/analysis.hpp"
#include "ebase/errors.hpp"

namespace ebase {

namespace {

void require_element(const ClosureSpace& space, int x) {
  if (x < 0 || x >= space.element_count()) {
    throw GroundMismatch("element index " + std::to_string(x) + " is outside the ground set");
  }
}

// Elements sorted so that every element follows the members of its closure.
std::vector<int> linear_extension(const ClosureSpace& space) {
  std::vector<int> order(static_cast<std::size_t>(space.element_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return space.element_closure(a).size() < space.element_closure(b).size();
  });
  return order;
}

// {z : y in cl(z)} per element y.
std::vector<ElementSet> elements_above(const ClosureSpace& space) {
  std::vector<ElementSet> above(static_cast<std::size_t>(space.element_count()));
  for (int z = 0; z < space.element_count(); ++z) {
    for (int y : space.element_closure(z)) above[static_cast<std::size_t>(y)].insert(z);
  }
  return above;
}

struct DownSetWalker {
  const std::vector<int>& order;
  const std::vector<ElementSet>& above;
  const std::vector<ElementSet>& rest;
  const std::function<bool(ElementSet, ElementSet)>& prune;
  const std::function<void(ElementSet)>& visit;

  void run(std::size_t i, ElementSet k, ElementSet blocked) const {
    if (i == order.size()) {
      visit(k);
      return;
    }
    if (prune && prune(k, k | (rest[i] - blocked))) return;
    const int y = order[i];
    if (!blocked.contains(y)) run(i + 1, k.with(y), blocked);
    run(i + 1, k, blocked | above[static_cast<std::size_t>(y)]);
  }
};

}  // namespace

std::vector<ElementSet> minimal_generators(const ClosureSpace& space, int x) {
  require_element(space, x);
  const ElementSet full = space.full();
  std::vector<ElementSet> edges;
  for (int m : space.meet_irreducibles()) {
    ElementSet mset = space.closed_set(m);
    if (mset.contains(x)) continue;
    ElementSet edge = (full - mset).without(x);
    if (edge.empty()) return {};
    edges.push_back(edge);
  }
  edges = minimal_members(std::move(edges));
  std::vector<ElementSet> transversals{ElementSet()};
  for (ElementSet edge : edges) {
    std::vector<ElementSet> next;
    for (ElementSet t : transversals) {
      if (t.intersects(edge)) {
        next.push_back(t);
      } else {
        for (int e : edge) next.push_back(t.with(e));
      }
    }
    transversals = minimal_members(std::move(next));
  }
  // With no meet-irreducible avoiding x, x lies in cl(∅), impossible in a
  // standard space; the empty transversal is then no generator.
  if (edges.empty()) return {};
  return transversals;
}

void for_each_binary_closed(const ClosureSpace& space, ElementSet within,
                            const std::function<bool(ElementSet, ElementSet)>& prune,
                            const std::function<void(ElementSet)>& visit) {
  space.require_admits(within);
  std::vector<int> order;
  for (int y : linear_extension(space)) {
    if (within.contains(y)) order.push_back(y);
  }
  const std::vector<ElementSet> above = elements_above(space);
  std::vector<ElementSet> rest(order.size() + 1);
  for (std::size_t i = order.size(); i-- > 0;) rest[i] = rest[i + 1].with(order[i]);
  // Elements whose closure leaves `within` can never be included.
  ElementSet blocked;
  for (int y : within) {
    if (!space.element_closure(y).subset_of(within)) blocked.insert(y);
  }
  DownSetWalker walker{order, above, rest, prune, visit};
  walker.run(0, ElementSet(), blocked);
}

ElementSet binary_maximal(const ClosureSpace& space, ElementSet k) {
  ElementSet out;
  for (int m : k) {
    bool covered = false;
    for (int y : k) {
      if (y != m && space.element_closure(y).contains(m)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.insert(m);
  }
  return out;
}

std::vector<ElementSet> clb_minimal_spanning_sets(const ClosureSpace& space, ElementSet c) {
  space.require_index(c);
  std::vector<ElementSet> out;
  for_each_binary_closed(
      space, c, [&](ElementSet, ElementSet reachable) { return space.closure(reachable) != c; },
      [&](ElementSet k) {
        if (space.closure(k) != c) return;
        ElementSet top = binary_maximal(space, k);
        for (int m : top) {
          if (space.closure(k.without(m)) == c) return;
        }
        out.push_back(top);
      });
  canonicalize(out);
  return out;
}

std::vector<ElementSet> d_generators(const ClosureSpace& space, int x) {
  std::vector<ElementSet> gens;
  for (ElementSet a : minimal_generators(space, x)) {
    if (a.size() > 1) gens.push_back(a);
  }
  std::vector<ElementSet> bin(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) bin[i] = space.binary_closure(gens[i]);
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool refined = false;
    for (std::size_t j = 0; j < gens.size() && !refined; ++j) {
      refined = bin[j].proper_subset_of(bin[i]);
    }
    if (!refined) out.push_back(gens[i]);
  }
  canonicalize(out);
  return out;
}

std::vector<ElementSet> binary_closure_class(const ClosureSpace& space, ElementSet a) {
  const ElementSet k = space.binary_closure(a);
  const ElementSet base = binary_maximal(space, k);
  const ElementSet free = k - base;
  std::vector<ElementSet> out;
  // Enumerate the subsets of `free` by the standard submask walk.
  ElementSet::Word sub = free.bits();
  while (true) {
    out.push_back(base | ElementSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & free.bits();
  }
  canonicalize(out);
  return out;
}

std::vector<ElementSet> e_generators_by_definition(const ClosureSpace& space, int x) {
  const std::vector<ElementSet> gens = d_generators(space, x);
  std::vector<ElementSet> closures;
  for (ElementSet a : gens) closures.push_back(space.closure(a));
  const std::vector<ElementSet> lowest = minimal_members(closures);
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (std::find(lowest.begin(), lowest.end(), closures[i]) != lowest.end()) out.push_back(gens[i]);
  }
  canonicalize(out);
  return out;
}

std::vector<ElementSet> e_generators_by_characterization(const ClosureSpace& space, int x) {
  require_element(space, x);
  std::vector<ElementSet> out;
  for (ElementSet c : space.closed_sets()) {
    if (!c.contains(x) || !is_almost_prime(space, c, x)) continue;
    for (ElementSet a : clb_minimal_spanning_sets(space, c)) {
      if (!space.binary_closure(a).contains(x)) out.push_back(a);
    }
  }
  canonicalize(out);
  return out;
}

std::vector<ElementSet> e_generators(const ClosureSpace& space, int x) {
  std::vector<ElementSet> by_definition = e_generators_by_definition(space, x);
  std::vector<ElementSet> by_characterization = e_generators_by_characterization(space, x);
  if (by_definition != by_characterization) {
    std::string a;
    std::string b;
    for (ElementSet s : by_definition) a += " " + space.ground().render(s);
    for (ElementSet s : by_characterization) b += " " + space.ground().render(s);
    throw InvariantViolation("E-generators of " + space.ground().name(x) +
                             " disagree: definition gives {" + a + " }, characterization gives {" +
                             b + " }");
  }
  return by_definition;
}

GeneratorCatalog generator_catalog(const ClosureSpace& space) {
  GeneratorCatalog catalog;
  for (int x = 0; x < space.element_count(); ++x) {
    catalog.gen.push_back(minimal_generators(space, x));
    catalog.gen_d.push_back(d_generators(space, x));
    catalog.gen_e.push_back(e_generators(space, x));
  }
  return catalog;
}

}  // namespace ebase
