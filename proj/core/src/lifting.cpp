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


#include "ebase/lifting.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ebase/bases.hpp"
#include "ebase/errors.hpp"
#include "ebase/analysis.hpp"
#include "ebase/generators.hpp"
#include "ebase/validity.hpp"

namespace ebase {

namespace {

constexpr int kExhaustivePsiLimit = 10;
constexpr int kPsiSamples = 1000;
constexpr std::uint32_t kPsiSeed = 0x5eed2026;

void require(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation("lift: " + what);
}

std::vector<ElementSet> sets_at(const ClosureSpace& space, std::span<const int> indices) {
  std::vector<ElementSet> out;
  for (int i : indices) out.push_back(space.closed_set(i));
  canonicalize(out);
  return out;
}

// f(Z): every y_{i,j} whose lifted C_j lies inside Z.
struct LiftMap {
  std::vector<std::pair<ElementSet, ElementSet>> lifted_and_ys;

  ElementSet operator()(ElementSet z) const {
    ElementSet out;
    for (const auto& [c, ys] : lifted_and_ys) {
      if (c.subset_of(z)) out |= ys;
    }
    return out;
  }
};

void check_psi(const ClosureSpace& source, const ClosureSpace& target, const LiftMap& f) {
  auto check = [&](ElementSet z) {
    const ElementSet c = source.closure(z);
    require(target.closure(z) == (c | f(c)),
            "closure of " + source.ground().render(z) + " is not cl(Z) + f(cl(Z))");
  };
  const int n = source.element_count();
  if (n <= kExhaustivePsiLimit) {
    const ElementSet::Word limit = ElementSet::Word{1} << n;
    for (ElementSet::Word bits = 0; bits < limit; ++bits) check(ElementSet(bits));
    return;
  }
  std::mt19937 rng(kPsiSeed);
  std::uniform_int_distribution<ElementSet::Word> pick(0, source.full().bits());
  for (int k = 0; k < kPsiSamples; ++k) check(ElementSet(pick(rng)) & source.full());
}

}  // namespace

std::string_view family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kLifted:
      return "F_L";
    case FamilyTag::kKept:
      return "F_C\\L";
    case FamilyTag::kInserted:
      return "F_Y";
  }
  return "F_C\\L";
}

LiftOutcome lift(const ClosureSpace& space, const std::vector<ElementSet>& lifted, int round,
                 const LiftAliases& aliases) {
  std::vector<int> lifted_index;
  for (ElementSet c : lifted) {
    const int j = space.require_index(c);
    if (j == 0) throw InvalidArgument("the empty closed set cannot be lifted");
    lifted_index.push_back(j);
  }
  std::sort(lifted_index.begin(), lifted_index.end());
  lifted_index.erase(std::unique(lifted_index.begin(), lifted_index.end()), lifted_index.end());

  std::vector<std::string> names = space.ground().names();
  std::vector<NewElement> fresh;
  LiftMap f;
  for (int j : lifted_index) {
    ElementSet ys;
    for (int i : space.predecessors(j)) {
      std::string label;
      if (auto it = aliases.find({i, j}); it != aliases.end()) {
        label = it->second;
      } else {
        label = "y_" + std::to_string(i) + "_" + std::to_string(j);
        if (round > 0) label += "_r" + std::to_string(round);
      }
      if (std::find(names.begin(), names.end(), label) != names.end()) {
        throw LabelCollision("new element label '" + label + "' is already in use");
      }
      const int element = static_cast<int>(names.size());
      if (element >= kMaxElements) {
        throw CapacityExceeded("lifting needs more than " + std::to_string(kMaxElements) +
                               " elements");
      }
      names.push_back(label);
      fresh.push_back({i, j, element, label});
      ys.insert(element);
    }
    f.lifted_and_ys.emplace_back(space.closed_set(j), ys);
  }
  GroundSet ground(names);

  std::vector<ElementSet> image(static_cast<std::size_t>(space.closed_count()));
  for (int i = 0; i < space.closed_count(); ++i) {
    const ElementSet c = space.closed_set(i);
    image[static_cast<std::size_t>(i)] = c | f(c);
  }
  std::vector<ElementSet> family = image;
  for (const NewElement& y : fresh) {
    family.push_back(image[static_cast<std::size_t>(y.lower)].with(y.element));
  }

  std::optional<ClosureSpace> built;
  try {
    built = space_from_closed_sets(ground, family);
  } catch (const InvalidArgument& e) {
    throw InvariantViolation(std::string("lift: target is not a standard closure system: ") +
                             e.what());
  }
  const ClosureSpace& target = *built;

  std::vector<FamilyTag> tags(static_cast<std::size_t>(target.closed_count()), FamilyTag::kKept);
  for (int j : lifted_index) {
    tags[static_cast<std::size_t>(target.require_index(image[static_cast<std::size_t>(j)]))] =
        FamilyTag::kLifted;
  }
  for (const NewElement& y : fresh) {
    const ElementSet fij = image[static_cast<std::size_t>(y.lower)].with(y.element);
    tags[static_cast<std::size_t>(target.require_index(fij))] = FamilyTag::kInserted;
  }

  check_psi(space, target, f);
  for (const NewElement& y : fresh) {
    const ElementSet fi = image[static_cast<std::size_t>(y.lower)];
    const ElementSet fj = image[static_cast<std::size_t>(y.upper)];
    const ElementSet fij = fi.with(y.element);
    require(target.element_closure(y.element) == fij, "closure of " + y.label + " is not F_i + y");
    const int k = target.require_index(fij);
    require(sets_at(target, target.predecessors(k)) == std::vector<ElementSet>{fi},
            y.label + " is not covering F_i alone");
    require(sets_at(target, target.successors(k)) == std::vector<ElementSet>{fj},
            y.label + " is not covered by F_j alone");
  }
  for (int j = 1; j < space.closed_count(); ++j) {
    const ElementSet fj = image[static_cast<std::size_t>(j)];
    std::vector<ElementSet> expected;
    if (std::binary_search(lifted_index.begin(), lifted_index.end(), j)) {
      for (const NewElement& y : fresh) {
        if (y.upper == j) expected.push_back(image[static_cast<std::size_t>(y.lower)].with(y.element));
      }
    } else {
      for (int i : space.predecessors(j)) expected.push_back(image[static_cast<std::size_t>(i)]);
    }
    canonicalize(expected);
    require(sets_at(target, target.predecessors(target.require_index(fj))) == expected,
            "predecessors of the image of " + space.ground().render(space.closed_set(j)) +
                " are not the expected ones");
  }
  require(verify_embedding(space, target, image), "source is not a sublattice of the target");

  std::vector<ElementSet> lifted_sets;
  std::vector<ElementSet> lifted_images;
  for (int j : lifted_index) {
    lifted_sets.push_back(space.closed_set(j));
    lifted_images.push_back(image[static_cast<std::size_t>(j)]);
  }
  LiftRound record{space.ground(), lifted_sets, lifted_images, static_cast<int>(fresh.size())};
  return LiftOutcome{space,          target, std::move(lifted_sets), std::move(fresh),
                     std::move(tags), std::move(image), {std::move(record)}};
}

LiftOutcome lift_until_valid(const ClosureSpace& space) {
  LiftOutcome out{space, space, {}, {}, {}, {}, {}};
  out.tags.assign(static_cast<std::size_t>(space.closed_count()), FamilyTag::kKept);
  out.embedding.assign(space.closed_sets().begin(), space.closed_sets().end());
  std::vector<LiftRound> rounds;
  for (int round = 1;; ++round) {
    const std::vector<ElementSet> faulty = minimal_faulty(out.target);
    if (faulty.empty()) break;
    if (round > space.height()) {
      throw InvariantViolation("lifting did not converge within the height of the source lattice");
    }
    LiftOutcome step = lift(out.target, faulty, round);
    for (ElementSet& e : out.embedding) {
      e = step.embedding[static_cast<std::size_t>(out.target.require_index(e))];
    }
    rounds.push_back(step.rounds.front());
    out.source = std::move(step.source);
    out.target = std::move(step.target);
    out.lifted = std::move(step.lifted);
    out.new_elements = std::move(step.new_elements);
    out.tags = std::move(step.tags);
  }
  out.rounds = std::move(rounds);
  if (!out.rounds.empty() && !verify_embedding(space, out.target, out.embedding)) {
    throw InvariantViolation("iterated lifting lost the sublattice embedding");
  }
  return out;
}

LiftOutcome lift_all(const ClosureSpace& space) {
  std::vector<ElementSet> all(space.closed_sets().begin() + 1, space.closed_sets().end());
  LiftOutcome out = lift(space, all);
  if (!faulty_sets(out.target).valid) {
    throw InvariantViolation("lifting every closed set left a faulty essential set");
  }
  return out;
}

bool verify_embedding(const ClosureSpace& source, const ClosureSpace& target,
                      const std::vector<ElementSet>& map) {
  if (map.size() != static_cast<std::size_t>(source.closed_count())) {
    throw InvalidArgument("embedding must map every closed set of the source");
  }
  const int m = source.closed_count();
  for (ElementSet e : map) {
    if (!target.is_closed(e)) return false;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const ElementSet ci = source.closed_set(i);
      const ElementSet cj = source.closed_set(j);
      const ElementSet fi = map[static_cast<std::size_t>(i)];
      const ElementSet fj = map[static_cast<std::size_t>(j)];
      if (i != j && fi == fj) return false;
      if (ci.subset_of(cj) != fi.subset_of(fj) || cj.subset_of(ci) != fj.subset_of(fi)) {
        return false;
      }
      const auto image_of = [&](ElementSet c) {
        return map[static_cast<std::size_t>(source.require_index(c))];
      };
      if (image_of(source.meet(ci, cj)) != target.meet(fi, fj)) return false;
      if (image_of(source.join(ci, cj)) != target.join(fi, fj)) return false;
    }
  }
  return true;
}

LiftAudit audit_lift(const LiftOutcome& outcome) {
  LiftAudit audit;
  const ClosureSpace& target = outcome.target;
  const GroundSet& g = target.ground();
  const ValidityReport report = faulty_sets(target);
  std::set<ElementSet, CanonicalLess> essential;
  for (const EssentialSet& e : report.essential) essential.insert(e.set);
  const std::set<ElementSet, CanonicalLess> faulty(report.faulty_essential.begin(),
                                                   report.faulty_essential.end());
  const std::vector<ElementSet>& images = outcome.rounds.empty()
                                              ? std::vector<ElementSet>{}
                                              : outcome.rounds.back().lifted_images;

  for (ElementSet fj : images) {
    const int index = target.require_index(fj);
    if (!essential.contains(fj) || faulty.contains(fj)) {
      audit.lifted_essential_not_faulty = false;
      audit.failures.push_back("lifted " + g.render(fj) + " is not an essential, non-faulty set");
    }
    if (target.predecessors(index).size() < 2) continue;
    const std::vector<ElementSet> spanning = clb_minimal_spanning_sets(target, fj);
    for (const NewElement& y : outcome.new_elements) {
      const int k = target.require_index(target.element_closure(y.element));
      if (target.closed_set(target.successors(k)[0]) != fj) continue;
      if (!is_almost_prime(target, fj, y.element)) {
        audit.inserted_almost_prime = false;
        audit.failures.push_back(y.label + " is not almost prime below " + g.render(fj));
      }
      for (ElementSet a : spanning) {
        if (target.binary_closure(a).contains(y.element)) {
          audit.inserted_outside_spanning = false;
          audit.failures.push_back(y.label + " lies in the binary closure of spanning set " +
                                   g.render(a) + " of " + g.render(fj));
        }
      }
    }
  }
  for (ElementSet f : faulty) {
    const FamilyTag tag = outcome.tags[static_cast<std::size_t>(target.require_index(f))];
    const bool above = std::any_of(images.begin(), images.end(),
                                   [&](ElementSet fi) { return fi.proper_subset_of(f); });
    if (tag != FamilyTag::kKept || !above) {
      audit.faults_above_lifted = false;
      audit.failures.push_back("faulty " + g.render(f) + " is not an unlifted set above a lifted one");
    }
  }
  return audit;
}

}  // namespace ebase
