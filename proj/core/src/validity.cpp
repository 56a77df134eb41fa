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


#include "ebase/validity.hpp"

#include <algorithm>

#include "ebase/analysis.hpp"
#include "ebase/errors.hpp"
#include "ebase/matroid.hpp"

namespace ebase {

namespace {

constexpr int kExhaustiveLimit = 12;

Criterion criterion(bool applicable, bool holds) {
  if (!applicable) return Criterion::kNotApplicable;
  return holds ? Criterion::kHolds : Criterion::kFails;
}

bool is_antichain(const std::vector<ElementSet>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i].subset_of(family[j]) || family[j].subset_of(family[i])) return false;
    }
  }
  return true;
}

std::vector<ElementSet> sets_of(const std::vector<EssentialSet>& essential, bool non_ji_only) {
  std::vector<ElementSet> out;
  for (const EssentialSet& e : essential) {
    if (!non_ji_only || !e.join_irreducible) out.push_back(e.set);
  }
  return out;
}

bool modular_condition(const ClosureSpace& space, const std::vector<EssentialSet>& essential) {
  for (const EssentialSet& e : essential) {
    if (e.join_irreducible) continue;
    for (int p : space.predecessors(space.require_index(e.set))) {
      if ((space.closed_set(p) - e.predecessor_meet).size() != 1) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::kHolds:
      return "holds";
    case Criterion::kFails:
      return "fails";
    case Criterion::kNotApplicable:
      return "not_applicable";
  }
  return "not_applicable";
}

ValidityCheck is_valid_ib(const ClosureSpace& space, const ImplicationalBase& base,
                          const std::vector<ElementSet>& pseudo_closed) {
  if (!(base.ground() == space.ground())) {
    throw GroundMismatch("implicational base and space have different ground sets");
  }
  ValidityCheck out{true, std::nullopt};
  for (const Implication& imp : base.implications()) {
    if (!holds(space, imp)) {
      out = {false, imp.premise};
      break;
    }
  }
  if (out.valid) {
    for (ElementSet p : pseudo_closed) {
      if (base.closure(p) != space.closure(p)) {
        out = {false, p};
        break;
      }
    }
  }
  if (space.element_count() <= kExhaustiveLimit) {
    bool exhaustive_valid = true;
    const ElementSet::Word limit = ElementSet::Word{1} << space.element_count();
    for (ElementSet::Word bits = 0; bits < limit && exhaustive_valid; ++bits) {
      const ElementSet x(bits);
      exhaustive_valid = base.closure(x) == space.closure(x);
    }
    if (exhaustive_valid != out.valid) {
      throw InvariantViolation("validity by pseudo-closed sets and by exhaustive comparison differ");
    }
  }
  return out;
}

ValidityCheck is_valid_ib(const ClosureSpace& space, const ImplicationalBase& base) {
  return is_valid_ib(space, base, pseudo_closed_sets(space));
}

Criterion modular_criterion(const ClosureSpace& space, const std::vector<EssentialSet>& essential) {
  return criterion(classify(space).modular, modular_condition(space, essential));
}

Criterion modular_criterion(const ClosureSpace& space) {
  return modular_criterion(space, essential_sets(space, pseudo_closed_sets(space)));
}

Criterion geometric_criterion(const ClosureSpace& space,
                              const std::vector<EssentialSet>& essential) {
  return criterion(is_geometric(space), is_antichain(sets_of(essential, false)));
}

Criterion geometric_criterion(const ClosureSpace& space) {
  return geometric_criterion(space, essential_sets(space, pseudo_closed_sets(space)));
}

ValidityReport faulty_sets(const ClosureSpace& space) {
  const std::vector<ElementSet> pseudo = pseudo_closed_sets(space);
  const ImplicationalBase e = e_base(space);

  ValidityReport report;
  report.essential = essential_sets(space, pseudo);
  for (ElementSet p : pseudo) {
    const ElementSet closure = space.closure(p);
    const ElementSet reached = e.closure(p);
    if (reached != closure) {
      report.faulty_pseudo_closed.push_back({p, closure, closure - reached});
      report.faulty_essential.push_back(closure);
    }
  }
  canonicalize(report.faulty_essential);
  report.valid = report.faulty_essential.empty();

  for (const EssentialSet& ess : report.essential) {
    const bool faulty = std::find(report.faulty_essential.begin(), report.faulty_essential.end(),
                                  ess.set) != report.faulty_essential.end();
    if (faulty && ess.join_irreducible) {
      throw InvariantViolation("join-irreducible essential set " + space.ground().render(ess.set) +
                               " is faulty");
    }
  }
  if (is_valid_ib(space, e, pseudo).valid != report.valid) {
    throw InvariantViolation("faulty-set scan and E-base validity check disagree");
  }

  const ClassFlags flags = classify(space);
  const ImplicationalBase dg(space.ground(), [&] {
    std::vector<Implication> imps;
    for (ElementSet p : pseudo) imps.emplace_back(p, space.closure(p));
    return imps;
  }(), BaseForm::kAggregated);
  const ImplicationalBase e_aggregated = e.aggregated();

  report.sd_predicts_valid = criterion(flags.semidistributive,
                                       report.valid && e_aggregated.size() == dg.size());
  report.modular_criterion = criterion(flags.modular, modular_condition(space, report.essential));
  report.geometric_criterion =
      criterion(flags.geometric, is_antichain(sets_of(report.essential, false)));
  const bool incomparable = is_antichain(sets_of(report.essential, true));
  report.incomparable_criterion =
      criterion(incomparable, report.valid && (!flags.atomistic || e_aggregated == dg));

  auto expect = [&](Criterion c, bool expected_holds, const std::string& what) {
    if (c == Criterion::kNotApplicable) return;
    if ((c == Criterion::kHolds) != expected_holds) report.inconsistencies.push_back(what);
  };
  expect(report.sd_predicts_valid, true,
         "semidistributive space without a valid minimum-size E-base");
  expect(report.modular_criterion, report.valid,
         "modular predecessor criterion disagrees with E-base validity");
  expect(report.geometric_criterion, report.valid,
         "essential antichain criterion disagrees with E-base validity");
  if (flags.geometric && report.valid && e_aggregated != dg) {
    report.inconsistencies.push_back("valid geometric space whose E-base is not the canonical base");
  }
  expect(report.incomparable_criterion, true,
         "incomparable non-ji essential sets without a valid E-base");
  return report;
}

std::vector<ElementSet> minimal_faulty(const ClosureSpace& space) {
  return minimal_members(faulty_sets(space).faulty_essential);
}

std::optional<AlmostPrimeWitness> matroid_almost_prime_witness(const ClosureSpace& space) {
  if (!is_geometric(space)) throw NotGeometric("almost-prime witness needs a geometric space");
  const ElementSet full = space.full();
  const std::vector<ElementSet> pseudo = pseudo_closed_sets(space);
  const std::vector<EssentialSet> essential = essential_sets(space, pseudo);
  std::vector<ElementSet> others;
  bool full_essential = false;
  for (const EssentialSet& e : essential) {
    if (e.set == full) {
      full_essential = true;
    } else {
      others.push_back(e.set);
    }
  }
  if (!full_essential || others.empty() || !is_antichain(others)) return std::nullopt;

  const ImplicationalBase e = e_base(space);
  AlmostPrimeWitness w;
  for (int x = 0; x < space.element_count(); ++x) {
    if (is_almost_prime(space, full, x)) w.almost_primes.insert(x);
  }

  if (w.almost_primes.empty()) {
    w.no_almost_primes = true;
    for (ElementSet p : pseudo) {
      if (space.closure(p) == full && e.closure(p) != full) {
        w.spanning = p;
        break;
      }
    }
    if (w.spanning.empty()) {
      throw InvariantViolation("no almost primes, yet every pseudo-closed set spanning the ground "
                               "set is recovered by the E-base");
    }
  } else {
    const MatroidView view = matroid_view(space);
    int best = -1;
    for (ElementSet b : view.bases) {
      const int hits = (b & w.almost_primes).size();
      if (hits > best) {
        best = hits;
        w.base = b;
      }
    }
    if (best != std::min(view.rank, w.almost_primes.size())) {
      throw InvariantViolation("no base holds min(rank, #almost primes) almost primes");
    }
    if (w.almost_primes.subset_of(w.base)) {
      w.spanning = w.base;
    } else if (w.base.subset_of(w.almost_primes)) {
      w.spanning = w.almost_primes;
    } else {
      throw InvariantViolation("best base and almost primes are incomparable");
    }
  }

  w.e_closure = e.closure(w.spanning);
  if (space.closure(w.spanning) != full || w.e_closure == full) {
    throw InvariantViolation("almost-prime witness does not expose a gap in the E-base");
  }
  w.missing = (full - w.e_closure).lowest();
  return w;
}

}  // namespace ebase
