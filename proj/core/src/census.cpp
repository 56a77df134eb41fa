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


#include "ebase/census.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "ebase/errors.hpp"

namespace ebase {

namespace {

using Word = ElementSet::Word;

Word relabel(Word s, const std::vector<int>& to) {
  Word out = 0;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1U) out |= Word{1} << to[static_cast<std::size_t>(i)];
  }
  return out;
}

struct FamilyLess {
  bool operator()(const Family& a, const Family& b) const {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](ElementSet x, ElementSet y) { return x.bits() < y.bits(); });
  }
};

bool by_size_descending(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.bits() < b.bits();
}

// Calls visit(chosen) for every intersection-closed subfamily of `pool`
// that contains `top`. `pool` must be intersection-closed.
void for_each_meet_closed_subfamily(Family pool, ElementSet top,
                                    const std::function<void(const Family&)>& visit) {
  std::sort(pool.begin(), pool.end(), by_size_descending);
  Family chosen;
  std::function<void(std::size_t)> step = [&](std::size_t k) {
    if (k == pool.size()) {
      visit(chosen);
      return;
    }
    const ElementSet s = pool[k];
    // Sets are visited by decreasing size, so s is forced exactly when it is
    // already the meet of two chosen sets.
    bool forced = s == top;
    for (std::size_t a = 0; a < chosen.size() && !forced; ++a) {
      for (std::size_t b = a + 1; b < chosen.size(); ++b) {
        if ((chosen[a] & chosen[b]) == s) {
          forced = true;
          break;
        }
      }
    }
    chosen.push_back(s);
    step(k + 1);
    chosen.pop_back();
    if (!forced) step(k + 1);
  };
  step(0);
}

bool contains(const Family& sorted_family, ElementSet s) {
  return std::binary_search(sorted_family.begin(), sorted_family.end(), s,
                            [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
}

void sort_bits(Family& f) {
  std::sort(f.begin(), f.end(), [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
}

bool is_standard_family(const Family& sorted_family, int n) {
  const ElementSet full = ElementSet::prefix(n);
  for (int x = 0; x < n; ++x) {
    ElementSet closure = full;
    for (ElementSet c : sorted_family) {
      if (c.contains(x)) closure &= c;
    }
    if (!contains(sorted_family, closure.without(x))) return false;
  }
  return true;
}

// Standard systems on n elements from those on n - 1: the new element x has
// a maximal closure, F0 = {C : x not in C} is the old system with or without
// its top, and F1 = {C - x : x in C} is any intersection-closed family whose
// meets with F0 stay in F0.
std::vector<Family> extend_level(const std::vector<Family>& level, int n) {
  const ElementSet rest = ElementSet::prefix(n - 1);
  const int x = n - 1;
  std::set<Family, FamilyLess> out;
  for (const Family& t : level) {
    for (bool keep_top : {true, false}) {
      Family f0;
      for (ElementSet c : t) {
        if (keep_top || c != rest) f0.push_back(c);
      }
      if (!keep_top && f0.size() == t.size()) continue;
      sort_bits(f0);
      Family admissible;
      for (Word bits = 0; bits <= rest.bits(); ++bits) {
        const ElementSet d(bits);
        bool ok = true;
        for (ElementSet c : f0) {
          if (!contains(f0, c & d)) {
            ok = false;
            break;
          }
        }
        if (ok || d == rest) admissible.push_back(d);
      }
      for_each_meet_closed_subfamily(admissible, rest, [&](const Family& f1) {
        ElementSet meet = rest;
        for (ElementSet d : f1) meet &= d;
        if (!contains(f0, meet)) return;
        Family f = f0;
        for (ElementSet d : f1) f.push_back(d.with(x));
        sort_bits(f);
        if (is_standard_family(f, n)) out.insert(canonical_form(f, n));
      });
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<Family>>& level_cache() {
  static std::vector<std::vector<Family>> levels{{Family{ElementSet()}}};
  return levels;
}

bool is_boolean(const Family& f, int n) { return f.size() == (std::size_t{1} << n); }

}  // namespace

Family canonical_form(const Family& family, int n) {
  // Elements are first ordered by relabelling invariants; only permutations
  // inside blocks of equal invariants are tried.
  std::vector<std::pair<long, int>> key;
  for (int x = 0; x < n; ++x) {
    long count = 0;
    long size_sum = 0;
    int closure_size = n + 1;
    for (ElementSet c : family) {
      if (!c.contains(x)) continue;
      ++count;
      size_sum += c.size();
      closure_size = std::min(closure_size, c.size());
    }
    key.emplace_back((count * 64 + closure_size) * 4096 + size_sum, x);
  }
  std::sort(key.begin(), key.end());
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key[static_cast<std::size_t>(j)].first == key[static_cast<std::size_t>(i)].first) {
      ++j;
    }
    blocks.emplace_back(i, j);
    i = j;
  }
  std::vector<int> slot(static_cast<std::size_t>(n));
  std::iota(slot.begin(), slot.end(), 0);
  std::vector<int> to(static_cast<std::size_t>(n));
  std::vector<Word> best;
  std::vector<Word> candidate(family.size());
  while (true) {
    for (int k = 0; k < n; ++k) {
      to[static_cast<std::size_t>(key[static_cast<std::size_t>(slot[static_cast<std::size_t>(k)])].second)] = k;
    }
    for (std::size_t i = 0; i < family.size(); ++i) candidate[i] = relabel(family[i].bits(), to);
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = candidate;
    int b = static_cast<int>(blocks.size()) - 1;
    for (; b >= 0; --b) {
      auto [lo, hi] = blocks[static_cast<std::size_t>(b)];
      if (std::next_permutation(slot.begin() + lo, slot.begin() + hi)) break;
    }
    if (b < 0) break;
  }
  Family out;
  for (Word w : best) out.emplace_back(w);
  return out;
}

std::vector<Family> standard_families(int n) {
  if (n < 0) throw InvalidArgument("negative ground-set size");
  if (n > kExhaustiveCensusLimit) {
    throw CapacityExceeded("exhaustive census stops at " + std::to_string(kExhaustiveCensusLimit) +
                           " elements");
  }
  static std::mutex guard;
  const std::lock_guard<std::mutex> lock(guard);
  auto& levels = level_cache();
  while (static_cast<int>(levels.size()) <= n) {
    levels.push_back(extend_level(levels.back(), static_cast<int>(levels.size())));
  }
  return levels[static_cast<std::size_t>(n)];
}

std::vector<Family> coatom_extensions(const std::vector<Family>& sources, int n) {
  if (n + 1 > kMaxElements) throw CapacityExceeded("census extension exceeds the element cap");
  const ElementSet rest = ElementSet::prefix(n);
  std::set<Family, FamilyLess> out;
  for (const Family& t : sources) {
    if (is_boolean(t, n)) continue;
    Family base = t;
    sort_bits(base);
    for_each_meet_closed_subfamily(base, rest, [&](const Family& f1) {
      Family f = base;
      for (ElementSet d : f1) f.push_back(d.with(n));
      out.insert(canonical_form(f, n + 1));
    });
  }
  return {out.begin(), out.end()};
}

bool interval_hereditary(const std::string& flag) {
  static const std::set<std::string> hereditary = {
      "distributive",      "join_semidistributive", "meet_semidistributive", "semidistributive",
      "modular",           "upper_semimodular",     "lower_semimodular",     "meet_distributive",
      "join_distributive", "lower_bounded",         "upper_bounded"};
  return hereditary.contains(flag);
}

std::vector<CircuitSystem> rank3_circuit_systems(int max_points) {
  if (max_points > kMaxElements) throw CapacityExceeded("too many points");
  std::vector<CircuitSystem> out;
  for (int n = 1; n <= max_points; ++n) {
    const GroundSet ground = GroundSet::letters(n);
    std::vector<ElementSet> triples;
    for (Word bits = 0; bits < (Word{1} << n); ++bits) {
      if (ElementSet(bits).size() == 3) triples.push_back(ElementSet(bits));
    }
    if (n <= 3) out.push_back({ground, {}});
    if (n >= 3) out.push_back({ground, triples});  // one line through every point
    if (n < 4) continue;

    Family candidates;
    for (Word bits = 0; bits < (Word{1} << n); ++bits) {
      const ElementSet s(bits);
      if (s.size() >= 3 && s.size() < n) candidates.push_back(s);
    }
    std::set<Family, FamilyLess> line_families;
    Family lines;
    std::function<void(std::size_t)> step = [&](std::size_t k) {
      Family f = lines;
      line_families.insert(canonical_form(f, n));
      for (std::size_t i = k; i < candidates.size(); ++i) {
        const ElementSet l = candidates[i];
        const bool fits = std::all_of(lines.begin(), lines.end(),
                                      [&](ElementSet m) { return (l & m).size() <= 1; });
        if (!fits) continue;
        lines.push_back(l);
        step(i + 1);
        lines.pop_back();
      }
    };
    step(0);
    for (const Family& f : line_families) {
      std::vector<ElementSet> circuits;
      for (ElementSet t : triples) {
        if (std::any_of(f.begin(), f.end(), [&](ElementSet l) { return t.subset_of(l); })) {
          circuits.push_back(t);
        }
      }
      for (Word bits = 0; bits < (Word{1} << n); ++bits) {
        const ElementSet q(bits);
        if (q.size() != 4) continue;
        const bool has_collinear_triple = std::any_of(
            f.begin(), f.end(), [&](ElementSet l) { return (q & l).size() >= 3; });
        if (!has_collinear_triple) circuits.push_back(q);
      }
      canonicalize(circuits);
      out.push_back({ground, circuits});
    }
  }
  return out;
}

void for_each_census_space(int max_n, const std::string& flag,
                           const std::function<void(const CensusSpace&)>& visit) {
  if (!flag.empty() && std::find(class_flag_names().begin(), class_flag_names().end(), flag) ==
                           class_flag_names().end()) {
    throw InvalidArgument("unknown class flag '" + flag + "'");
  }
  if (max_n < 1) throw InvalidArgument("census needs at least one element");
  const bool geometric = flag == "geometric";
  if (max_n > (geometric ? 7 : kExhaustiveCensusLimit + 1)) {
    throw CapacityExceeded("census is limited to 6 elements (7 points for geometric)");
  }
  if (max_n > kExhaustiveCensusLimit && !geometric && !interval_hereditary(flag)) {
    throw InvalidArgument("census on 6 elements needs an interval-hereditary class flag");
  }
  auto offer = [&](const ClosureSpace& space, const char* source) {
    ClassFlags flags = classify(space);
    if (!flag.empty() && !class_flag(flags, flag)) return;
    visit(CensusSpace{space, flags, source});
  };
  const int exhaustive = std::min(max_n, kExhaustiveCensusLimit);
  std::vector<Family> sources;
  for (int n = 1; n <= exhaustive; ++n) {
    for (const Family& f : standard_families(n)) {
      const ClosureSpace space = space_from_closed_sets(GroundSet::letters(n), f);
      offer(space, "exhaustive");
      if (n == kExhaustiveCensusLimit && max_n > n && !geometric &&
          class_flag(classify(space), flag)) {
        sources.push_back(f);
      }
    }
  }
  if (geometric) {
    for (const CircuitSystem& cs : rank3_circuit_systems(max_n)) {
      if (cs.ground.size() < 4) continue;
      offer(space_from_circuits(cs), "matroid");
    }
    return;
  }
  if (max_n > kExhaustiveCensusLimit) {
    for (const Family& f : coatom_extensions(sources, kExhaustiveCensusLimit)) {
      offer(space_from_closed_sets(GroundSet::letters(kExhaustiveCensusLimit + 1), f),
            "coatom-extension");
    }
  }
}

}  // namespace ebase
