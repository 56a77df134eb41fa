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


// Fixture access and brute-force oracles shared by the tests. The oracles
// work on raw bit masks and a plain list of closed sets; they call nothing
// from the library beyond reading closed_sets().

#ifndef EBASE_TESTS_SUPPORT_HPP_
#define EBASE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ebase/closure_space.hpp"
#include "ebase/implication.hpp"
#include "ebase/io.hpp"

namespace ebase::testing {

inline std::string fixture_path(std::string_view file) {
  return std::string(EBASE_FIXTURE_DIR) + "/" + std::string(file);
}

inline ClosureSpace fixture(std::string_view file) { return read_space(fixture_path(file)); }

// Fixture files whose E-base is invalid.
inline const std::vector<std::string>& invalid_fixtures() {
  static const std::vector<std::string> names = {
      "leaf.imp", "glue.imp", "relax.imp", "sdmf.imp", "jdis.imp", "modp.imp",
      "modf.imp", "geof5.imp", "geof6.imp", "flift.sets"};
  return names;
}

inline const std::vector<std::string>& all_fixtures() {
  static const std::vector<std::string> names = {
      "leaf.imp", "carpet.imp", "glue.imp", "relax.imp", "sdmf.imp", "jdis.imp",
      "modp.imp", "modf.imp",   "geof5.imp", "geof6.imp", "usm.imp",  "m3.sets",
      "u23.circuits", "flift.sets", "grid.sets", "fano.circuits"};
  return names;
}

inline ElementSet set(const ClosureSpace& space, std::string_view text) {
  return text.empty() ? ElementSet() : space.ground().parse(text);
}

// "ac->b, bd->c" over the ground set of the space, aggregated.
inline ImplicationalBase base_of(const ClosureSpace& space, std::string_view text) {
  std::vector<Implication> imps;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t arrow = item.find("->");
    auto trim = [](std::string_view s) {
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
      while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
      return s;
    };
    imps.emplace_back(set(space, trim(item.substr(0, arrow))),
                      set(space, trim(item.substr(arrow + 2))));
    pos = end + 1;
  }
  return ImplicationalBase(space.ground(), std::move(imps)).aggregated();
}

inline std::vector<ElementSet> sets(const ClosureSpace& space,
                                    std::initializer_list<std::string_view> texts) {
  std::vector<ElementSet> out;
  for (std::string_view t : texts) out.push_back(set(space, t));
  return out;
}

inline std::vector<ElementSet> sorted(std::vector<ElementSet> family) {
  canonicalize(family);
  return family;
}

// Closed sets of the space, for failure messages.
inline std::string describe(const ClosureSpace& space) {
  std::string out;
  for (ElementSet c : space.closed_sets()) out += space.ground().render(c) + " ";
  return out;
}

namespace oracle {

using Mask = std::uint32_t;

inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool proper(Mask a, Mask b) { return a != b && sub(a, b); }

struct Family {
  int n = 0;
  Mask full = 0;
  std::vector<Mask> closed;

  explicit Family(const ClosureSpace& space) : n(space.element_count()) {
    full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    for (ElementSet c : space.closed_sets()) closed.push_back(c.bits());
  }
  Family(int n_, std::vector<Mask> closed_) : n(n_), full((Mask{1} << n_) - 1), closed(std::move(closed_)) {}

  Mask closure(Mask x) const {
    Mask out = full;
    for (Mask c : closed) {
      if (sub(x, c)) out &= c;
    }
    return out;
  }
  bool is_closed(Mask x) const { return closure(x) == x; }
  Mask element_closure(int i) const { return closure(Mask{1} << i); }
  Mask binary_closure(Mask x) const {
    Mask out = 0;
    for (int i = 0; i < n; ++i) {
      if (x >> i & 1U) out |= element_closure(i);
    }
    return out;
  }
  std::vector<Mask> predecessors(Mask c) const {
    std::vector<Mask> out;
    for (Mask d : closed) {
      if (!proper(d, c)) continue;
      bool cover = true;
      for (Mask e : closed) {
        if (proper(d, e) && proper(e, c)) cover = false;
      }
      if (cover) out.push_back(d);
    }
    return out;
  }
};

inline std::vector<Mask> subsets_by_size(int n) {
  std::vector<Mask> all;
  for (Mask x = 0; x < (Mask{1} << n); ++x) all.push_back(x);
  std::stable_sort(all.begin(), all.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  return all;
}

// Recursive definition, subsets visited by size.
inline std::vector<Mask> pseudo_closed(const Family& f) {
  std::vector<Mask> out;
  for (Mask p : subsets_by_size(f.n)) {
    if (f.is_closed(p)) continue;
    bool ok = true;
    for (Mask q : out) {
      if (proper(q, p) && !sub(f.closure(q), p)) ok = false;
    }
    if (ok) out.push_back(p);
  }
  return out;
}

inline bool quasi_closed(const Family& f, Mask q) {
  const Mask c = f.closure(q);
  for (Mask x = q;; x = (x - 1) & q) {
    const Mask cx = f.closure(x);
    if (proper(cx, c) && !sub(cx, q)) return false;
    if (x == 0) break;
  }
  return true;
}

inline std::vector<Mask> minimal_generators(const Family& f, int x) {
  const Mask bit = Mask{1} << x;
  std::vector<Mask> out;
  for (Mask y : subsets_by_size(f.n)) {
    if (y & bit || !(f.closure(y) & bit)) continue;
    bool minimal = true;
    for (Mask z : out) {
      if (sub(z, y)) minimal = false;
    }
    if (minimal) out.push_back(y);
  }
  return out;
}

// Elements of K not below another element of K.
inline Mask maximal_elements(const Family& f, Mask k) {
  Mask out = 0;
  for (int i = 0; i < f.n; ++i) {
    if (!(k >> i & 1U)) continue;
    bool top = true;
    for (int j = 0; j < f.n; ++j) {
      if (j != i && (k >> j & 1U) && (f.element_closure(j) >> i & 1U)) top = false;
    }
    if (top) out |= Mask{1} << i;
  }
  return out;
}

// Down-set route: the binary-closed sets K with x outside K and x in cl(K)
// that are inclusion-minimal, each reported by its maximal elements.
inline std::vector<Mask> d_generator_classes(const Family& f, int x) {
  const Mask bit = Mask{1} << x;
  std::vector<Mask> ks;
  for (Mask k : subsets_by_size(f.n)) {
    if (f.binary_closure(k) != k || (k & bit) || !(f.closure(k) & bit)) continue;
    bool minimal = true;
    for (Mask other : ks) {
      if (sub(other, k)) minimal = false;
    }
    if (minimal) ks.push_back(k);
  }
  return ks;
}

inline std::vector<Mask> d_generators(const Family& f, int x) {
  std::vector<Mask> out;
  for (Mask k : d_generator_classes(f, x)) out.push_back(maximal_elements(f, k));
  return out;
}

inline std::vector<Mask> e_generators(const Family& f, int x) {
  const std::vector<Mask> ks = d_generator_classes(f, x);
  std::vector<Mask> out;
  for (Mask k : ks) {
    bool minimal = true;
    for (Mask other : ks) {
      if (proper(f.closure(other), f.closure(k))) minimal = false;
    }
    if (minimal) out.push_back(maximal_elements(f, k));
  }
  return out;
}

struct Rule {
  Mask premise;
  Mask conclusion;
};

inline Mask chain(const std::vector<Rule>& rules, Mask x) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : rules) {
      if (sub(r.premise, x) && !sub(r.conclusion, x)) {
        x |= r.conclusion;
        changed = true;
      }
    }
  }
  return x;
}

inline std::vector<Rule> binary_rules(const Family& f) {
  std::vector<Rule> out;
  for (int i = 0; i < f.n; ++i) out.push_back({Mask{1} << i, f.element_closure(i)});
  return out;
}

inline std::vector<Rule> e_rules(const Family& f) {
  std::vector<Rule> out = binary_rules(f);
  for (int x = 0; x < f.n; ++x) {
    for (Mask a : e_generators(f, x)) out.push_back({a, Mask{1} << x});
  }
  return out;
}

inline std::vector<Rule> rules_of(const ImplicationalBase& base) {
  std::vector<Rule> out;
  for (const Implication& imp : base.implications()) {
    out.push_back({imp.premise.bits(), imp.conclusion.bits()});
  }
  return out;
}

inline bool rules_valid(const Family& f, const std::vector<Rule>& rules) {
  for (Mask x = 0; x <= f.full; ++x) {
    if (chain(rules, x) != f.closure(x)) return false;
  }
  return true;
}

// x is prime in the ideal of C: cl(x) below a join of two closed sets under
// C implies it is below one of them.
inline bool prime_in_ideal(const Family& f, Mask c, int x) {
  const Mask cx = f.element_closure(x);
  for (Mask c1 : f.closed) {
    if (!sub(c1, c)) continue;
    for (Mask c2 : f.closed) {
      if (!sub(c2, c)) continue;
      if (sub(cx, f.closure(c1 | c2)) && !sub(cx, c1) && !sub(cx, c2)) return false;
    }
  }
  return true;
}

inline bool almost_prime(const Family& f, Mask c, int x) {
  if (prime_in_ideal(f, c, x)) return false;
  for (Mask p : f.predecessors(c)) {
    if ((p >> x & 1U) && !prime_in_ideal(f, p, x)) return false;
  }
  return true;
}

inline Mask join(const Family& f, Mask a, Mask b) { return f.closure(a | b); }

inline bool modular(const Family& f) {
  for (Mask a : f.closed) {
    for (Mask b : f.closed) {
      if (!sub(a, b)) continue;
      for (Mask c : f.closed) {
        if (join(f, a, c & b) != (join(f, a, c) & b)) return false;
      }
    }
  }
  return true;
}

inline bool distributive(const Family& f) {
  for (Mask a : f.closed) {
    for (Mask b : f.closed) {
      for (Mask c : f.closed) {
        if ((a & join(f, b, c)) != join(f, a & b, a & c)) return false;
      }
    }
  }
  return true;
}

inline bool join_semidistributive(const Family& f) {
  for (Mask a : f.closed) {
    for (Mask b : f.closed) {
      for (Mask c : f.closed) {
        if (join(f, a, b) == join(f, a, c) && join(f, a, b & c) != join(f, a, b)) return false;
      }
    }
  }
  return true;
}

inline bool meet_semidistributive(const Family& f) {
  for (Mask a : f.closed) {
    for (Mask b : f.closed) {
      for (Mask c : f.closed) {
        if ((a & b) == (a & c) && (a & join(f, b, c)) != (a & b)) return false;
      }
    }
  }
  return true;
}

inline bool upper_semimodular(const Family& f) {
  for (Mask a : f.closed) {
    for (Mask b : f.closed) {
      const Mask m = a & b;
      auto pred = f.predecessors(a);
      auto predb = f.predecessors(b);
      const bool a_covers = std::find(pred.begin(), pred.end(), m) != pred.end();
      const bool b_covers = std::find(predb.begin(), predb.end(), m) != predb.end();
      if (!a_covers || !b_covers || a == b) continue;
      const Mask j = join(f, a, b);
      auto pj = f.predecessors(j);
      if (std::find(pj.begin(), pj.end(), a) == pj.end() ||
          std::find(pj.begin(), pj.end(), b) == pj.end()) {
        return false;
      }
    }
  }
  return true;
}

inline bool lower_semimodular(const Family& f) {
  for (Mask a : f.closed) {
    for (Mask b : f.closed) {
      if (a == b) continue;
      const Mask j = join(f, a, b);
      auto pj = f.predecessors(j);
      if (std::find(pj.begin(), pj.end(), a) == pj.end() ||
          std::find(pj.begin(), pj.end(), b) == pj.end()) {
        continue;
      }
      const Mask m = a & b;
      auto pa = f.predecessors(a);
      auto pb = f.predecessors(b);
      if (std::find(pa.begin(), pa.end(), m) == pa.end() ||
          std::find(pb.begin(), pb.end(), m) == pb.end()) {
        return false;
      }
    }
  }
  return true;
}

inline bool atomistic(const Family& f) {
  for (int i = 0; i < f.n; ++i) {
    if (f.element_closure(i) != (Mask{1} << i)) return false;
  }
  return true;
}

inline bool standard(const Family& f) {
  for (int i = 0; i < f.n; ++i) {
    if (!f.is_closed(f.element_closure(i) & ~(Mask{1} << i))) return false;
  }
  return true;
}

}  // namespace oracle

// Random standard spaces from random implication sets (rejection sampled).
class RandomSpaces {
 public:
  explicit RandomSpaces(std::uint32_t seed) : rng_(seed) {}

  ClosureSpace next(int min_n, int max_n) {
    for (;;) {
      const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng_);
      const int count = std::uniform_int_distribution<int>(1, 2 * n)(rng_);
      std::vector<Implication> imps;
      for (int k = 0; k < count; ++k) {
        const int premise_size = std::uniform_int_distribution<int>(1, std::min(n - 1, 3))(rng_);
        ElementSet premise;
        while (premise.size() < premise_size) {
          premise.insert(std::uniform_int_distribution<int>(0, n - 1)(rng_));
        }
        ElementSet conclusion;
        const int conclusion_size = std::uniform_int_distribution<int>(1, 2)(rng_);
        while (conclusion.size() < conclusion_size) {
          conclusion.insert(std::uniform_int_distribution<int>(0, n - 1)(rng_));
        }
        if (!(conclusion - premise).empty()) imps.emplace_back(premise, conclusion);
      }
      const GroundSet ground = GroundSet::letters(n);
      const std::vector<ElementSet> family = models(ImplicationalBase(ground, imps));
      std::vector<oracle::Mask> masks;
      for (ElementSet c : family) masks.push_back(c.bits());
      if (!oracle::standard(oracle::Family(n, masks))) continue;
      return space_from_closed_sets(ground, family);
    }
  }

 private:
  std::mt19937 rng_;
};

}  // namespace ebase::testing

#endif  // EBASE_TESTS_SUPPORT_HPP_
