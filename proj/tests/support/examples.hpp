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


// Hand-worked examples on the fixture files, shared by the unit tests and
// the acceptance binary.

#ifndef EBASE_TESTS_EXAMPLES_HPP_
#define EBASE_TESTS_EXAMPLES_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ebase::testing {

struct BaseExample {
  std::string file;
  // Aggregated canonical base; empty when only the E-base is known.
  std::string canonical;
  // Aggregated E-base.
  std::string e;
};

inline const std::vector<BaseExample>& base_examples() {
  static const std::vector<BaseExample> table = {
      {"leaf.imp", "ac->b, bd->c, ad->bc", "ac->b, bd->c"},
      {"carpet.imp", "", "g->acf, f->ac, e->ac, d->b, c->a, bc->f, ad->c, ef->g, bg->d"},
      {"glue.imp", "d->c, e->c, ac->b, bc->a, cde->ab, abce->d",
       "d->c, e->c, ac->b, bc->a, ae->d, be->d"},
      {"relax.imp", "d->c, f->ce, e->c, ac->bd, bc->ad, cde->abf",
       "d->c, f->ce, e->c, ac->bd, bc->ad, ae->f, be->f, de->f"},
      {"sdmf.imp", "e->ac, f->ad, c->a, d->a, acde->f, acdf->e, ab->cdef",
       "e->ac, f->ad, c->a, d->a, de->f, cf->e, ab->cd"},
      {"jdis.imp",
       "c->ab, b->a, g->def, f->de, e->d, h->ad, abd->e, ade->b, abcde->h, abdeh->c, "
       "abdefg->ch, abcdefh->g",
       "c->ab, b->a, g->def, f->de, e->d, h->ad, bd->e, ae->b, bh->c, he->c, cd->h, cf->g, "
       "hf->g"},
      {"modp.imp", "d->c, e->c, ab->c, ac->b, bc->a, abcd->e, abce->d, cde->ab",
       "d->c, e->c, ab->c, ac->b, bc->a, ad->e, bd->e, ae->d, be->d"},
      {"modf.imp",
       "d->ab, e->ab, f->ac, g->ac, h->bc, i->bc, abcd->e, abce->d, abde->c, abcf->g, "
       "abcg->f, acfg->b, abch->i, abci->h, bchi->a, abcdefg->hi, abcdehi->fg, abcfghi->de",
       "d->ab, e->ab, f->ac, g->ac, h->bc, i->bc, cd->e, ce->d, de->c, bf->g, bg->f, fg->b, "
       "ah->i, ai->h, hi->a"},
      {"geof6.imp",
       "ab->c, ac->b, bc->a, de->f, df->e, ef->d, abcd->ef, abce->df, abcf->de, adef->bc, "
       "bdef->ac, cdef->ab",
       "ab->c, ac->b, bc->a, de->f, df->e, ef->d"},
      {"geof5.imp", "ab->c, ac->b, bc->a, abcd->e, abce->d, ade->bc, bde->ac, cde->ab",
       "ab->c, ac->b, bc->a, abd->e, abe->d, acd->e, ace->d, bcd->e, bce->d"},
      {"usm.imp", "f->a, d->c, e->c, ab->c, ac->b, bc->a, abcf->de, abcd->ef, abce->df, cde->abf",
       "f->a, d->c, e->c, ab->c, ac->b, bc->a, ad->ef, ae->df, bd->ef, be->df, bf->de, cf->de, "
       "de->f"},
  };
  return table;
}

struct VerdictExample {
  std::string file;
  bool valid;
  std::vector<std::string_view> faulty_essential;
  // Faulty pseudo-closed set and its gap.
  std::vector<std::pair<std::string_view, std::string_view>> faulty_pseudo_closed;
};

inline const std::vector<VerdictExample>& verdict_examples() {
  static const std::vector<VerdictExample> table = {
      {"carpet.imp", true, {}, {}},
      {"usm.imp", true, {}, {}},
      {"m3.sets", true, {}, {}},
      {"u23.circuits", true, {}, {}},
      {"grid.sets", true, {}, {}},
      {"fano.circuits", true, {}, {}},
      {"leaf.imp", false, {"abcd"}, {{"ad", "bc"}}},
      {"glue.imp", false, {"abcde"}, {{"cde", "ab"}}},
      {"relax.imp", false, {"abcdef"}, {{"cde", "ab"}}},
      {"sdmf.imp", false, {"abcdef"}, {{"ab", "ef"}}},
      {"jdis.imp", false, {"abcdefgh"}, {{"abdefg", "ch"}}},
      {"modp.imp", false, {"abcde"}, {{"cde", "ab"}}},
      {"modf.imp", false, {"abcdefghi"}, {{"abcdefg", "hi"}, {"abcdehi", "fg"}, {"abcfghi", "de"}}},
      {"geof5.imp", false, {"abcde"}, {{"ade", "bc"}, {"bde", "ac"}, {"cde", "ab"}}},
      {"geof6.imp",
       false,
       {"abcdef"},
       {{"abcd", "ef"}, {"abce", "df"}, {"abcf", "de"}, {"adef", "bc"}, {"bdef", "ac"},
        {"cdef", "ab"}}},
      {"flift.sets", false, {"abcef", "acdeg"}, {{"abf", "ce"}, {"cdg", "ae"}}},
  };
  return table;
}

struct ElementGenerators {
  std::vector<std::string_view> gen;
  std::vector<std::string_view> gen_d;
  std::vector<std::string_view> gen_e;
};

// Minimal, D- and E-generators of every element of carpet.imp.
inline const std::map<std::string, ElementGenerators>& carpet_generators() {
  static const std::map<std::string, ElementGenerators> table = {
      {"a", {{"c", "e", "f", "g"}, {}, {}}},
      {"b", {{"d"}, {}, {}}},
      {"c", {{"ad", "e", "f", "g"}, {"ad"}, {"ad"}}},
      {"d", {{"be", "bg"}, {"be", "bg"}, {"bg"}}},
      {"e", {{}, {}, {}}},
      {"f", {{"bc", "be", "cd", "ad", "de", "g"}, {"ad", "bc"}, {"bc"}}},
      {"g", {{"be", "de", "ef"}, {"be", "ef"}, {"ef"}}},
  };
  return table;
}

}  // namespace ebase::testing

#endif  // EBASE_TESTS_EXAMPLES_HPP_
