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


#ifndef EBASE_DOT_HPP_
#define EBASE_DOT_HPP_

#include <string>

#include "ebase/closure_space.hpp"
#include "ebase/validity.hpp"

namespace ebase {

enum class DotLabels {
  kFullSet,      // every node shows its closed set
  kElementOnly,  // only cl(x) nodes, labelled x
};

struct DotStyle {
  DotLabels labels = DotLabels::kFullSet;
  bool shade_join_irreducible = true;
};

// Hasse diagram drawn bottom to top. Essential sets are squares; with a
// report, non-faulty essential sets are filled yellow and faulty ones get a
// purple outline. Output depends only on the inputs.
std::string export_dot(const ClosureSpace& space, const ValidityReport* report = nullptr,
                       const DotStyle& style = {});

}  // namespace ebase

#endif  // EBASE_DOT_HPP_
