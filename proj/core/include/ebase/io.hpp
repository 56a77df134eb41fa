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

#ifndef EBASE_IO_HPP_
#define EBASE_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ebase/closure_space.hpp"
#include "ebase/implication.hpp"

namespace ebase {

// Line-oriented input files:
//
//   # comment
//   ground: a b c d
//   set: a b          (closed-sets format; "set:" alone is the empty set)
//   imp: a c -> b     (implications format)
//   circuit: a b c    (circuits format)
//   flag: binary-matroid
//
// One format per file; the ground line comes first.
enum class InputFormat { kClosedSets, kImplications, kCircuits };

struct InputDocument {
  InputFormat format = InputFormat::kClosedSets;
  GroundSet ground;
  std::vector<ElementSet> sets;
  std::vector<Implication> implications;
  std::vector<ElementSet> circuits;
  // The user declares the circuit system to be a binary matroid.
  bool binary_matroid = false;
};

// Throws ParseError with line and column.
InputDocument parse_document(std::string_view text);
InputDocument read_document(const std::string& path);

// Closed-sets files must already describe a closure system unless
// `close_intersections` is set, in which case missing intersections and the
// full set are added first.
ClosureSpace build_space(const InputDocument& doc, bool close_intersections = false);
ClosureSpace parse_space(std::string_view text);
ClosureSpace read_space(const std::string& path);

// Closed-sets format; parse_space() of the result reproduces the family.
std::string render_closed_sets(const ClosureSpace& space);
// Implications format.
std::string render_implications(const ImplicationalBase& base);

}  // namespace ebase

#endif  // EBASE_IO_HPP_
