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


#include "ebase/dot.hpp"

#include <set>

#include "ebase/bases.hpp"

namespace ebase {

namespace {

constexpr const char* kYellow = "#f6d55c";
constexpr const char* kPurple = "#7b3294";
constexpr const char* kGray = "#d9d9d9";

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const ClosureSpace& space, const ValidityReport* report,
                       const DotStyle& style) {
  const GroundSet& g = space.ground();
  std::set<int> essential;
  std::set<int> faulty;
  if (report != nullptr) {
    for (const EssentialSet& e : report->essential) essential.insert(space.require_index(e.set));
    for (ElementSet f : report->faulty_essential) faulty.insert(space.require_index(f));
  } else {
    for (const EssentialSet& e : essential_sets(space, pseudo_closed_sets(space))) {
      essential.insert(space.require_index(e.set));
    }
  }
  std::vector<int> generator(static_cast<std::size_t>(space.closed_count()), -1);
  for (int x = 0; x < space.element_count(); ++x) {
    generator[static_cast<std::size_t>(space.require_index(space.element_closure(x)))] = x;
  }

  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  out += "  node [shape=circle, style=filled, fillcolor=white, fontname=\"Helvetica\"];\n";
  out += "  edge [arrowhead=none];\n";
  for (int i = 0; i < space.closed_count(); ++i) {
    const int x = generator[static_cast<std::size_t>(i)];
    std::string label;
    if (style.labels == DotLabels::kFullSet) {
      label = g.render(space.closed_set(i));
    } else if (x >= 0) {
      label = g.name(x);
    }
    std::string attrs = "label=" + quoted(label);
    if (essential.contains(i)) attrs += ", shape=square";
    if (report != nullptr && essential.contains(i) && !faulty.contains(i)) {
      attrs += ", fillcolor=\"" + std::string(kYellow) + "\"";
    } else if (style.shade_join_irreducible && x >= 0) {
      attrs += ", fillcolor=\"" + std::string(kGray) + "\"";
    }
    if (faulty.contains(i)) attrs += ", color=\"" + std::string(kPurple) + "\", penwidth=3";
    out += "  n" + std::to_string(i) + " [" + attrs + "];\n";
  }
  for (const Cover& c : space.covers()) {
    out += "  n" + std::to_string(c.lower) + " -> n" + std::to_string(c.upper) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ebase
