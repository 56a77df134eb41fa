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

#include "ebase/element_set.hpp"

#include <algorithm>
#include <cctype>

#include "ebase/errors.hpp"

namespace ebase {

void canonicalize(std::vector<ElementSet>& family) {
  std::sort(family.begin(), family.end(), CanonicalLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::vector<ElementSet> minimal_members(std::vector<ElementSet> family) {
  canonicalize(family);
  std::vector<ElementSet> out;
  // Canonical order lists subsets before supersets.
  for (ElementSet s : family) {
    bool dominated = std::any_of(out.begin(), out.end(), [s](ElementSet m) { return m.subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<ElementSet> maximal_members(std::vector<ElementSet> family) {
  canonicalize(family);
  std::vector<ElementSet> out;
  for (auto it = family.rbegin(); it != family.rend(); ++it) {
    ElementSet s = *it;
    bool dominated = std::any_of(out.begin(), out.end(), [s](ElementSet m) { return s.subset_of(m); });
    if (!dominated) out.push_back(s);
  }
  canonicalize(out);
  return out;
}

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > kMaxElements) {
    throw CapacityExceeded("ground set has " + std::to_string(names_.size()) +
                           " elements; at most " + std::to_string(kMaxElements) + " are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty()) throw InvalidArgument("empty element label");
    if (!index_.emplace(n, static_cast<int>(i)).second) {
      throw InvalidArgument("duplicate element label '" + n + "'");
    }
    if (n.size() != 1) single_char_ = false;
  }
}

GroundSet GroundSet::letters(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    if (n <= 26) {
      names.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names.push_back("x" + std::to_string(i));
    }
  }
  return GroundSet(std::move(names));
}

int GroundSet::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  return it == index_.end() ? -1 : it->second;
}

std::string GroundSet::render(ElementSet s) const {
  if (s.empty()) return "∅";
  std::string out;
  for (int i : s) {
    if (!single_char_ && !out.empty()) out += ' ';
    out += name(i);
  }
  return out;
}

ElementSet GroundSet::parse(std::string_view text) const {
  ElementSet out;
  std::size_t pos = 0;
  auto add = [&](std::string_view label, std::size_t at) {
    int i = index_of(label);
    if (i < 0) {
      throw ParseError(0, static_cast<int>(at) + 1, "unknown element '" + std::string(label) + "'");
    }
    out.insert(i);
  };
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    if (token == "∅") {
      // explicit empty set marker
    } else if (index_of(token) >= 0) {
      add(token, pos);
    } else if (single_char_) {
      for (std::size_t k = 0; k < token.size(); ++k) add(token.substr(k, 1), pos + k);
    } else {
      add(token, pos);
    }
    pos = end;
  }
  return out;
}

}  // namespace ebase
