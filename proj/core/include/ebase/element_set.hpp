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

#ifndef EBASE_ELEMENT_SET_HPP_
#define EBASE_ELEMENT_SET_HPP_

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ebase {

// Hard cap on the ground-set size. Every algorithm in the library is
// exponential in the worst case.
inline constexpr int kMaxElements = 24;

// A subset of a ground set, stored as a bit vector over element indices.
class ElementSet {
 public:
  using Word = std::uint32_t;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Word bits) : bits_(bits) {}

  static constexpr ElementSet singleton(int i) { return ElementSet(Word{1} << i); }
  // The first n elements.
  static constexpr ElementSet prefix(int n) {
    return ElementSet(n >= 32 ? ~Word{0} : ((Word{1} << n) - 1));
  }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }
  // Index of the smallest element; -1 when empty.
  constexpr int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  constexpr ElementSet& insert(int i) {
    bits_ |= Word{1} << i;
    return *this;
  }
  constexpr ElementSet& erase(int i) {
    bits_ &= ~(Word{1} << i);
    return *this;
  }
  constexpr ElementSet with(int i) const { return ElementSet(bits_ | (Word{1} << i)); }
  constexpr ElementSet without(int i) const { return ElementSet(bits_ & ~(Word{1} << i)); }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet operator^(ElementSet o) const { return ElementSet(bits_ ^ o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;

  // Iterates element indices in increasing order.
  class Iterator {
   public:
    constexpr explicit Iterator(Word rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const Iterator& o) const { return rest_ != o.rest_; }
    constexpr bool operator==(const Iterator& o) const { return rest_ == o.rest_; }

   private:
    Word rest_;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

 private:
  Word bits_ = 0;
};

// Canonical order on sets: by cardinality, then lexicographic on the sorted
// element sequence.
constexpr bool canonical_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const ElementSet diff = a ^ b;
  if (diff.empty()) return false;
  return a.contains(diff.lowest());
}

struct CanonicalLess {
  constexpr bool operator()(ElementSet a, ElementSet b) const { return canonical_less(a, b); }
};

// Sorts into canonical order and drops duplicates.
void canonicalize(std::vector<ElementSet>& family);
// Keeps the inclusion-minimal members, in canonical order.
std::vector<ElementSet> minimal_members(std::vector<ElementSet> family);
std::vector<ElementSet> maximal_members(std::vector<ElementSet> family);

// Ordered list of distinct element labels. The order fixes the element
// indices used by every ElementSet interpreted against it.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> names);
  // Labels "a", "b", ... for n <= 26, "x0", "x1", ... beyond.
  static GroundSet letters(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  // Index of a label, or -1.
  int index_of(std::string_view label) const;
  ElementSet full() const { return ElementSet::prefix(size()); }
  // True when every bit of s names an element of this ground set.
  bool admits(ElementSet s) const { return s.subset_of(full()); }

  // "abc" when all labels are one character, "x y z" otherwise; the empty
  // set renders as "∅".
  std::string render(ElementSet s) const;
  // Parses labels separated by blanks, or a single run of one-character
  // labels ("abc"). Throws ParseError on unknown labels.
  ElementSet parse(std::string_view text) const;
  bool single_char_labels() const { return single_char_; }

  bool operator==(const GroundSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  bool single_char_ = true;
};

}  // namespace ebase

template <>
struct std::hash<ebase::ElementSet> {
  std::size_t operator()(ebase::ElementSet s) const noexcept {
    return std::hash<std::uint32_t>{}(s.bits());
  }
};

#endif  // EBASE_ELEMENT_SET_HPP_
