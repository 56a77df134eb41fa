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

#include "ebase/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "ebase/errors.hpp"
#include "ebase/matroid.hpp"

namespace ebase {

namespace {

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::size_t skip_blanks(std::string_view s, std::size_t pos) {
  while (pos < s.size() && is_blank(s[pos])) ++pos;
  return pos;
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

class LineParser {
 public:
  LineParser(InputDocument& doc, int line) : doc_(doc), line_(line) {}

  void parse(std::string_view text) {
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim_right(text);
    const std::size_t start = skip_blanks(text, 0);
    if (start == text.size()) return;
    const std::size_t colon = text.find(':', start);
    if (colon == std::string_view::npos) fail(start, "expected 'key: value'");
    std::string_view key = trim_right(text.substr(start, colon - start));
    const std::size_t value_at = skip_blanks(text, colon + 1);
    std::string_view value = text.substr(std::min(value_at, text.size()));

    if (key == "ground") {
      parse_ground(value, value_at);
    } else if (key == "set") {
      require_format(InputFormat::kClosedSets, start);
      doc_.sets.push_back(parse_set(value, value_at));
    } else if (key == "imp") {
      require_format(InputFormat::kImplications, start);
      const std::size_t arrow = value.find("->");
      if (arrow == std::string_view::npos) fail(value_at, "implication needs '->'");
      ElementSet premise = parse_set(value.substr(0, arrow), value_at);
      ElementSet conclusion = parse_set(value.substr(arrow + 2), value_at + arrow + 2);
      doc_.implications.push_back(Implication{premise, conclusion});
    } else if (key == "circuit") {
      require_format(InputFormat::kCircuits, start);
      doc_.circuits.push_back(parse_set(value, value_at));
    } else if (key == "flag") {
      if (value != "binary-matroid") fail(value_at, "unknown flag '" + std::string(value) + "'");
      doc_.binary_matroid = true;
    } else {
      fail(start, "unknown key '" + std::string(key) + "'");
    }
  }

  bool ground_seen = false;
  std::optional<InputFormat> format;

 private:
  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(line_, static_cast<int>(column) + 1, message);
  }

  void parse_ground(std::string_view value, std::size_t at) {
    if (ground_seen) fail(at, "duplicate 'ground:' line");
    std::vector<std::string> names;
    std::size_t pos = 0;
    while ((pos = skip_blanks(value, pos)) < value.size()) {
      std::size_t end = pos;
      while (end < value.size() && !is_blank(value[end])) ++end;
      names.emplace_back(value.substr(pos, end - pos));
      pos = end;
    }
    try {
      doc_.ground = GroundSet(std::move(names));
    } catch (const InvalidArgument& e) {
      fail(at, e.what());
    }
    ground_seen = true;
  }

  void require_format(InputFormat f, std::size_t column) {
    if (!ground_seen) fail(column, "'ground:' must come before the first payload line");
    if (format && *format != f) fail(column, "payload kinds cannot be mixed in one file");
    format = f;
  }

  ElementSet parse_set(std::string_view text, std::size_t at) const {
    try {
      return doc_.ground.parse(text);
    } catch (const ParseError& e) {
      throw ParseError(line_, static_cast<int>(at) + e.column(), e.message());
    }
  }

  InputDocument& doc_;
  int line_;
};

}  // namespace

InputDocument parse_document(std::string_view text) {
  InputDocument doc;
  bool ground_seen = false;
  std::optional<InputFormat> format;
  int line = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    LineParser parser(doc, line);
    parser.ground_seen = ground_seen;
    parser.format = format;
    parser.parse(text.substr(pos, end - pos));
    ground_seen = parser.ground_seen;
    format = parser.format;
    pos = end + 1;
  }
  line = std::max(line, 1);
  if (!ground_seen) throw ParseError(line, 1, "missing 'ground:' line");
  doc.format = format.value_or(InputFormat::kClosedSets);
  if (doc.binary_matroid && doc.format != InputFormat::kCircuits) {
    throw ParseError(line, 1, "flag binary-matroid needs a circuits file");
  }
  return doc;
}

InputDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

ClosureSpace build_space(const InputDocument& doc, bool close_intersections) {
  switch (doc.format) {
    case InputFormat::kClosedSets: {
      std::vector<ElementSet> family = doc.sets;
      if (close_intersections) family = close_under_intersection(doc.ground.full(), std::move(family));
      return space_from_closed_sets(doc.ground, std::move(family));
    }
    case InputFormat::kImplications:
      return space_from_closed_sets(doc.ground,
                                    models(ImplicationalBase(doc.ground, doc.implications)));
    case InputFormat::kCircuits:
      return space_from_circuits(CircuitSystem{doc.ground, doc.circuits});
  }
  throw InvalidArgument("unknown input format");
}

ClosureSpace parse_space(std::string_view text) { return build_space(parse_document(text)); }

ClosureSpace read_space(const std::string& path) { return build_space(read_document(path)); }

std::string render_closed_sets(const ClosureSpace& space) {
  const GroundSet& g = space.ground();
  std::string out = "ground:";
  for (const std::string& name : g.names()) out += " " + name;
  out += '\n';
  for (ElementSet c : space.closed_sets()) {
    out += "set:";
    for (int i : c) out += " " + g.name(i);
    out += '\n';
  }
  return out;
}

std::string render_implications(const ImplicationalBase& base) {
  const GroundSet& g = base.ground();
  std::string out = "ground:";
  for (const std::string& name : g.names()) out += " " + name;
  out += '\n';
  for (const Implication& imp : base.implications()) {
    out += "imp:";
    for (int i : imp.premise) out += " " + g.name(i);
    out += " ->";
    for (int i : imp.conclusion) out += " " + g.name(i);
    out += '\n';
  }
  return out;
}

}  // namespace ebase
