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


#include "cli.hpp"

#include <CLI11.hpp>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "ebase/analysis.hpp"
#include "ebase/bases.hpp"
#include "ebase/census.hpp"
#include "ebase/dot.hpp"
#include "ebase/errors.hpp"
#include "ebase/io.hpp"
#include "ebase/lifting.hpp"
#include "ebase/matroid.hpp"
#include "ebase/validity.hpp"

namespace ebase::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  bool json = false;
  bool close_intersections = false;
  std::string which = "e";
  bool aggregate = false;
  bool lift_all = false;
  bool until_valid = false;
  std::string lift_sets;
  bool with_report = false;
  bool element_labels = false;
  int max_n = 5;
  std::string census_class;
};

Json labels(const GroundSet& g, ElementSet s) {
  Json out = Json::array();
  for (int i : s) out.push_back(g.name(i));
  return out;
}

Json implications_json(const ImplicationalBase& base) {
  Json out = Json::array();
  for (const Implication& imp : base.implications()) {
    out.push_back({{"premise", labels(base.ground(), imp.premise)},
                   {"conclusion", labels(base.ground(), imp.conclusion)}});
  }
  return out;
}

ClosureSpace load(const Options& o) {
  return build_space(read_document(o.file), o.close_intersections);
}

std::string join_sets(const GroundSet& g, const std::vector<ElementSet>& sets) {
  std::string out;
  for (ElementSet s : sets) out += (out.empty() ? "" : " ") + g.render(s);
  return out.empty() ? "none" : out;
}

int analyze(const Options& o, std::ostream& out) {
  const ClosureSpace space = load(o);
  const ClassFlags flags = classify(space);
  const std::vector<ElementSet> pseudo = pseudo_closed_sets(space);
  const std::vector<EssentialSet> essential = essential_sets(space, pseudo);
  std::vector<ElementSet> essential_list;
  for (const EssentialSet& e : essential) essential_list.push_back(e.set);
  const GroundSet& g = space.ground();
  if (o.json) {
    Json f = Json::object();
    for (const std::string& name : class_flag_names()) f[name] = class_flag(flags, name);
    Json ess = Json::array();
    for (ElementSet e : essential_list) ess.push_back(labels(g, e));
    Json doc = {{"command", "analyze"},
                {"ground", g.names()},
                {"closed_sets", space.closed_count()},
                {"covers", space.covers().size()},
                {"height", space.height()},
                {"join_irreducibles", space.element_count()},
                {"meet_irreducibles", space.meet_irreducibles().size()},
                {"pseudo_closed_sets", pseudo.size()},
                {"essential_sets", ess},
                {"flags", f}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  std::string names;
  for (const std::string& name : class_flag_names()) {
    if (class_flag(flags, name)) names += (names.empty() ? "" : " ") + name;
  }
  out << "ground: " << g.render(space.full()) << '\n'
      << "closed sets: " << space.closed_count() << '\n'
      << "covers: " << space.covers().size() << '\n'
      << "height: " << space.height() << '\n'
      << "join-irreducible: " << space.element_count() << '\n'
      << "meet-irreducible: " << space.meet_irreducibles().size() << '\n'
      << "pseudo-closed sets: " << pseudo.size() << '\n'
      << "essential sets: " << join_sets(g, essential_list) << '\n'
      << "flags: " << (names.empty() ? "none" : names) << '\n';
  return kExitOk;
}

int bases(const Options& o, std::ostream& out) {
  const ClosureSpace space = load(o);
  ImplicationalBase base;
  if (o.which == "dg") {
    base = canonical_base(space);
  } else if (o.which == "cd") {
    base = canonical_direct_base(space);
  } else if (o.which == "d") {
    base = d_base(space);
  } else if (o.which == "e") {
    base = e_base(space);
  } else {
    base = binary_part(space);
  }
  base = o.aggregate ? base.aggregated() : base.unit();
  if (o.which == "dg" && !o.aggregate) base = base.aggregated();
  if (o.json) {
    Json doc = {{"command", "bases"},
                {"which", o.which},
                {"aggregate", o.aggregate || o.which == "dg"},
                {"count", base.size()},
                {"implications", implications_json(base)}};
    out << doc.dump(2) << '\n';
  } else {
    out << base.render();
  }
  return kExitOk;
}

Json report_json(const ClosureSpace& space, const ValidityReport& r) {
  const GroundSet& g = space.ground();
  Json essential = Json::array();
  for (const EssentialSet& e : r.essential) {
    Json pseudo = Json::array();
    for (ElementSet p : e.pseudo_closed) pseudo.push_back(labels(g, p));
    const bool faulty = std::find(r.faulty_essential.begin(), r.faulty_essential.end(), e.set) !=
                        r.faulty_essential.end();
    essential.push_back({{"set", labels(g, e.set)},
                         {"join_irreducible", e.join_irreducible},
                         {"faulty", faulty},
                         {"pseudo_closed", pseudo}});
  }
  Json faulty_essential = Json::array();
  for (ElementSet f : r.faulty_essential) faulty_essential.push_back(labels(g, f));
  Json faulty_pseudo = Json::array();
  for (const FaultyPseudoClosed& p : r.faulty_pseudo_closed) {
    faulty_pseudo.push_back({{"set", labels(g, p.set)},
                             {"closure", labels(g, p.closure)},
                             {"gap", labels(g, p.gap)}});
  }
  return {{"command", "validate"},
          {"valid", r.valid},
          {"essential", essential},
          {"faulty_essential", faulty_essential},
          {"faulty_pseudo_closed", faulty_pseudo},
          {"criteria",
           {{"sd_predicts_valid", criterion_name(r.sd_predicts_valid)},
            {"modular_criterion", criterion_name(r.modular_criterion)},
            {"geometric_criterion", criterion_name(r.geometric_criterion)},
            {"incomparable_criterion", criterion_name(r.incomparable_criterion)}}},
          {"inconsistencies", r.inconsistencies}};
}

int validate(const Options& o, std::ostream& out, std::ostream& err) {
  const InputDocument input = read_document(o.file);
  const ClosureSpace space = build_space(input, o.close_intersections);
  ValidityReport r = faulty_sets(space);
  if (input.binary_matroid) {
    for (const std::string& v : binary_matroid_violations(space, input.circuits)) {
      r.inconsistencies.push_back("binary matroid: " + v);
    }
  }
  const GroundSet& g = space.ground();
  if (o.json) {
    out << report_json(space, r).dump(2) << '\n';
  } else {
    out << "valid: " << (r.valid ? "yes" : "no") << '\n';
    out << "faulty essential: " << join_sets(g, r.faulty_essential) << '\n';
    for (const FaultyPseudoClosed& p : r.faulty_pseudo_closed) {
      out << "faulty pseudo-closed: " << g.render(p.set) << " (closure " << g.render(p.closure)
          << ", gap " << g.render(p.gap) << ")\n";
    }
    out << "sd_predicts_valid: " << criterion_name(r.sd_predicts_valid) << '\n'
        << "modular_criterion: " << criterion_name(r.modular_criterion) << '\n'
        << "geometric_criterion: " << criterion_name(r.geometric_criterion) << '\n'
        << "incomparable_criterion: " << criterion_name(r.incomparable_criterion) << '\n';
  }
  if (!r.inconsistencies.empty()) {
    for (const std::string& s : r.inconsistencies) err << "inconsistent: " << s << '\n';
    return kExitInternal;
  }
  return r.valid ? kExitOk : kExitInvalid;
}

int lift_command(const Options& o, std::ostream& out) {
  const ClosureSpace space = load(o);
  const int modes = int{o.lift_all} + int{o.until_valid} + int{!o.lift_sets.empty()};
  if (modes > 1) throw InvalidArgument("choose one of --all, --until-valid and --sets");
  LiftOutcome outcome = [&] {
    if (o.lift_all) return lift_all(space);
    if (!o.lift_sets.empty()) {
      std::vector<ElementSet> sets;
      std::stringstream list(o.lift_sets);
      std::string item;
      while (std::getline(list, item, ',')) sets.push_back(space.ground().parse(item));
      return lift(space, sets);
    }
    return lift_until_valid(space);
  }();
  const std::string mode = o.lift_all ? "all" : (o.lift_sets.empty() ? "until-valid" : "sets");
  const ImplicationalBase e = e_base(outcome.target).aggregated();
  const ValidityReport report = faulty_sets(outcome.target);
  const GroundSet& g = outcome.target.ground();
  if (o.json) {
    Json rounds = Json::array();
    for (const LiftRound& r : outcome.rounds) {
      Json lifted = Json::array();
      for (ElementSet s : r.lifted) lifted.push_back(labels(r.ground, s));
      rounds.push_back({{"lifted", lifted}, {"added", r.added}});
    }
    Json fresh = Json::array();
    for (const NewElement& y : outcome.new_elements) {
      fresh.push_back({{"label", y.label},
                       {"lower", labels(outcome.source.ground(), outcome.source.closed_set(y.lower))},
                       {"upper", labels(outcome.source.ground(), outcome.source.closed_set(y.upper))}});
    }
    Json doc = {{"command", "lift"},
                {"mode", mode},
                {"rounds", rounds},
                {"ground", g.names()},
                {"closed_sets", outcome.target.closed_count()},
                {"new_elements", fresh},
                {"embedding_verified", verify_embedding(space, outcome.target, outcome.embedding)},
                {"valid", report.valid},
                {"e_base", implications_json(e)}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "rounds: " << outcome.rounds.size() << '\n';
  for (std::size_t i = 0; i < outcome.rounds.size(); ++i) {
    const LiftRound& r = outcome.rounds[i];
    out << "round " << i + 1 << ": lifted " << join_sets(r.ground, r.lifted) << ", added "
        << r.added << " elements\n";
  }
  out << "ground: " << g.render(g.full()) << '\n'
      << "closed sets: " << outcome.target.closed_count() << '\n'
      << "E-base valid: " << (report.valid ? "yes" : "no") << '\n'
      << "E-base (aggregated):\n"
      << e.render();
  return kExitOk;
}

int dot(const Options& o, std::ostream& out) {
  const ClosureSpace space = load(o);
  DotStyle style;
  if (o.element_labels) style.labels = DotLabels::kElementOnly;
  std::string text;
  if (o.with_report) {
    const ValidityReport r = faulty_sets(space);
    text = export_dot(space, &r, style);
  } else {
    text = export_dot(space, nullptr, style);
  }
  if (o.json) {
    out << Json{{"command", "dot"}, {"dot", text}}.dump(2) << '\n';
  } else {
    out << text;
  }
  return kExitOk;
}

int census(const Options& o, std::ostream& out, std::ostream& err) {
  std::map<int, long> by_size;
  long spaces = 0;
  long valid = 0;
  long counterexamples = 0;
  std::vector<std::string> examples;
  for_each_census_space(o.max_n, o.census_class, [&](const CensusSpace& c) {
    ++spaces;
    ++by_size[c.space.element_count()];
    const ValidityReport r = faulty_sets(c.space);
    if (r.valid) ++valid;
    if (!r.inconsistencies.empty()) {
      ++counterexamples;
      if (examples.size() < 5) {
        examples.push_back(render_closed_sets(c.space) + "# " + r.inconsistencies.front());
      }
    }
  });
  if (o.json) {
    Json sizes = Json::object();
    for (auto [n, count] : by_size) sizes[std::to_string(n)] = count;
    Json doc = {{"command", "census"},
                {"max_n", o.max_n},
                {"class", o.census_class},
                {"spaces", spaces},
                {"by_size", sizes},
                {"valid", valid},
                {"invalid", spaces - valid},
                {"counterexamples", counterexamples},
                {"examples", examples}};
    out << doc.dump(2) << '\n';
  } else {
    out << "class: " << (o.census_class.empty() ? "any" : o.census_class) << '\n'
        << "spaces: " << spaces << '\n';
    for (auto [n, count] : by_size) out << "  " << n << " elements: " << count << '\n';
    out << "valid E-base: " << valid << '\n'
        << "invalid E-base: " << spaces - valid << '\n'
        << "counterexamples: " << counterexamples << '\n';
  }
  for (const std::string& e : examples) err << e << '\n';
  return counterexamples == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Implicational bases and E-base validity of finite closure spaces", "ebase"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Input file (closed sets, implications or circuits)")
        ->required();
    sub->add_flag("--close-intersections", o.close_intersections,
                  "Add missing intersections to a closed-sets file");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Class flags and counts");
  add_input(analyze_cmd);
  add_json(analyze_cmd);

  CLI::App* bases_cmd = app.add_subcommand("bases", "Print an implicational base");
  add_input(bases_cmd);
  add_json(bases_cmd);
  bases_cmd->add_option("--which", o.which, "Base to print")
      ->check(CLI::IsMember({"dg", "cd", "d", "e", "binary"}));
  bases_cmd->add_flag("--aggregate", o.aggregate, "Merge implications with equal premises");

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check the E-base; exit 2 when invalid");
  add_input(validate_cmd);
  add_json(validate_cmd);

  CLI::App* lift_cmd = app.add_subcommand("lift", "Embed into a space with valid E-base");
  add_input(lift_cmd);
  add_json(lift_cmd);
  lift_cmd->add_flag("--all", o.lift_all, "Lift every non-empty closed set");
  lift_cmd->add_flag("--until-valid", o.until_valid, "Lift minimal faulty sets until valid");
  lift_cmd->add_option("--sets", o.lift_sets, "Comma-separated closed sets to lift");

  CLI::App* dot_cmd = app.add_subcommand("dot", "Graphviz diagram of the closure lattice");
  add_input(dot_cmd);
  add_json(dot_cmd);
  dot_cmd->add_flag("--report", o.with_report, "Mark faulty and non-faulty essential sets");
  dot_cmd->add_flag("--element-labels", o.element_labels,
                    "Label only cl(x) nodes, by their element");

  CLI::App* census_cmd = app.add_subcommand("census", "Sweep small spaces and cross-check criteria");
  add_json(census_cmd);
  census_cmd->add_option("--max-n", o.max_n, "Largest ground set")->check(CLI::Range(1, 7));
  census_cmd->add_option("--class", o.census_class, "Restrict to a class flag");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(o, out);
    if (bases_cmd->parsed()) return bases(o, out);
    if (validate_cmd->parsed()) return validate(o, out, err);
    if (lift_cmd->parsed()) return lift_command(o, out);
    if (dot_cmd->parsed()) return dot(o, out);
    if (census_cmd->parsed()) return census(o, out, err);
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ebase::cli
