// Copyright 2026 The Zulu Verbalizer Authors.
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

#include "zulu/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zulu/error.h"

namespace zulu {

namespace {

std::vector<std::string> subsumption_settings() {
  std::vector<std::string> out;
  for (auto v : {SubsumptionNumber::kSingular, SubsumptionNumber::kPlural,
                 SubsumptionNumber::kAllPlural}) {
    out.push_back("subsumption_number=" + std::string(to_string(v)));
  }
  return out;
}

std::vector<std::string> negation_settings() {
  std::vector<std::string> out;
  for (auto v : {NegationNumber::kSingularImpersonal,
                 NegationNumber::kSingularConcordial,
                 NegationNumber::kPluralConcordial,
                 NegationNumber::kAllPluralConcordial}) {
    out.push_back("negation_number=" + std::string(to_string(v)));
  }
  return out;
}

std::vector<std::string> existential_settings() {
  std::vector<std::string> out = {"exist_style=generic_plural"};
  for (auto style : {ExistStyle::kDwa, ExistStyle::kNomaPhi}) {
    for (auto number : {Number::kSingular, Number::kPlural}) {
      out.push_back("exist_style=" + std::string(to_string(style)) +
                    ",exist_number=" + std::string(to_string(number)));
    }
  }
  out.push_back("exist_style=thize,exist_number=singular");
  return out;
}

// Profile settings worth trying for the axiom's shape; empty when the shape
// is not one the renderer knows.
std::vector<std::string> settings_for(const Axiom &axiom) {
  if (const auto *sub = std::get_if<SubClassOf>(&axiom)) {
    switch (sub->sup.kind()) {
      case ClassExpr::Kind::kNamed: return subsumption_settings();
      case ClassExpr::Kind::kNot: return negation_settings();
      case ClassExpr::Kind::kSome: return existential_settings();
      default: return {};
    }
  }
  if (std::holds_alternative<DisjointWith>(axiom)) return negation_settings();
  const ClassExpr &e = std::get<ClassStatement>(axiom).expr;
  if (e.kind() == ClassExpr::Kind::kAnd) {
    return {"and_style=enumeration_na", "and_style=kanye", "and_style=futhi"};
  }
  if (e.kind() == ClassExpr::Kind::kOr) {
    return {"or_style=okanye", "or_style=noma"};
  }
  return {};
}

void apply_settings(PreferenceProfile &profile, const std::string &settings) {
  std::stringstream ss(settings);
  std::string setting;
  while (std::getline(ss, setting, ',')) apply_setting(profile, setting);
}

std::string read_all(std::istream &in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_trace(std::ostream &err, int line, const Sentence &s) {
  err << "## line " << line << ": " << s.pattern << '\n';
  for (const TraceStep &step : s.steps) {
    err << "##   " << step.op << '(' << step.input << ") -> " << step.output
        << '\n';
  }
}

}  // namespace

std::vector<Variant> list_variants(const Axiom &axiom, const Lexicon &lex,
                                   SentenceCase casing) {
  PreferenceProfile base = survey_default_profile();
  base.sentence_case = casing;
  const std::vector<std::string> all = settings_for(axiom);
  if (all.empty()) {
    // Not a known shape: let the renderer report why.
    return {{"", render(axiom, lex, base)}};
  }
  std::vector<Variant> variants;
  std::exception_ptr first_failure;
  for (const std::string &settings : all) {
    PreferenceProfile profile = base;
    apply_settings(profile, settings);
    try {
      variants.push_back({settings, render(axiom, lex, profile)});
    } catch (const NoPluralError &) {
      if (!first_failure) first_failure = std::current_exception();
    } catch (const ConcordUnavailableError &) {
      if (!first_failure) first_failure = std::current_exception();
    }
  }
  if (variants.empty() && first_failure) std::rethrow_exception(first_failure);
  return variants;
}

int run(const RunConfig &config, std::istream &in, std::ostream &out,
        std::ostream &err) {
  Lexicon lex;
  {
    std::ifstream file(config.lexicon_path);
    if (!file) {
      err << config.lexicon_path << ": error: cannot open lexicon\n";
      return kExitConfigError;
    }
    try {
      lex = load_lexicon(file);
    } catch (const LexiconError &e) {
      err << config.lexicon_path;
      if (e.line() > 0) err << ':' << e.line();
      err << ": error: " << e.reason() << '\n';
      return kExitConfigError;
    }
  }

  PreferenceProfile profile = survey_default_profile();
  if (config.profile_path) {
    std::ifstream file(*config.profile_path);
    if (!file) {
      err << *config.profile_path << ": error: cannot open profile\n";
      return kExitConfigError;
    }
    try {
      profile = parse_profile(read_all(file), profile);
    } catch (const ProfileError &e) {
      err << *config.profile_path << ':' << e.line()
          << ": error: " << e.reason() << '\n';
      return kExitConfigError;
    }
  }
  for (const std::string &setting : config.overrides) {
    try {
      apply_setting(profile, setting);
    } catch (const ProfileError &e) {
      err << "--set " << setting << ": error: " << e.reason() << '\n';
      return kExitConfigError;
    }
  }

  std::string text;
  std::string source = config.axioms_path;
  if (config.axioms_path == "-") {
    source = "<stdin>";
    text = read_all(in);
  } else {
    std::ifstream file(config.axioms_path);
    if (!file) {
      err << config.axioms_path << ": error: cannot open axiom file\n";
      return kExitConfigError;
    }
    text = read_all(file);
  }

  const AxiomFile parsed = parse_axioms(text);
  auto next_axiom = parsed.axioms.begin();
  auto next_error = parsed.errors.begin();
  int status = kExitOk;
  // Walk axioms and parse errors together in line order.
  while (next_axiom != parsed.axioms.end() ||
         next_error != parsed.errors.end()) {
    const bool take_error =
        next_error != parsed.errors.end() &&
        (next_axiom == parsed.axioms.end() ||
         next_error->line() < next_axiom->line);
    if (take_error) {
      err << source << ':' << next_error->line() << ':'
          << next_error->column() << ": error: " << next_error->reason()
          << '\n';
      ++next_error;
      status = kExitRenderError;
      if (config.fail_fast) break;
      continue;
    }
    const ParsedAxiom &item = *next_axiom++;
    try {
      if (config.variants) {
        for (const Variant &v :
             list_variants(item.axiom, lex, profile.sentence_case)) {
          if (config.trace) print_trace(err, item.line, v.sentence);
          out << v.settings << '\t' << v.sentence.text << '\n';
        }
      } else {
        const Sentence s = render(item.axiom, lex, profile);
        if (config.trace) print_trace(err, item.line, s);
        out << s.text << '\n';
      }
    } catch (const Error &e) {
      err << source << ':' << item.line << ": error: " << e.what() << '\n';
      status = kExitRenderError;
      if (config.fail_fast) break;
    }
  }
  out.flush();
  return status;
}

int run_main(int argc, const char *const *argv, std::istream &in,
             std::ostream &out, std::ostream &err) {
  CLI::App app{"Verbalize description-logic axioms as isiZulu sentences."};
  app.name("zuluverb");
  RunConfig config;
  std::string profile_path;
  app.add_option("--lexicon", config.lexicon_path, "Lexicon file")
      ->required();
  app.add_option("--axioms", config.axioms_path,
                 "Axiom file, one per line ('-' for standard input)")
      ->capture_default_str();
  app.add_option("--profile", profile_path, "Preference profile file");
  app.add_option("--set", config.overrides,
                 "Profile override key=value (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_flag("--variants", config.variants,
               "Print every variant of each axiom as settings<TAB>sentence");
  app.add_flag("--trace", config.trace, "Print rendering traces to stderr");
  app.add_flag("--fail-fast", config.fail_fast, "Stop at the first error");
  app.allow_windows_style_options(false);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "zuluverb: error: " << e.what() << '\n';
    return kExitConfigError;
  }
  if (!profile_path.empty()) config.profile_path = profile_path;
  return run(config, in, out, err);
}

}  // namespace zulu
