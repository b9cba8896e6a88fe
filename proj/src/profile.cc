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

#include "zulu/profile.h"

#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include "zulu/error.h"

namespace zulu {

namespace internal {
extern const char kDefaultProfileText[];
}  // namespace internal

namespace {

template <typename E>
using Names = std::initializer_list<std::pair<std::string_view, E>>;

const Names<SubsumptionNumber> kSubsumptionNames = {
    {"singular", SubsumptionNumber::kSingular},
    {"plural", SubsumptionNumber::kPlural},
    {"all_plural", SubsumptionNumber::kAllPlural},
};

const Names<NegationNumber> kNegationNames = {
    {"singular_impersonal", NegationNumber::kSingularImpersonal},
    {"singular_concordial", NegationNumber::kSingularConcordial},
    {"plural_concordial", NegationNumber::kPluralConcordial},
    {"all_plural_concordial", NegationNumber::kAllPluralConcordial},
};

const Names<ExistStyle> kExistStyleNames = {
    {"generic_plural", ExistStyle::kGenericPlural},
    {"dwa", ExistStyle::kDwa},
    {"noma_phi", ExistStyle::kNomaPhi},
    {"thize", ExistStyle::kThize},
};

const Names<Number> kNumberNames = {
    {"singular", Number::kSingular},
    {"plural", Number::kPlural},
};

const Names<AndStyle> kAndNames = {
    {"enumeration_na", AndStyle::kEnumerationNa},
    {"kanye", AndStyle::kKanye},
    {"futhi", AndStyle::kFuthi},
};

const Names<OrStyle> kOrNames = {
    {"okanye", OrStyle::kOkanye},
    {"noma", OrStyle::kNoma},
};

const Names<SentenceCase> kCaseNames = {
    {"as_stored", SentenceCase::kAsStored},
    {"capitalized", SentenceCase::kCapitalized},
};

template <typename E>
std::string_view name_of(const Names<E> &names, E value) {
  for (const auto &[name, v] : names) {
    if (v == value) return name;
  }
  return "?";
}

template <typename E>
void assign(const Names<E> &names, std::string_view key,
            std::string_view value, E &field, int line) {
  for (const auto &[name, v] : names) {
    if (name == value) {
      field = v;
      return;
    }
  }
  std::string allowed;
  for (const auto &[name, v] : names) {
    if (!allowed.empty()) allowed += ", ";
    allowed += name;
  }
  throw ProfileError(line, "invalid value '" + std::string(value) +
                               "' for " + std::string(key) + " (expected " +
                               allowed + ")");
}

std::string_view trim(std::string_view s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void apply(PreferenceProfile &p, std::string_view setting, int line) {
  const size_t eq = setting.find('=');
  if (eq == std::string_view::npos) {
    throw ProfileError(line, "expected key=value, got '" +
                                 std::string(setting) + "'");
  }
  const std::string_view key = trim(setting.substr(0, eq));
  const std::string_view value = trim(setting.substr(eq + 1));
  if (key == "subsumption_number") {
    assign(kSubsumptionNames, key, value, p.subsumption_number, line);
  } else if (key == "negation_number") {
    assign(kNegationNames, key, value, p.negation_number, line);
  } else if (key == "exist_style") {
    assign(kExistStyleNames, key, value, p.exist_style, line);
  } else if (key == "exist_number") {
    assign(kNumberNames, key, value, p.exist_number, line);
  } else if (key == "and_style") {
    assign(kAndNames, key, value, p.and_style, line);
  } else if (key == "or_style") {
    assign(kOrNames, key, value, p.or_style, line);
  } else if (key == "sentence_case") {
    assign(kCaseNames, key, value, p.sentence_case, line);
  } else {
    throw ProfileError(line, "unknown profile key '" + std::string(key) + "'");
  }
}

}  // namespace

std::string_view to_string(SubsumptionNumber v) {
  return name_of(kSubsumptionNames, v);
}
std::string_view to_string(NegationNumber v) {
  return name_of(kNegationNames, v);
}
std::string_view to_string(ExistStyle v) { return name_of(kExistStyleNames, v); }
std::string_view to_string(Number v) { return name_of(kNumberNames, v); }
std::string_view to_string(AndStyle v) { return name_of(kAndNames, v); }
std::string_view to_string(OrStyle v) { return name_of(kOrNames, v); }
std::string_view to_string(SentenceCase v) { return name_of(kCaseNames, v); }

std::string_view default_profile_text() {
  return internal::kDefaultProfileText;
}

const PreferenceProfile &survey_default_profile() {
  static const PreferenceProfile profile =
      parse_profile(default_profile_text(), PreferenceProfile{});
  return profile;
}

PreferenceProfile parse_profile(std::string_view text,
                                const PreferenceProfile &base) {
  PreferenceProfile p = base;
  int lineno = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line[0] == '#') continue;
    apply(p, line, lineno);
  }
  return p;
}

PreferenceProfile load_profile_file(const std::string &path,
                                    const PreferenceProfile &base) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open profile '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile(buf.str(), base);
}

void apply_setting(PreferenceProfile &profile, std::string_view setting) {
  apply(profile, trim(setting), 0);
}

std::string format_profile(const PreferenceProfile &p) {
  std::string out;
  auto line = [&](std::string_view key, std::string_view value) {
    out.append(key).append("=").append(value).append("\n");
  };
  line("subsumption_number", to_string(p.subsumption_number));
  line("negation_number", to_string(p.negation_number));
  line("exist_style", to_string(p.exist_style));
  line("exist_number", to_string(p.exist_number));
  line("and_style", to_string(p.and_style));
  line("or_style", to_string(p.or_style));
  line("sentence_case", to_string(p.sentence_case));
  return out;
}

}  // namespace zulu
