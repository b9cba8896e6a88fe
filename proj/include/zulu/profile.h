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

#ifndef ZULU_PROFILE_H_
#define ZULU_PROFILE_H_

#include <string>
#include <string_view>
#include <vector>

namespace zulu {

enum class SubsumptionNumber { kSingular, kPlural, kAllPlural };

enum class NegationNumber {
  kSingularImpersonal,
  kSingularConcordial,
  kPluralConcordial,
  kAllPluralConcordial,
};

enum class ExistStyle { kGenericPlural, kDwa, kNomaPhi, kThize };

enum class Number { kSingular, kPlural };

enum class AndStyle { kEnumerationNa, kKanye, kFuthi };

enum class OrStyle { kOkanye, kNoma };

enum class SentenceCase { kAsStored, kCapitalized };

// The choices the grammar leaves open. Use survey_default_profile() for the
// shipped defaults; a value-initialized profile has no particular meaning.
struct PreferenceProfile {
  SubsumptionNumber subsumption_number{};
  NegationNumber negation_number{};
  ExistStyle exist_style{};
  Number exist_number{};
  AndStyle and_style{};
  OrStyle or_style{};
  SentenceCase sentence_case{};

  bool operator==(const PreferenceProfile &) const = default;
};

// Defaults parsed from the built-in copy of data/default.profile.
const PreferenceProfile &survey_default_profile();

// Text of the built-in default profile.
std::string_view default_profile_text();

// Applies `key=value` lines onto `base`. Blank lines and "#" comments are
// ignored; unknown keys or values throw ProfileError with the line number.
PreferenceProfile parse_profile(std::string_view text,
                                const PreferenceProfile &base);
PreferenceProfile load_profile_file(const std::string &path,
                                    const PreferenceProfile &base);

// Applies a single `key=value` setting. Throws ProfileError (line 0).
void apply_setting(PreferenceProfile &profile, std::string_view setting);

// Writes every field as `key=value` lines.
std::string format_profile(const PreferenceProfile &profile);

// Value names as used in profile files.
std::string_view to_string(SubsumptionNumber v);
std::string_view to_string(NegationNumber v);
std::string_view to_string(ExistStyle v);
std::string_view to_string(Number v);
std::string_view to_string(AndStyle v);
std::string_view to_string(OrStyle v);
std::string_view to_string(SentenceCase v);

}  // namespace zulu

#endif  // ZULU_PROFILE_H_
