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

#ifndef ZULU_CLI_H_
#define ZULU_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zulu/axiom.h"
#include "zulu/lexicon.h"
#include "zulu/profile.h"
#include "zulu/renderer.h"

namespace zulu {

// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitRenderError = 1;
inline constexpr int kExitConfigError = 2;

struct RunConfig {
  std::string lexicon_path;
  std::string axioms_path = "-";  // "-" reads the input stream
  std::optional<std::string> profile_path;
  std::vector<std::string> overrides;  // key=value, applied after the file
  bool variants = false;
  bool trace = false;
  bool fail_fast = false;
};

struct Variant {
  std::string settings;  // profile settings selecting it, e.g. "exist_style=dwa,exist_number=plural"
  Sentence sentence;
};

// Every rendering of `axiom` the profile could select, in a fixed order.
// Variants that need a missing plural or concord are left out; if none is
// left the first failure is rethrown.
std::vector<Variant> list_variants(const Axiom &axiom, const Lexicon &lex,
                                   SentenceCase casing = SentenceCase::kAsStored);

// Renders every axiom of the configured file: sentences go to `out`, one per
// line; diagnostics and traces go to `err`. Returns kExitOk when every
// axiom rendered, kExitRenderError if any failed and kExitConfigError for
// unreadable or invalid lexicon, profile or axiom files.
int run(const RunConfig &config, std::istream &in, std::ostream &out,
        std::ostream &err);

// Parses command-line flags and calls run().
int run_main(int argc, const char *const *argv, std::istream &in,
             std::ostream &out, std::ostream &err);

}  // namespace zulu

#endif  // ZULU_CLI_H_
