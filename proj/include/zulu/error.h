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

#ifndef ZULU_ERROR_H_
#define ZULU_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace zulu {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed lexicon data. line() is 1-based, or 0 when the problem is not
// tied to a single line (e.g. an empty source).
class LexiconError : public Error {
 public:
  LexiconError(int line, const std::string &reason)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + reason
                       : reason),
        line_(line),
        reason_(reason) {}
  int line() const { return line_; }
  const std::string &reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

// A noun lemma or property key that the lexicon does not define.
class UnknownEntryError : public Error {
 public:
  using Error::Error;
};

// A noun without a stored plural was asked for one.
class NoPluralError : public Error {
 public:
  using Error::Error;
};

// A morphological rule was applied to input it cannot take.
class MorphologyError : public Error {
 public:
  using Error::Error;
};

// A concord cell that the table leaves empty was needed.
class ConcordUnavailableError : public MorphologyError {
 public:
  using MorphologyError::MorphologyError;
};

// Axiom text that does not match the grammar.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string &reason,
             std::vector<std::string> expected = {})
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + reason),
        line_(line),
        column_(column),
        reason_(reason),
        expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }  // 1-based, in code points
  const std::string &reason() const { return reason_; }
  // Token kinds that would have been accepted at column().
  const std::vector<std::string> &expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string reason_;
  std::vector<std::string> expected_;
};

// An axiom outside the fragment the renderer can verbalize.
class UnsupportedShapeError : public Error {
 public:
  using Error::Error;
};

// Bad preference profile text or override.
class ProfileError : public Error {
 public:
  ProfileError(int line, const std::string &reason)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + reason
                       : reason),
        line_(line),
        reason_(reason) {}
  int line() const { return line_; }
  const std::string &reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

}  // namespace zulu

#endif  // ZULU_ERROR_H_
