// Copyright 2026 The Smokegen Authors.
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

#ifndef SMOKEGEN_SRC_ERROR_H_
#define SMOKEGEN_SRC_ERROR_H_

#include <stdexcept>
#include <string>

namespace smokegen {

// Bad argument to a generator, expansion or emission routine.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Descriptor diagnostics. Each failure mode has its own kind so callers and
// tests can tell them apart without matching on message text.
class DescriptorError : public std::runtime_error {
 public:
  enum class Kind {
    kSyntax,
    kUnknownParameterType,
    kMissingDefault,
    kMissingField,
    kInvertedRange,
    kNonPositiveStep,
    kDuplicateParameter,
    kEmptyValueList,
    kInvalidField,
  };

  DescriptorError(Kind kind, const std::string& message, int line = -1)
      : std::runtime_error(line >= 0
                               ? "line " + std::to_string(line) + ": " + message
                               : message),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  // 1-based source line, or -1 when unknown.
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& cause)
      : std::runtime_error(path + ": " + cause), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class TemplateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Campaign-level failure: the adapter could not be started or never answered
// the capabilities handshake.
class CampaignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_ERROR_H_
