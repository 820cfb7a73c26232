// Copyright 2026 The Railtriage Authors
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

#ifndef RAILTRIAGE_ERROR_HPP_
#define RAILTRIAGE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace railtriage {

// Base of every error raised by the library. `code` is a stable identifier
// such as "MissingField" or "ConflictingPolarity"; `detail` carries the
// offending name or line.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string detail)
      : std::runtime_error(code + ": " + detail),
        code_(std::move(code)),
        detail_(std::move(detail)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string code_;
  std::string detail_;
};

// A table, lexicon or schema file failed validation. Maps to exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An input or output path could not be read or written. Maps to exit code 2.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace railtriage

#endif  // RAILTRIAGE_ERROR_HPP_
