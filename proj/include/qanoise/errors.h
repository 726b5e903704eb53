// Copyright 2026 The qanoise Authors.
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


#ifndef QANOISE_ERRORS_H_
#define QANOISE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qanoise {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file; the message names the offending location.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally valid input that violates a data invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Bad flags, policies, or adapter configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qanoise

#endif  // QANOISE_ERRORS_H_
