// Copyright 2026 the discphase authors
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

#ifndef DISCPHASE_CORE_ERRORS_HPP
#define DISCPHASE_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace discphase {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected argument (non-finite value, empty channel, bad alphabet size, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed instance document; the message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

// File could not be opened or written; the message names the path.
class IoError : public Error {
 public:
  using Error::Error;
};

// Requested exhaustive enumeration exceeds the configured size limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

// SNR boost is undefined because the direct coefficient has zero magnitude.
class BoostUndefinedError : public Error {
 public:
  using Error::Error;
};

}  // namespace discphase

#endif
