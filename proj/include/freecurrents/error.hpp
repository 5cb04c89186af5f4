// Copyright 2026 The freecurrents Authors
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

#ifndef FREECURRENTS_ERROR_HPP_
#define FREECURRENTS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace freecurrents {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition was violated (basis mismatch, inadmissible
// weights, radius out of bounds, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace freecurrents

#endif  // FREECURRENTS_ERROR_HPP_
