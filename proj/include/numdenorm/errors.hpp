// Copyright 2026 The numdenorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NUMDENORM_ERRORS_HPP
#define NUMDENORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace numdenorm {

// Base for all recoverable errors raised by the toolkit. The CLI maps
// these to exit code 2 (bad data / usage); anything else is exit 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class UnparsableWritten : public Error {
 public:
  explicit UnparsableWritten(const std::string& what) : Error(what) {}
};

class EmptyRuleSet : public Error {
 public:
  explicit EmptyRuleSet(const std::string& what) : Error(what) {}
};

class InvalidTemplate : public Error {
 public:
  explicit InvalidTemplate(const std::string& what) : Error(what) {}
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

class EmptySequence : public Error {
 public:
  explicit EmptySequence(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class MissingGradients : public Error {
 public:
  explicit MissingGradients(const std::string& what) : Error(what) {}
};

class VersionMismatch : public Error {
 public:
  explicit VersionMismatch(const std::string& what) : Error(what) {}
};

class CorruptFile : public Error {
 public:
  explicit CorruptFile(const std::string& what) : Error(what) {}
};

class ArityMismatch : public Error {
 public:
  explicit ArityMismatch(const std::string& what) : Error(what) {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what) : Error(what) {}
};

class EmptyReference : public Error {
 public:
  explicit EmptyReference(const std::string& what) : Error(what) {}
};

class EmptyCorpus : public Error {
 public:
  explicit EmptyCorpus(const std::string& what) : Error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace numdenorm

#endif  // NUMDENORM_ERRORS_HPP
