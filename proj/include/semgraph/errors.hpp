// Copyright 2026 The semgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEMGRAPH_ERRORS_HPP
#define SEMGRAPH_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semgraph {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dictionary file is missing, unreadable or malformed.
class LoadError : public Error {
 public:
  LoadError(std::string file, std::uint64_t byte_offset, const std::string &what)
      : Error(file + (byte_offset == kNoOffset ? std::string()
                                               : " @" + std::to_string(byte_offset)) +
              ": " + what),
        file_(std::move(file)),
        byte_offset_(byte_offset) {}

  static constexpr std::uint64_t kNoOffset = ~std::uint64_t{0};

  const std::string &file() const noexcept { return file_; }
  std::uint64_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::string file_;
  std::uint64_t byte_offset_;
};

/// The loaded graph violates a structural invariant (e.g. dangling pointer).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// An id that does not exist in the index was queried.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Input reduced to nothing usable (e.g. a sentence with no content tokens).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A benchmark dataset or persisted table could not be parsed.
class DatasetError : public Error {
 public:
  DatasetError(std::string file, std::size_t line, const std::string &what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}

  const std::string &file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

}  // namespace semgraph

#endif  // SEMGRAPH_ERRORS_HPP
