// Copyright 2026 The laa Authors.
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

#ifndef LAA_COMMON_HPP
#define LAA_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace laa {

/// 0/1 assignment over n variables.
using BinaryVector = Eigen::VectorXi;

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Instance too small or otherwise degenerate for the requested quantity.
class DegenerateInstanceError : public Error {
 public:
  using Error::Error;
};

/// Vector length does not match the variable count.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Quantity requires simulation data (e.g. the true optimum) that is absent.
class UnavailableError : public Error {
 public:
  using Error::Error;
};

/// No binary vector satisfies the constraints.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Derives an independent stream seed from a base seed (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace laa

#endif  // LAA_COMMON_HPP
