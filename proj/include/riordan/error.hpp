// Copyright 2026 The riordan-tools Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riordan {

// Any failure of an exact computation: division by zero, non-unit leading
// coefficient, insufficient precision, malformed element.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public MathError {
 public:
  DivisionByZero() : MathError("division by zero") {}
};

// Raised when an affine expression would become nonlinear.
class NonlinearError : public MathError {
 public:
  explicit NonlinearError(const std::string& what)
      : MathError("nonlinear: " + what) {}
};

class NotAUnit : public MathError {
 public:
  explicit NotAUnit(const std::string& what) : MathError("not a unit: " + what) {}
};

class PrecisionError : public MathError {
 public:
  explicit PrecisionError(const std::string& what)
      : MathError("insufficient precision: " + what) {}
};

class ParseError : public MathError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : MathError("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A linear system that has no solution; carries the offending equation.
class InconsistentSystem : public MathError {
 public:
  explicit InconsistentSystem(std::string equation)
      : MathError("inconsistent system: " + equation + " = 0"),
        equation_(std::move(equation)) {}

  const std::string& equation() const noexcept { return equation_; }

 private:
  std::string equation_;
};

}  // namespace riordan
