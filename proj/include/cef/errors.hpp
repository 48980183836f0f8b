// Copyright 2026 The cefseries Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace cef {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid SeriesParams, QuadratureSpec or GridSpec.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Argument outside the domain of the requested kernel (or not finite).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Result would exceed the double-precision range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Adaptive quadrature ran out of subdivisions before reaching its tolerance.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

}  // namespace cef
