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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cef/coefficients.hpp"

namespace cef::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

/// Series parameters as given on the command line; unset fields fall back to
/// the environment default, then to the built-in defaults.
struct ParamOverrides {
  std::optional<double> tau_m;
  std::optional<int> n_terms;
  std::optional<double> y_switch;
};

/// Parses "tau_m,N,y_switch" (the CEF_DEFAULT_PARAMS format).
/// Throws ParameterError on malformed text.
[[nodiscard]] SeriesParams parse_params_text(const std::string& text);

/// Built-in defaults, overridden by `env_text` when non-null, then by `flags`.
/// The result is validated.
[[nodiscard]] SeriesParams resolve_params(const ParamOverrides& flags, const char* env_text);

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Reads CEF_DEFAULT_PARAMS from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cef::cli
