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

// CSV and JSON renderings of analysis reports.

#include <ostream>

#include <json.hpp>

#include "cef/analysis.hpp"

namespace cef::cli {

/// Header "x,y,rel_error" then one LF-terminated line per grid node.
/// Needs a report that kept per_point samples.
void write_csv(std::ostream& out, const AccuracyReport& report);

[[nodiscard]] nlohmann::json to_json(const GridSpec& grid);
[[nodiscard]] nlohmann::json to_json(const AccuracyReport& report);
[[nodiscard]] nlohmann::json to_json(const BenchReport& report);

}  // namespace cef::cli
