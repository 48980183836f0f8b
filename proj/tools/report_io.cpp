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

#include "report_io.hpp"

#include <stdexcept>
#include <string>

#include "cef/format.hpp"

namespace cef::cli {

void write_csv(std::ostream& out, const AccuracyReport& report) {
  if (!report.per_point) {
    throw std::logic_error("write_csv: report was produced without per-point samples");
  }
  out << "x,y,rel_error\n";
  for (const auto& s : *report.per_point) {
    out << format_scientific(s.x) << ',' << format_scientific(s.y) << ','
        << format_scientific(s.rel_error) << '\n';
  }
}

nlohmann::json to_json(const GridSpec& grid) {
  return {
      {"x_min", grid.x_min}, {"x_max", grid.x_max}, {"y_min", grid.y_min},
      {"y_max", grid.y_max}, {"nx", grid.nx},       {"ny", grid.ny},
      {"spacing", std::string(to_string(grid.spacing))},
  };
}

nlohmann::json to_json(const AccuracyReport& report) {
  nlohmann::json j{
      {"grid", to_json(report.grid)},
      {"method", std::string(to_string(report.method))},
      {"reference", std::string(to_string(report.reference))},
      {"max_rel_error", report.max_rel_error},
      {"argmax_point", {{"x", report.argmax_x}, {"y", report.argmax_y}}},
  };
  if (report.per_point) {
    auto& points = j["per_point"] = nlohmann::json::array();
    for (const auto& s : *report.per_point) {
      points.push_back({{"x", s.x}, {"y", s.y}, {"rel_error", s.rel_error}});
    }
  }
  return j;
}

nlohmann::json to_json(const BenchReport& report) {
  return {
      {"method", std::string(to_string(report.method))},
      {"region", std::string(to_string(report.region))},
      {"points_evaluated", report.points_evaluated},
      {"wall_time", report.wall_time},
      {"throughput", report.throughput},
      {"checksum", report.checksum},
  };
}

}  // namespace cef::cli
