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

#include "cef/reference_table.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace cef {

namespace {

constexpr std::string_view kTable = R"(
0.01 0.01 9.887176929549550E-1 4.196286232960261E0   struck 9.887176929549547E-1 1.108529605747765E-2 4.137187541585456E0   struck 1.108529605747726E-2
0.1  0.1  8.884785624756435E-1 7.590865094856971E-1  struck 8.884785624756436E-1 9.433165105728508E-2 2.042540773419453E-1  struck 9.433165105728510E-2
0.5  0.5  5.331567079121748E-1 5.331626469616391E-1  wave   5.331567079121750E-1 2.304882313844584E-1 2.304774733809673E-1  wave   2.304882313844584E-1
1    1    3.047442052569125E-1 3.047442051814129E-1  under  3.047442052569128E-1 2.082189382028317E-1 2.082189382021634E-1  under  2.082189382028316E-1
2.5  2.5  1.167371250446503E-1 1.167371250446503E-1  -      1.167371250446503E-1 1.079085859964814E-1 1.079085859964814E-1  -      1.079085859964814E-1
5    5    5.696543988817698E-2 5.696543988817699E-2  -      5.696543988817697E-2 5.583874277539103E-2 5.583874277539103E-2  -      5.583874277539103E-2
7.5  7.5  3.777752935845998E-2 3.777752935845999E-2  -      3.777752935846000E-2 3.744329372959511E-2 3.744329372959512E-2  -      3.744329372959514E-2
10   10   2.827946745423245E-2 2.827946745423246E-2  -      2.827946745423246E-2 2.813843327633689E-2 2.813843327633690E-2  -      2.813843327633690E-2
12.5 12.5 2.260351678541391E-2 2.260351678541392E-2  -      2.260351678541391E-2 2.253130329137736E-2 2.253130329137737E-2  -      2.253130329137736E-2
15   15   1.882714532513676E-2 1.882714532513675E-2  -      1.882714532513676E-2 1.878535427799564E-2 1.878535427799565E-2  -      1.878535427799565E-2
)";

Quality parse_mark(const std::string& mark) {
  if (mark == "-") return Quality::accurate;
  if (mark == "under") return Quality::high;
  if (mark == "wave") return Quality::insufficient;
  if (mark == "struck") return Quality::inaccurate;
  throw std::logic_error("reference table: unknown mark '" + mark + "'");
}

std::vector<TableRow> parse_table() {
  std::vector<TableRow> rows;
  std::istringstream lines{std::string(kTable)};
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream in(line);
    TableRow row{};
    std::string re_mark, im_mark;
    in >> row.x >> row.y >> row.re_refined >> row.re_cr >> re_mark >> row.re_reference >>
        row.im_refined >> row.im_cr >> im_mark >> row.im_reference;
    if (!in) throw std::logic_error("reference table: malformed line '" + line + "'");
    row.re_cr_quality = parse_mark(re_mark);
    row.im_cr_quality = parse_mark(im_mark);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string_view to_string(Quality q) noexcept {
  switch (q) {
    case Quality::accurate: return "accurate";
    case Quality::high: return "high";
    case Quality::insufficient: return "insufficient";
    case Quality::inaccurate: return "inaccurate";
  }
  return "unknown";
}

std::string_view reference_table_text() noexcept { return kTable; }

const std::vector<TableRow>& reference_table() {
  static const std::vector<TableRow> rows = parse_table();
  return rows;
}

}  // namespace cef
