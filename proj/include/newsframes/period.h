// Copyright 2026 The newsframes Authors
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

#include <compare>
#include <string>
#include <string_view>

namespace newsframes {

enum class Granularity { year, quarter, month };

std::string granularity_name(Granularity g);
Granularity parse_granularity(std::string_view name);  // "year"|"quarter"|"month"

// Calendar date. parse_iso validates month/day ranges including leap years.
struct Date {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31

  static Date parse_iso(std::string_view text);  // "YYYY-MM-DD"
  std::string str() const;
  auto operator<=>(const Date&) const = default;
};

// One bucket of a time slicing. `index` is the quarter (1..4) or month
// (1..12); 0 for yearly periods.
struct Period {
  Granularity granularity = Granularity::year;
  int year = 0;
  int index = 0;

  static Period of_date(const Date& date, Granularity g);
  // "YYYY", "YYYY-Qn" or "YYYY-MM"; granularity inferred from the shape.
  static Period parse(std::string_view text);

  Period next() const;
  std::string str() const;
  auto operator<=>(const Period&) const = default;
};

}  // namespace newsframes
