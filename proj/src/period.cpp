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

#include "newsframes/period.h"

#include <cstdio>
#include <stdexcept>

namespace newsframes {

namespace {

bool is_leap(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  static const int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap(year)) return 29;
  return kDays[month - 1];
}

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

}  // namespace

std::string granularity_name(Granularity g) {
  switch (g) {
    case Granularity::year: return "year";
    case Granularity::quarter: return "quarter";
    case Granularity::month: return "month";
  }
  return "?";
}

Granularity parse_granularity(std::string_view name) {
  if (name == "year") return Granularity::year;
  if (name == "quarter") return Granularity::quarter;
  if (name == "month") return Granularity::month;
  throw std::invalid_argument("unknown granularity '" + std::string(name) +
                              "' (expected year|quarter|month)");
}

Date Date::parse_iso(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-')
    throw std::invalid_argument("date '" + std::string(text) +
                                "' is not YYYY-MM-DD");
  Date d;
  if (!parse_int(text.substr(0, 4), d.year) ||
      !parse_int(text.substr(5, 2), d.month) ||
      !parse_int(text.substr(8, 2), d.day))
    throw std::invalid_argument("date '" + std::string(text) +
                                "' is not YYYY-MM-DD");
  if (d.month < 1 || d.month > 12 || d.day < 1 ||
      d.day > days_in_month(d.year, d.month))
    throw std::invalid_argument("date '" + std::string(text) +
                                "' is out of range");
  return d;
}

std::string Date::str() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

Period Period::of_date(const Date& date, Granularity g) {
  Period p;
  p.granularity = g;
  p.year = date.year;
  switch (g) {
    case Granularity::year: p.index = 0; break;
    case Granularity::quarter: p.index = (date.month - 1) / 3 + 1; break;
    case Granularity::month: p.index = date.month; break;
  }
  return p;
}

Period Period::parse(std::string_view text) {
  Period p;
  if (text.size() == 4) {
    if (!parse_int(text, p.year))
      throw std::invalid_argument("period '" + std::string(text) +
                                  "' is not YYYY, YYYY-Qn or YYYY-MM");
    p.granularity = Granularity::year;
    p.index = 0;
    return p;
  }
  if (text.size() == 7 && text[4] == '-') {
    if (!parse_int(text.substr(0, 4), p.year))
      throw std::invalid_argument("period '" + std::string(text) +
                                  "' has a malformed year");
    if (text[5] == 'Q' || text[5] == 'q') {
      int q = 0;
      if (!parse_int(text.substr(6, 1), q) || q < 1 || q > 4)
        throw std::invalid_argument("period '" + std::string(text) +
                                    "' has a malformed quarter");
      p.granularity = Granularity::quarter;
      p.index = q;
      return p;
    }
    int m = 0;
    if (!parse_int(text.substr(5, 2), m) || m < 1 || m > 12)
      throw std::invalid_argument("period '" + std::string(text) +
                                  "' has a malformed month");
    p.granularity = Granularity::month;
    p.index = m;
    return p;
  }
  throw std::invalid_argument("period '" + std::string(text) +
                              "' is not YYYY, YYYY-Qn or YYYY-MM");
}

Period Period::next() const {
  Period p = *this;
  switch (granularity) {
    case Granularity::year:
      ++p.year;
      break;
    case Granularity::quarter:
      if (index == 4) {
        ++p.year;
        p.index = 1;
      } else {
        ++p.index;
      }
      break;
    case Granularity::month:
      if (index == 12) {
        ++p.year;
        p.index = 1;
      } else {
        ++p.index;
      }
      break;
  }
  return p;
}

std::string Period::str() const {
  char buf[16];
  switch (granularity) {
    case Granularity::year:
      std::snprintf(buf, sizeof(buf), "%04d", year);
      break;
    case Granularity::quarter:
      std::snprintf(buf, sizeof(buf), "%04d-Q%d", year, index);
      break;
    case Granularity::month:
      std::snprintf(buf, sizeof(buf), "%04d-%02d", year, index);
      break;
  }
  return buf;
}

}  // namespace newsframes
