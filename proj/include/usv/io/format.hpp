// Copyright 2026 The usvsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef USV_IO_FORMAT_HPP_
#define USV_IO_FORMAT_HPP_

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <system_error>

#include "usv/core/types.hpp"

namespace usv {

inline constexpr std::string_view kToolName = "usvsim";
inline constexpr std::string_view kToolVersion = "1.0.0";

// Shortest text that parses back to the same double.
inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline bool try_parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

inline double parse_double(std::string_view s, std::string_view what) {
  double v;
  if (!try_parse_double(s, v)) {
    throw ValidationError(std::string(what) + ": expected a number, got '" +
                          std::string(s) + "'");
  }
  return v;
}

// Seconds from "PT1M18S", "PT78S", "78s" or "78".
inline double parse_seconds(std::string_view s, std::string_view what) {
  s = trim(s);
  std::string_view body = s;
  auto bad = [&]() -> ValidationError {
    return ValidationError(std::string(what) + ": bad duration '" +
                           std::string(s) + "'");
  };
  if (body.size() > 2 && (body.substr(0, 2) == "PT" || body.substr(0, 2) == "pt")) {
    body.remove_prefix(2);
    double total = 0;
    bool any = false;
    while (!body.empty()) {
      size_t i = 0;
      auto digit = [&body](size_t k) {
        return k < body.size() &&
               std::isdigit(static_cast<unsigned char>(body[k]));
      };
      while (i < body.size()) {
        if (digit(i) || body[i] == '.') {
          ++i;
        } else if ((body[i] == 'e' || body[i] == 'E') && i > 0 &&
                   (digit(i + 1) ||
                    (i + 2 < body.size() &&
                     (body[i + 1] == '-' || body[i + 1] == '+') &&
                     digit(i + 2)))) {
          i += 2;  // exponent, as written by format_duration
        } else {
          break;
        }
      }
      if (i == 0 || i == body.size()) throw bad();
      double v;
      if (!try_parse_double(body.substr(0, i), v)) throw bad();
      const char unit = static_cast<char>(std::toupper(body[i]));
      if (unit == 'H') total += 3600 * v;
      else if (unit == 'M') total += 60 * v;
      else if (unit == 'S') total += v;
      else throw bad();
      any = true;
      body.remove_prefix(i + 1);
    }
    if (!any) throw bad();
    return total;
  }
  if (!body.empty() && (body.back() == 's' || body.back() == 'S')) {
    body.remove_suffix(1);
  }
  double v;
  if (!try_parse_double(body, v)) throw bad();
  return v;
}

inline std::string format_duration(double seconds) {
  return "PT" + format_double(seconds) + "S";
}

// FNV-1a, 64 bit. A fingerprint, not a security hash.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace usv

#endif  // USV_IO_FORMAT_HPP_
