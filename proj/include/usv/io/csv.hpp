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

#ifndef USV_IO_CSV_HPP_
#define USV_IO_CSV_HPP_

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "usv/core/types.hpp"
#include "usv/io/format.hpp"
#include "usv/sim/runner.hpp"

namespace usv {

struct OutputMeta {
  std::string config_hash;
  std::string scenario_hash;
};

// First line is a '#' comment carrying tool, version and hashes; then a
// header row and one row per tick. '\n' line ends regardless of platform.
inline void write_runlog_csv(std::ostream& o, const RunLog& log,
                             const OutputMeta& meta) {
  o << "# tool=" << kToolName << " version=" << kToolVersion
    << " config_hash=" << meta.config_hash
    << " scenario_hash=" << meta.scenario_hash << " scenario=" << log.scenario
    << " controller=" << log.controller << " dt=" << format_double(log.dt)
    << " tick=" << format_double(log.tick) << '\n';
  bool first = true;
  auto sep = [&] {
    if (!first) o << ',';
    first = false;
  };
  for (const auto& c : double_columns()) sep(), o << c.name;
  for (const auto& c : int_columns()) sep(), o << c.name;
  for (const auto& c : text_columns()) sep(), o << c.name;
  o << '\n';
  std::string line;
  for (const auto& r : log.records) {
    line.clear();
    for (const auto& c : double_columns()) {
      line += format_double(r.*(c.field));
      line += ',';
    }
    for (const auto& c : int_columns()) {
      line += std::to_string(r.*(c.field));
      line += ',';
    }
    for (size_t i = 0; i < text_columns().size(); ++i) {
      line += r.*(text_columns()[i].field);
      line += i + 1 < text_columns().size() ? ',' : '\n';
    }
    o << line;
  }
}

inline void save_runlog_csv(const std::string& path, const RunLog& log,
                            const OutputMeta& meta) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  write_runlog_csv(f, log, meta);
  if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  size_t p = 0;
  while (true) {
    const size_t c = s.find(',', p);
    if (c == std::string_view::npos) {
      out.push_back(s.substr(p));
      break;
    }
    out.push_back(s.substr(p, c - p));
    p = c + 1;
  }
  return out;
}

inline std::map<std::string, std::string> parse_meta(std::string_view line) {
  std::map<std::string, std::string> kv;
  std::istringstream is{std::string(line.substr(1))};
  std::string tok;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq != std::string::npos) kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

}  // namespace detail

class CsvParseError : public ValidationError {
 public:
  CsvParseError(const std::string& source, int line, const std::string& what)
      : ValidationError(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline RunLog read_runlog_csv(std::istream& in,
                              const std::string& source = "<log>") {
  RunLog log;
  std::string line;
  int lineno = 0;
  std::vector<std::string> header;
  std::vector<int> target;  // column -> index into the three column lists
  auto fail = [&](const std::string& what) -> CsvParseError {
    return CsvParseError(source, lineno, what);
  };
  const auto& dc = double_columns();
  const auto& ic = int_columns();
  const auto& tc = text_columns();
  const int nd = static_cast<int>(dc.size()), ni = static_cast<int>(ic.size());

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto kv = detail::parse_meta(line);
      if (kv.count("scenario")) log.scenario = kv["scenario"];
      if (kv.count("controller")) log.controller = kv["controller"];
      if (kv.count("scenario_hash")) log.scenario_hash = kv["scenario_hash"];
      if (kv.count("dt")) log.dt = parse_double(kv["dt"], "dt");
      if (kv.count("tick")) log.tick = parse_double(kv["tick"], "tick");
      continue;
    }
    const auto cells = detail::split_commas(line);
    if (header.empty()) {
      for (auto c : cells) header.emplace_back(trim(c));
      target.assign(header.size(), -1);
      std::vector<char> seen(dc.size() + ic.size() + tc.size(), 0);
      for (size_t j = 0; j < header.size(); ++j) {
        for (int q = 0; q < nd; ++q) {
          if (header[j] == dc[q].name) target[j] = q;
        }
        for (int q = 0; q < ni; ++q) {
          if (header[j] == ic[q].name) target[j] = nd + q;
        }
        for (int q = 0; q < static_cast<int>(tc.size()); ++q) {
          if (header[j] == tc[q].name) target[j] = nd + ni + q;
        }
        if (target[j] >= 0) seen[static_cast<size_t>(target[j])] = 1;
      }
      for (size_t q = 0; q < seen.size(); ++q) {
        if (!seen[q]) {
          const char* nm = q < dc.size() ? dc[q].name
                           : q < dc.size() + ic.size()
                               ? ic[q - dc.size()].name
                               : tc[q - dc.size() - ic.size()].name;
          throw fail(std::string("missing column '") + nm + "'");
        }
      }
      continue;
    }
    if (cells.size() != header.size()) {
      throw fail("expected " + std::to_string(header.size()) +
                 " fields, found " + std::to_string(cells.size()) +
                 " (truncated row?)");
    }
    LogRecord r;
    for (size_t j = 0; j < cells.size(); ++j) {
      const int q = target[j];
      if (q < 0) continue;
      if (q < nd) {
        double v;
        if (!try_parse_double(cells[j], v)) {
          throw fail("bad number '" + std::string(cells[j]) + "' in column '" +
                     header[j] + "'");
        }
        r.*(dc[static_cast<size_t>(q)].field) = v;
      } else if (q < nd + ni) {
        double v;
        if (!try_parse_double(cells[j], v)) {
          throw fail("bad integer '" + std::string(cells[j]) +
                     "' in column '" + header[j] + "'");
        }
        r.*(ic[static_cast<size_t>(q - nd)].field) = static_cast<int>(v);
      } else {
        r.*(tc[static_cast<size_t>(q - nd - ni)].field) = std::string(cells[j]);
      }
    }
    if (!log.records.empty() && !(r.t > log.records.back().t)) {
      throw fail("time is not increasing");
    }
    if (!r.event.empty()) log.event_times.push_back(r.t);
    log.records.push_back(std::move(r));
  }
  if (header.empty()) {
    throw CsvParseError(source, lineno, "no header row");
  }
  if (log.records.empty()) throw CsvParseError(source, lineno, "no data rows");
  if (log.tick == 0 && log.records.size() > 1) {
    log.tick = log.records[1].t - log.records[0].t;
  }
  return log;
}

inline RunLog load_runlog_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open log '" + path + "'");
  return read_runlog_csv(f, path);
}

// Numeric table with an optional header row. Used for fit inputs.
struct NumericTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

inline NumericTable read_numeric_csv(std::istream& in,
                                     const std::string& source) {
  NumericTable t;
  std::string line;
  int lineno = 0;
  size_t width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    const auto cells = detail::split_commas(line);
    std::vector<double> row;
    bool numeric = true;
    for (auto c : cells) {
      double v;
      if (!try_parse_double(c, v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (t.header.empty() && t.rows.empty()) {
        for (auto c : cells) t.header.emplace_back(trim(c));
        width = cells.size();
        continue;
      }
      throw CsvParseError(source, lineno, "non-numeric field");
    }
    if (width == 0) width = row.size();
    if (row.size() != width) {
      throw CsvParseError(source, lineno,
                          "expected " + std::to_string(width) + " fields");
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline NumericTable load_numeric_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open '" + path + "'");
  return read_numeric_csv(f, path);
}

}  // namespace usv

#endif  // USV_IO_CSV_HPP_
