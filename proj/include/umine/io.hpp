// Copyright 2026 The umine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "umine/error.hpp"
#include "umine/types.hpp"

namespace umine {

/// One certain transaction: sorted, duplicate-free item ids.
using DetTransaction = std::vector<ItemId>;
using DetDatabase = std::vector<DetTransaction>;

namespace detail {

// Splits on '\n'; a single trailing empty segment (text ending in '\n') is
// not a line. Interior empty lines are kept: they are empty transactions.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  return lines;
}

inline ItemId parse_item(std::string_view tok, std::size_t line,
                         std::size_t col) {
  ItemId id = 0;
  auto [p, ec] = std::from_chars(tok.begin(), tok.end(), id);
  if (ec != std::errc() || p != tok.end()) {
    throw ParseError("bad item id '" + std::string(tok) + "'", line, col);
  }
  return id;
}

inline double parse_prob(std::string_view tok, std::size_t line,
                         std::size_t col) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(tok.begin(), tok.end(), v);
  if (ec != std::errc() || p != tok.end()) {
    throw ParseError("bad probability '" + std::string(tok) + "'", line, col);
  }
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ParseError("probability out of [0,1]: '" + std::string(tok) + "'",
                     line, col);
  }
  return v;
}

}  // namespace detail

/// FIMI text: one transaction per line, whitespace-separated item ids.
/// Duplicate ids within a line collapse to one; items are sorted.
inline DetDatabase parse_fimi(std::string_view text) {
  DetDatabase db;
  auto lines = detail::split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string_view line = lines[li];
    DetTransaction t;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
        ++pos;
      }
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      t.push_back(detail::parse_item(line.substr(pos, end - pos), li + 1,
                                     pos + 1));
      pos = end;
    }
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    db.push_back(std::move(t));
  }
  return db;
}

/// UDB text: one transaction per line, tokens `item:prob` separated by
/// spaces. Zero-probability units are dropped; an empty line is an empty
/// transaction. Duplicate items within a line are rejected.
inline UncertainDatabase parse_udb(std::string_view text) {
  std::vector<UncertainTransaction> ts;
  auto lines = detail::split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string_view line = lines[li];
    std::vector<Unit> units;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
        ++pos;
      }
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      std::string_view tok = line.substr(pos, end - pos);
      std::size_t colon = tok.find(':');
      if (colon == std::string_view::npos || colon == 0 ||
          colon + 1 >= tok.size()) {
        throw ParseError("expected item:prob, got '" + std::string(tok) + "'",
                         li + 1, pos + 1);
      }
      ItemId id = detail::parse_item(tok.substr(0, colon), li + 1, pos + 1);
      double pr = detail::parse_prob(tok.substr(colon + 1), li + 1,
                                     pos + 1 + colon + 1);
      if (pr > 0.0) units.push_back(Unit{id, Probability(pr)});
      pos = end;
    }
    try {
      ts.emplace_back(li + 1, std::move(units));
    } catch (const ParamError& e) {
      throw ParseError(e.what(), li + 1);
    }
  }
  return UncertainDatabase(std::move(ts));
}

inline std::string write_fimi(const DetDatabase& db) {
  std::string out;
  for (const auto& t : db) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(t[i]);
    }
    out += '\n';
  }
  return out;
}

/// Serializes with probabilities at 6 decimals. Values already on the 1e-6
/// grid round-trip exactly; serialize-parse-serialize is byte-idempotent.
inline std::string write_udb(const UncertainDatabase& db) {
  std::string out;
  char buf[64];
  for (const auto& t : db.transactions()) {
    bool first = true;
    for (const Unit& u : t.units()) {
      int len = std::snprintf(buf, sizeof buf, "%s%u:%.6f", first ? "" : " ",
                              u.item, u.prob.value());
      out.append(buf, static_cast<std::size_t>(len));
      first = false;
    }
    out += '\n';
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw IoError("read failed: " + path);
  return std::move(ss).str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}

inline DetDatabase parse_fimi_file(const std::string& path) {
  return parse_fimi(read_file(path));
}

inline UncertainDatabase parse_udb_file(const std::string& path) {
  return parse_udb(read_file(path));
}

}  // namespace umine
