// Copyright 2026 The Commute Authors.
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

// MATC v1 text format for dense complex matrices:
//
//   MATC 1
//   <rows> <cols>
//   <rows lines of <cols> whitespace-separated tokens>
//
// A token is `<re>` or `<re>,<im>`. Writers emit 17 significant digits so a
// write/read/write cycle is byte-identical.

#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "commute/core.hpp"

namespace commute {

/// Malformed input text; carries a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace io_detail {

inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v,
                             std::chars_format::general);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

inline std::optional<std::size_t> parse_size(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

/// Reads lines while tracking 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    return true;
  }

  /// Next line that has at least one token; false at end of input.
  bool next_nonblank(std::string& line) {
    while (next(line)) {
      if (!split_tokens(line).empty()) return true;
    }
    return false;
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

inline void expect_header(LineReader& reader, std::string_view magic) {
  std::string line;
  if (!reader.next(line)) throw ParseError(1, 1, "empty input");
  const auto tokens = split_tokens(line);
  if (tokens.size() != 2 || tokens[0].text != magic || tokens[1].text != "1") {
    throw ParseError(reader.number(), 1,
                     "expected header '" + std::string(magic) + " 1'");
  }
}

inline void expect_end(LineReader& reader) {
  std::string line;
  if (reader.next_nonblank(line)) {
    throw ParseError(reader.number(), split_tokens(line).front().column,
                     "unexpected trailing content");
  }
}

}  // namespace io_detail

inline std::string format_entry(Complex z) {
  std::string s = io_detail::format_double(z.real());
  if (z.imag() != 0.0 || std::signbit(z.imag())) {
    s += ',';
    s += io_detail::format_double(z.imag());
  }
  return s;
}

inline void write_matc(std::ostream& out, const ComplexMatrix& m) {
  out << "MATC 1\n" << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << format_entry(m(r, c));
    }
    out << '\n';
  }
}

inline ComplexMatrix read_matc(std::istream& in) {
  using namespace io_detail;
  LineReader reader(in);
  expect_header(reader, "MATC");

  std::string line;
  if (!reader.next(line)) throw ParseError(reader.number() + 1, 1, "missing shape line");
  const auto shape = split_tokens(line);
  if (shape.size() != 2) throw ParseError(reader.number(), 1, "expected '<rows> <cols>'");
  const auto rows = parse_size(shape[0].text);
  const auto cols = parse_size(shape[1].text);
  if (!rows || *rows == 0) throw ParseError(reader.number(), shape[0].column, "bad row count");
  if (!cols || *cols == 0) throw ParseError(reader.number(), shape[1].column, "bad column count");
  if (*rows > kDimensionCap || *cols > kDimensionCap) {
    throw ParseError(reader.number(), 1, "dimension exceeds cap");
  }

  std::vector<Complex> entries;
  entries.reserve(*rows * *cols);
  for (std::size_t r = 0; r < *rows; ++r) {
    if (!reader.next(line)) {
      throw ParseError(reader.number() + 1, 1,
                       "expected " + std::to_string(*rows) + " rows, got " + std::to_string(r));
    }
    const auto tokens = split_tokens(line);
    if (tokens.size() != *cols) {
      const std::size_t col = tokens.size() > *cols ? tokens[*cols].column : line.size() + 1;
      throw ParseError(reader.number(), col,
                       "expected " + std::to_string(*cols) + " entries, got " +
                           std::to_string(tokens.size()));
    }
    for (const Token& tok : tokens) {
      const auto comma = tok.text.find(',');
      const std::string_view re_text = tok.text.substr(0, comma);
      const auto re = parse_double(re_text);
      if (!re) {
        throw ParseError(reader.number(), tok.column,
                         "malformed number '" + std::string(tok.text) + "'");
      }
      double im = 0.0;
      if (comma != std::string_view::npos) {
        const auto parsed = parse_double(tok.text.substr(comma + 1));
        if (!parsed) {
          throw ParseError(reader.number(), tok.column + comma + 1,
                           "malformed imaginary part in '" + std::string(tok.text) + "'");
        }
        im = *parsed;
      }
      entries.emplace_back(*re, im);
    }
  }
  expect_end(reader);
  return ComplexMatrix(*rows, *cols, std::move(entries));
}

inline std::string to_matc_string(const ComplexMatrix& m) {
  std::ostringstream out;
  write_matc(out, m);
  return out.str();
}

inline ComplexMatrix from_matc_string(const std::string& text) {
  std::istringstream in(text);
  return read_matc(in);
}

inline void save_matc(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_matc(out, m);
  if (!out) throw Error("write to '" + path + "' failed");
}

inline ComplexMatrix load_matc(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_matc(in);
}

}  // namespace commute
