#pragma once

// Plain-text matrix format:
//
//   N
//   a11 a12 ... a1N
//   ...
//   aN1 aN2 ... aNN
//
// Entries are parsed as binary64; narrowing to a lower tier is the caller's
// business (Matrix::cast).

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "charpoly/matrix.hpp"

namespace charpoly {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline double parse_double(const std::string& tok, std::size_t line_no) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ": not a number: '" + tok + "'");
  }
  return v;
}

}  // namespace detail

inline Matrix<double> read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty input: expected dimension line");
  const auto header = detail::split_ws(line);
  if (header.size() != 1) throw ParseError("line 1: expected a single dimension N");
  std::size_t n = 0;
  {
    const auto& tok = header[0];
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || n == 0) {
      throw ParseError("line " + std::to_string(line_no) + ": invalid dimension '" + tok + "'");
    }
  }

  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!next_line()) {
      throw ParseError("unexpected end of input: expected " + std::to_string(n) + " rows, got " +
                       std::to_string(r));
    }
    const auto toks = detail::split_ws(line);
    if (toks.size() != n) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                       " entries, got " + std::to_string(toks.size()));
    }
    for (const auto& t : toks) entries.push_back(detail::parse_double(t, line_no));
  }
  if (next_line()) throw ParseError("line " + std::to_string(line_no) + ": trailing data");

  try {
    return Matrix<double>(n, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// Formats with 17 significant digits, enough to round-trip any binary64.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_matrix(std::ostream& out, const Matrix<double>& m) {
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out << ' ';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

}  // namespace charpoly
