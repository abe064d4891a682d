#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "exactmatch/core.hpp"
#include "exactmatch/permanent.hpp"

namespace exactmatch {

// Instance files are line oriented:
//   n 2
//   RRBB
//   RRBB
//   BBRR
//   BBRR
// Row i is left vertex i, character j the color of edge (i, j); 1-based in
// the format, 0-based in the API. Matching files carry one edge per line as
// "i j C" with C in {R, B}; the color column is optional on input.

namespace detail {

inline Error parse_error(long line, const std::string& message) {
  return Error(Errc::ParseError, "line " + std::to_string(line) + ": " + message, line);
}

}  // namespace detail

inline BalancedColoring read_instance(std::istream& in) {
  std::string line;
  long lineno = 0;

  ++lineno;
  if (!std::getline(in, line)) throw detail::parse_error(lineno, "expected header 'n <value>'");
  std::istringstream header(line);
  std::string tag;
  int n = 0;
  if (!(header >> tag >> n) || tag != "n" || n < 1)
    throw detail::parse_error(lineno, "expected header 'n <value>' with a positive value");

  const int side = 2 * n;
  std::vector<std::vector<Color>> rows;
  rows.reserve(side);
  for (int i = 0; i < side; ++i) {
    ++lineno;
    if (!std::getline(in, line))
      throw detail::parse_error(lineno, "expected " + std::to_string(side) + " color rows");
    if (static_cast<int>(line.size()) != side)
      throw detail::parse_error(lineno, "row has " + std::to_string(line.size()) +
                                            " characters, expected " + std::to_string(side));
    std::vector<Color> row(side);
    for (int j = 0; j < side; ++j) {
      if (line[j] == 'R')
        row[j] = Color::Red;
      else if (line[j] == 'B')
        row[j] = Color::Blue;
      else
        throw detail::parse_error(lineno, std::string("unexpected character '") + line[j] +
                                              "', expected R or B");
    }
    rows.push_back(std::move(row));
  }

  try {
    return BalancedColoring::validate(rows);
  } catch (const Error& e) {
    if (e.code() == Errc::UnbalancedRow)
      throw Error(e.code(), "line " + std::to_string(e.where() + 1) + ": " + e.what(),
                  e.where() + 1);
    throw;
  }
}

inline void write_instance(std::ostream& out, const BalancedColoring& c) {
  out << "n " << c.half_degree() << "\n";
  for (int i = 0; i < c.side(); ++i) {
    for (int j = 0; j < c.side(); ++j) out << color_char(c.color(i, j));
    out << "\n";
  }
}

inline Matching read_matching(std::istream& in, int expected_side) {
  std::string line;
  long lineno = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    int i = 0, j = 0;
    if (!(fields >> i >> j))
      throw detail::parse_error(lineno, "expected 'i j' or 'i j C'");
    std::string color;
    if (fields >> color && color != "R" && color != "B")
      throw detail::parse_error(lineno, "color must be R or B, got '" + color + "'");
    if (i < 1 || i > expected_side || j < 1 || j > expected_side)
      throw detail::parse_error(lineno, "indices must lie in 1.." + std::to_string(expected_side));
    edges.emplace_back(i - 1, j - 1);
  }
  if (static_cast<int>(edges.size()) != expected_side)
    throw Error(Errc::ParseError,
                "matching has " + std::to_string(edges.size()) + " edges, expected " +
                    std::to_string(expected_side));
  return Matching::from_edges(edges);
}

inline void write_matching(std::ostream& out, const BalancedColoring& c, const Matching& m) {
  for (const auto& [i, j] : m.edges())
    out << i + 1 << " " << j + 1 << " " << color_char(c.color(i, j)) << "\n";
}

inline void write_certificate(std::ostream& out, const DisconnectionCertificate& cert) {
  auto put = [&out](const char* label, const std::vector<int>& ids) {
    out << label;
    for (int v : ids) out << " " << v + 1;
    out << "\n";
  };
  put("A1", cert.a1);
  put("A2", cert.a2);
  put("B1", cert.b1);
  put("B2", cert.b2);
}

/// Rows of 0/1 characters, one line per row, as many rows as columns.
inline BinaryMatrix read_binary_matrix(std::istream& in) {
  std::string line;
  long lineno = 0;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<int> row;
    row.reserve(line.size());
    for (char ch : line) {
      if (ch != '0' && ch != '1')
        throw detail::parse_error(lineno, std::string("unexpected character '") + ch +
                                              "', expected 0 or 1");
      row.push_back(ch - '0');
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(Errc::ParseError, "matrix is empty");
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != rows.size())
      throw Error(Errc::NotSquare, "matrix has " + std::to_string(rows.size()) + " rows but row " +
                                       std::to_string(i + 1) + " has " +
                                       std::to_string(rows[i].size()) + " columns",
                  static_cast<long>(i + 1));
  return BinaryMatrix::from_rows(rows);
}

}  // namespace exactmatch
