#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fvs/graph.hpp"

namespace fvs::cli {

/// Malformed instance file. `line` and `column` are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads the edge-list format:
///
///     # comment
///     n m
///     u v        (m lines, 1-based labels)
///
/// Lines starting with '#' and blank lines are skipped anywhere.
Graph parse_instance(std::istream& in);
Graph read_instance_file(const std::string& path);

/// Writes the header and the live edges in ascending order. `comment`, if
/// nonempty, is written first as a '#' line.
void write_instance(std::ostream& out, const Graph& g, const std::string& comment = {});

}  // namespace fvs::cli
