#include "instance_file.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>
#include <vector>

namespace fvs::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// Splits a line into exactly two nonnegative integers.
std::pair<std::int64_t, std::int64_t> two_numbers(std::string_view text, std::size_t line_no) {
  std::int64_t values[2] = {0, 0};
  std::size_t pos = 0;
  for (int i = 0; i < 2; ++i) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) {
      throw ParseError(line_no, pos + 1, "expected two integers");
    }
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, values[i]);
    if (ec != std::errc() || ptr == first || (ptr != last && !is_space(*ptr))) {
      throw ParseError(line_no, pos + 1, "not a nonnegative integer");
    }
    if (values[i] < 0) {
      throw ParseError(line_no, pos + 1, "negative value");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos != text.size()) {
    throw ParseError(line_no, pos + 1, "unexpected trailing text");
  }
  return {values[0], values[1]};
}

bool skippable(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  return pos == text.size() || text[pos] == '#';
}

}  // namespace

Graph parse_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto [a, b] = two_numbers(line, line_no);
    if (!have_header) {
      if (a > std::numeric_limits<Vertex>::max()) {
        throw ParseError(line_no, 1, "vertex count too large");
      }
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<std::int64_t>(edges.size()) == m) {
      throw ParseError(line_no, 1, "more edge lines than the header's " + std::to_string(m));
    }
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ParseError(line_no, 1, "endpoint outside 1.." + std::to_string(n));
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    edge_lines.push_back(line_no);
  }
  if (!have_header) {
    throw ParseError(line_no + 1, 1, "missing \"n m\" header");
  }
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(line_no + 1, 1,
                     "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
  }
  try {
    return Graph::build(static_cast<Vertex>(n), edges);
  } catch (const GraphInputError& e) {
    throw ParseError(edge_lines[e.edge_index()], 1, e.what());
  }
}

Graph read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << g.max_label() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace fvs::cli
