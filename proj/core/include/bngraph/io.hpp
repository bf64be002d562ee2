#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bngraph/divisor.hpp"
#include "bngraph/multigraph.hpp"

namespace bng {

/// Malformed graph or divisor text. line and column are 1-based; line is 0
/// for single-line inputs such as divisor strings.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Graph text format:
///
///     # optional comments
///     vertices N
///     u w          one line per edge, 0-based, u == w for a loop
///
/// Throws ParseError on malformed text and ValidationError when the graph is
/// disconnected.
Multigraph parse_graph(std::string_view text);
Multigraph read_graph_file(const std::filesystem::path& path);

/// Canonical text: the header line, then one sorted "u w" line per edge.
std::string format_graph(const Multigraph& g);

/// "v:k" pairs separated by commas, e.g. "0:2,3:-1". Empty means zero.
Divisor parse_divisor(const Multigraph& g, std::string_view text);

/// Nonzero coefficients in vertex order; the zero divisor is "".
std::string format_divisor(const Divisor& d);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace bng
