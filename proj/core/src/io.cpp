#include "bngraph/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <system_error>
#include <vector>

namespace bng {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + message
                                  : "column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits a line (comments removed) into whitespace-separated tokens with
// their 1-based columns.
std::vector<std::pair<std::string_view, int>> tokenize(std::string_view line) {
  std::vector<std::pair<std::string_view, int>> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
  }
  return tokens;
}

template <class Int>
std::optional<Int> to_integer(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::optional<int> vertex_count;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!vertex_count) {
      if (tokens[0].first != "vertices") {
        throw ParseError("expected 'vertices N' header", line_no, tokens[0].second);
      }
      if (tokens.size() != 2) throw ParseError("header takes exactly one count", line_no, tokens[0].second);
      auto n = to_integer<int>(tokens[1].first);
      if (!n || *n < 1) throw ParseError("vertex count must be a positive integer", line_no, tokens[1].second);
      vertex_count = *n;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("edge line must be 'u w'", line_no, tokens.size() > 2 ? tokens[2].second : tokens[0].second);
    }
    int ends[2];
    for (int k = 0; k < 2; ++k) {
      auto v = to_integer<int>(tokens[static_cast<std::size_t>(k)].first);
      if (!v || *v < 0 || *v >= *vertex_count) {
        throw ParseError("vertex index must be in 0.." + std::to_string(*vertex_count - 1), line_no,
                         tokens[static_cast<std::size_t>(k)].second);
      }
      ends[k] = *v;
    }
    edges.emplace_back(ends[0], ends[1]);
  }
  if (!vertex_count) throw ParseError("missing 'vertices N' header", line_no, 1);
  return Multigraph::from_edges(*vertex_count, std::move(edges));
}

Multigraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
  }
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.w << '\n';
  return out.str();
}

Divisor parse_divisor(const Multigraph& g, std::string_view text) {
  Divisor d(g);
  std::vector<bool> mentioned(static_cast<std::size_t>(g.vertex_count()), false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    const int column = static_cast<int>(pos) + 1;
    std::size_t lead = 0;
    while (lead < item.size() && is_space(item[lead])) ++lead;
    item.remove_prefix(lead);
    while (!item.empty() && is_space(item.back())) item.remove_suffix(1);
    if (item.empty()) {
      if (end == text.size() && pos == 0) break;
      throw ParseError("empty divisor term", 0, column);
    }
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'vertex:coefficient'", 0, column + static_cast<int>(lead));
    auto v = to_integer<int>(item.substr(0, colon));
    if (!v || *v < 0 || *v >= g.vertex_count()) {
      throw ParseError("vertex must be in 0.." + std::to_string(g.vertex_count() - 1), 0,
                       column + static_cast<int>(lead));
    }
    auto k = to_integer<std::int64_t>(item.substr(colon + 1));
    if (!k) throw ParseError("coefficient must be an integer", 0, column + static_cast<int>(lead + colon) + 1);
    if (mentioned[static_cast<std::size_t>(*v)]) {
      throw ParseError("vertex " + std::to_string(*v) + " given twice", 0, column + static_cast<int>(lead));
    }
    mentioned[static_cast<std::size_t>(*v)] = true;
    d[*v] = *k;
    pos = end + 1;
    if (end == text.size()) break;
    if (pos == text.size()) throw ParseError("trailing comma", 0, static_cast<int>(end) + 1);
  }
  return d;
}

std::string format_divisor(const Divisor& d) {
  std::string out;
  for (Vertex v = 0; v < d.size(); ++v) {
    if (d[v] == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(v) + ':' + std::to_string(d[v]);
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace bng
