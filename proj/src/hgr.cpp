#include "hyperconn/hgr.hpp"

#include <charconv>
#include <sstream>

namespace hyperconn {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t to_number(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw HgrParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

bool is_comment(std::string_view line) { return line == "c" || line.starts_with("c ") || line.starts_with("c\t"); }

bool is_blank(std::string_view line) { return tokens(line).empty(); }

}  // namespace

HgrParseError::HgrParseError(std::size_t line, const std::string& what)
    : InputError(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

HgrDocument parse_hgr_document(std::string_view text) {
  const auto lines = split_lines(text);
  HgrDocument doc;
  std::size_t i = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_problem = false;
  for (; i < lines.size() && !have_problem; ++i) {
    if (is_comment(lines[i])) {
      doc.comments.emplace_back(lines[i].size() > 2 ? lines[i].substr(2) : std::string_view{});
      continue;
    }
    if (is_blank(lines[i])) continue;
    const auto parts = tokens(lines[i]);
    if (parts.size() != 4 || parts[0] != "p" || parts[1] != "hgr") {
      throw HgrParseError(i + 1, "expected 'p hgr <n> <m>'");
    }
    n = to_number(parts[2], i + 1);
    m = to_number(parts[3], i + 1);
    have_problem = true;
  }
  if (!have_problem) throw HgrParseError(0, "missing 'p hgr <n> <m>' line");

  std::vector<Edge> edges;
  for (; i < lines.size() && edges.size() < m; ++i) {
    if (is_comment(lines[i])) {
      doc.comments.emplace_back(lines[i].size() > 2 ? lines[i].substr(2) : std::string_view{});
      continue;
    }
    std::map<VertexId, std::size_t> mult;
    for (std::string_view token : tokens(lines[i])) {
      const std::size_t index = to_number(token, i + 1);
      if (index < 1 || index > n) {
        throw HgrParseError(i + 1, "vertex index " + std::to_string(index) + " out of range [1, " + std::to_string(n) + "]");
      }
      ++mult[index - 1];
    }
    edges.emplace_back(std::move(mult));
  }
  if (edges.size() < m) {
    throw HgrParseError(0, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
  }
  for (; i < lines.size(); ++i) {
    if (!is_blank(lines[i]) && !is_comment(lines[i])) {
      throw HgrParseError(i + 1, "more than " + std::to_string(m) + " edge lines");
    }
  }
  doc.hypergraph = Hypergraph(n, std::move(edges));
  return doc;
}

Hypergraph parse_hgr(std::string_view text) { return parse_hgr_document(text).hypergraph; }

std::string serialize_hgr(const Hypergraph& h, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "c " << c << '\n';
  out << "p hgr " << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const Edge& e : h.edges()) {
    bool first = true;
    for (const auto& [v, k] : e.multiplicities()) {
      for (std::size_t r = 0; r < k; ++r) {
        out << (first ? "" : " ") << v + 1;
        first = false;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hyperconn
