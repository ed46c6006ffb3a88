#include "linkless/text_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace linkless {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Data lines only: comments and blank lines are dropped.
std::vector<Line> data_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_tokens(text.substr(start, end - start));
    if (!tokens.empty() && tokens.front().front() != '#') out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

int vertex_at(const Graph& g, const Line& line, std::string_view label) {
  if (auto v = g.find(label)) return *v;
  throw ParseError(line.number, "unknown vertex '" + std::string(label) + "'");
}

std::int64_t integer_at(const Line& line, std::string_view token) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line.number, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

VertexSet vertex_list(const Graph& g, const Line& line, std::size_t from) {
  VertexSet s;
  for (std::size_t i = from; i < line.tokens.size(); ++i) {
    const int v = vertex_at(g, line, line.tokens[i]);
    if (s.contains(v)) throw ParseError(line.number, "vertex '" + g.label(v) + "' listed twice");
    s.insert(v);
  }
  if (s.empty()) throw ParseError(line.number, "empty vertex list");
  return s;
}

std::string joined_labels(const Graph& g, VertexSet s) {
  std::string out;
  for (int v : s.members()) out += " " + g.label(v);
  return out;
}

}  // namespace

std::string write_graph(const Graph& g) {
  std::string out = "vertices:";
  for (const auto& l : g.labels()) out += " " + l;
  out += "\n";
  for (auto [u, v] : g.edges()) out += "edge: " + g.label(u) + " " + g.label(v) + "\n";
  return out;
}

Graph parse_graph(std::string_view text) {
  std::optional<Graph> shell;
  std::optional<GraphBuilder> builder;
  for (const auto& line : data_lines(text)) {
    const auto key = line.tokens.front();
    if (key == "vertices:") {
      if (shell) throw ParseError(line.number, "second 'vertices:' line");
      std::vector<std::string> labels(line.tokens.begin() + 1, line.tokens.end());
      try {
        shell.emplace(labels);
        builder.emplace(std::move(labels));
      } catch (const GraphError& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (key == "edge:") {
      if (!shell) throw ParseError(line.number, "'edge:' before 'vertices:'");
      if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'edge: U V'");
      const int u = vertex_at(*shell, line, line.tokens[1]);
      const int v = vertex_at(*shell, line, line.tokens[2]);
      if (u == v) throw ParseError(line.number, "loop edge at '" + shell->label(u) + "'");
      builder->connect(u, v);
    } else {
      throw ParseError(line.number, "unexpected '" + std::string(key) + "'");
    }
  }
  if (!shell) throw ParseError(1, "missing 'vertices:' line");
  return std::move(*builder).build();
}

std::string write_certificates(const Graph& g, const std::vector<PartitionCertificate>& certs) {
  std::string out;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    out += "# case " + std::to_string(i + 1) + "\n";
    for (const auto& part : certs[i].parts) out += "part:" + joined_labels(g, part) + "\n";
  }
  return out;
}

std::vector<PartitionCertificate> parse_certificates(std::string_view text, const Graph& g) {
  std::vector<PartitionCertificate> out;
  int last_line = 1;
  for (const auto& line : data_lines(text)) {
    if (line.tokens.front() != "part:") throw ParseError(line.number, "expected 'part:'");
    if (out.empty() || out.back().parts.size() == 6) out.emplace_back();
    out.back().parts.push_back(vertex_list(g, line, 1));
    last_line = line.number;
  }
  if (!out.empty() && out.back().parts.size() != 6)
    throw ParseError(last_line, "certificate ends after " + std::to_string(out.back().parts.size()) + " parts; 6 needed");
  return out;
}

std::string write_model(const Graph& pattern, const Graph& host, const MinorModel& model) {
  std::string out;
  for (int x = 0; x < pattern.order(); ++x)
    out += "branch " + pattern.label(x) + ":" + joined_labels(host, model.branch_sets.at(static_cast<std::size_t>(x))) +
           "\n";
  return out;
}

MinorModel parse_model(std::string_view text, const Graph& pattern, const Graph& host) {
  MinorModel model;
  model.branch_sets.resize(static_cast<std::size_t>(pattern.order()));
  std::vector<bool> seen(static_cast<std::size_t>(pattern.order()), false);
  for (const auto& line : data_lines(text)) {
    if (line.tokens.size() < 2 || line.tokens[0] != "branch" || line.tokens[1].back() != ':')
      throw ParseError(line.number, "expected 'branch X: V1 V2 ...'");
    const auto name = line.tokens[1].substr(0, line.tokens[1].size() - 1);
    const auto x = pattern.find(name);
    if (!x) throw ParseError(line.number, "unknown pattern vertex '" + std::string(name) + "'");
    if (seen[static_cast<std::size_t>(*x)]) throw ParseError(line.number, "branch set for '" + std::string(name) + "' repeated");
    seen[static_cast<std::size_t>(*x)] = true;
    model.branch_sets[static_cast<std::size_t>(*x)] = vertex_list(host, line, 2);
  }
  for (int x = 0; x < pattern.order(); ++x)
    if (!seen[static_cast<std::size_t>(x)]) throw ParseError(1, "no branch set for pattern vertex '" + pattern.label(x) + "'");
  return model;
}

std::string write_embedding(const Graph& g, const Embedding3& e) {
  std::string out;
  for (int v = 0; v < g.order(); ++v) {
    const auto& p = e.coords.at(static_cast<std::size_t>(v));
    out += "coord: " + g.label(v) + " " + std::to_string(p.x) + " " + std::to_string(p.y) + " " + std::to_string(p.z) +
           "\n";
  }
  return out;
}

Embedding3 parse_embedding(std::string_view text, const Graph& g) {
  Embedding3 e;
  e.coords.resize(static_cast<std::size_t>(g.order()));
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (const auto& line : data_lines(text)) {
    if (line.tokens.front() != "coord:" || line.tokens.size() != 5)
      throw ParseError(line.number, "expected 'coord: V x y z'");
    const int v = vertex_at(g, line, line.tokens[1]);
    if (seen[static_cast<std::size_t>(v)]) throw ParseError(line.number, "vertex '" + g.label(v) + "' placed twice");
    seen[static_cast<std::size_t>(v)] = true;
    Point3 p{integer_at(line, line.tokens[2]), integer_at(line, line.tokens[3]), integer_at(line, line.tokens[4])};
    for (auto c : {p.x, p.y, p.z})
      if (c <= -kMaxCoordinate || c >= kMaxCoordinate) throw ParseError(line.number, "coordinate out of range");
    e.coords[static_cast<std::size_t>(v)] = p;
  }
  for (int v = 0; v < g.order(); ++v)
    if (!seen[static_cast<std::size_t>(v)]) throw ParseError(1, "no coordinate for vertex '" + g.label(v) + "'");
  return e;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace linkless
