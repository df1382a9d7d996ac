#include "pcolor/graph_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "pcolor/error.hpp"

namespace pcolor {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' ||
                                raw[i] == '\r'))
        ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
             raw[i] != '\r')
        ++i;
      if (i > start) line.fields.push_back(raw.substr(start, i - start));
    }
    if (!line.fields.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::MalformedLine,
              "line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_uint(const Line& line, std::size_t field) {
  const std::string_view s = line.fields[field];
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    malformed(line.number, "expected a non-negative integer, got '" +
                               std::string(s) + "'");
  return value;
}

void expect_fields(const Line& line, std::size_t count) {
  if (line.fields.size() != count)
    malformed(line.number, "expected " + std::to_string(count) +
                               " fields, got " +
                               std::to_string(line.fields.size()));
}

}  // namespace

Graph read_graph(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) malformed(1, "missing header 'n m'");
  expect_fields(lines[0], 2);
  const auto n = parse_uint(lines[0], 0);
  const auto m = parse_uint(lines[0], 1);
  if (n > std::numeric_limits<Vertex>::max())
    malformed(lines[0].number, "vertex count too large");
  if (lines.size() - 1 != m)
    malformed(lines.back().number,
              "header announces " + std::to_string(m) + " edges but " +
                  std::to_string(lines.size() - 1) + " edge lines follow");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_fields(lines[i], 2);
    const auto a = parse_uint(lines[i], 0);
    const auto b = parse_uint(lines[i], 1);
    if (a >= n || b >= n)
      throw Error(ErrorKind::VertexOutOfRange,
                  "line " + std::to_string(lines[i].number) + ": vertex id >= n=" +
                      std::to_string(n));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return Graph::from_edges(n, edges);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

EdgeColoring read_coloring(const Graph& g, std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) malformed(1, "missing palette size line");
  expect_fields(lines[0], 1);
  const auto k = parse_uint(lines[0], 0);
  if (k == 0 || k > std::numeric_limits<Color>::max())
    malformed(lines[0].number, "palette size must be positive");

  std::vector<Color> colors(g.edge_count(), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_fields(line, 3);
    const auto a = parse_uint(line, 0);
    const auto b = parse_uint(line, 1);
    const auto c = parse_uint(line, 2);
    if (a >= g.vertex_count() || b >= g.vertex_count())
      throw Error(ErrorKind::VertexOutOfRange,
                  "line " + std::to_string(line.number) + ": vertex id >= n=" +
                      std::to_string(g.vertex_count()));
    const auto id = g.edge_id(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!id)
      throw Error(ErrorKind::EdgeNotInGraph,
                  "line " + std::to_string(line.number) + ": {" +
                      std::to_string(a) + "," + std::to_string(b) +
                      "} is not an edge of the graph");
    if (c < 1 || c > k)
      throw Error(ErrorKind::ColorOutOfRange,
                  "line " + std::to_string(line.number) + ": color " +
                      std::to_string(c) + " outside 1.." + std::to_string(k));
    if (colors[*id] != 0)
      throw Error(ErrorKind::DuplicateEdge,
                  "line " + std::to_string(line.number) + ": edge {" +
                      std::to_string(a) + "," + std::to_string(b) +
                      "} colored twice");
    colors[*id] = static_cast<Color>(c);
  }
  for (EdgeId id = 0; id < colors.size(); ++id) {
    if (colors[id] == 0) {
      const Edge& e = g.edge(id);
      throw Error(ErrorKind::MissingColor,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} has no color (" + std::to_string(lines.size() - 1) +
                      " lines for " + std::to_string(g.edge_count()) +
                      " edges)");
    }
  }
  return EdgeColoring(std::move(colors), static_cast<Color>(k));
}

std::string write_coloring(const Graph& g, const EdgeColoring& coloring) {
  if (coloring.size() != g.edge_count())
    throw Error(ErrorKind::InvalidArgument,
                "coloring does not belong to this graph");
  std::ostringstream out;
  out << coloring.palette_size() << '\n';
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    out << e.u << ' ' << e.v << ' ' << coloring[id] << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file_atomic(const std::string& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + temp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "short write to '" + temp.string() + "'");
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw Error(ErrorKind::Io, "cannot replace '" + path + "'");
  }
}

}  // namespace pcolor
