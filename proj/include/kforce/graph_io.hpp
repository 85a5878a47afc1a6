#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kforce/error.hpp"
#include "kforce/graph.hpp"

namespace kforce {

// Text format:
//   line 1:        "n m"
//   next m lines:  "u v" with 0 <= u < v < n
//   then optional: "label v text"
// '#' starts a comment anywhere; blank lines are skipped. Canonical output
// sorts edges lexicographically and label lines by vertex id, so
// write(read(s)) is a fixed point.

namespace io_detail {

inline std::string strip_comment(std::string line) {
  auto pos = line.find('#');
  if (pos != std::string::npos) line.erase(pos);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.pop_back();
  }
  return line;
}

inline bool next_content_line(std::istream& in, std::string& out) {
  std::string raw;
  while (std::getline(in, raw)) {
    out = strip_comment(raw);
    if (out.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

}  // namespace io_detail

inline Graph read_graph(std::istream& in) {
  std::string line;
  if (!io_detail::next_content_line(in, line)) throw ParseError("missing header line 'n m'");
  long long n = 0, m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) throw ParseError("malformed header line: '" + line + "'");
  }
  if (n < 1) throw ParseError("graph order must be at least 1");
  if (m < 0) throw ParseError("negative edge count");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(std::size_t(m));
  for (long long i = 0; i < m; ++i) {
    if (!io_detail::next_content_line(in, line)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream es(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) throw ParseError("malformed edge line: '" + line + "'");
    if (u < 0 || v >= n || u >= v) {
      throw ParseError("edge '" + line + "' violates 0 <= u < v < n");
    }
    edges.emplace_back(int(u), int(v));
  }
  {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("duplicate edge in input");
    }
  }

  std::vector<std::string> labels;
  bool any_label = false;
  while (io_detail::next_content_line(in, line)) {
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word != "label") throw ParseError("unexpected line after edges: '" + line + "'");
    long long v = 0;
    if (!(ls >> v) || v < 0 || v >= n) throw ParseError("bad label line: '" + line + "'");
    std::string rest;
    std::getline(ls, rest);
    auto start = rest.find_first_not_of(" \t");
    if (start == std::string::npos) throw ParseError("label line has no text: '" + line + "'");
    if (!any_label) {
      labels.assign(std::size_t(n), std::string());
      any_label = true;
    }
    labels[std::size_t(v)] = rest.substr(start);
  }
  return Graph(int(n), edges, std::move(labels));
}

inline void write_graph(std::ostream& out, const Graph& g) {
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  if (g.has_labels()) {
    for (int v = 0; v < g.order(); ++v) {
      if (!g.label(v).empty()) out << "label " << v << ' ' << g.label(v) << '\n';
    }
  }
}

inline std::string graph_to_string(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

inline Graph read_graph_string(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file: " + path);
  return read_graph(in);
}

inline void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write graph file: " + path);
  write_graph(out, g);
}

}  // namespace kforce
