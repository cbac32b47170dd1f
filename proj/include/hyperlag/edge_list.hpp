#pragma once

// Edge-list text format:
//
//   r n m
//   a_1 a_2 ... a_r      (m lines, ascending vertex labels)
//
// '#' starts a comment running to the end of the line; blank lines are
// ignored when reading. Writing emits no comments and edges in colex order.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperlag/error.hpp"
#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

namespace detail {
/// Next non-empty line with comments stripped; nullopt at end of stream.
inline std::optional<std::string> next_content_line(std::istream& in, int& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  return std::nullopt;
}

inline std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::istringstream fields(line);
  std::vector<long long> out;
  long long v = 0;
  while (fields >> v) out.push_back(v);
  if (!fields.eof()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integers");
  }
  return out;
}
}  // namespace detail

/// Reads one hypergraph; returns nullopt if the stream holds no more content.
inline std::optional<Hypergraph> read_edge_list(std::istream& in) {
  int line_no = 0;
  auto header = detail::next_content_line(in, line_no);
  if (!header) return std::nullopt;
  const auto head = detail::parse_ints(*header, line_no);
  if (head.size() != 3) {
    throw ParseError("line " + std::to_string(line_no) + ": header must be 'r n m'");
  }
  const long long r = head[0], n = head[1], m = head[2];
  if (r < 2 || n < 0 || m < 0 || n > 1'000'000) {
    throw ParseError("line " + std::to_string(line_no) + ": invalid header values");
  }
  std::vector<RTuple> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    auto line = detail::next_content_line(in, line_no);
    if (!line) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    }
    const auto vals = detail::parse_ints(*line, line_no);
    if (static_cast<long long>(vals.size()) != r) {
      throw ParseError("line " + std::to_string(line_no) + ": edge must list " +
                       std::to_string(r) + " vertices");
    }
    std::vector<Vertex> elems;
    for (long long v : vals) {
      if (v < 1 || v > n) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex " +
                         std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
      }
      elems.push_back(static_cast<Vertex>(v));
    }
    try {
      edges.emplace_back(std::move(elems));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  try {
    return Hypergraph(static_cast<int>(r), static_cast<int>(n), std::move(edges));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

/// Reads every hypergraph in the stream (e.g. the output of `enumerate`).
inline std::vector<Hypergraph> read_edge_lists(std::istream& in) {
  std::vector<Hypergraph> out;
  while (auto g = read_edge_list(in)) out.push_back(std::move(*g));
  return out;
}

inline Hypergraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  auto g = read_edge_list(in);
  if (!g) throw ParseError("empty edge list");
  return std::move(*g);
}

inline void write_edge_list(std::ostream& out, const Hypergraph& g) {
  out << g.uniformity() << ' ' << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const RTuple& e : g.edges()) out << e.to_text() << '\n';
}

inline std::string to_edge_list(const Hypergraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace hyperlag
