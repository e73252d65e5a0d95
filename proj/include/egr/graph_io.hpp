#pragma once

/// graph6, edge-list and JSON encodings of graphs and girth profiles.
/// Every text format ends with exactly one "\n".

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "egr/census.hpp"
#include "egr/error.hpp"
#include "egr/graph.hpp"
#include "json.hpp"

namespace egr {

enum class GraphFormat { graph6, edgelist, json };

inline GraphFormat parse_graph_format(std::string_view name) {
  if (name == "graph6") return GraphFormat::graph6;
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "json") return GraphFormat::json;
  throw precondition_error("unknown graph format '" + std::string(name) + "'");
}

/// Header-less graph6 encoding without the trailing newline.
inline std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n == 0) throw precondition_error("graph6 cannot encode the empty graph");
  if (n > 68719476735ull) throw precondition_error("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    const int groups = n <= 258047 ? 3 : 6;
    out.push_back(126);
    if (groups == 6) out.push_back(126);
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
  }
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  int filled = 0;
  unsigned acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    const auto nb = g.neighbors(j);
    auto it = nb.begin();
    for (Vertex i = 0; i < j; ++i) {
      while (it != nb.end() && *it < i) ++it;
      acc = (acc << 1) | (it != nb.end() && *it == i ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw precondition_error("empty graph6 input");
  std::size_t pos = 0;
  auto next = [&]() -> unsigned {
    if (pos >= text.size()) throw precondition_error("truncated graph6 input");
    const int c = static_cast<unsigned char>(text[pos++]) - 63;
    if (c < 0 || c > 63) throw precondition_error("invalid graph6 character");
    return static_cast<unsigned>(c);
  };
  std::uint64_t n = next();
  if (n == 63) {
    int groups = 3;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      groups = 6;
    }
    n = 0;
    for (int i = 0; i < groups; ++i) n = (n << 6) | next();
  }
  std::vector<Edge> edges;
  int left = 0;
  unsigned bits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      if (left == 0) {
        bits = next();
        left = 6;
      }
      --left;
      if ((bits >> left) & 1) edges.push_back({i, j});
    }
  if (pos != text.size()) throw precondition_error("trailing data after graph6 input");
  return Graph(n, std::move(edges));
}

/// Lines "u v" with u < v, ascending.
inline std::string to_edgelist(const Graph& g) {
  if (g.order() == 0) throw precondition_error("cannot export the empty graph");
  std::string out;
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Reads "u v" pairs; the order is one more than the largest label.
inline Graph from_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Edge> edges;
  std::uint64_t a = 0, b = 0, n = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream row(line);
    if (!(row >> a >> b)) throw precondition_error("malformed edge line '" + line + "'");
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    n = std::max({n, a + 1, b + 1});
  }
  return Graph(n, std::move(edges));
}

/// Report object with the stable field names n, k, girth, classification,
/// lambda, signature, signature_multiplicities and total_girth_cycles.
inline nlohmann::ordered_json profile_json(const GirthProfile& p) {
  nlohmann::ordered_json j;
  j["n"] = p.order;
  j["k"] = p.degree;
  j["girth"] = p.girth;
  j["classification"] = to_string(p.classification);
  if (p.lambda) j["lambda"] = *p.lambda;
  if (p.signature) {
    j["signature"] = *p.signature;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [value, count] : multiplicities(*p.signature)) arr.push_back({value, count});
    j["signature_multiplicities"] = arr;
  }
  j["total_girth_cycles"] = p.total_girth_cycles;
  return j;
}

/// JSON export: the girth report of the graph plus its edges and vertex kinds.
inline nlohmann::ordered_json graph_json(const Graph& g, unsigned workers = 0) {
  if (g.order() == 0) throw precondition_error("cannot export the empty graph");
  auto j = profile_json(girth_profile(g, workers));
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  auto kinds = nlohmann::ordered_json::array();
  for (auto k : g.kinds()) kinds.push_back(to_string(k));
  j["vertex_kinds"] = kinds;
  return j;
}

inline std::string export_graph(const Graph& g, GraphFormat format, unsigned workers = 0) {
  switch (format) {
    case GraphFormat::graph6: return to_graph6(g) + "\n";
    case GraphFormat::edgelist: return to_edgelist(g);
    case GraphFormat::json: return graph_json(g, workers).dump() + "\n";
  }
  throw precondition_error("unknown graph format");
}

/// Reads graph6 or an edge list, deciding by content.
inline Graph read_graph(std::string_view text) {
  std::string_view probe = text.substr(0, text.find('\n'));
  if (probe.find(' ') != std::string_view::npos || probe.find('\t') != std::string_view::npos || probe.empty())
    return from_edgelist(text);
  return from_graph6(text);
}

}  // namespace egr
