#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "egr/error.hpp"

namespace egr {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Where a vertex came from: a point or a line of an incidence structure,
/// or nothing in particular.
enum class VertexKind : std::uint8_t { plain, point, line };

inline const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::point: return "point";
    case VertexKind::line: return "line";
    default: return "plain";
  }
}

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph.  Adjacency lists are sorted; edges are
/// numbered in ascending (u, v) order and every adjacency slot carries the id
/// of the edge it represents.
class Graph {
 public:
  Graph() = default;

  /// Edges may be given in either orientation; loops and repeated edges are
  /// rejected.
  Graph(std::size_t n, std::vector<Edge> edges, std::vector<VertexKind> kinds = {}) : n_(n) {
    if (kinds.empty()) kinds.assign(n, VertexKind::plain);
    if (kinds.size() != n) throw precondition_error("vertex kind list does not match vertex count");
    kinds_ = std::move(kinds);
    for (auto& e : edges) {
      if (e.u == e.v) throw precondition_error("loop at vertex " + std::to_string(e.u));
      if (e.u >= n || e.v >= n) throw precondition_error("edge endpoint out of range");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw precondition_error("repeated edge");
    edges_ = std::move(edges);

    offsets_.assign(n + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(offsets_[n]);
    slot_edge_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const auto& e = edges_[id];
      adjacency_[fill[e.u]] = e.v;
      slot_edge_[fill[e.u]++] = id;
      adjacency_[fill[e.v]] = e.u;
      slot_edge_[fill[e.v]++] = id;
    }
    for (Vertex v = 0; v < n; ++v) {
      const auto b = offsets_[v], e = offsets_[v + 1];
      std::vector<std::pair<Vertex, EdgeId>> row;
      row.reserve(e - b);
      for (auto i = b; i < e; ++i) row.emplace_back(adjacency_[i], slot_edge_[i]);
      std::sort(row.begin(), row.end());
      for (auto i = b; i < e; ++i) std::tie(adjacency_[i], slot_edge_[i]) = row[i - b];
    }
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  /// Edge ids aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {slot_edge_.data() + offsets_[v], slot_edge_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  VertexKind kind(Vertex v) const { return kinds_.at(v); }
  std::span<const VertexKind> kinds() const noexcept { return kinds_; }

  bool adjacent(Vertex a, Vertex b) const {
    const auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    const auto nb = neighbors(a);
    const auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
  }

  /// Common degree, or nullopt if the graph is irregular or empty.
  std::optional<std::size_t> regular_degree() const {
    if (n_ == 0) return std::nullopt;
    const std::size_t k = degree(0);
    for (Vertex v = 1; v < n_; ++v)
      if (degree(v) != k) return std::nullopt;
    return k;
  }

  bool is_connected() const {
    if (n_ == 0) return false;
    std::vector<bool> seen(n_, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : neighbors(x))
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
    }
    return count == n_;
  }

  bool is_bipartite() const {
    std::vector<int> side(n_, -1);
    for (Vertex s = 0; s < n_; ++s) {
      if (side[s] != -1) continue;
      side[s] = 0;
      std::queue<Vertex> q;
      q.push(s);
      while (!q.empty()) {
        const Vertex x = q.front();
        q.pop();
        for (Vertex y : neighbors(x)) {
          if (side[y] == -1) {
            side[y] = 1 - side[x];
            q.push(y);
          } else if (side[y] == side[x]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  /// Subgraph induced on the vertices with keep[v] set, renumbered in
  /// increasing order of the original labels.
  Graph induced_subgraph(const std::vector<bool>& keep) const {
    if (keep.size() != n_) throw precondition_error("keep mask does not match vertex count");
    std::vector<Vertex> relabel(n_, 0);
    std::vector<VertexKind> kinds;
    Vertex next = 0;
    for (Vertex v = 0; v < n_; ++v)
      if (keep[v]) {
        relabel[v] = next++;
        kinds.push_back(kinds_[v]);
      }
    std::vector<Edge> kept;
    for (const auto& e : edges_)
      if (keep[e.u] && keep[e.v]) kept.push_back({relabel[e.u], relabel[e.v]});
    return Graph(next, std::move(kept), std::move(kinds));
  }

  /// Copy with the listed edges removed.
  Graph without_edges(std::span<const EdgeId> ids) const {
    std::vector<bool> drop(edges_.size(), false);
    for (auto id : ids) drop.at(id) = true;
    std::vector<Edge> kept;
    for (EdgeId id = 0; id < edges_.size(); ++id)
      if (!drop[id]) kept.push_back(edges_[id]);
    return Graph(n_, std::move(kept), kinds_);
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<EdgeId> slot_edge_;
  std::vector<VertexKind> kinds_;
};

/// Collects edges in any order and orientation, dropping duplicates.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n, std::vector<VertexKind> kinds = {}) : n_(n), kinds_(std::move(kinds)) {}

  void add_edge(Vertex a, Vertex b) {
    if (a == b) throw precondition_error("loop at vertex " + std::to_string(a));
    edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }

  Graph build() && {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    return Graph(n_, std::move(edges_), std::move(kinds_));
  }

 private:
  std::size_t n_;
  std::vector<VertexKind> kinds_;
  std::vector<Edge> edges_;
};

}  // namespace egr
