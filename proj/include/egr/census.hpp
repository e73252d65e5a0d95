#pragma once

/// Girth, per-edge girth-cycle counts, signatures and egr/agr
/// classification.
///
/// Two independent routes count girth cycles:
///  * edge_girth_counts: for each edge uv, the number of simple u-v paths of
///    length g-1, found by depth-bounded DFS pruned with BFS distances to v.
///  * census_oracle: every g-cycle enumerated once from its smallest vertex,
///    with the direction fixed by second vertex < last vertex.
/// They must agree on every edge.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "egr/error.hpp"
#include "egr/graph.hpp"

namespace egr {

/// Runs fn(index, worker) for index in [0, count) on up to `workers`
/// threads; 0 means hardware concurrency.
inline void parallel_for(std::size_t count, unsigned workers,
                         const std::function<void(std::size_t, unsigned)>& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i, w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

/// Length of a shortest cycle, by BFS from every vertex.
inline std::uint32_t girth(const Graph& g) {
  constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t best = inf;
  std::vector<std::uint32_t> dist(g.order(), inf);
  std::vector<Vertex> parent(g.order(), 0), queue;
  queue.reserve(g.order());
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), inf);
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      if (2 * dist[x] >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == inf) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == inf) throw precondition_error("graph is acyclic");
  return best;
}

namespace detail {

/// Counts simple paths of a fixed length between the endpoints of an edge.
/// One instance per worker; buffers are reused across edges.
class PathCounter {
 public:
  PathCounter(const Graph& g, std::uint32_t cycle_length)
      : g_(g), length_(cycle_length - 1), dist_(g.order(), unreached), visited_((g.order() + 63) / 64, 0) {}

  /// Prepares BFS distances (truncated at the path length) from target.
  void set_target(Vertex target) {
    for (Vertex x : touched_) dist_[x] = unreached;
    touched_.clear();
    target_ = target;
    dist_[target] = 0;
    touched_.push_back(target);
    for (std::size_t head = 0; head < touched_.size(); ++head) {
      const Vertex x = touched_[head];
      if (dist_[x] + 1 > length_) continue;
      for (Vertex y : g_.neighbors(x))
        if (dist_[y] == unreached) {
          dist_[y] = dist_[x] + 1;
          touched_.push_back(y);
        }
    }
  }

  /// Simple paths source -> target of length cycle_length - 1.
  std::uint64_t count_from(Vertex source) {
    mark(source);
    const std::uint64_t total = extend(source, length_);
    unmark(source);
    return total;
  }

 private:
  static constexpr std::uint32_t unreached = std::numeric_limits<std::uint32_t>::max();

  void mark(Vertex v) { visited_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
  void unmark(Vertex v) { visited_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool seen(Vertex v) const { return (visited_[v >> 6] >> (v & 63)) & 1; }

  std::uint64_t extend(Vertex x, std::uint32_t remaining) {
    // Last step: x must be a neighbour of the target.
    if (remaining == 1) return dist_[x] == 1 ? 1 : 0;
    std::uint64_t total = 0;
    for (Vertex y : g_.neighbors(x)) {
      if (y == target_ || seen(y) || dist_[y] > remaining - 1) continue;
      mark(y);
      total += extend(y, remaining - 1);
      unmark(y);
    }
    return total;
  }

  const Graph& g_;
  std::uint32_t length_;
  Vertex target_ = 0;
  std::vector<std::uint32_t> dist_;
  std::vector<Vertex> touched_;
  std::vector<std::uint64_t> visited_;
};

}  // namespace detail

/// Number of g-cycles through every edge, indexed by edge id.  g must be the
/// girth (not rechecked here).  Work is split by the larger endpoint, so the
/// result does not depend on the worker count.
inline std::vector<std::uint64_t> edge_girth_counts(const Graph& g, std::uint32_t cycle_length,
                                                    unsigned workers = 0) {
  if (cycle_length < 3) throw precondition_error("cycle length must be at least 3");
  std::vector<std::uint64_t> counts(g.size(), 0);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::optional<detail::PathCounter>> counters(workers);
  parallel_for(g.order(), workers, [&](std::size_t i, unsigned w) {
    const auto v = static_cast<Vertex>(i);
    const auto nb = g.neighbors(v);
    const auto ids = g.incident_edges(v);
    if (nb.empty() || nb.front() > v) return;  // no edge has v as larger endpoint
    auto& counter = counters[w];
    if (!counter) counter.emplace(g, cycle_length);
    counter->set_target(v);
    for (std::size_t j = 0; j < nb.size() && nb[j] < v; ++j) counts[ids[j]] = counter->count_from(nb[j]);
  });
  return counts;
}

/// Number of distinct g-cycles containing edge e; g must equal the girth.
inline std::uint64_t edge_girth_count(const Graph& g, Edge e, std::uint32_t cycle_length) {
  if (!g.edge_id(e.u, e.v)) throw precondition_error("not an edge of the graph");
  const auto actual = girth(g);
  if (actual != cycle_length)
    throw precondition_error("cycle length " + std::to_string(cycle_length) + " differs from the girth " +
                             std::to_string(actual));
  detail::PathCounter counter(g, cycle_length);
  counter.set_target(e.v);
  return counter.count_from(e.u);
}

/// Calls visit(vertices, edge_ids) once per cycle of the given length.  Each
/// cycle x0 x1 .. x_{len-1} is rooted at its smallest vertex x0 and oriented
/// so that x1 < x_{len-1}; edge_ids[i] joins x_i and x_{i+1 mod len}.
/// Roots are independent, so [root_begin, root_end) ranges can be split
/// across workers.
template <typename Visit>
void for_each_cycle(const Graph& g, std::uint32_t length, Visit&& visit, Vertex root_begin = 0,
                    Vertex root_end = std::numeric_limits<Vertex>::max()) {
  root_end = std::min<Vertex>(root_end, static_cast<Vertex>(g.order()));
  std::vector<Vertex> path(length);
  std::vector<EdgeId> path_edges(length);
  std::vector<bool> on_path(g.order(), false);

  // Depth-first extension of path[0..depth).
  auto extend = [&](auto&& self, std::uint32_t depth) -> void {
    const Vertex root = path[0];
    const Vertex last = path[depth - 1];
    const auto nb = g.neighbors(last);
    const auto ids = g.incident_edges(last);
    if (depth == length) {
      if (path[1] >= last) return;
      const auto closing = g.edge_id(last, root);
      if (!closing) return;
      path_edges[length - 1] = *closing;
      visit(std::span<const Vertex>(path), std::span<const EdgeId>(path_edges));
      return;
    }
    for (std::size_t j = 0; j < nb.size(); ++j) {
      const Vertex y = nb[j];
      if (y <= root || on_path[y]) continue;
      path[depth] = y;
      path_edges[depth - 1] = ids[j];
      on_path[y] = true;
      self(self, depth + 1);
      on_path[y] = false;
    }
  };

  for (Vertex root = root_begin; root < root_end; ++root) {
    path[0] = root;
    on_path[root] = true;
    extend(extend, 1);
    on_path[root] = false;
  }
}

struct OracleCensus {
  std::vector<std::uint64_t> edge_counts;
  std::uint64_t total_cycles = 0;
};

inline constexpr std::size_t default_oracle_cap = 600;

/// Independent per-edge census by canonical cycle enumeration.
inline OracleCensus census_oracle(const Graph& g, std::uint32_t length, std::size_t cap = default_oracle_cap,
                                  unsigned workers = 1) {
  if (g.order() > cap)
    throw precondition_error("graph order " + std::to_string(g.order()) + " exceeds the oracle cap " +
                             std::to_string(cap));
  if (length < 3) throw precondition_error("cycle length must be at least 3");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<OracleCensus> partial(workers, OracleCensus{std::vector<std::uint64_t>(g.size(), 0), 0});
  parallel_for(g.order(), workers, [&](std::size_t root, unsigned w) {
    auto& mine = partial[w];
    for_each_cycle(
        g, length,
        [&](std::span<const Vertex>, std::span<const EdgeId> ids) {
          ++mine.total_cycles;
          for (auto id : ids) ++mine.edge_counts[id];
        },
        static_cast<Vertex>(root), static_cast<Vertex>(root + 1));
  });
  OracleCensus out{std::vector<std::uint64_t>(g.size(), 0), 0};
  for (const auto& p : partial) {
    out.total_cycles += p.total_cycles;
    for (std::size_t i = 0; i < p.edge_counts.size(); ++i) out.edge_counts[i] += p.edge_counts[i];
  }
  return out;
}

/// Number of cycles of the given length containing at least `run`
/// cyclically consecutive vertices of the same (non-plain) kind.
inline std::uint64_t count_cycles_with_kind_run(const Graph& g, std::uint32_t length, std::uint32_t run) {
  std::uint64_t hits = 0;
  for_each_cycle(g, length, [&](std::span<const Vertex> cyc, std::span<const EdgeId>) {
    const std::size_t len = cyc.size();
    for (std::size_t start = 0; start < len; ++start) {
      const VertexKind k = g.kind(cyc[start]);
      if (k == VertexKind::plain) continue;
      std::uint32_t same = 1;
      while (same < run && g.kind(cyc[(start + same) % len]) == k) ++same;
      if (same >= run) {
        ++hits;
        return;
      }
    }
  });
  return hits;
}

enum class Classification { egr, agr, girth_regular, none };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::egr: return "egr";
    case Classification::agr: return "agr";
    case Classification::girth_regular: return "girth-regular";
    case Classification::none: return "none";
  }
  return "none";
}

/// (value, multiplicity) pairs of a signature, ascending by value.
using SignatureMultiplicities = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

inline SignatureMultiplicities multiplicities(std::span<const std::uint64_t> signature) {
  SignatureMultiplicities out;
  for (auto v : signature) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

struct GirthProfile {
  std::size_t order = 0;
  std::uint32_t degree = 0;
  std::uint32_t girth = 0;
  std::vector<std::uint64_t> edge_counts;               // by edge id
  std::vector<std::vector<std::uint64_t>> signatures;   // per vertex, ascending
  std::uint64_t total_girth_cycles = 0;
  Classification classification = Classification::none;
  std::optional<std::uint64_t> lambda;                  // egr only
  std::optional<std::vector<std::uint64_t>> signature;  // when all vertices agree

  /// Distinct per-edge counts, ascending.
  std::vector<std::uint64_t> distinct_counts() const {
    auto v = edge_counts;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }
};

/// Full census of a regular graph.  Throws on irregular or acyclic input.
inline GirthProfile girth_profile(const Graph& g, unsigned workers = 0) {
  const auto k = g.regular_degree();
  if (!k) throw precondition_error("graph is not regular");
  GirthProfile prof;
  prof.order = g.order();
  prof.degree = static_cast<std::uint32_t>(*k);
  prof.girth = girth(g);
  prof.edge_counts = edge_girth_counts(g, prof.girth, workers);

  std::uint64_t sum = 0;
  for (auto c : prof.edge_counts) sum += c;
  if (sum % prof.girth != 0) throw std::logic_error("per-edge counts are not a multiple of the girth");
  prof.total_girth_cycles = sum / prof.girth;

  prof.signatures.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto& sig = prof.signatures[v];
    for (auto id : g.incident_edges(v)) sig.push_back(prof.edge_counts[id]);
    std::sort(sig.begin(), sig.end());
  }

  const auto distinct = prof.distinct_counts();
  const bool shared = std::all_of(prof.signatures.begin(), prof.signatures.end(),
                                  [&](const auto& s) { return s == prof.signatures.front(); });
  if (shared) prof.signature = prof.signatures.front();
  if (distinct.size() == 1) {
    prof.classification = Classification::egr;
    prof.lambda = distinct.front();
  } else if (shared && distinct.size() == 2) {
    prof.classification = Classification::agr;
  } else if (shared) {
    prof.classification = Classification::girth_regular;
  }
  return prof;
}

}  // namespace egr
