#include <gtest/gtest.h>

#include <functional>

#include "egr/census.hpp"
#include "egr/graph.hpp"
#include "egr/graph_io.hpp"

using egr::Graph;
using egr::Vertex;

namespace {

Graph cycle_graph(std::uint32_t n) {
  egr::GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

Graph petersen() {
  egr::GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

Graph heawood() {
  egr::GraphBuilder b(14);
  for (Vertex i = 0; i < 14; ++i) b.add_edge(i, (i + 1) % 14);
  for (Vertex i = 0; i < 14; i += 2) b.add_edge(i, (i + 5) % 14);
  return std::move(b).build();
}

Graph prism() {
  egr::GraphBuilder b(6);
  for (Vertex i = 0; i < 3; ++i) {
    b.add_edge(i, (i + 1) % 3);
    b.add_edge(3 + i, 3 + (i + 1) % 3);
    b.add_edge(i, i + 3);
  }
  return std::move(b).build();
}

// Pentagons P_h and pentagrams Q_i, with P_h[j] joined to Q_i[h*i + j].
Graph hoffman_singleton() {
  egr::GraphBuilder b(50);
  auto P = [](Vertex h, Vertex j) { return 5 * h + j % 5; };
  auto Q = [](Vertex i, Vertex j) { return 25 + 5 * i + j % 5; };
  for (Vertex h = 0; h < 5; ++h)
    for (Vertex j = 0; j < 5; ++j) {
      b.add_edge(P(h, j), P(h, j + 1));
      b.add_edge(Q(h, j), Q(h, j + 2));
    }
  for (Vertex h = 0; h < 5; ++h)
    for (Vertex i = 0; i < 5; ++i)
      for (Vertex j = 0; j < 5; ++j) b.add_edge(P(h, j), Q(i, h * i + j));
  return std::move(b).build();
}

// Brute force: every ordered closed sequence of distinct vertices; each
// cycle appears 2*len times.
struct BruteCensus {
  std::vector<std::uint64_t> edge_counts;
  std::uint64_t total = 0;
};

BruteCensus brute_census(const Graph& g, std::uint32_t len) {
  std::vector<std::uint64_t> raw(g.size(), 0);
  std::uint64_t seqs = 0;
  std::vector<Vertex> path;
  std::vector<bool> used(g.order(), false);
  std::function<void()> go = [&] {
    if (path.size() == len) {
      const auto closing = g.edge_id(path.back(), path.front());
      if (!closing) return;
      ++seqs;
      ++raw[*closing];
      for (std::size_t i = 0; i + 1 < len; ++i) ++raw[*g.edge_id(path[i], path[i + 1])];
      return;
    }
    for (auto w : g.neighbors(path.back())) {
      if (used[w]) continue;
      used[w] = true;
      path.push_back(w);
      go();
      path.pop_back();
      used[w] = false;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    used[s] = true;
    path.assign(1, s);
    go();
    used[s] = false;
  }
  BruteCensus out{std::vector<std::uint64_t>(g.size()), seqs / (2 * len)};
  for (std::size_t i = 0; i < raw.size(); ++i) out.edge_counts[i] = raw[i] / (2 * len);
  return out;
}

void expect_matches_brute(const Graph& g) {
  const auto girth = egr::girth(g);
  const auto brute = brute_census(g, girth);
  EXPECT_EQ(egr::edge_girth_counts(g, girth, 1), brute.edge_counts);
  const auto oracle = egr::census_oracle(g, girth);
  EXPECT_EQ(oracle.edge_counts, brute.edge_counts);
  EXPECT_EQ(oracle.total_cycles, brute.total);
  for (egr::EdgeId id = 0; id < g.size(); ++id)
    EXPECT_EQ(egr::edge_girth_count(g, g.edge(id), girth), brute.edge_counts[id]);
}

}  // namespace

TEST(Graph, NormalizesAndIndexesEdges) {
  const Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge(0), (egr::Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (egr::Edge{0, 3}));
  EXPECT_EQ(g.edge(2), (egr::Edge{1, 2}));
  EXPECT_EQ(*g.edge_id(3, 0), 1u);
  EXPECT_FALSE(g.edge_id(2, 3));
  for (Vertex v = 0; v < 4; ++v)
    for (std::size_t i = 0; i < g.degree(v); ++i) {
      const auto& e = g.edge(g.incident_edges(v)[i]);
      EXPECT_TRUE((e.u == v && e.v == g.neighbors(v)[i]) || (e.v == v && e.u == g.neighbors(v)[i]));
    }
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(3, {{1, 1}}), egr::precondition_error);
  EXPECT_THROW(Graph(3, {{0, 3}}), egr::precondition_error);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), egr::precondition_error);
  EXPECT_THROW(Graph(3, {}, {egr::VertexKind::point}), egr::precondition_error);
}

TEST(Graph, StructuralQueries) {
  const auto c6 = cycle_graph(6);
  EXPECT_EQ(c6.regular_degree(), 2u);
  EXPECT_TRUE(c6.is_connected());
  EXPECT_TRUE(c6.is_bipartite());
  EXPECT_FALSE(cycle_graph(5).is_bipartite());
  EXPECT_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
  EXPECT_FALSE(Graph(3, {{0, 1}, {1, 2}}).regular_degree());
  std::vector<bool> keep(6, true);
  keep[0] = false;
  const auto path = c6.induced_subgraph(keep);
  EXPECT_EQ(path.order(), 5u);
  EXPECT_EQ(path.size(), 4u);
  const std::vector<egr::EdgeId> drop{0};
  EXPECT_EQ(c6.without_edges(drop).size(), 5u);
}

TEST(Girth, KnownGraphs) {
  EXPECT_EQ(egr::girth(cycle_graph(6)), 6u);
  EXPECT_EQ(egr::girth(petersen()), 5u);
  EXPECT_EQ(egr::girth(heawood()), 6u);
  EXPECT_EQ(egr::girth(prism()), 3u);
  EXPECT_EQ(egr::girth(hoffman_singleton()), 5u);
}

TEST(Census, MatchesBruteForce) {
  expect_matches_brute(cycle_graph(6));
  expect_matches_brute(petersen());
  expect_matches_brute(heawood());
  expect_matches_brute(prism());
  expect_matches_brute(hoffman_singleton());
}

TEST(Census, ParallelMatchesSerial) {
  const auto g = hoffman_singleton();
  EXPECT_EQ(egr::edge_girth_counts(g, 5, 1), egr::edge_girth_counts(g, 5, 3));
  EXPECT_EQ(egr::census_oracle(g, 5, 600, 1).edge_counts, egr::census_oracle(g, 5, 600, 4).edge_counts);
}

TEST(Census, OracleCapAndLength) {
  EXPECT_THROW(egr::census_oracle(petersen(), 5, 9), egr::precondition_error);
  EXPECT_THROW(egr::census_oracle(petersen(), 2), egr::precondition_error);
}

TEST(Profile, Classification) {
  const auto pet = egr::girth_profile(petersen(), 1);
  EXPECT_EQ(pet.classification, egr::Classification::egr);
  EXPECT_EQ(pet.lambda, 4u);
  EXPECT_EQ(pet.total_girth_cycles, 12u);

  const auto hea = egr::girth_profile(heawood(), 1);
  EXPECT_EQ(hea.classification, egr::Classification::egr);
  EXPECT_EQ(hea.lambda, 8u);
  EXPECT_EQ(hea.total_girth_cycles, 28u);

  const auto hs = egr::girth_profile(hoffman_singleton(), 1);
  EXPECT_EQ(hs.classification, egr::Classification::egr);
  EXPECT_EQ(hs.lambda, 36u);
  EXPECT_EQ(hs.total_girth_cycles, 1260u);

  const auto pr = egr::girth_profile(prism(), 1);
  EXPECT_EQ(pr.classification, egr::Classification::agr);
  EXPECT_EQ(pr.signature, (std::vector<std::uint64_t>{0, 1, 1}));
  EXPECT_FALSE(pr.lambda);
  EXPECT_EQ(egr::multiplicities(*pr.signature), (egr::SignatureMultiplicities{{0, 1}, {1, 2}}));
}

TEST(Profile, CountingIdentities) {
  for (const auto& g : {petersen(), heawood(), prism(), hoffman_singleton()}) {
    const auto p = egr::girth_profile(g, 1);
    std::uint64_t sum = 0;
    for (auto c : p.edge_counts) sum += c;
    EXPECT_EQ(sum, p.girth * p.total_girth_cycles);
    // Each vertex lies on sum(signature)/2 girth cycles; summing counts every cycle g times.
    std::uint64_t per_vertex = 0;
    for (const auto& s : p.signatures) {
      std::uint64_t t = 0;
      for (auto c : s) t += c;
      EXPECT_EQ(t % 2, 0u);
      per_vertex += t / 2;
    }
    EXPECT_EQ(per_vertex, p.girth * p.total_girth_cycles);
  }
}

TEST(Profile, NonRegularGraphOutcomes) {
  EXPECT_THROW(egr::girth_profile(Graph(3, {{0, 1}, {1, 2}})), egr::precondition_error);
  // Two disjoint cycles of different lengths: signatures differ by vertex.
  egr::GraphBuilder b(8);
  for (Vertex i = 0; i < 3; ++i) b.add_edge(i, (i + 1) % 3);
  for (Vertex i = 0; i < 5; ++i) b.add_edge(3 + i, 3 + (i + 1) % 5);
  const auto p = egr::girth_profile(std::move(b).build(), 1);
  EXPECT_EQ(p.classification, egr::Classification::none);
  EXPECT_FALSE(p.signature);
}

TEST(KindRun, CountsCyclesWithConsecutiveKinds) {
  using K = egr::VertexKind;
  const Graph plain = cycle_graph(4);
  EXPECT_EQ(egr::count_cycles_with_kind_run(plain, 4, 2), 0u);
  const Graph mixed(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {K::point, K::point, K::line, K::line});
  EXPECT_EQ(egr::count_cycles_with_kind_run(mixed, 4, 2), 1u);
  EXPECT_EQ(egr::count_cycles_with_kind_run(mixed, 4, 3), 0u);
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(egr::to_graph6(Graph(2, {{0, 1}})), "A_");
  EXPECT_EQ(egr::to_graph6(petersen()).size(), 1u + 8u);
  EXPECT_THROW(egr::to_graph6(Graph()), egr::precondition_error);
}

TEST(Graph6, RoundTrip) {
  for (const auto& g : {petersen(), heawood(), hoffman_singleton(), cycle_graph(64)}) {
    const auto s = egr::to_graph6(g);
    const auto h = egr::from_graph6(s);
    EXPECT_EQ(h.order(), g.order());
    EXPECT_TRUE(std::equal(h.edges().begin(), h.edges().end(), g.edges().begin(), g.edges().end()));
    EXPECT_EQ(egr::from_graph6(">>graph6<<" + s + "\n").size(), g.size());
  }
  EXPECT_THROW(egr::from_graph6("A_x"), egr::precondition_error);
}

TEST(EdgeList, FormatAndParse) {
  EXPECT_EQ(egr::to_edgelist(cycle_graph(5)), "0 1\n0 4\n1 2\n2 3\n3 4\n");
  const auto g = egr::from_edgelist("# comment\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(egr::read_graph("0 1\n1 2\n").size(), 2u);
  EXPECT_EQ(egr::read_graph("A_\n").size(), 1u);
}

TEST(Json, ProfileFields) {
  const auto j = egr::graph_json(petersen(), 1);
  EXPECT_EQ(j["n"], 10);
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["girth"], 5);
  EXPECT_EQ(j["classification"], "egr");
  EXPECT_EQ(j["lambda"], 4);
  EXPECT_EQ(j["edges"].size(), 15u);
  EXPECT_EQ(egr::parse_graph_format("edgelist"), egr::GraphFormat::edgelist);
  EXPECT_THROW(egr::parse_graph_format("dot"), egr::precondition_error);
}
