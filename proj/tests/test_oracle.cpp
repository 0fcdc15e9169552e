#include "doctest.h"
#include "dycktile/oracle.hpp"

using namespace dycktile;

TEST_CASE("matching counts") {
  CHECK(oracle::enumerate_matchings(WeightedGraph::grid(2, 2, {})).size() == 2);
  CHECK(oracle::enumerate_matchings(WeightedGraph::grid(2, 3, {})).size() == 3);
  CHECK(oracle::enumerate_matchings(WeightedGraph::grid(4, 4, {})).size() == 36);
  CHECK(oracle::enumerate_matchings(WeightedGraph::grid(3, 3, {})).empty());
}

TEST_CASE("weighted matching sum") {
  WeightedGraph g(4, {{0, 1, Rational(2)}, {1, 2, Rational(3)}, {2, 3, Rational(5)}, {3, 0, Rational(7)}}, {});
  CHECK(oracle::matching_sum(g) == 2 * 5 + 3 * 7);
  CHECK(oracle::matching_sum(g, {0, 1}) == 5);
}

TEST_CASE("two nodes pair with certainty") {
  PairingDistribution d = oracle::double_dimer_distribution(WeightedGraph::grid(2, 3, {0, 1}));
  REQUIRE(d.probabilities.size() == 1);
  CHECK(d.probabilities[0].second == 1);
}

TEST_CASE("four nodes on a grid: the two-pairing formula") {
  WeightedGraph g = WeightedGraph::grid(4, 4, {0, 3, 15, 12});
  XMatrix x = oracle::x_matrix(g);
  PairingDistribution d = oracle::double_dimer_distribution(g);
  const Rational a = x.get(1, 2) * x.get(3, 4);
  const Rational b = x.get(1, 4) * x.get(2, 3);
  CHECK(d.at(NoncrossingPairing::parse("1-2,3-4")) == a / (a + b));
  CHECK(d.total() == 1);
}

TEST_CASE("superposition chains join nodes noncrossingly") {
  WeightedGraph g = WeightedGraph::grid(3, 4, {0, 1, 2, 3, 7, 11});
  auto m1 = oracle::enumerate_matchings(g);
  auto m2 = oracle::enumerate_matchings(g, g.nodes());
  REQUIRE_FALSE(m1.empty());
  REQUIRE_FALSE(m2.empty());
  for (const auto& a : m1)
    for (const auto& b : m2) {
      auto s = oracle::decompose(g, a, b);
      CHECK(s.pairing.semilength() == 3);
      CHECK(s.loops >= 0);
      CHECK(s.doubled_edges >= 0);
    }
}

TEST_CASE("distribution is invariant under global weight scaling") {
  WeightedGraph g = WeightedGraph::grid(3, 4, {0, 1, 2, 3, 7, 11});
  std::vector<Edge> scaled = g.edges();
  for (Edge& e : scaled) e.weight *= Rational(7, 3);
  WeightedGraph h(g.vertex_count(), scaled, g.nodes());
  auto a = oracle::double_dimer_distribution(g);
  auto b = oracle::double_dimer_distribution(h);
  for (std::size_t k = 0; k < a.probabilities.size(); ++k) CHECK(a.probabilities[k].second == b.probabilities[k].second);
}

TEST_CASE("groves") {
  WeightedGraph edge(2, {{0, 1, Rational(5)}}, {0, 1});
  CHECK(oracle::grove_partition(edge, {{1, 2}}) == 5);
  CHECK(oracle::grove_partition(edge, {{1}, {2}}) == 1);

  WeightedGraph tri(3, {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {0, 2, Rational(1)}}, {0, 1, 2});
  CHECK(oracle::grove_partition(tri, {{1}, {2}, {3}}) == 1);
  CHECK(oracle::grove_partition(tri, {{1, 2}, {3}}) == 1);
  CHECK(oracle::grove_partition(tri, {{1, 2, 3}}) == 3);

  // two components: no grove can join 1 to 3
  WeightedGraph split(4, {{0, 1, Rational(1)}, {2, 3, Rational(1)}}, {0, 1, 2, 3});
  CHECK(oracle::grove_partition(split, {{1, 3}, {2, 4}}) == 0);
}

TEST_CASE("grove census on an unweighted graph") {
  // every grove realises exactly one partition; total equals the number of
  // edge subsets that are forests with every tree touching a node
  WeightedGraph g = WeightedGraph::grid(2, 3, {0, 2, 5, 3});
  Rational total(0);
  for (const auto& [part, z] : oracle::grove_table(g)) total += z;
  long brute = 0;
  const auto& edges = g.edges();
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<int> parent(6);
    for (int v = 0; v < 6; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
      return v;
    };
    bool forest = true;
    for (std::size_t e = 0; e < edges.size() && forest; ++e) {
      if (!(mask & (1u << e))) continue;
      int a = find(edges[e].u), b = find(edges[e].v);
      if (a == b) forest = false;
      parent[static_cast<std::size_t>(a)] = b;
    }
    if (!forest) continue;
    bool covered = true;
    for (int v = 0; v < 6; ++v) {
      bool touches = false;
      for (int node : g.nodes()) touches = touches || find(node) == find(v);
      covered = covered && touches;
    }
    if (covered) ++brute;
  }
  CHECK(total == brute);
}
