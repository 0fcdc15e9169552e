#include "doctest.h"
#include "dycktile/grove.hpp"
#include "dycktile/kernels.hpp"
#include "dycktile/matrix_m.hpp"
#include "dycktile/oracle.hpp"

using namespace dycktile;

namespace {

// det of L with rows and columns taken in the given order (1-based)
Rational det_in_order(const ResponseMatrix& l, std::vector<int> rows, std::vector<int> cols) {
  DenseMatrix<Rational> a(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) a[r][c] = l.at(rows[r], cols[c]);
  return determinant(a);
}

WeightedGraph six_node_network() {
  // 3x3 grid, nodes clockwise around the boundary, uneven weights
  WeightedGraph base = WeightedGraph::grid(3, 3, {0, 1, 2, 5, 8, 6});
  std::vector<Edge> edges = base.edges();
  int k = 1;
  for (Edge& e : edges) {
    e.weight = Rational(k % 4 + 1, k % 3 + 1);
    e.weight.canonicalize();
    ++k;
  }
  return WeightedGraph(9, edges, base.nodes());
}

}  // namespace

TEST_CASE("single edge") {
  WeightedGraph g(2, {{0, 1, Rational(3)}}, {0, 1});
  ResponseMatrix l = response_matrix(g);
  CHECK(l.at(1, 2) == 3);
  CHECK(oracle::grove_partition(g, {{1, 2}}) == 3);
  CHECK(oracle::grove_partition(g, {{1}, {2}}) == 1);
  GroveRatios r = grove_ratios(l);
  CHECK(r.at(NoncrossingPairing::parse("1-2")) == 3);
}

TEST_CASE("series edges give effective conductance") {
  WeightedGraph g(3, {{0, 2, Rational(1)}, {2, 1, Rational(1)}}, {0, 1});
  CHECK(response_matrix(g).at(1, 2) == Rational(1, 2));
}

TEST_CASE("star with three leaves") {
  // eliminating the centre by hand: L_ij = w_i w_j / (w_1 + w_2 + w_3)
  WeightedGraph g(4, {{3, 0, Rational(1)}, {3, 1, Rational(2)}, {3, 2, Rational(3)}}, {0, 1, 2});
  ResponseMatrix l = response_matrix(g);
  CHECK(l.at(1, 2) == Rational(1, 3));
  CHECK(l.at(1, 3) == Rational(1, 2));
  CHECK(l.at(2, 3) == Rational(1));
}

TEST_CASE("S* to S") {
  CHECK(s_star_to_s(3, {1, 3, 5}) == NodeSet{1, 2, 3, 4, 5, 6});
  CHECK(s_star_to_s(3, {1, 2, 3}) == NodeSet{1, 3, 4, 6});
  for (const DyckPath& h : enumerate_dyck_paths(4)) {
    NodeSet s = dyck_to_confining(h).members();
    CHECK(s_star_to_s(4, s_to_s_star(4, s)) == s);
  }
}

TEST_CASE("pairing signs") {
  CHECK(pairing_sign(NoncrossingPairing::parse("1-2")) == 1);
  CHECK(pairing_sign(NoncrossingPairing::parse("1-2,3-4,5-6")) == 1);
  for (int n = 1; n <= 4; ++n)
    for (const DyckPath& h : enumerate_dyck_paths(n)) {
      NoncrossingPairing p = dyck_to_pairing(h);
      auto sets = separating_sets(p);
      REQUIRE_FALSE(sets.empty());
      for (const NodeSet& s : sets) CHECK(pairing_sign(p, s) == pairing_sign(p));
    }
}

TEST_CASE("grove ratios against the oracle") {
  std::vector<WeightedGraph> graphs = {WeightedGraph::grid(2, 3, {0, 1, 2, 5, 4, 3}), WeightedGraph::grid(3, 3, {0, 2, 8, 6}),
                                       six_node_network()};
  for (const WeightedGraph& g : graphs) {
    auto table = oracle::grove_table(g);
    const Rational z0 = table.at(oracle::singletons(g.node_count()));
    GroveRatios r = grove_ratios(response_matrix(g));
    for (const auto& [p, v] : r.ratios) CHECK(v == oracle::grove_partition(g, oracle::as_partition(p)) / z0);
  }
}

TEST_CASE("six nodes: five determinants and the rotated two") {
  WeightedGraph g = six_node_network();
  ResponseMatrix l = response_matrix(g);
  const Rational five = det_in_order(l, {1, 3, 5}, {2, 4, 6}) - det_in_order(l, {1, 3, 4}, {2, 5, 6}) -
                        det_in_order(l, {1, 2, 5}, {3, 4, 6}) + det_in_order(l, {1, 2, 4}, {3, 5, 6}) -
                        2 * det_in_order(l, {1, 2, 3}, {4, 5, 6});
  const Rational two = det_in_order(l, {2, 3, 5}, {4, 6, 1}) - det_in_order(l, {2, 3, 4}, {5, 6, 1});
  const Rational brute =
      oracle::grove_partition(g, {{1, 2}, {3, 4}, {5, 6}}) / oracle::grove_partition(g, oracle::singletons(6));
  CHECK(brute != 0);
  CHECK(five == brute);
  CHECK(two == brute);
  CHECK(grove_ratios(l).at(NoncrossingPairing::parse("1-2,3-4,5-6")) == brute);
}

TEST_CASE("CIM determinant of a contiguous S* isolates one pairing") {
  WeightedGraph g = six_node_network();
  ResponseMatrix l = response_matrix(g);
  // rows 1,2,3 against columns 4,5,6: only 1-6,2-5,3-4 contributes
  const Rational z0 = oracle::grove_partition(g, oracle::singletons(6));
  const Rational nested = oracle::grove_partition(g, {{1, 6}, {2, 5}, {3, 4}}) / z0;
  CHECK(abs(cim_determinant(l, {1, 2, 3})) == nested);
}

TEST_CASE("rotation") {
  WeightedGraph g = six_node_network();
  ResponseMatrix l = response_matrix(g);
  GroveRatios base = grove_ratios(l);
  for (int k = 1; k < 6; ++k) {
    GroveRatios rot = grove_ratios(response_matrix(g.rotated(k)));
    for (const auto& [p, v] : base.ratios) CHECK(rot.at(rotate_pairing(p, k)) == v);
  }
}

TEST_CASE("serial and parallel CIM kernels agree") {
  ResponseMatrix l = response_matrix(six_node_network());
  std::vector<NodeSet> stars;
  for (const DyckPath& h : enumerate_dyck_paths(3)) stars.push_back(s_to_s_star(3, dyck_to_confining(h).members()));
  CHECK(kernels::cim_all_serial(l.matrix(), stars) == kernels::cim_all_parallel(l.matrix(), stars));
}
