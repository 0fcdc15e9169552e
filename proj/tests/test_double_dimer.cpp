#include <random>

#include "doctest.h"
#include "dycktile/config.hpp"
#include "dycktile/double_dimer.hpp"
#include "dycktile/errors.hpp"
#include "dycktile/kernels.hpp"
#include "dycktile/matrix_m.hpp"
#include "dycktile/oracle.hpp"

using namespace dycktile;

namespace {

XMatrix random_x(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  XMatrix x(n);
  for (int i = 1; i <= 2 * n; i += 2)
    for (int j = 2; j <= 2 * n; j += 2) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      x.set(i, j, v);
    }
  return x;
}

// boundary of a rows x cols grid, clockwise from the top-left corner
std::vector<int> grid_boundary(int rows, int cols) {
  std::vector<int> out;
  for (int c = 0; c < cols; ++c) out.push_back(c);
  for (int r = 1; r < rows; ++r) out.push_back(r * cols + cols - 1);
  for (int c = cols - 2; c >= 0; --c) out.push_back((rows - 1) * cols + c);
  for (int r = rows - 2; r >= 1; --r) out.push_back(r * cols);
  return out;
}

}  // namespace

TEST_CASE("X matrix access") {
  XMatrix x(2);
  x.set(1, 2, Rational(3));
  CHECK(x.get(2, 1) == 3);
  CHECK_THROWS_AS(x.set(1, 3, Rational(1)), ValidationError);
  XMatrix back = XMatrix::from_json(x.to_json());
  CHECK(back.get(1, 2) == 3);
}

TEST_CASE("D_S of the full set equals D_empty") {
  XMatrix x = random_x(3, 7);
  CHECK(d_s(x, {1, 2, 3, 4, 5, 6}) == d_s(x, {}));
  CHECK_THROWS_AS(d_s(x, {1, 3}), ValidationError);
}

TEST_CASE("four nodes: two-pairing closed form") {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    XMatrix x = random_x(2, seed);
    const Rational a = x.get(1, 2) * x.get(3, 4);
    const Rational b = x.get(1, 4) * x.get(2, 3);
    PairingDistribution d = pairing_distribution(x);
    CHECK(d.at(NoncrossingPairing::parse("1-2,3-4")) == a / (a + b));
    CHECK(d.at(NoncrossingPairing::parse("1-4,3-2")) == b / (a + b));
  }
}

TEST_CASE("distribution solves the D_S system") {
  XMatrix x = random_x(3, 11);
  PairingDistribution d = pairing_distribution(x);
  PathIndex paths(3);
  for (const DyckPath& row : paths.paths()) {
    ConfiningSet s = dyck_to_confining(row);
    Rational sum(0);
    for (const auto& [p, v] : d.probabilities)
      if (is_compatible(s, p)) sum += v;
    CHECK(sum == d_s(x, s.members()) / d_s(x, {}));
  }
  CHECK(d.total() == 1);
}

TEST_CASE("serial and parallel D_S kernels agree") {
  XMatrix x = random_x(4, 3);
  std::vector<NodeSet> sets;
  for (const DyckPath& h : enumerate_dyck_paths(4)) sets.push_back(dyck_to_confining(h).members());
  CHECK(kernels::d_s_all_serial(x, sets) == kernels::d_s_all_parallel(x, sets));
}

TEST_CASE("five-term contiguous marginal") {
  FormalSetCombo expect;
  expect.add({1, 2, 3, 4, 5, 6}, Integer(1));
  expect.add({1, 2, 3, 6}, Integer(-1));
  expect.add({1, 4, 5, 6}, Integer(-1));
  expect.add({1, 6}, Integer(1));
  expect.add({1, 3, 4, 6}, Integer(-2));
  CHECK(contiguous_combo(NoncrossingPairing::parse("1-2,3-4,5-6"), 1) == expect);
  CHECK(local_marginal_formula(12, parse_partial_pairing("1-2,3-4,5-6")) == expect);
}

TEST_CASE("per-block combinations and their union") {
  FormalSetCombo block1;
  block1.add({1, 2, 3, 6}, Integer(1));
  block1.add({1, 6}, Integer(-1));
  block1.add({1, 3, 4, 6}, Integer(1));
  CHECK(contiguous_combo(NoncrossingPairing::parse("1-2,3-6,5-4"), 1) == block1);
  FormalSetCombo block2;
  block2.add({11, 16}, Integer(1));
  block2.add({11, 13, 14, 16}, Integer(-1));
  CHECK(contiguous_combo(NoncrossingPairing::parse("1-6,3-2,5-4"), 11) == block2);
  FormalSetCombo u = block1.unite(block2);
  CHECK(u.terms().size() == 6);
  CHECK(u.terms().at({1, 3, 4, 6, 11, 13, 14, 16}) == -1);
  CHECK(u.terms().at({1, 6, 11, 13, 14, 16}) == 1);
}

TEST_CASE("filling the gap under a cross-block chord") {
  auto fills = noncrossing_completions({12, 13, 14, 15}, {{11, 16}});
  CHECK(fills.size() == 2);
}

TEST_CASE("marginals on 6-node graphs agree with brute force") {
  for (const auto& [rows, cols] : {std::pair{3, 4}, std::pair{2, 3}}) {
    auto nodes = grid_boundary(rows, cols);
    nodes.resize(6);
    WeightedGraph g = WeightedGraph::grid(rows, cols, nodes);
    if (!g.nodes_alternate()) continue;
    XMatrix x = oracle::x_matrix(g);
    PairingDistribution want = oracle::double_dimer_distribution(g);
    PairingDistribution got = pairing_distribution(x);
    for (std::size_t k = 0; k < want.probabilities.size(); ++k) CHECK(got.probabilities[k].second == want.probabilities[k].second);
    Rational expect(0);
    for (const auto& [p, v] : want.probabilities)
      if (p.partner(1) == 2 && p.partner(3) == 4 && p.partner(5) == 6) expect += v;
    CHECK(contiguous_marginal(x, NoncrossingPairing::parse("1-2,3-4,5-6"), 1) == expect);
  }
}

TEST_CASE("non-contiguous marginal on a 16-node grid boundary") {
  // all 16 boundary vertices of a 4x6 grid are nodes
  WeightedGraph g = WeightedGraph::grid(4, 6, grid_boundary(4, 6));
  REQUIRE(g.node_count() == 16);
  REQUIRE(g.nodes_alternate());
  XMatrix x = oracle::x_matrix(g);
  PairingDistribution want = oracle::double_dimer_distribution(g);
  CHECK(want.total() == 1);
  for (const char* text : {"1-2,3-6,5-4,11-16", "1-2,5-6", "3-4,9-14", "1-16"}) {
    PartialPairing sub = parse_partial_pairing(text);
    Rational expect(0);
    for (const auto& [p, v] : want.probabilities)
      if (contains_subpairing(p, sub)) expect += v;
    CAPTURE(text);
    CHECK(local_marginal(x, sub) == expect);
  }
}

TEST_CASE("partial pairing validation") {
  CHECK_THROWS_AS(parse_partial_pairing("1-3"), ValidationError);
  CHECK_THROWS_AS(parse_partial_pairing("1-4,2-5"), ValidationError);
  CHECK_THROWS_AS(parse_partial_pairing("1-2,2-3"), ValidationError);
  CHECK(format_partial_pairing(parse_partial_pairing("6-3,2-1")) == "1-2,3-6");
}
