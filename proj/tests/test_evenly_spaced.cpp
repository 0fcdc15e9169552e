#include <boost/math/constants/constants.hpp>

#include "doctest.h"
#include "dycktile/evenly_spaced.hpp"

using namespace dycktile;

TEST_CASE("disk single node") {
  set_float_digits(40);
  for (int n : {3, 10, 57}) {
    EvenlySpaced d = EvenlySpaced::disk(n);
    for (int i : {1, 2, 5}) CHECK(abs(d.ratio({i}) - HighFloat(2) / n) < HighFloat("1e-30"));
  }
}

TEST_CASE("limit pair") {
  set_float_digits(40);
  const HighFloat pi = boost::math::constants::pi<HighFloat>();
  EvenlySpaced lim = EvenlySpaced::limit();
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 4}, std::pair{3, 8}}) {
    HighFloat expect = 4 / (pi * pi) / HighFloat((i - j) * (i - j));
    CHECK(abs(lim.ratio({i, j}) - expect) < HighFloat("1e-30"));
  }
}

TEST_CASE("limit marginal of two adjacent pairs") {
  set_float_digits(50);
  const HighFloat pi = boost::math::constants::pi<HighFloat>();
  const HighFloat c = 2 / pi;
  const HighFloat expect = pow(c, 4) * 16 / 9 - pow(c, 2) / 9;
  HighFloat got = EvenlySpaced::limit().marginal({{1, 2}, {3, 4}});
  CHECK(abs(got - expect) < HighFloat("1e-40"));
  CHECK(abs(got - HighFloat("0.246979")) < HighFloat("1e-6"));
}

TEST_CASE("disk at large n approaches the limit") {
  set_float_digits(40);
  HighFloat lim = EvenlySpaced::limit().marginal({{1, 2}, {3, 4}});
  HighFloat disk = EvenlySpaced::disk(10000).marginal({{1, 2}, {3, 4}});
  CHECK(abs(disk - lim) / lim < HighFloat("1e-3"));
}

TEST_CASE("half-plane with four nodes matches the two-pairing formula") {
  set_float_digits(40);
  std::vector<HighFloat> x = {HighFloat("0"), HighFloat("1.5"), HighFloat("2"), HighFloat("4.25")};
  auto X = [&](int i, int j) { return 1 / abs(x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(j - 1)]); };
  const HighFloat a = X(1, 2) * X(3, 4);
  const HighFloat b = X(1, 4) * X(2, 3);
  HighFloat got = EvenlySpaced::half_plane(x).marginal({{1, 2}, {3, 4}});
  CHECK(abs(got - a / (a + b)) < HighFloat("1e-30"));
}
