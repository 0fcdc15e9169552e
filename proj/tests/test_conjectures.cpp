#include "doctest.h"
#include "dycktile/conjectures.hpp"
#include "dycktile/matrix_m.hpp"

using namespace dycktile;

namespace {

QPoly poly(std::initializer_list<long> coeffs) {
  QPoly out;
  int e = 0;
  for (long c : coeffs) out += QPoly::q(e++) * QPoly(c);
  return out;
}

}  // namespace

TEST_CASE("row sums for n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const DyckPath& h : enumerate_dyck_paths(n)) {
      CAPTURE(h.ud());
      CHECK(rowsum_check(h).holds);
      auto [got, want] = rowsum_scalar(h);
      CHECK(got == want);
    }
}

TEST_CASE("column sums for n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const DyckPath& h : enumerate_dyck_paths(n)) {
      CAPTURE(h.ud());
      CHECK(colsum_check(h).holds);
      auto [got, want] = colsum_scalar(h);
      CHECK(got == want);
    }
}

TEST_CASE("n=4 row example") {
  SumCheck c = rowsum_check(DyckPath::parse("()(())()"));
  CHECK(c.observed == poly({1, 2, 3, 3, 2, 1}));
  CHECK(c.holds);
}

TEST_CASE("n=4 column example") {
  SumCheck c = colsum_check(DyckPath::parse("((()()))"));
  CHECK(c.observed == poly({1, 3, 5, 5, 3, 1}));
  CHECK(c.observed == q_int(1) * q_int(2) * q_int(3) * q_int(3));
  CHECK(c.holds);
}

TEST_CASE("zigzag column and row") {
  CHECK(colsum_check(DyckPath::zigzag(4)).observed == QPoly(1));
  CHECK(rowsum_check(DyckPath::zigzag(5)).observed.at_one() == 120);
}

TEST_CASE("q-Euler continued fraction") {
  auto s = q_euler_series(6);
  CHECK(s[0] == QPoly(1));
  CHECK(s[3] == poly({1, 2, 2, 1}));
  const long fact[] = {1, 1, 2, 6, 24, 120, 720};
  for (int k = 0; k <= 6; ++k) {
    CHECK(s[static_cast<std::size_t>(k)] == q_fact(k));
    CHECK(s[static_cast<std::size_t>(k)].at_one() == fact[k]);
  }
}
