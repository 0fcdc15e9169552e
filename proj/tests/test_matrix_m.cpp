#include "doctest.h"
#include "dycktile/kernels.hpp"
#include "dycktile/matrix_m.hpp"
#include "dycktile/tiling.hpp"

using namespace dycktile;

TEST_CASE("n=3 M table") {
  const int want[5][5] = {{1, 1, 1, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
  TriMatrix m = build_m(3);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) CHECK(m.at(r, c) == want[r][c]);
}

TEST_CASE("n=3 inverse table") {
  const int want[5][5] = {{1, -1, -1, 1, -2}, {0, 1, 0, -1, 1}, {0, 0, 1, -1, 1}, {0, 0, 0, 1, -1}, {0, 0, 0, 0, 1}};
  TriMatrix inv = invert_unitriangular(build_m(3));
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) CHECK(inv.at(r, c) == want[r][c]);
}

TEST_CASE("M M^-1 = I and unit upper triangular") {
  for (int n = 1; n <= 6; ++n) {
    TriMatrix m = build_m(n);
    CHECK(m.is_unit_upper_triangular());
    CHECK(m * invert_unitriangular(m) == TriMatrix::identity(n, m.order()));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  for (int n = 1; n <= 5; ++n) {
    PathIndex paths(n);
    TriMatrix a = kernels::build_m_serial(paths);
    CHECK(a == kernels::build_m_parallel(paths));
    TriMatrix inv = kernels::invert_serial(a);
    CHECK(inv == kernels::invert_parallel(a));
    CHECK(inv == kernels::minv_from_tilings_serial(paths));
    CHECK(inv == kernels::minv_from_tilings_parallel(paths));
  }
}

TEST_CASE("signed tiling counts equal inverse entries") {
  for (int n = 1; n <= 5; ++n) {
    PathIndex paths(n);
    TriMatrix inv = invert_unitriangular(build_m(paths));
    for (int r = 0; r < paths.size(); ++r)
      for (int c = 0; c < paths.size(); ++c) {
        SkewShape s(paths[r], paths[c]);
        if (!s.valid()) {
          CHECK(inv.at(r, c) == 0);
          continue;
        }
        long count = static_cast<long>(count_cover_inclusive(s));
        CHECK(inv.at(r, c) == (s.area() % 2 ? -count : count));
        CHECK(minv_of_skew(s) == inv.at(r, c));
      }
  }
}

TEST_CASE("recurrences hold") {
  PathIndex paths(5);
  for (int r = 0; r < paths.size(); ++r)
    for (int c = 0; c < paths.size(); ++c) {
      CHECK(upward_recurrence_check(paths[r], paths[c]));
      CHECK(downward_recurrence_check(paths[r], paths[c]));
    }
}

TEST_CASE("translation invariance") {
  // same shape shifted right by a prefix of UD, and lifted under an outer chord
  SkewShape base = SkewShape::parse("UDUDUD/UUUDDD");
  SkewShape shifted = SkewShape::parse("UDUDUDUD/UDUUUDDD");
  SkewShape lifted = SkewShape::parse("UUDUDUDD/UUUUDDDD");
  CHECK(base.canonical_key() == shifted.canonical_key());
  CHECK(minv_of_skew(base) == minv_of_skew(shifted));
  CHECK(minv_of_skew(base) == minv_of_skew(lifted));
}

TEST_CASE("sparse rows and columns match the full inverse") {
  for (int n = 1; n <= 6; ++n) {
    PathIndex paths(n);
    TriMatrix inv = invert_unitriangular(build_m(paths));
    for (int k = 0; k < paths.size(); ++k) {
      std::vector<Integer> row(static_cast<std::size_t>(paths.size())), col(row);
      for (const auto& [h, v] : minv_row(paths[k])) row[static_cast<std::size_t>(paths.index_of(h))] = v;
      for (const auto& [h, v] : minv_column(paths[k])) col[static_cast<std::size_t>(paths.index_of(h))] = v;
      for (int j = 0; j < paths.size(); ++j) {
        CHECK(row[static_cast<std::size_t>(j)] == inv.at(k, j));
        CHECK(col[static_cast<std::size_t>(j)] == inv.at(j, k));
      }
    }
  }
}
