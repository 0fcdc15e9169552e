#include <set>

#include "doctest.h"
#include "dycktile/closed_forms.hpp"
#include "dycktile/config.hpp"
#include "dycktile/errors.hpp"
#include "dycktile/matrix_m.hpp"
#include "dycktile/tiling.hpp"

using namespace dycktile;

namespace {

// Independent count: every partition of the cell set into Dyck tiles,
// filtered by the cover-inclusive predicate.
long brute_cover_inclusive(const SkewShape& s) {
  long count = 0;
  for (const DyckTiling& t : enumerate_dyck_tilings(s)) {
    CHECK(is_dyck_tiling(s, t));
    if (is_cover_inclusive(t)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("qpoly basics") {
  CHECK(q_int(3) == QPoly(1) + QPoly::q(1) + QPoly::q(2));
  CHECK(q_fact(0) == QPoly(1));
  CHECK(q_fact(3) == QPoly(1) + QPoly::q(1) * 2 + QPoly::q(2) * 2 + QPoly::q(3));
  CHECK(q_binom(5, 3).at_one() == 10);
  CHECK(q_binom(4, 2) == QPoly(1) + QPoly::q(1) + QPoly::q(2) * 2 + QPoly::q(3) + QPoly::q(4));
}

TEST_CASE("small shapes") {
  SkewShape empty = SkewShape::parse("UDUD/UDUD");
  CHECK(enumerate_cover_inclusive(empty).size() == 1);
  CHECK(f_poly(empty) == QPoly(1));
  CHECK(f_poly_recursive(empty) == QPoly(1));

  SkewShape box = SkewShape::parse("UDUD/UUDD");
  CHECK(box.area() == 1);
  CHECK(f_poly(box) == QPoly::q(1));
  CHECK(minv_of_skew(box) == -1);

  SkewShape corner = SkewShape::parse("UDUDUD/UUUDDD");
  CHECK(f_poly(corner).at_minus_one() == -2);
  CHECK(minv_of_skew(corner) == -2);

  SkewShape not_contained = SkewShape::parse("UUDD/UDUD");
  CHECK_FALSE(not_contained.valid());
  CHECK(minv_of_skew(not_contained) == 0);
  CHECK(f_poly_recursive(not_contained).is_zero());
}

TEST_CASE("cover-inclusive enumeration against a brute-force filter") {
  for (int n = 1; n <= 5; ++n) {
    auto paths = enumerate_dyck_paths(n);
    for (const DyckPath& lo : paths)
      for (const DyckPath& hi : paths) {
        SkewShape s(lo, hi);
        if (!s.valid()) continue;
        auto tilings = enumerate_cover_inclusive(s);
        std::set<DyckTiling> uniq(tilings.begin(), tilings.end());
        CHECK(uniq.size() == tilings.size());
        CHECK(static_cast<long>(tilings.size()) == brute_cover_inclusive(s));
        for (const DyckTiling& t : tilings) {
          CHECK(is_dyck_tiling(s, t));
          CHECK(is_cover_inclusive(t));
        }
      }
  }
}

TEST_CASE("all-unit tilings are cover-inclusive") {
  SkewShape s = SkewShape::parse("UDUDUDUD/UUUUDDDD");
  bool seen = false;
  for (const DyckTiling& t : enumerate_dyck_tilings(s)) {
    bool units = true;
    for (const DyckTile& tile : t.tiles) units = units && tile.size() == 1;
    if (units) {
      seen = true;
      CHECK(is_cover_inclusive(t));
    }
  }
  CHECK(seen);
}

TEST_CASE("non-inclusive tilings exist and are caught by the local criterion") {
  long rejected = 0;
  for (const DyckPath& lo : enumerate_dyck_paths(4))
    for (const DyckPath& hi : enumerate_dyck_paths(4)) {
      SkewShape s(lo, hi);
      if (!s.valid()) continue;
      for (const DyckTiling& t : enumerate_dyck_tilings(s)) {
        CHECK(has_adjacent_proper_extent_violation(t) == !is_cover_inclusive(t));
        if (!is_cover_inclusive(t)) ++rejected;
      }
    }
  CHECK(rejected > 0);
}

TEST_CASE("f by enumeration equals f by recursion") {
  for (int n = 1; n <= 5; ++n) {
    auto paths = enumerate_dyck_paths(n);
    for (const DyckPath& lo : paths)
      for (const DyckPath& hi : paths) {
        SkewShape s(lo, hi);
        if (!s.valid()) continue;
        QPoly f = f_poly(s);
        CHECK(f == f_poly_recursive(s));
        CHECK(f.at_minus_one() == minv_of_skew(s));
        CHECK(f.at_one() == static_cast<long>(count_cover_inclusive(s)));
      }
  }
}

TEST_CASE("every tiling has a removable top tile") {
  for (const DyckPath& lo : enumerate_dyck_paths(4))
    for (const DyckPath& hi : enumerate_dyck_paths(4)) {
      SkewShape s(lo, hi);
      if (!s.valid() || s.empty()) continue;
      for (const DyckTiling& t : enumerate_cover_inclusive(s)) CHECK(find_top_tile(s, t).has_value());
    }
}

TEST_CASE("V-shaped lower boundary") {
  SkewShape s = SkewShape::parse("UUDDUUDD/UUUUDDDD");
  REQUIRE(has_v_lower(s));
  CHECK(*closed_form_v_lower(s) == QPoly::q(s.area()));
  CHECK(f_poly(s) == QPoly::q(s.area()));
}

TEST_CASE("Lambda-shaped closed form") {
  // q^area binom(min(a,d)+min(b,c), min(a,d)) at q^-2, written out for a=4,b=2,c=3,d=3
  LambdaParams p{4, 2, 3, 3};
  SkewShape s = materialize_lambda_shape(p);
  auto back = lambda_shape_params(s);
  REQUIRE(back.has_value());
  CHECK(*back == p);
  QPoly expect = QPoly::q(s.area()) * q_binom(5, 3).substitute_inverse_square();
  CHECK(closed_form_lambda_shape(p) == expect);
  CHECK(closed_form_lambda_shape(1, 1, 1, 1) == f_poly(materialize_lambda_shape({1, 1, 1, 1})));
  CHECK(closed_form_lambda_shape(2, 0, 0, 3) == QPoly::q(materialize_lambda_shape({2, 0, 0, 3}).area()));
  CHECK_THROWS_AS(materialize_lambda_shape({0, 1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(materialize_lambda_shape({1, 0, 1, 1}), ValidationError);
  for (int a = 1; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) {
          if ((b == 0) != (c == 0)) continue;
          SkewShape m = materialize_lambda_shape({a, b, c, d});
          if (m.semilength() > 6) continue;
          CAPTURE(m.str());
          CHECK(closed_form_lambda_shape({a, b, c, d}) == f_poly(m));
        }
}

TEST_CASE("zigzag row closed form") {
  CHECK(closed_form_zigzag_row(SkewShape::parse("UDUDUD/UDUDUD")) == QPoly(1));
  for (int n = 1; n <= 6; ++n)
    for (const DyckPath& mu : enumerate_dyck_paths(n)) {
      SkewShape s(DyckPath::zigzag(n), mu);
      CHECK(closed_form_zigzag_row(s) == f_poly(s));
    }
  // zigzag row sum at q=1 is n!
  Integer total(0);
  for (const DyckPath& mu : enumerate_dyck_paths(6)) total += abs(minv_of_skew(SkewShape(DyckPath::zigzag(6), mu)));
  CHECK(total == 720);
}

TEST_CASE("width-one strip: bracketed example evaluates to 59") {
  const long by_hand = ((1 + 1) * (1 + 1 + 1) * (1 + 1 + 1) + 1) * (1 + 1 + 1) + 1 + 1;
  REQUIRE(by_hand == 59);
  const int saved = caps().max_n;
  caps().max_n = 12;
  SkewShape s = strip_from_box_heights({0, 1, 2, 3, 4, 3, 4, 5, 4, 3, 4, 5, 4, 3, 2, 3, 4, 3, 2, 1, 0});
  CHECK(is_width_one_strip(s));
  CHECK(closed_form_strip(s) == by_hand);
  CHECK(static_cast<long>(count_cover_inclusive(s)) == by_hand);
  caps().max_n = saved;
}

TEST_CASE("width-one strips against enumeration") {
  CHECK(closed_form_strip(SkewShape::parse("UDUD/UUDD")) == 1);
  int seen = 0;
  for (int n = 1; n <= 6; ++n)
    for (const DyckPath& lo : enumerate_dyck_paths(n))
      for (const DyckPath& hi : enumerate_dyck_paths(n)) {
        SkewShape s(lo, hi);
        if (!is_width_one_strip(s)) continue;
        ++seen;
        CHECK(closed_form_strip(s) == abs(minv_of_skew(s)));
      }
  CHECK(seen > 100);
}

TEST_CASE("ascii rendering has one row per level") {
  SkewShape s = SkewShape::parse("UDUDUD/UUUDDD");
  auto tilings = enumerate_cover_inclusive(s);
  REQUIRE(tilings.size() == 2);
  auto rows = render_ascii(s, tilings[0]);
  CHECK_FALSE(rows.empty());
}
