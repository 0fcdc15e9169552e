#include <set>

#include "doctest.h"
#include "dycktile/catalan.hpp"
#include "dycktile/errors.hpp"

using namespace dycktile;

namespace {

// every UD word of length 2n that stays nonnegative
std::vector<std::string> brute_dyck_words(int n) {
  std::vector<std::string> out;
  for (unsigned mask = 0; mask < (1u << (2 * n)); ++mask) {
    std::string w;
    int h = 0;
    bool ok = true;
    for (int i = 0; i < 2 * n && ok; ++i) {
      const bool up = (mask >> (2 * n - 1 - i)) & 1u;
      w += up ? 'U' : 'D';
      h += up ? 1 : -1;
      ok = h >= 0;
    }
    if (ok && h == 0) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("Dyck path enumeration matches brute force in table order") {
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 7; ++n) {
    auto brute = brute_dyck_words(n);
    std::sort(brute.begin(), brute.end());
    auto paths = enumerate_dyck_paths(n);
    REQUIRE(static_cast<long>(paths.size()) == catalan[n]);
    for (std::size_t i = 0; i < paths.size(); ++i) CHECK(paths[i].ud() == brute[i]);
  }
}

TEST_CASE("bpe to heights") {
  CHECK(bpe_to_dyck(BalancedWord::parse("()()()")).heights_str() == "0,1,0,1,0,1,0");
  CHECK(bpe_to_dyck(BalancedWord::parse("((()))")).heights_str() == "0,1,2,3,2,1,0");
  CHECK(bpe_to_dyck(BalancedWord::parse("(()())")).heights_str() == "0,1,2,1,2,1,0");
}

TEST_CASE("n=3 labels: pairings and confining sets") {
  struct Row {
    const char* bpe;
    const char* pairing;
    const char* set;
  };
  const Row rows[] = {{"()()()", "1-2,3-4,5-6", "{1,2,3,4,5,6}"},
                      {"()(())", "1-2,3-6,5-4", "{1,2,3,6}"},
                      {"(())()", "1-4,3-2,5-6", "{1,4,5,6}"},
                      {"(()())", "1-6,3-2,5-4", "{1,6}"},
                      {"((()))", "1-6,3-4,5-2", "{1,3,4,6}"}};
  auto paths = enumerate_dyck_paths(3);
  for (std::size_t i = 0; i < 5; ++i) {
    CAPTURE(rows[i].bpe);
    CHECK(paths[i].bpe() == rows[i].bpe);
    CHECK(dyck_to_pairing(paths[i]).str() == rows[i].pairing);
    CHECK(dyck_to_confining(paths[i]).str() == rows[i].set);
    CHECK(confining_to_dyck(ConfiningSet::parse(rows[i].set, 3)) == paths[i]);
    CHECK(pairing_to_dyck(NoncrossingPairing::parse(rows[i].pairing)) == paths[i]);
  }
}

TEST_CASE("confining sets counted by brute force over all subsets") {
  for (int n = 1; n <= 6; ++n) {
    std::set<NodeSet> found;
    for (unsigned mask = 0; mask < (1u << (2 * n)); ++mask) {
      NodeSet s;
      for (int i = 1; i <= 2 * n; ++i)
        if (mask & (1u << (i - 1))) s.push_back(i);
      // direct reading of the definition
      int odd = 0, even = 0;
      bool ok = true;
      for (int i = 1; i <= 2 * n; ++i) {
        const bool in = mask & (1u << (i - 1));
        if (!in && odd <= even) ok = false;
        if (in) (i % 2 ? odd : even)++;
      }
      ok = ok && odd == even;
      CHECK(ok == is_confining(n, s));
      if (ok) found.insert(s);
    }
    std::set<NodeSet> images;
    for (const DyckPath& h : enumerate_dyck_paths(n)) images.insert(dyck_to_confining(h).members());
    CHECK(found == images);
  }
}

TEST_CASE("pairings join odd to even and never cross") {
  for (int n = 1; n <= 6; ++n)
    for (const DyckPath& h : enumerate_dyck_paths(n)) {
      auto pairs = dyck_to_pairing(h).pairs();
      for (auto [a, b] : pairs) CHECK((a + b) % 2 == 1);
      for (auto [a, b] : pairs)
        for (auto [c, d] : pairs) CHECK_FALSE((a < c && c < b && b < d));
    }
}

TEST_CASE("chords sit under the path") {
  for (const DyckPath& h : enumerate_dyck_paths(5))
    for (const Chord& c : chords_of(h)) {
      CHECK(c.up < c.down);
      CHECK(h.height(c.up - 1) == c.height);
      CHECK(h.height(c.down) == c.height);
      for (int i = c.up; i < c.down; ++i) CHECK(h.height(i) > c.height);
    }
}

TEST_CASE("compatibility is the push-down relation") {
  // independent push-down: try all subsets of matched pairs to reverse
  for (int n = 1; n <= 4; ++n) {
    auto paths = enumerate_dyck_paths(n);
    for (const DyckPath& upper : paths) {
      auto chords = chords_of(upper);
      std::set<std::string> reachable;
      for (unsigned mask = 0; mask < (1u << chords.size()); ++mask) {
        std::string w = upper.ud();
        for (std::size_t k = 0; k < chords.size(); ++k)
          if (mask & (1u << k)) {
            w[static_cast<std::size_t>(chords[k].up - 1)] = 'D';
            w[static_cast<std::size_t>(chords[k].down - 1)] = 'U';
          }
        reachable.insert(w);
      }
      for (const DyckPath& lower : paths) {
        const bool related = reachable.count(lower.ud()) > 0;
        CHECK(pushdown_related(lower, upper) == related);
        CHECK(is_compatible(dyck_to_confining(lower), dyck_to_pairing(upper)) == related);
      }
    }
  }
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS_AS(BalancedWord::parse("(()"), ValidationError);
  CHECK_THROWS_AS(BalancedWord::parse(")("), ValidationError);
  CHECK_THROWS_AS(DyckPath::parse("UDDU"), ValidationError);
  CHECK_THROWS_AS(NoncrossingPairing::parse("1-3,2-4"), ValidationError);
  CHECK_THROWS_AS(NoncrossingPairing::parse("1-4,2-3,5-5"), ValidationError);
  CHECK_THROWS_AS(ConfiningSet::parse("{2,3}", 2), ValidationError);
}
