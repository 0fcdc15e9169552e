#include "dycktile/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dycktile/closed_forms.hpp"
#include "dycktile/conjectures.hpp"
#include "dycktile/config.hpp"
#include "dycktile/double_dimer.hpp"
#include "dycktile/evenly_spaced.hpp"
#include "dycktile/grove.hpp"
#include "dycktile/kernels.hpp"
#include "dycktile/matrix_m.hpp"
#include "dycktile/oracle.hpp"
#include "dycktile/tiling.hpp"

namespace dycktile::verify {

namespace {

struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first_failure;
  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
  CheckResult result(const std::string& name) const {
    std::ostringstream d;
    d << checked << " cases";
    if (failed) d << ", " << failed << " failed (first: " << first_failure << ")";
    return {name, failed == 0 && checked > 0, d.str()};
  }
};

template <typename F>
void for_each_pair(int n, F&& f) {
  PathIndex paths(n);
  for (int r = 0; r < paths.size(); ++r)
    for (int c = 0; c < paths.size(); ++c) f(paths, r, c);
}

std::string label(const SkewShape& s) { return s.str(); }

}  // namespace

CheckResult bijection_round_trips(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k)
    for (const DyckPath& h : enumerate_dyck_paths(k)) {
      BalancedWord w = dyck_to_bpe(h);
      NoncrossingPairing p = dyck_to_pairing(h);
      ConfiningSet s = dyck_to_confining(h);
      bool ok = bpe_to_dyck(w) == h && pairing_to_dyck(p) == h && confining_to_dyck(s) == h &&
                bpe_to_confining(w) == s && confining_to_bpe(s) == w && dyck_to_pairing(pairing_to_dyck(p)) == p;
      t.record(ok, h.ud());
    }
  return t.result("bijection round trips");
}

CheckResult compatibility_matches_pushdown(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k)
    for_each_pair(k, [&](const PathIndex& paths, int r, int c) {
      ConfiningSet s = dyck_to_confining(paths[r]);
      NoncrossingPairing p = dyck_to_pairing(paths[c]);
      t.record(is_compatible(s, p) == pushdown_related(dyck_to_bpe(paths[r]), dyck_to_bpe(paths[c])),
               s.str() + " vs " + p.str());
    });
  return t.result("compatibility equals push-down relation");
}

CheckResult confining_set_count(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k) {
    long count = 0;
    for (unsigned mask = 0; mask < (1u << (2 * k)); ++mask) {
      NodeSet s;
      for (int i = 1; i <= 2 * k; ++i)
        if (mask & (1u << (i - 1))) s.push_back(i);
      if (is_confining(k, s)) ++count;
    }
    t.record(count == static_cast<long>(enumerate_dyck_paths(k).size()), "n=" + std::to_string(k));
  }
  return t.result("confining sets are Catalan many");
}

CheckResult pushdown_reflexive_acyclic(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k)
    for_each_pair(k, [&](const PathIndex& paths, int r, int c) {
      const BalancedWord a = dyck_to_bpe(paths[r]), b = dyck_to_bpe(paths[c]);
      if (r == c)
        t.record(pushdown_related(a, b), "reflexive " + a.str());
      else
        t.record(!(pushdown_related(a, b) && pushdown_related(b, a)), "cycle " + a.str() + " " + b.str());
    });
  return t.result("push-down relation reflexive and acyclic");
}

CheckResult lex_is_linear_extension(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k)
    for_each_pair(k, [&](const PathIndex& paths, int r, int c) {
      if (r != c && dominates(paths[r], paths[c])) t.record(r < c, paths[r].ud() + " " + paths[c].ud());
    });
  return t.result("lex order extends dominance");
}

CheckResult inverse_product(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k) {
    PathIndex paths(k);
    TriMatrix m = build_m(paths);
    TriMatrix inv = invert_unitriangular(m);
    TriMatrix id = TriMatrix::identity(k, paths.size());
    t.record(m.is_unit_upper_triangular() && m * inv == id && inv * m == id, "n=" + std::to_string(k));
  }
  return t.result("M unit upper triangular and M M^-1 = I");
}

CheckResult tilings_match_inverse(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k) {
    PathIndex paths(k);
    TriMatrix inv = invert_unitriangular(build_m(paths));
    for (int r = 0; r < paths.size(); ++r)
      for (int c = 0; c < paths.size(); ++c) {
        SkewShape s(paths[r], paths[c]);
        Integer count(static_cast<unsigned long>(enumerate_cover_inclusive(s).size()));
        if (!s.valid()) count = 0;
        Integer signed_count = s.area() % 2 ? Integer(-count) : count;
        t.record(signed_count == inv.at(r, c), label(s));
      }
  }
  return t.result("signed cover-inclusive tiling counts equal M^-1");
}

CheckResult kernels_agree(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k) {
    PathIndex paths(k);
    TriMatrix m = kernels::build_m_serial(paths);
    t.record(m == kernels::build_m_parallel(paths), "build_m n=" + std::to_string(k));
    TriMatrix inv = kernels::invert_serial(m);
    t.record(inv == kernels::invert_parallel(m), "invert n=" + std::to_string(k));
    t.record(inv == kernels::minv_from_tilings_parallel(paths), "tilings n=" + std::to_string(k));
  }
  return t.result("serial and parallel kernels agree");
}

CheckResult fpoly_two_ways(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k)
    for_each_pair(k, [&](const PathIndex& paths, int r, int c) {
      SkewShape s(paths[r], paths[c]);
      QPoly f = f_poly(s);
      t.record(f == f_poly_recursive(s) && f.at_minus_one() == minv_of_skew(s), label(s));
    });
  return t.result("f by enumeration equals f by recurrence; f(-1) = M^-1");
}

CheckResult recurrences(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k)
    for_each_pair(k, [&](const PathIndex& paths, int r, int c) {
      t.record(upward_recurrence_check(paths[r], paths[c]) && downward_recurrence_check(paths[r], paths[c]),
               paths[r].ud() + "/" + paths[c].ud());
    });
  return t.result("upward and downward recurrences");
}

CheckResult translation_invariance(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k) {
    PathIndex paths(k);
    TriMatrix m = build_m(paths);
    TriMatrix inv = invert_unitriangular(m);
    std::map<std::string, std::pair<Integer, Integer>> seen;
    for (int r = 0; r < paths.size(); ++r)
      for (int c = 0; c < paths.size(); ++c) {
        SkewShape s(paths[r], paths[c]);
        if (!s.valid()) continue;
        auto [it, fresh] = seen.emplace(s.canonical_key(), std::make_pair(m.at(r, c), inv.at(r, c)));
        if (!fresh) t.record(it->second.first == m.at(r, c) && it->second.second == inv.at(r, c), label(s));
      }
  }
  return t.result("M and M^-1 depend only on the translation class");
}

CheckResult component_multiplicativity(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k) {
    PathIndex paths(k);
    TriMatrix inv = invert_unitriangular(build_m(paths));
    for (int r = 0; r < paths.size(); ++r)
      for (int c = 0; c < paths.size(); ++c) {
        SkewShape s(paths[r], paths[c]);
        auto parts = connected_components(s);
        if (parts.size() < 2) continue;
        Integer prod(1);
        for (const SkewShape& p : parts) prod *= inv.at(paths.index_of(p.lower()), paths.index_of(p.upper()));
        t.record(prod == inv.at(r, c), label(s));
      }
  }
  return t.result("M^-1 multiplies over connected components");
}

CheckResult top_tile_peeling(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k)
    for_each_pair(k, [&](const PathIndex& paths, int r, int c) {
      SkewShape s(paths[r], paths[c]);
      if (!s.valid() || s.empty()) return;
      for (const DyckTiling& tiling : enumerate_cover_inclusive(s)) {
        auto idx = find_top_tile(s, tiling);
        bool ok = idx.has_value();
        if (ok) {
          // removing it leaves a skew shape tiled by the rest
          const DyckTile& top = tiling.tiles[*idx];
          std::optional<DyckPath> rest;
          for (const Chord& ch : chords_of(s.upper()))
            if (tile_for_chord(s.upper(), ch) == top) rest = push_down(s.upper(), {ch});
          DyckTiling remaining = tiling;
          remaining.tiles.erase(remaining.tiles.begin() + static_cast<long>(*idx));
          ok = rest && is_dyck_tiling(SkewShape(s.lower(), *rest), remaining);
        }
        t.record(ok, label(s));
      }
    });
  return t.result("every cover-inclusive tiling has a removable top tile");
}

CheckResult cover_criterion(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k)
    for_each_pair(k, [&](const PathIndex& paths, int r, int c) {
      SkewShape s(paths[r], paths[c]);
      for (const DyckTiling& tiling : enumerate_dyck_tilings(s))
        t.record(is_cover_inclusive(tiling) == !has_adjacent_proper_extent_violation(tiling), label(s));
    });
  return t.result("cover-inclusive iff no adjacent proper-extent violation");
}

CheckResult closed_forms(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k)
    for_each_pair(k, [&](const PathIndex& paths, int r, int c) {
      SkewShape s(paths[r], paths[c]);
      if (!s.valid()) return;
      const QPoly f = f_poly(s);
      if (auto v = closed_form_v_lower(s)) t.record(*v == f, "V " + label(s));
      if (auto p = lambda_shape_params(s)) {
        SkewShape canon = materialize_lambda_shape(*p);
        t.record(canon.canonical_key() == s.canonical_key() && closed_form_lambda_shape(*p) == f, "Lambda " + label(s));
      }
      if (r == 0) t.record(closed_form_zigzag_row(s) == f, "zigzag " + label(s));
      if (is_width_one_strip(s)) t.record(closed_form_strip(s) == abs(f.at_minus_one()) && f.at_one() == abs(f.at_minus_one()), "strip " + label(s));
    });
  return t.result("closed forms equal enumeration");
}

CheckResult row_sums(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k)
    for (const DyckPath& h : enumerate_dyck_paths(k)) t.record(rowsum_check(h).holds, h.ud());
  return t.result("row-sum formula");
}

CheckResult column_sums(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k)
    for (const DyckPath& h : enumerate_dyck_paths(k)) t.record(colsum_check(h).holds, h.ud());
  return t.result("column-sum formula");
}

CheckResult q_euler(int n) {
  Tally t;
  auto series = q_euler_series(n);
  for (int k = 0; k <= n; ++k) t.record(series[static_cast<std::size_t>(k)] == q_fact(k), "x^" + std::to_string(k));
  return t.result("q-Euler continued fraction gives n!_q");
}

CheckResult sign_lemma(int n) {
  Tally t;
  for (int k = 1; k <= n; ++k)
    for (const DyckPath& h : enumerate_dyck_paths(k)) {
      NoncrossingPairing p = dyck_to_pairing(h);
      const int sign = pairing_sign(p);
      for (const NodeSet& s : separating_sets(p)) t.record(pairing_sign(p, s) == sign, p.str() + " " + format_set(s));
    }
  return t.result("pairing sign independent of S*");
}

std::vector<WeightedGraph> dimer_test_graphs() {
  std::vector<WeightedGraph> out;
  out.push_back(WeightedGraph::grid(4, 4, {0, 3, 15, 12}));
  out.push_back(WeightedGraph::grid(3, 4, {0, 1, 2, 3, 7, 11}));
  out.push_back(WeightedGraph::grid(2, 4, {0, 1, 2, 3}));
  // weighted hexagon with two joined interior vertices
  std::vector<Edge> hex = {{0, 1, Rational(2)},    {1, 2, Rational(1, 3)}, {2, 3, Rational(3)}, {3, 4, Rational(1)},
                           {4, 5, Rational(5, 2)}, {5, 0, Rational(1)},    {1, 6, Rational(4)}, {3, 6, Rational(2, 3)},
                           {6, 7, Rational(3, 2)}, {4, 7, Rational(1)},    {0, 7, Rational(2)}};
  out.push_back(WeightedGraph(8, hex, {0, 1, 2, 3, 4, 5}));
  out.push_back(WeightedGraph::grid(4, 4, {0, 1, 2, 3, 7, 11, 15, 14}));
  return out;
}

std::vector<WeightedGraph> grove_test_graphs() {
  std::vector<WeightedGraph> out;
  out.push_back(WeightedGraph::grid(3, 3, {0, 2, 8, 6}));
  out.push_back(WeightedGraph::grid(2, 3, {0, 1, 2, 5, 4, 3}));
  out.push_back(WeightedGraph::grid(3, 3, {0, 1, 2, 5, 8, 6}));
  std::vector<Edge> wheel = {{0, 1, Rational(2)},    {1, 2, Rational(1, 3)}, {2, 3, Rational(5)}, {3, 0, Rational(1)},
                             {0, 4, Rational(2)},    {1, 4, Rational(3)},    {2, 4, Rational(7, 2)},
                             {3, 4, Rational(1)},    {4, 5, Rational(2)},    {5, 2, Rational(1)}};
  out.push_back(WeightedGraph(6, wheel, {0, 1, 2, 3}));
  return out;
}

CheckResult double_dimer_oracle() {
  Tally t;
  for (const WeightedGraph& g : dimer_test_graphs()) {
    XMatrix x = oracle::x_matrix(g);
    PairingDistribution got = pairing_distribution(x);
    PairingDistribution want = oracle::double_dimer_distribution(g);
    for (std::size_t k = 0; k < got.probabilities.size(); ++k)
      t.record(got.probabilities[k].second == want.probabilities[k].second, got.probabilities[k].first.str());
    t.record(got.total() == 1, "total");
    const int m = 2 * x.semilength();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> nodes;
      for (int i = 1; i <= m; ++i)
        if (mask & (1u << (i - 1))) nodes.push_back(i);
      for (const PartialPairing& sub : noncrossing_completions(nodes, {})) {
        Rational expect(0);
        for (const auto& [p, v] : want.probabilities)
          if (contains_subpairing(p, sub)) expect += v;
        t.record(local_marginal(x, sub) == expect, format_partial_pairing(sub));
      }
    }
  }
  return t.result("double-dimer formulas match brute force");
}

CheckResult grove_oracle() {
  Tally t;
  for (const WeightedGraph& g : grove_test_graphs()) {
    ResponseMatrix l = response_matrix(g);
    GroveRatios got = grove_ratios(l);
    auto table = oracle::grove_table(g);
    const Rational z0 = table[oracle::singletons(g.node_count())];
    for (const auto& [p, v] : got.ratios) {
      auto it = table.find(oracle::as_partition(p));
      t.record(v == (it == table.end() ? Rational(0) : it->second / z0), p.str());
    }
    for (int k = 1; k < g.node_count(); ++k) {
      GroveRatios rot = grove_ratios(l.rotated(k));
      for (const auto& [p, v] : got.ratios) t.record(rot.at(rotate_pairing(p, k)) == v, "rotation " + std::to_string(k));
    }
  }
  return t.result("grove ratios match brute force");
}

CheckResult evenly_spaced_limit() {
  Tally t;
  float_digits();
  HighFloat v = EvenlySpaced::limit().marginal({{1, 2}, {3, 4}});
  const HighFloat pi = boost::math::constants::pi<HighFloat>();
  HighFloat c = 2 / pi;
  HighFloat expect = pow(c, 4) * 16 / 9 - pow(c, 2) / 9;
  t.record(abs(v - expect) < HighFloat("1e-40"), "closed form");
  t.record(abs(v - HighFloat("0.246979")) < HighFloat("1e-6"), "0.246979");
  return t.result("evenly spaced limit marginal");
}

std::vector<CheckResult> verify_all(int n) {
  require_n_within_cap(n, "verify-all");
  const int mid = std::min(n, 5);
  const int small = std::min(n, 4);
  std::vector<CheckResult> out;
  out.push_back(bijection_round_trips(n));
  out.push_back(compatibility_matches_pushdown(mid));
  out.push_back(confining_set_count(std::min(n, 8)));
  out.push_back(pushdown_reflexive_acyclic(mid));
  out.push_back(lex_is_linear_extension(n));
  out.push_back(inverse_product(std::min(n, 6)));
  out.push_back(tilings_match_inverse(std::min(n, 6)));
  out.push_back(kernels_agree(mid));
  out.push_back(fpoly_two_ways(mid));
  out.push_back(recurrences(mid));
  out.push_back(translation_invariance(mid));
  out.push_back(component_multiplicativity(mid));
  out.push_back(top_tile_peeling(mid));
  out.push_back(cover_criterion(small));
  out.push_back(closed_forms(std::min(n, 6)));
  out.push_back(row_sums(mid));
  out.push_back(column_sums(mid));
  out.push_back(q_euler(std::max(n, 6)));
  out.push_back(sign_lemma(small));
  out.push_back(double_dimer_oracle());
  out.push_back(grove_oracle());
  out.push_back(evenly_spaced_limit());
  return out;
}

}  // namespace dycktile::verify
