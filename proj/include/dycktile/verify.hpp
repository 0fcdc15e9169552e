#pragma once

// Cross-check suite behind `verify-all`. Each check is exhaustive up to its
// size bound and reports counts.

#include <string>
#include <vector>

#include "dycktile/graph.hpp"

namespace dycktile::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

CheckResult bijection_round_trips(int n);
CheckResult compatibility_matches_pushdown(int n);
CheckResult confining_set_count(int n);
CheckResult pushdown_reflexive_acyclic(int n);
CheckResult lex_is_linear_extension(int n);
CheckResult inverse_product(int n);
CheckResult tilings_match_inverse(int n);
CheckResult kernels_agree(int n);
CheckResult fpoly_two_ways(int n);
CheckResult recurrences(int n);
CheckResult translation_invariance(int n);
CheckResult component_multiplicativity(int n);
CheckResult top_tile_peeling(int n);
CheckResult cover_criterion(int n);
CheckResult closed_forms(int n);
CheckResult row_sums(int n);
CheckResult column_sums(int n);
CheckResult q_euler(int n);
CheckResult sign_lemma(int n);
CheckResult double_dimer_oracle();
CheckResult grove_oracle();
CheckResult evenly_spaced_limit();

/// Test networks shared by the oracle checks.
std::vector<WeightedGraph> dimer_test_graphs();
std::vector<WeightedGraph> grove_test_graphs();

/// Every check above at size n (heavier ones capped lower).
std::vector<CheckResult> verify_all(int n);

}  // namespace dycktile::verify
