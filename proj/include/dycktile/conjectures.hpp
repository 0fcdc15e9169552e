#pragma once

// Row-sum and column-sum harnesses for M^{-1} and the q-Euler continued
// fraction. Nothing else depends on these holding.

#include <optional>
#include <vector>

#include "dycktile/qpoly.hpp"
#include "dycktile/skew_shape.hpp"

namespace dycktile {

struct SumCheck {
  QPoly observed;
  std::optional<QPoly> predicted;  // empty when the predicted quotient is not a polynomial
  bool holds = false;
};

/// Sum over mu above lambda of q^{|lambda/mu|/2} f(q^{1/2}) against
/// n!_q / prod over chords of lambda of |c|_q.
SumCheck rowsum_check(const DyckPath& lower);
/// Sum over lambda below mu of f(q) against prod over chords of mu of (level+1)_q.
SumCheck colsum_check(const DyckPath& upper);

/// Sum of |M^{-1}_{lambda/mu}| over mu and n!/prod |c|; no polynomials.
std::pair<Integer, Integer> rowsum_scalar(const DyckPath& lower);
/// Sum of |M^{-1}_{lambda/mu}| over lambda and prod (level+1).
std::pair<Integer, Integer> colsum_scalar(const DyckPath& upper);

/// Lengths of chords (1 for a matched adjacent pair).
std::vector<int> chord_lengths(const DyckPath& h);
/// Level + 1 of each chord.
std::vector<int> chord_heights(const DyckPath& h);

/// Coefficients of x^0..x^order of the continued fraction
/// 1/(1 - a_1 x/(1 - a_2 x/(...))) with a_k = q^{floor(k/2)} ceil(k/2)_q.
std::vector<QPoly> q_euler_series(int order);

}  // namespace dycktile
