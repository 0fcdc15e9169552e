#include "dycktile/conjectures.hpp"

#include "dycktile/config.hpp"
#include "dycktile/errors.hpp"
#include "dycktile/matrix_m.hpp"
#include "dycktile/tiling.hpp"

namespace dycktile {

std::vector<int> chord_lengths(const DyckPath& h) {
  std::vector<int> out;
  for (const Chord& c : chords_of(h)) out.push_back(c.length());
  return out;
}

std::vector<int> chord_heights(const DyckPath& h) {
  std::vector<int> out;
  for (const Chord& c : chords_of(h)) out.push_back(c.height + 1);
  return out;
}

SumCheck rowsum_check(const DyckPath& lower) {
  const int n = lower.semilength();
  SumCheck out;
  for (const DyckPath& mu : enumerate_dyck_paths(n)) {
    if (!dominates(lower, mu)) continue;
    SkewShape s(lower, mu);
    out.observed += f_poly(s).substitute_sqrt().shifted_half(s.area());
  }
  QPoly denom(1);
  for (int len : chord_lengths(lower)) denom *= q_int(len);
  out.predicted = q_fact(n).divide_exact(denom);
  out.holds = out.predicted && *out.predicted == out.observed;
  return out;
}

SumCheck colsum_check(const DyckPath& upper) {
  const int n = upper.semilength();
  SumCheck out;
  for (const DyckPath& lambda : enumerate_dyck_paths(n))
    if (dominates(lambda, upper)) out.observed += f_poly(SkewShape(lambda, upper));
  QPoly prod(1);
  for (int h : chord_heights(upper)) prod *= q_int(h);
  out.predicted = prod;
  out.holds = prod == out.observed;
  return out;
}

std::pair<Integer, Integer> rowsum_scalar(const DyckPath& lower) {
  Integer total(0);
  for (const auto& [mu, v] : minv_row(lower)) total += abs(v);
  Integer expect(1);
  for (int k = 2; k <= lower.semilength(); ++k) expect *= k;
  for (int len : chord_lengths(lower)) expect /= len;
  return {total, expect};
}

std::pair<Integer, Integer> colsum_scalar(const DyckPath& upper) {
  Integer total(0);
  for (const auto& [lambda, v] : minv_column(upper)) total += abs(v);
  Integer expect(1);
  for (int h : chord_heights(upper)) expect *= h;
  return {total, expect};
}

namespace {

using Series = std::vector<QPoly>;  // coefficient of x^k at index k

Series mul(const Series& a, const Series& b, int order) {
  Series out(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j)
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  return out;
}

// 1 / (1 - g) for g with zero constant term.
Series inverse_one_minus(const Series& g, int order) {
  Series out(static_cast<std::size_t>(order + 1));
  out[0] = QPoly(1);
  for (int k = 1; k <= order; ++k) {
    QPoly acc;
    for (int j = 1; j <= k; ++j) acc += g[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

}  // namespace

std::vector<QPoly> q_euler_series(int order) {
  if (order < 0) throw ValidationError("order must be nonnegative");
  if (order > caps().max_euler_order) throw CapExceeded("q-Euler order exceeds cap");
  Series tail(static_cast<std::size_t>(order + 1));
  tail[0] = QPoly(1);
  for (int k = order; k >= 1; --k) {
    Series g(static_cast<std::size_t>(order + 1));
    Series ax(static_cast<std::size_t>(order + 1));
    if (order >= 1) ax[1] = QPoly::q(k / 2) * q_int((k + 1) / 2);
    g = mul(ax, tail, order);
    tail = inverse_one_minus(g, order);
  }
  return tail;
}

}  // namespace dycktile
