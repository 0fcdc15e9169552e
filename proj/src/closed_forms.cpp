#include "dycktile/closed_forms.hpp"

#include <algorithm>
#include <map>

#include "dycktile/errors.hpp"

namespace dycktile {

bool has_v_lower(const SkewShape& shape) {
  if (!shape.valid()) return false;
  const DyckPath& lo = shape.lower();
  const DyckPath& hi = shape.upper();
  for (int x = 1; x < lo.length(); ++x) {
    if (hi.height(x) == lo.height(x)) continue;
    if (lo.height(x - 1) < lo.height(x) && lo.height(x + 1) < lo.height(x)) return false;
  }
  return true;
}

std::optional<QPoly> closed_form_v_lower(const SkewShape& shape) {
  if (!has_v_lower(shape)) return std::nullopt;
  return QPoly::q(shape.area());
}

namespace {

// Run-length encoding of steps[lo, hi) as (letter, count).
std::vector<std::pair<char, int>> runs(const std::string& ud, int lo, int hi) {
  std::vector<std::pair<char, int>> out;
  for (int i = lo; i < hi; ++i) {
    char ch = ud[static_cast<std::size_t>(i)];
    if (!out.empty() && out.back().first == ch)
      ++out.back().second;
    else
      out.emplace_back(ch, 1);
  }
  return out;
}

}  // namespace

std::optional<LambdaParams> lambda_shape_params(const SkewShape& shape) {
  if (!shape.valid() || shape.empty()) return std::nullopt;
  const DyckPath& lo = shape.lower();
  const DyckPath& hi = shape.upper();
  int first = -1, last = -1;
  for (int x = 0; x <= lo.length(); ++x)
    if (hi.height(x) > lo.height(x)) {
      if (first < 0) first = x;
      else if (last != x - 1) return std::nullopt;  // two components
      last = x;
    }
  // steps first..last+1 (1-based) span the shape; 0-based [first-1, last+1)
  auto lr = runs(lo.ud(), first - 1, last + 1);
  auto ur = runs(hi.ud(), first - 1, last + 1);
  if (ur.size() != 2 || ur[0].first != 'U') return std::nullopt;
  LambdaParams p{};
  if (lr.size() == 2 && lr[0].first == 'D') {
    p = {lr[0].second, 0, 0, lr[1].second};
  } else if (lr.size() == 4 && lr[0].first == 'D') {
    p = {lr[0].second, lr[1].second, lr[2].second, lr[3].second};
  } else {
    return std::nullopt;
  }
  if (ur[0].second != p.b + p.d || ur[1].second != p.a + p.c) return std::nullopt;
  return p;
}

SkewShape materialize_lambda_shape(const LambdaParams& p) {
  if (p.a < 1 || p.d < 1 || p.b < 0 || p.c < 0 || ((p.b == 0) != (p.c == 0)))
    throw ValidationError("arm lengths do not describe a Lambda shape");
  const int h0 = std::max(p.a, p.a - p.b + p.c);
  const int h1 = h0 - p.a + p.b - p.c + p.d;
  auto rep = [](char ch, int k) { return std::string(static_cast<std::size_t>(k), ch); };
  std::string lower = rep('U', h0) + rep('D', p.a) + rep('U', p.b) + rep('D', p.c) + rep('U', p.d) + rep('D', h1);
  std::string upper = rep('U', h0 + p.b + p.d) + rep('D', p.a + p.c + h1);
  return SkewShape(DyckPath::parse(lower), DyckPath::parse(upper));
}

QPoly closed_form_lambda_shape(const LambdaParams& p) {
  SkewShape s = materialize_lambda_shape(p);
  const int k = std::min(p.a, p.d);
  return QPoly::q(s.area()) * q_binom(k + std::min(p.b, p.c), k).substitute_inverse_square();
}

QPoly closed_form_lambda_shape(int a, int b, int c, int d) { return closed_form_lambda_shape(LambdaParams{a, b, c, d}); }

std::vector<int> zigzag_row_factors(const DyckPath& upper) {
  std::vector<int> out;
  for (int i = 1; i <= upper.length(); ++i)
    if (!upper.up(i)) out.push_back((upper.height(i - 1) + 1) / 2);
  return out;
}

QPoly closed_form_zigzag_row(const SkewShape& shape) {
  const int n = shape.semilength();
  if (!(shape.lower() == DyckPath::zigzag(n))) throw ValidationError("lower path is not the zigzag");
  QPoly out = QPoly::q(shape.area());
  for (int h : zigzag_row_factors(shape.upper())) out *= q_int(h).substitute_inverse_square();
  return out;
}

bool is_width_one_strip(const SkewShape& shape) {
  if (!shape.valid()) return false;
  for (int x = 0; x <= shape.lower().length(); ++x)
    if (shape.upper().height(x) - shape.lower().height(x) > 2) return false;
  return true;
}

namespace {

// Box heights of each maximal run of occupied columns.
std::vector<std::vector<int>> strip_runs(const SkewShape& shape) {
  if (!is_width_one_strip(shape)) throw ValidationError("shape is not a width-one strip");
  std::vector<std::vector<int>> out;
  bool open = false;
  for (int x = 0; x <= shape.lower().length(); ++x) {
    if (shape.upper().height(x) > shape.lower().height(x)) {
      if (!open) out.emplace_back();
      out.back().push_back(shape.lower().height(x) + 1);
      open = true;
    } else {
      open = false;
    }
  }
  return out;
}

// A single run: global minima split it; each gap contributes (T+1).
struct StripValue {
  Integer value;
  std::string text;
};

StripValue eval_run(const std::vector<int>& h, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return {Integer(1), "1"};
  const int m = *std::min_element(h.begin() + static_cast<long>(lo), h.begin() + static_cast<long>(hi));
  std::vector<std::size_t> mins;
  for (std::size_t k = lo; k < hi; ++k)
    if (h[k] == m) mins.push_back(k);
  std::vector<std::string> factors;
  Integer value(1);
  auto side = [&](std::size_t a, std::size_t b) {
    if (a >= b) return;
    StripValue v = eval_run(h, a, b);
    value *= v.value;
    factors.push_back(v.text);
  };
  side(lo, mins.front());
  for (std::size_t g = 0; g + 1 < mins.size(); ++g) {
    const std::size_t a = mins[g] + 1, b = mins[g + 1];
    if (a >= b) {
      value *= 2;
      factors.push_back("(1+1)");
      continue;
    }
    StripValue v = eval_run(h, a, b);
    value *= v.value + 1;
    factors.push_back("(" + v.text + "+1)");
  }
  side(mins.back() + 1, hi);
  if (factors.empty()) return {value, "1"};
  std::string text;
  for (std::size_t k = 0; k < factors.size(); ++k) text += (k ? "*" : "") + factors[k];
  return {value, factors.size() == 1 ? factors[0] : text};
}

}  // namespace

Integer closed_form_strip(const SkewShape& shape) {
  Integer out(1);
  for (const auto& run : strip_runs(shape)) out *= eval_run(run, 0, run.size()).value;
  return out;
}

std::string strip_expression(const SkewShape& shape) {
  std::string out;
  for (const auto& run : strip_runs(shape)) {
    if (!out.empty()) out += "*";
    out += eval_run(run, 0, run.size()).text;
  }
  return out.empty() ? "1" : out;
}

SkewShape strip_from_box_heights(const std::vector<int>& heights) {
  if (heights.empty()) throw ValidationError("strip needs at least one box");
  for (std::size_t k = 1; k < heights.size(); ++k)
    if (std::abs(heights[k] - heights[k - 1]) != 1) throw ValidationError("consecutive box heights must differ by 1");
  const int lowest = *std::min_element(heights.begin(), heights.end());
  const int t = heights.front() - lowest + 1;
  std::vector<int> lo, hi;
  for (int i = 0; i <= t; ++i) {
    lo.push_back(i);
    hi.push_back(i);
  }
  for (int c : heights) {
    const int y = c - heights.front() + t;
    lo.push_back(y - 1);
    hi.push_back(y + 1);
  }
  const int tail = heights.back() - heights.front() + t;
  for (int i = tail; i >= 0; --i) {
    lo.push_back(i);
    hi.push_back(i);
  }
  return SkewShape(DyckPath::from_heights(lo), DyckPath::from_heights(hi));
}

}  // namespace dycktile
