#pragma once

// Closed forms for f_{lambda/mu}(q) on special shape families. Each one
// refuses shapes outside its hypothesis.

#include <optional>
#include <string>
#include <vector>

#include "dycktile/qpoly.hpp"
#include "dycktile/skew_shape.hpp"

namespace dycktile {

/// Lower boundary has no peak strictly inside the shape.
bool has_v_lower(const SkewShape& shape);
/// q^{|lambda/mu|}; nullopt unless has_v_lower.
std::optional<QPoly> closed_form_v_lower(const SkewShape& shape);

/// Arm lengths of a connected shape whose lower boundary reads
/// D^a U^b D^c U^d and upper boundary U^{b+d} D^{a+c} across the shape.
struct LambdaParams {
  int a, b, c, d;
  auto operator<=>(const LambdaParams&) const = default;
};
std::optional<LambdaParams> lambda_shape_params(const SkewShape& shape);
/// Smallest Dyck embedding of the shape with these arms.
SkewShape materialize_lambda_shape(const LambdaParams& p);
/// q^{area} binom(min(a,d)+min(b,c), min(a,d)) at q^{-2}.
QPoly closed_form_lambda_shape(const LambdaParams& p);
QPoly closed_form_lambda_shape(int a, int b, int c, int d);

/// Tower heights: one per down step of mu, ceil(h/2) for a step leaving height h.
std::vector<int> zigzag_row_factors(const DyckPath& upper);
/// Lower path must be the zigzag.
QPoly closed_form_zigzag_row(const SkewShape& shape);

/// Every column holds at most one box.
bool is_width_one_strip(const SkewShape& shape);
/// |M^{-1}| of a width-one strip from its nested product/+1 expression.
Integer closed_form_strip(const SkewShape& shape);
/// The same expression as text, e.g. "((1+1)*(1)+1)".
std::string strip_expression(const SkewShape& shape);
/// Width-one strip whose boxes sit at the given heights (consecutive
/// heights differ by 1), embedded in the smallest Dyck pair.
SkewShape strip_from_box_heights(const std::vector<int>& heights);

}  // namespace dycktile
