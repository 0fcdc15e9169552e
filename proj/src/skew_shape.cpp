#include "dycktile/skew_shape.hpp"

#include <algorithm>
#include <climits>

#include "dycktile/errors.hpp"

namespace dycktile {

SkewShape::SkewShape(DyckPath lower, DyckPath upper)
    : lower_(std::move(lower)), upper_(std::move(upper)), valid_(false), area_(0) {
  if (lower_.length() != upper_.length()) throw ValidationError("skew shape paths differ in length");
  valid_ = dominates(lower_, upper_);
  if (valid_)
    for (int x = 0; x <= lower_.length(); ++x) area_ += (upper_.height(x) - lower_.height(x)) / 2;
}

SkewShape SkewShape::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw ValidationError("shape must be written LOWER/UPPER");
  return SkewShape(DyckPath::parse(text.substr(0, slash)), DyckPath::parse(text.substr(slash + 1)));
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  if (!valid_) return out;
  out.reserve(static_cast<std::size_t>(area_));
  for (int x = 1; x < lower_.length(); ++x)
    for (int y = lower_.height(x) + 1; y < upper_.height(x); y += 2) out.push_back({x, y});
  return out;
}

std::pair<int, int> SkewShape::canonical_offset() const {
  int min_x = INT_MAX, min_y = INT_MAX;
  for (const Cell& c : cells()) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  if (min_x == INT_MAX) return {0, 0};
  return {min_x, min_y};
}

std::string SkewShape::canonical_key() const {
  if (!valid_) return "!";
  auto [dx, dy] = canonical_offset();
  std::string key;
  for (const Cell& c : cells()) {
    key.push_back(static_cast<char>(c.x - dx + 1));
    key.push_back(static_cast<char>(c.y - dy + 1));
  }
  return key;
}

std::optional<DyckPath> push_down(const DyckPath& upper, const std::vector<Chord>& chords) {
  std::string ud = upper.ud();
  for (const Chord& c : chords)
    std::swap(ud[static_cast<std::size_t>(c.up - 1)], ud[static_cast<std::size_t>(c.down - 1)]);
  int h = 0;
  for (char c : ud)
    if ((h += c == 'U' ? 1 : -1) < 0) return std::nullopt;
  return DyckPath::parse(ud);
}

std::vector<SkewShape> connected_components(const SkewShape& shape) {
  std::vector<SkewShape> out;
  if (!shape.valid()) return out;
  const DyckPath& lo = shape.lower();
  const DyckPath& hi = shape.upper();
  const int len = lo.length();
  int x = 0;
  while (x < len) {
    if (hi.height(x + 1) == lo.height(x + 1)) {
      ++x;
      continue;
    }
    int start = x;
    int end = x + 1;
    while (hi.height(end) != lo.height(end)) ++end;
    std::vector<int> h(hi.heights());
    for (int k = start; k <= end; ++k) h[static_cast<std::size_t>(k)] = lo.height(k);
    out.emplace_back(DyckPath::from_heights(h), hi);
    x = end;
  }
  return out;
}

}  // namespace dycktile
