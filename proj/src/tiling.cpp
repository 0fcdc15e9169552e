#include "dycktile/tiling.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dycktile/errors.hpp"

namespace dycktile {

std::vector<Cell> DyckTile::cells() const {
  std::vector<Cell> out;
  out.reserve(profile.size() + 1);
  int y = row;
  out.push_back({column, y});
  for (std::size_t k = 0; k < profile.size(); ++k) {
    y += profile[k] == 'U' ? 1 : -1;
    out.push_back({column + static_cast<int>(k) + 1, y});
  }
  return out;
}

bool DyckTile::well_formed() const {
  int h = 0;
  for (char c : profile) {
    h += c == 'U' ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

bool is_dyck_tiling(const SkewShape& shape, const DyckTiling& tiling) {
  if (!shape.valid()) return false;
  std::vector<Cell> covered;
  for (const DyckTile& t : tiling.tiles) {
    if (!t.well_formed()) return false;
    for (const Cell& c : t.cells()) covered.push_back(c);
  }
  std::sort(covered.begin(), covered.end());
  return covered == shape.cells();
}

namespace {

int row_at(const DyckTile& t, int x) {
  int y = t.row;
  for (int k = 0; k < x - t.column; ++k) y += t.profile[static_cast<std::size_t>(k)] == 'U' ? 1 : -1;
  return y;
}

bool extent_within(const DyckTile& inner, const DyckTile& outer) {
  return outer.left() <= inner.left() && inner.right() <= outer.right();
}

bool pair_cover_inclusive(const DyckTile& a, const DyckTile& b) {
  const int lo = std::max(a.left(), b.left());
  const int hi = std::min(a.right(), b.right());
  for (int x = lo; x <= hi; ++x) {
    int ya = row_at(a, x), yb = row_at(b, x);
    if (ya > yb && !extent_within(a, b)) return false;
    if (yb > ya && !extent_within(b, a)) return false;
  }
  return true;
}

}  // namespace

bool is_cover_inclusive(const DyckTiling& tiling) {
  const auto& ts = tiling.tiles;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (!pair_cover_inclusive(ts[i], ts[j])) return false;
  return true;
}

bool has_adjacent_proper_extent_violation(const DyckTiling& tiling) {
  const auto& ts = tiling.tiles;
  for (const DyckTile& lower : ts)
    for (const DyckTile& upper : ts) {
      if (&lower == &upper) continue;
      const int lo = std::max(lower.left(), upper.left());
      const int hi = std::min(lower.right(), upper.right());
      if (lo > hi) continue;
      bool adjacent = true;
      bool above = false;
      for (int x = lo; x <= hi; ++x) {
        int gap = row_at(upper, x) - row_at(lower, x);
        if (gap > 0) above = true;
        if (gap != 2) adjacent = false;
      }
      bool proper = extent_within(lower, upper) && (lower.left() != upper.left() || lower.right() != upper.right());
      if (above && adjacent && proper) return true;
    }
  return false;
}

DyckTile tile_for_chord(const DyckPath& upper, const Chord& c) {
  return DyckTile{c.up, upper.height(c.up) - 1,
                  upper.ud().substr(static_cast<std::size_t>(c.up), static_cast<std::size_t>(c.down - 1 - c.up))};
}

std::optional<std::size_t> find_top_tile(const SkewShape& shape, const DyckTiling& tiling) {
  for (const Chord& c : chords_of(shape.upper())) {
    DyckTile t = tile_for_chord(shape.upper(), c);
    for (std::size_t k = 0; k < tiling.tiles.size(); ++k)
      if (tiling.tiles[k] == t) return k;
  }
  return std::nullopt;
}

namespace {

using TilingList = std::vector<DyckTiling>;

ShapeCache<TilingList>& tiling_cache(bool cover_inclusive) {
  static ShapeCache<TilingList> all;
  static ShapeCache<TilingList> ci;
  return cover_inclusive ? ci : all;
}

ShapeCache<QPoly>& frec_cache() {
  static ShapeCache<QPoly> cache;
  return cache;
}

DyckTiling translate(const DyckTiling& t, int dx, int dy) {
  DyckTiling out = t;
  for (DyckTile& tile : out.tiles) {
    tile.column += dx;
    tile.row += dy;
  }
  return out;
}

// Tilings in canonical coordinates (shape shifted by -canonical_offset).
TilingList enumerate_canonical(const SkewShape& shape, bool cover_inclusive) {
  if (!shape.valid()) return {};
  if (shape.empty()) return {DyckTiling{}};
  const std::string key = shape.canonical_key();
  if (auto hit = tiling_cache(cover_inclusive).find(key)) return *hit;

  auto [ox, oy] = shape.canonical_offset();
  std::set<DyckTiling> found;
  for (const Chord& c : chords_of(shape.upper())) {
    auto pushed = push_down(shape.upper(), {c});
    if (!pushed || !dominates(shape.lower(), *pushed)) continue;
    SkewShape rest(shape.lower(), *pushed);
    DyckTile top = tile_for_chord(shape.upper(), c);
    auto [rx, ry] = rest.canonical_offset();
    for (const DyckTiling& sub_canon : enumerate_canonical(rest, cover_inclusive)) {
      DyckTiling sub = translate(sub_canon, rx, ry);
      if (cover_inclusive &&
          !std::all_of(sub.tiles.begin(), sub.tiles.end(),
                       [&](const DyckTile& t) { return pair_cover_inclusive(top, t); }))
        continue;
      sub.tiles.push_back(top);
      std::sort(sub.tiles.begin(), sub.tiles.end());
      found.insert(translate(sub, -ox, -oy));
    }
  }
  return tiling_cache(cover_inclusive).insert(key, TilingList(found.begin(), found.end()));
}

TilingList enumerate(const SkewShape& shape, bool cover_inclusive) {
  TilingList canon = enumerate_canonical(shape, cover_inclusive);
  if (!shape.valid() || shape.empty()) return canon;
  auto [ox, oy] = shape.canonical_offset();
  for (DyckTiling& t : canon) t = translate(t, ox, oy);
  return canon;
}

}  // namespace

std::vector<DyckTiling> enumerate_dyck_tilings(const SkewShape& shape) { return enumerate(shape, false); }

std::vector<DyckTiling> enumerate_cover_inclusive(const SkewShape& shape) { return enumerate(shape, true); }

std::size_t count_cover_inclusive(const SkewShape& shape) { return enumerate_canonical(shape, true).size(); }

QPoly f_poly(const SkewShape& shape) {
  QPoly out;
  for (const DyckTiling& t : enumerate_canonical(shape, true)) out += QPoly::q(static_cast<int>(t.tiles.size()));
  return out;
}

QPoly f_poly_recursive(const SkewShape& shape) {
  if (!shape.valid()) return QPoly();
  if (shape.empty()) return QPoly(1);
  const std::string key = shape.canonical_key();
  if (auto hit = frec_cache().find(key)) return *hit;

  const std::vector<Chord> chords = chords_of(shape.upper());
  QPoly total;
  for (unsigned mask = 1; mask < (1u << chords.size()); ++mask) {
    std::vector<Chord> chosen;
    for (std::size_t k = 0; k < chords.size(); ++k)
      if (mask & (1u << k)) chosen.push_back(chords[k]);
    auto pushed = push_down(shape.upper(), chosen);
    if (!pushed || !dominates(shape.lower(), *pushed)) continue;
    const int s = static_cast<int>(chosen.size());
    QPoly term = QPoly::q(s) * f_poly_recursive(SkewShape(shape.lower(), *pushed));
    if (s % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return frec_cache().insert(key, total);
}

void clear_tiling_caches() {
  tiling_cache(true).clear();
  tiling_cache(false).clear();
  frec_cache().clear();
}

std::vector<std::string> render_ascii(const SkewShape& shape, const DyckTiling& tiling) {
  static const std::string letters = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
  const int width = shape.lower().length() + 1;
  int top = 0;
  for (int x = 0; x < width; ++x) top = std::max(top, shape.upper().height(x));
  std::vector<std::string> rows(static_cast<std::size_t>(top + 1), std::string(static_cast<std::size_t>(width), ' '));
  auto put = [&](int x, int y, char ch) { rows[static_cast<std::size_t>(top - y)][static_cast<std::size_t>(x)] = ch; };
  for (int x = 0; x < width; ++x) {
    put(x, shape.upper().height(x), '*');
    put(x, shape.lower().height(x), shape.lower().height(x) == shape.upper().height(x) ? '*' : '-');
  }
  for (std::size_t k = 0; k < tiling.tiles.size(); ++k) {
    char ch = k < letters.size() ? letters[k] : '#';
    for (const Cell& c : tiling.tiles[k].cells()) put(c.x, c.y, ch);
  }
  return rows;
}

}  // namespace dycktile
