#pragma once

// Dyck tiles, Dyck tilings of skew shapes, the cover-inclusive predicate,
// and the tiling polynomial f_{lambda/mu}(q) computed two independent ways.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "dycktile/qpoly.hpp"
#include "dycktile/skew_shape.hpp"

namespace dycktile {

/// Ribbon tile whose start and end boxes are at the same height with no box
/// below them. Anchored at its leftmost box.
struct DyckTile {
  int column;           // x of the leftmost box
  int row;              // y of the leftmost box
  std::string profile;  // U/D steps between consecutive boxes; empty for a unit tile

  int size() const { return static_cast<int>(profile.size()) + 1; }
  int left() const { return column; }
  int right() const { return column + static_cast<int>(profile.size()); }
  std::vector<Cell> cells() const;
  /// Profile is a Dyck word.
  bool well_formed() const;

  auto operator<=>(const DyckTile&) const = default;
};

/// Tiles sorted by (column, row, profile).
struct DyckTiling {
  std::vector<DyckTile> tiles;
  auto operator<=>(const DyckTiling&) const = default;
};

/// Tiles are Dyck tiles, disjoint, and cover exactly the cells of the shape.
bool is_dyck_tiling(const SkewShape& shape, const DyckTiling& tiling);

/// Whenever one tile has a box straight above a box of another, its column
/// extent lies inside the other's.
bool is_cover_inclusive(const DyckTiling& tiling);

/// A lower tile T1 and upper tile T2 with no boxes between them (every shared
/// column has T2's box directly on T1's) and extent(T1) a proper subset of
/// extent(T2).
bool has_adjacent_proper_extent_violation(const DyckTiling& tiling);

/// The tile laid along the upper boundary when chord c of mu is pushed down.
DyckTile tile_for_chord(const DyckPath& upper, const Chord& c);

/// Index of a tile lying along the upper boundary whose removal leaves a skew
/// shape (i.e. a pushed chord of mu), if any.
std::optional<std::size_t> find_top_tile(const SkewShape& shape, const DyckTiling& tiling);

/// All Dyck tilings (cover-inclusive or not), sorted. Empty shape gives one
/// empty tiling; invalid shape gives none.
std::vector<DyckTiling> enumerate_dyck_tilings(const SkewShape& shape);
/// All cover-inclusive Dyck tilings, sorted.
std::vector<DyckTiling> enumerate_cover_inclusive(const SkewShape& shape);
/// Count only (same enumeration, shared cache).
std::size_t count_cover_inclusive(const SkewShape& shape);

/// Sum over cover-inclusive tilings of q^{#tiles}.
QPoly f_poly(const SkewShape& shape);
/// Same polynomial from the signed recurrence over nonempty sets of tiles
/// along the upper edge.
QPoly f_poly_recursive(const SkewShape& shape);

void clear_tiling_caches();

/// One text row per lattice height, top row first; tiles lettered in order.
std::vector<std::string> render_ascii(const SkewShape& shape, const DyckTiling& tiling);

}  // namespace dycktile
