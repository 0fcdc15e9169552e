#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "dycktile/catalan.hpp"

namespace dycktile {

/// Unit box of a skew shape. The box centred at (x, y) spans columns
/// x-1..x+1 of the path picture; x + y is always odd.
struct Cell {
  int x;
  int y;
  auto operator<=>(const Cell&) const = default;
};

/// The region between a lower path (lambda, the row/pairing side) and an
/// upper path (mu, the column/confining side).
class SkewShape {
 public:
  SkewShape(DyckPath lower, DyckPath upper);

  const DyckPath& lower() const { return lower_; }
  const DyckPath& upper() const { return upper_; }
  int semilength() const { return lower_.semilength(); }

  /// Upper weakly above lower everywhere.
  bool valid() const { return valid_; }
  bool empty() const { return valid_ && area_ == 0; }
  int area() const { return area_; }
  /// Sorted by (x, y). Empty for invalid shapes.
  std::vector<Cell> cells() const;

  /// Translation-class key: cells shifted so that min x == 0 and min y == 0.
  std::string canonical_key() const;
  /// Offset (dx, dy) such that canonical cell + offset == actual cell.
  std::pair<int, int> canonical_offset() const;

  /// "LOWER/UPPER" in UD alphabet.
  std::string str() const { return lower_.ud() + "/" + upper_.ud(); }
  static SkewShape parse(std::string_view text);

 private:
  DyckPath lower_;
  DyckPath upper_;
  bool valid_;
  int area_;
};

/// Upper path with the given chords pushed down (their parentheses
/// reversed); nullopt when the result dips below height 0.
std::optional<DyckPath> push_down(const DyckPath& upper, const std::vector<Chord>& chords);

/// Edge-connected components, each as a skew shape over the same n: the
/// component keeps lambda on its own column interval and mu elsewhere.
std::vector<SkewShape> connected_components(const SkewShape& shape);

/// Concurrent memo table keyed by canonical shape key. Inserts are
/// idempotent: the first stored value wins.
template <typename V>
class ShapeCache {
 public:
  std::optional<V> find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  V insert(const std::string& key, V value) {
    std::unique_lock lock(mutex_);
    auto [it, fresh] = map_.emplace(key, std::move(value));
    return it->second;
  }
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, V> map_;
};

}  // namespace dycktile
