#include "dycktile/matrix_m.hpp"

#include <algorithm>
#include <cstdint>

#include "dycktile/config.hpp"
#include "dycktile/errors.hpp"

namespace dycktile {

TriMatrix::TriMatrix(int n, int order)
    : n_(n), order_(order), data_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {}

TriMatrix TriMatrix::identity(int n, int order) {
  TriMatrix m(n, order);
  for (int i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

bool TriMatrix::is_unit_upper_triangular() const {
  for (int r = 0; r < order_; ++r) {
    if (at(r, r) != 1) return false;
    for (int c = 0; c < r; ++c)
      if (at(r, c) != 0) return false;
  }
  return true;
}

TriMatrix operator*(const TriMatrix& a, const TriMatrix& b) {
  if (a.order_ != b.order_) throw ValidationError("matrix order mismatch");
  TriMatrix out(a.n_, a.order_);
  for (int r = 0; r < a.order_; ++r)
    for (int k = 0; k < a.order_; ++k) {
      if (a.at(r, k) == 0) continue;
      for (int c = 0; c < a.order_; ++c)
        if (b.at(k, c) != 0) out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return out;
}

TriMatrix build_m(const PathIndex& paths) {
  TriMatrix m(paths.semilength(), paths.size());
  for (int r = 0; r < paths.size(); ++r)
    for (int c = r; c < paths.size(); ++c)
      if (pushdown_related(paths[r], paths[c])) m.at(r, c) = 1;
  return m;
}

TriMatrix build_m(int n) { return build_m(PathIndex(n)); }

TriMatrix invert_unitriangular(const TriMatrix& m) {
  if (!m.is_unit_upper_triangular()) throw ValidationError("matrix is not unit upper triangular");
  const int size = m.order();
  TriMatrix inv(m.semilength(), size);
  for (int c = 0; c < size; ++c) {
    inv.at(c, c) = 1;
    for (int r = c - 1; r >= 0; --r) {
      Integer acc = 0;
      for (int k = r + 1; k <= c; ++k)
        if (m.at(r, k) != 0) acc += m.at(r, k) * inv.at(k, c);
      inv.at(r, c) = -acc;
    }
  }
  return inv;
}

namespace {

ShapeCache<Integer>& minv_cache() {
  static ShapeCache<Integer> cache;
  return cache;
}

std::vector<Chord> subset(const std::vector<Chord>& chords, unsigned mask) {
  std::vector<Chord> out;
  for (std::size_t k = 0; k < chords.size(); ++k)
    if (mask & (1u << k)) out.push_back(chords[k]);
  return out;
}

}  // namespace

Integer minv_of_skew(const SkewShape& shape) {
  if (!shape.valid()) return 0;
  if (shape.empty()) return 1;
  const std::string key = shape.canonical_key();
  if (auto hit = minv_cache().find(key)) return *hit;

  const std::vector<Chord> chords = chords_of(shape.upper());
  Integer total = 0;
  for (unsigned mask = 1; mask < (1u << chords.size()); ++mask) {
    auto pushed = push_down(shape.upper(), subset(chords, mask));
    if (!pushed || !dominates(shape.lower(), *pushed)) continue;  // M^{-1} = 0 there
    total -= minv_of_skew(SkewShape(shape.lower(), *pushed));
  }
  return minv_cache().insert(key, total);
}

void clear_minv_cache() { minv_cache().clear(); }
std::size_t minv_cache_size() { return minv_cache().size(); }

int m_of_skew(const SkewShape& shape) {
  return shape.valid() && pushdown_related(shape.lower(), shape.upper()) ? 1 : 0;
}

bool upward_recurrence_check(const DyckPath& lower, const DyckPath& upper) {
  Integer sum = 0;
  for (const DyckPath& rho : enumerate_dyck_paths(lower.semilength()))
    if (pushdown_related(lower, rho)) sum += minv_of_skew(SkewShape(rho, upper));
  return sum == (lower == upper ? 1 : 0);
}

bool downward_recurrence_check(const DyckPath& lower, const DyckPath& upper) {
  const std::vector<Chord> chords = chords_of(upper);
  Integer sum = 0;
  for (unsigned mask = 0; mask < (1u << chords.size()); ++mask) {
    auto rho = push_down(upper, subset(chords, mask));
    if (rho) sum += minv_of_skew(SkewShape(lower, *rho));
  }
  return sum == (lower == upper ? 1 : 0);
}

}  // namespace dycktile

namespace dycktile {

namespace {

// Paths as bit keys, step 1 in the top bit, so key order is table order.
using Key = std::uint32_t;

Key key_of(const DyckPath& h) {
  Key k = 0;
  for (int i = 1; i <= h.length(); ++i) k = (k << 1) | (h.up(i) ? 1u : 0u);
  return k;
}

DyckPath path_of(Key k, int n) {
  std::string ud;
  for (int i = 2 * n - 1; i >= 0; --i) ud += (k >> i) & 1u ? 'U' : 'D';
  return DyckPath::parse(ud);
}

struct ChordTree {
  std::vector<Key> flip;            // both step bits of the chord
  std::vector<int> budget;          // floor((height + 1) / 2)
  std::vector<std::vector<int>> kids;
  std::vector<int> roots;
};

ChordTree chord_tree(Key k, int n) {
  ChordTree t;
  std::vector<int> open;
  std::vector<int> parent_of_open;
  int h = 0;
  for (int i = 1; i <= 2 * n; ++i) {
    const Key bit = Key(1) << (2 * n - i);
    if (k & bit) {
      const int id = static_cast<int>(t.flip.size());
      t.flip.push_back(bit);
      t.budget.push_back((h + 1) / 2);
      t.kids.emplace_back();
      if (open.empty())
        t.roots.push_back(id);
      else
        t.kids[static_cast<std::size_t>(open.back())].push_back(id);
      open.push_back(id);
      ++h;
    } else {
      t.flip[static_cast<std::size_t>(open.back())] |= bit;
      open.pop_back();
      --h;
    }
  }
  return t;
}

// Every path reachable by pushing down a set of chords, the empty set included.
template <typename F>
void for_each_pushdown(Key k, int n, F&& visit) {
  const ChordTree t = chord_tree(k, n);
  // frontier: chords whose choice is still open, with pushed-ancestor counts
  std::vector<std::pair<int, int>> frontier;
  for (int r : t.roots) frontier.emplace_back(r, 0);
  auto rec = [&](auto&& self, std::size_t pos, Key cur) -> void {
    if (pos == frontier.size()) {
      visit(cur);
      return;
    }
    const auto [c, above] = frontier[pos];
    const auto& kids = t.kids[static_cast<std::size_t>(c)];
    const std::size_t mark = frontier.size();
    for (int pushed = 0; pushed <= 1; ++pushed) {
      if (pushed && above + 1 > t.budget[static_cast<std::size_t>(c)]) break;
      for (int kid : kids) frontier.emplace_back(kid, above + pushed);
      self(self, pos + 1, pushed ? cur ^ t.flip[static_cast<std::size_t>(c)] : cur);
      frontier.resize(mark);
    }
  };
  rec(rec, 0, k);
}

std::vector<Key> all_keys(int n) {
  std::vector<Key> keys;
  for (const DyckPath& h : enumerate_dyck_paths(n)) keys.push_back(key_of(h));
  return keys;
}

std::size_t position(const std::vector<Key>& keys, Key k) {
  return static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
}

void check_size(int n) {
  require_n_within_cap(n, "M^-1 row/column");
  if (n > 16) throw CapExceeded("row/column back-substitution supports n <= 16");
}

}  // namespace

std::vector<std::pair<DyckPath, Integer>> minv_column(const DyckPath& mu) {
  const int n = mu.semilength();
  check_size(n);
  const std::vector<Key> keys = all_keys(n);
  const std::size_t top = position(keys, key_of(mu));
  std::vector<Integer> x(top + 1);
  x[top] = 1;
  // M x = e_mu, scattering each finished x_nu to the paths below nu
  for (std::size_t v = top + 1; v-- > 0;) {
    if (sgn(x[v]) == 0) continue;
    const Integer xv = x[v];
    for_each_pushdown(keys[v], n, [&](Key lam) {
      if (lam != keys[v]) x[position(keys, lam)] -= xv;
    });
  }
  std::vector<std::pair<DyckPath, Integer>> out;
  for (std::size_t v = 0; v <= top; ++v)
    if (sgn(x[v]) != 0) out.emplace_back(path_of(keys[v], n), x[v]);
  return out;
}

std::vector<std::pair<DyckPath, Integer>> minv_row(const DyckPath& lambda) {
  const int n = lambda.semilength();
  check_size(n);
  const std::vector<Key> keys = all_keys(n);
  const std::size_t bottom = position(keys, key_of(lambda));
  std::vector<Integer> y(keys.size());
  // y M = e_lambda, gathering over the push-downs of each nu
  for (std::size_t v = bottom; v < keys.size(); ++v) {
    Integer acc(v == bottom ? 1 : 0);
    for_each_pushdown(keys[v], n, [&](Key kappa) {
      if (kappa != keys[v] && kappa >= keys[bottom]) acc -= y[position(keys, kappa)];
    });
    y[v] = acc;
  }
  std::vector<std::pair<DyckPath, Integer>> out;
  for (std::size_t v = bottom; v < keys.size(); ++v)
    if (sgn(y[v]) != 0) out.emplace_back(path_of(keys[v], n), y[v]);
  return out;
}

}  // namespace dycktile
