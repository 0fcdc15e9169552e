#pragma once

// Incidence matrix of the push-down relation, its exact inverse, and
// inverse entries computed directly on skew shapes.

#include <utility>
#include <vector>

#include "dycktile/catalan.hpp"
#include "dycktile/exact.hpp"
#include "dycktile/skew_shape.hpp"

namespace dycktile {

/// Square exact-integer matrix indexed by lexicographic path position.
class TriMatrix {
 public:
  TriMatrix(int n, int order);
  static TriMatrix identity(int n, int order);

  int semilength() const { return n_; }
  int order() const { return order_; }
  Integer& at(int r, int c) { return data_[index(r, c)]; }
  const Integer& at(int r, int c) const { return data_[index(r, c)]; }

  bool is_unit_upper_triangular() const;
  friend TriMatrix operator*(const TriMatrix& a, const TriMatrix& b);
  friend bool operator==(const TriMatrix& a, const TriMatrix& b) { return a.order_ == b.order_ && a.data_ == b.data_; }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(c);
  }
  int n_;
  int order_;
  std::vector<Integer> data_;
};

/// Entry (row lambda, column mu) is 1 iff lambda is mu with some chords pushed down.
TriMatrix build_m(int n);
TriMatrix build_m(const PathIndex& paths);

/// Exact inverse of a unit upper triangular matrix.
TriMatrix invert_unitriangular(const TriMatrix& m);

/// M^{-1}_{lambda/mu} by the downward recurrence over nonempty chord sets of
/// mu, memoised on translation class. Invalid containment gives 0.
Integer minv_of_skew(const SkewShape& shape);
void clear_minv_cache();
std::size_t minv_cache_size();

/// Nonzero entries of one row (fixed lambda) or column (fixed mu) of M^{-1},
/// by sparse back-substitution over push-downs. n <= 16.
std::vector<std::pair<DyckPath, Integer>> minv_row(const DyckPath& lambda);
std::vector<std::pair<DyckPath, Integer>> minv_column(const DyckPath& mu);

/// M_{lambda/mu} (0 or 1).
int m_of_skew(const SkewShape& shape);

/// Sum over rho with lambda <- rho of M^{-1}_{rho/mu} equals delta(lambda, mu).
bool upward_recurrence_check(const DyckPath& lower, const DyckPath& upper);
/// Sum over rho obtained by pushing chords of mu of M^{-1}_{lambda/rho} equals delta.
bool downward_recurrence_check(const DyckPath& lower, const DyckPath& upper);

}  // namespace dycktile
