#pragma once

// Bulk kernels in two flavours: a plain loop (reference) and an OpenMP loop.
// Both must return identical values.

#include <vector>

#include "dycktile/catalan.hpp"
#include "dycktile/double_dimer.hpp"
#include "dycktile/exact.hpp"
#include "dycktile/matrix_m.hpp"

namespace dycktile::kernels {

TriMatrix build_m_serial(const PathIndex& paths);
TriMatrix build_m_parallel(const PathIndex& paths);

TriMatrix invert_serial(const TriMatrix& m);
TriMatrix invert_parallel(const TriMatrix& m);

/// M^{-1} entry by entry as (-1)^{area} times the cover-inclusive tiling count.
TriMatrix minv_from_tilings_serial(const PathIndex& paths);
TriMatrix minv_from_tilings_parallel(const PathIndex& paths);

std::vector<Rational> d_s_all_serial(const XMatrix& x, const std::vector<NodeSet>& sets);
std::vector<Rational> d_s_all_parallel(const XMatrix& x, const std::vector<NodeSet>& sets);

/// det L[S*, complement of S*] for each S*.
std::vector<Rational> cim_all_serial(const DenseMatrix<Rational>& l, const std::vector<NodeSet>& s_stars);
std::vector<Rational> cim_all_parallel(const DenseMatrix<Rational>& l, const std::vector<NodeSet>& s_stars);

/// Number of OpenMP threads available (1 without OpenMP).
int max_threads();

}  // namespace dycktile::kernels
