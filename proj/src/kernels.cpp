#include "dycktile/kernels.hpp"

#include <omp.h>

#include "dycktile/errors.hpp"
#include "dycktile/grove.hpp"
#include "dycktile/tiling.hpp"

namespace dycktile::kernels {

namespace {

void fill_m_row(const PathIndex& paths, TriMatrix& m, int r) {
  for (int c = r; c < paths.size(); ++c)
    if (pushdown_related(paths[r], paths[c])) m.at(r, c) = 1;
}

void fill_inverse_column(const TriMatrix& m, TriMatrix& inv, int c) {
  inv.at(c, c) = 1;
  for (int r = c - 1; r >= 0; --r) {
    Integer acc = 0;
    for (int k = r + 1; k <= c; ++k)
      if (m.at(r, k) != 0) acc += m.at(r, k) * inv.at(k, c);
    inv.at(r, c) = -acc;
  }
}

void fill_tiling_row(const PathIndex& paths, TriMatrix& out, int r) {
  for (int c = r; c < paths.size(); ++c) {
    SkewShape s(paths[r], paths[c]);
    if (!s.valid()) continue;
    Integer count(static_cast<unsigned long>(count_cover_inclusive(s)));
    out.at(r, c) = s.area() % 2 ? Integer(-count) : count;
  }
}

}  // namespace

TriMatrix build_m_serial(const PathIndex& paths) {
  TriMatrix m(paths.semilength(), paths.size());
  for (int r = 0; r < paths.size(); ++r) fill_m_row(paths, m, r);
  return m;
}

TriMatrix build_m_parallel(const PathIndex& paths) {
  TriMatrix m(paths.semilength(), paths.size());
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < paths.size(); ++r) fill_m_row(paths, m, r);
  return m;
}

TriMatrix invert_serial(const TriMatrix& m) { return invert_unitriangular(m); }

TriMatrix invert_parallel(const TriMatrix& m) {
  if (!m.is_unit_upper_triangular()) throw ValidationError("matrix is not unit upper triangular");
  TriMatrix inv(m.semilength(), m.order());
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < m.order(); ++c) fill_inverse_column(m, inv, c);
  return inv;
}

TriMatrix minv_from_tilings_serial(const PathIndex& paths) {
  TriMatrix out(paths.semilength(), paths.size());
  for (int r = 0; r < paths.size(); ++r) fill_tiling_row(paths, out, r);
  return out;
}

TriMatrix minv_from_tilings_parallel(const PathIndex& paths) {
  TriMatrix out(paths.semilength(), paths.size());
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < paths.size(); ++r) fill_tiling_row(paths, out, r);
  return out;
}

std::vector<Rational> d_s_all_serial(const XMatrix& x, const std::vector<NodeSet>& sets) {
  std::vector<Rational> out(sets.size());
  for (std::size_t k = 0; k < sets.size(); ++k) out[k] = d_s(x, sets[k]);
  return out;
}

std::vector<Rational> d_s_all_parallel(const XMatrix& x, const std::vector<NodeSet>& sets) {
  std::vector<Rational> out(sets.size());
  const long count = static_cast<long>(sets.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = d_s(x, sets[static_cast<std::size_t>(k)]);
  return out;
}

std::vector<Rational> cim_all_serial(const DenseMatrix<Rational>& l, const std::vector<NodeSet>& s_stars) {
  std::vector<Rational> out(s_stars.size());
  for (std::size_t k = 0; k < s_stars.size(); ++k) out[k] = cim_determinant(l, s_stars[k]);
  return out;
}

std::vector<Rational> cim_all_parallel(const DenseMatrix<Rational>& l, const std::vector<NodeSet>& s_stars) {
  std::vector<Rational> out(s_stars.size());
  const long count = static_cast<long>(s_stars.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k)
    out[static_cast<std::size_t>(k)] = cim_determinant(l, s_stars[static_cast<std::size_t>(k)]);
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace dycktile::kernels
