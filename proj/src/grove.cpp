#include "dycktile/grove.hpp"

#include <algorithm>

#include "dycktile/config.hpp"
#include "dycktile/errors.hpp"
#include "dycktile/kernels.hpp"
#include "dycktile/matrix_m.hpp"

namespace dycktile {

ResponseMatrix::ResponseMatrix(DenseMatrix<Rational> l) : l_(std::move(l)) {
  for (const auto& row : l_)
    if (row.size() != l_.size()) throw ValidationError("response matrix must be square");
}

ResponseMatrix ResponseMatrix::rotated(int k) const {
  const int m = size();
  auto to = [&](int i) { return static_cast<std::size_t>(((i - 1 - k) % m + m) % m); };
  DenseMatrix<Rational> out(l_.size(), std::vector<Rational>(l_.size()));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) out[to(i)][to(j)] = at(i, j);
  return ResponseMatrix(std::move(out));
}

namespace {

// Solve a x = b for square rational a; throws when singular.
DenseMatrix<Rational> solve(DenseMatrix<Rational> a, DenseMatrix<Rational> b) {
  const std::size_t n = a.size();
  const std::size_t m = n ? b[0].size() : 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw ValidationError("interior Laplacian block is singular (interior component without a node)");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      for (std::size_t c = 0; c < m; ++c) b[r][c] -= f * b[col][c];
    }
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) b[r][c] /= a[r][r];
  return b;
}

}  // namespace

ResponseMatrix response_matrix(const WeightedGraph& g) {
  const auto lap = g.laplacian();
  const auto& nodes = g.nodes();
  std::vector<int> interior;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (std::find(nodes.begin(), nodes.end(), v) == nodes.end()) interior.push_back(v);
  const std::size_t nb = nodes.size(), ni = interior.size();
  auto at = [&](int r, int c) { return lap[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };

  DenseMatrix<Rational> l(nb, std::vector<Rational>(nb));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) l[i][j] = -at(nodes[i], nodes[j]);
  if (ni > 0) {
    DenseMatrix<Rational> aii(ni, std::vector<Rational>(ni)), ain(ni, std::vector<Rational>(nb));
    for (std::size_t r = 0; r < ni; ++r) {
      for (std::size_t c = 0; c < ni; ++c) aii[r][c] = at(interior[r], interior[c]);
      for (std::size_t c = 0; c < nb; ++c) ain[r][c] = at(interior[r], nodes[c]);
    }
    DenseMatrix<Rational> x = solve(aii, ain);  // A_II^{-1} A_IN
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        Rational acc(0);
        for (std::size_t k = 0; k < ni; ++k) acc += at(nodes[i], interior[k]) * x[k][j];
        l[i][j] += acc;
      }
  }
  return ResponseMatrix(std::move(l));
}

NodeSet s_star_to_s(int n, const NodeSet& s_star) {
  if (static_cast<int>(s_star.size()) != n) throw ValidationError("S* must have n elements");
  NodeSet s;
  for (int i = 1; i <= 2 * n; ++i) {
    const bool in = std::binary_search(s_star.begin(), s_star.end(), i);
    if ((i % 2 == 1 && in) || (i % 2 == 0 && !in)) s.push_back(i);
  }
  return s;
}

NodeSet s_to_s_star(int n, const NodeSet& s) {
  NodeSet out;
  for (int i = 1; i <= 2 * n; ++i) {
    const bool in = std::binary_search(s.begin(), s.end(), i);
    if ((i % 2 == 1 && in) || (i % 2 == 0 && !in)) out.push_back(i);
  }
  if (static_cast<int>(out.size()) != n) throw ValidationError("set is not balanced");
  return out;
}

Rational cim_determinant(const DenseMatrix<Rational>& l, const NodeSet& s_star) {
  const int m = static_cast<int>(l.size());
  if (static_cast<int>(s_star.size()) * 2 != m) throw ValidationError("S* must contain half of the nodes");
  NodeSet comp;
  for (int i = 1; i <= m; ++i)
    if (!std::binary_search(s_star.begin(), s_star.end(), i)) comp.push_back(i);
  if (comp.size() != s_star.size()) throw ValidationError("S* has repeated or out-of-range nodes");
  DenseMatrix<Rational> sub(s_star.size(), std::vector<Rational>(comp.size()));
  for (std::size_t r = 0; r < s_star.size(); ++r)
    for (std::size_t c = 0; c < comp.size(); ++c)
      sub[r][c] = l[static_cast<std::size_t>(s_star[r] - 1)][static_cast<std::size_t>(comp[c] - 1)];
  return determinant(std::move(sub));
}

Rational cim_determinant(const ResponseMatrix& l, const NodeSet& s_star) { return cim_determinant(l.matrix(), s_star); }

bool separates(const NodeSet& s_star, const NoncrossingPairing& pi) {
  for (auto [a, b] : pi.pairs())
    if (std::binary_search(s_star.begin(), s_star.end(), a) == std::binary_search(s_star.begin(), s_star.end(), b))
      return false;
  return true;
}

int pairing_sign(const NoncrossingPairing& pi, const NodeSet& s_star) {
  if (!separates(s_star, pi)) throw ValidationError("S* is not separated by the pairing");
  const int n = pi.semilength();
  NodeSet comp;
  for (int i = 1; i <= 2 * n; ++i)
    if (!std::binary_search(s_star.begin(), s_star.end(), i)) comp.push_back(i);
  std::vector<int> perm;
  for (int a : s_star) perm.push_back(static_cast<int>(std::lower_bound(comp.begin(), comp.end(), pi.partner(a)) - comp.begin()));
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

int pairing_sign(const NoncrossingPairing& pi) {
  NodeSet s_star;
  for (auto [a, b] : pi.pairs()) s_star.push_back(a);
  std::sort(s_star.begin(), s_star.end());
  return pairing_sign(pi, s_star);
}

std::vector<NodeSet> separating_sets(const NoncrossingPairing& pi) {
  const auto pairs = pi.pairs();
  std::vector<NodeSet> out;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    NodeSet s;
    for (std::size_t k = 0; k < pairs.size(); ++k) s.push_back(mask & (1u << k) ? pairs[k].second : pairs[k].first);
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

const Rational& GroveRatios::at(const NoncrossingPairing& p) const {
  for (const auto& [q, v] : ratios)
    if (q == p) return v;
  throw ValidationError("pairing not in grove ratios");
}

GroveRatios grove_ratios(const ResponseMatrix& l) {
  if (l.size() % 2) throw ValidationError("pairings need an even number of nodes");
  const int n = l.size() / 2;
  require_n_within_cap(n, "grove ratios");
  PathIndex paths(n);
  std::vector<NodeSet> s_stars;
  for (const DyckPath& h : paths.paths()) s_stars.push_back(s_to_s_star(n, dyck_to_confining(h).members()));
  std::vector<Rational> dets = kernels::cim_all_parallel(l.matrix(), s_stars);
  TriMatrix minv = kernels::invert_parallel(kernels::build_m_parallel(paths));

  GroveRatios out;
  out.n = n;
  for (int r = 0; r < paths.size(); ++r) {
    Rational acc(0);
    for (int c = r; c < paths.size(); ++c)
      if (sgn(minv.at(r, c)) != 0) acc += Rational(minv.at(r, c)) * dets[static_cast<std::size_t>(c)];
    NoncrossingPairing pi = dyck_to_pairing(paths[r]);
    if (pairing_sign(pi) < 0) acc = -acc;
    out.ratios.emplace_back(pi, acc);
  }
  return out;
}

NoncrossingPairing rotate_pairing(const NoncrossingPairing& p, int k) {
  const int m = 2 * p.semilength();
  auto to = [&](int i) { return ((i - 1 - k) % m + m) % m + 1; };
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : p.pairs()) pairs.emplace_back(to(a), to(b));
  return NoncrossingPairing::from_pairs(p.semilength(), pairs);
}

}  // namespace dycktile
