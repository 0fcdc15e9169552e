#pragma once

// Grove pairing partition-function ratios from the response matrix.

#include <utility>
#include <vector>

#include "dycktile/catalan.hpp"
#include "dycktile/exact.hpp"
#include "dycktile/graph.hpp"

namespace dycktile {

/// Symmetric 2n x 2n boundary matrix, 0-based storage, 1-based accessors.
class ResponseMatrix {
 public:
  explicit ResponseMatrix(DenseMatrix<Rational> l);
  int size() const { return static_cast<int>(l_.size()); }
  const Rational& at(int i, int j) const {
    return l_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  const DenseMatrix<Rational>& matrix() const { return l_; }
  /// Node i becomes node ((i-1-k) mod 2n) + 1.
  ResponseMatrix rotated(int k) const;

 private:
  DenseMatrix<Rational> l_;
};

/// L = -(Schur complement of the Laplacian onto the nodes): off-diagonal
/// entries are nonnegative, rows sum to 0.
ResponseMatrix response_matrix(const WeightedGraph& g);

/// S = odds of S* and evens outside S*. The map is its own inverse.
NodeSet s_star_to_s(int n, const NodeSet& s_star);
NodeSet s_to_s_star(int n, const NodeSet& s);

/// det L[S*, complement], both in increasing order.
Rational cim_determinant(const DenseMatrix<Rational>& l, const NodeSet& s_star);
Rational cim_determinant(const ResponseMatrix& l, const NodeSet& s_star);

/// Every chord of pi joins S* to its complement.
bool separates(const NodeSet& s_star, const NoncrossingPairing& pi);
/// Sign of the permutation taking sorted S* to its sorted complement along pi.
int pairing_sign(const NoncrossingPairing& pi, const NodeSet& s_star);
/// Same, with S* the smaller endpoints.
int pairing_sign(const NoncrossingPairing& pi);
/// All S* separated by pi (2^n of them).
std::vector<NodeSet> separating_sets(const NoncrossingPairing& pi);

struct GroveRatios {
  int n = 0;
  std::vector<std::pair<NoncrossingPairing, Rational>> ratios;  // Z_pi / Z_{1|...|2n}, table order
  const Rational& at(const NoncrossingPairing& p) const;
};

GroveRatios grove_ratios(const ResponseMatrix& l);

/// Pairing with node i relabelled ((i-1-k) mod 2n) + 1.
NoncrossingPairing rotate_pairing(const NoncrossingPairing& p, int k);

}  // namespace dycktile
