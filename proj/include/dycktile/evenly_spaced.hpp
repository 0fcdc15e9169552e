#pragma once

// D_S / D_empty for nodes at special positions, in high precision.

#include <vector>

#include "dycktile/catalan.hpp"
#include "dycktile/double_dimer.hpp"
#include "dycktile/exact.hpp"

namespace dycktile {

enum class Geometry { HalfPlane, Disk, Limit };

struct EvenlySpaced {
  Geometry mode = Geometry::Limit;
  std::vector<HighFloat> positions;  // half-plane: x_1..x_{2n}
  int n = 0;                         // disk: 2n nodes on the circle

  /// prod over i in S, j not in S of |x_j - x_i|^{(-1)^{1+i+j}}.
  static EvenlySpaced half_plane(std::vector<HighFloat> x);
  /// Nodes at the 2n-th roots of unity.
  static EvenlySpaced disk(int n);
  /// Unit spacing on the line, infinitely many nodes.
  static EvenlySpaced limit();

  /// D_S / D_empty. Disk and half-plane accept any S; limit needs balanced S.
  HighFloat ratio(const NodeSet& s) const;
  /// Marginal probability that the pairing contains `sub`.
  HighFloat marginal(const PartialPairing& sub) const;
};

}  // namespace dycktile
