#include "dycktile/evenly_spaced.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>

#include "dycktile/errors.hpp"

namespace dycktile {

EvenlySpaced EvenlySpaced::half_plane(std::vector<HighFloat> x) {
  if (x.size() < 2 || x.size() % 2) throw ValidationError("half-plane needs an even number of positions");
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j]) throw ValidationError("coincident node positions");
  EvenlySpaced g;
  g.mode = Geometry::HalfPlane;
  g.n = static_cast<int>(x.size() / 2);
  g.positions = std::move(x);
  return g;
}

EvenlySpaced EvenlySpaced::disk(int n) {
  if (n < 1) throw ValidationError("disk needs n >= 1");
  EvenlySpaced g;
  g.mode = Geometry::Disk;
  g.n = n;
  return g;
}

EvenlySpaced EvenlySpaced::limit() { return EvenlySpaced{}; }

namespace {

int sign_power(int i, int j) { return (i + j) % 2 ? 1 : -1; }  // (-1)^{1+i+j}

}  // namespace

HighFloat EvenlySpaced::ratio(const NodeSet& s) const {
  float_digits();
  const HighFloat pi = boost::math::constants::pi<HighFloat>();
  HighFloat out(1);
  switch (mode) {
    case Geometry::HalfPlane: {
      const int m = 2 * n;
      for (int i : s) {
        if (i < 1 || i > m) throw ValidationError("node out of range");
        for (int j = 1; j <= m; ++j) {
          if (std::binary_search(s.begin(), s.end(), j)) continue;
          HighFloat d = abs(positions[static_cast<std::size_t>(j - 1)] - positions[static_cast<std::size_t>(i - 1)]);
          out = sign_power(i, j) > 0 ? HighFloat(out * d) : HighFloat(out / d);
        }
      }
      return out;
    }
    case Geometry::Disk: {
      for (int i : s)
        if (i < 1 || i > 2 * n) throw ValidationError("node out of range");
      out = pow(HighFloat(2) / n, static_cast<int>(s.size()));
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
          HighFloat chord = 2 * abs(sin(pi * (s[a] - s[b]) / (2 * n)));
          HighFloat sq = chord * chord;
          out = (s[a] + s[b]) % 2 == 0 ? HighFloat(out * sq) : HighFloat(out / sq);
        }
      return out;
    }
    case Geometry::Limit: {
      if (!is_balanced(s)) throw ValidationError("the limit formula needs a balanced set");
      out = pow(2 / pi, static_cast<int>(s.size()));
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
          HighFloat d2 = HighFloat(s[a] - s[b]) * HighFloat(s[a] - s[b]);
          out = (s[a] + s[b]) % 2 == 0 ? HighFloat(out * d2) : HighFloat(out / d2);
        }
      return out;
    }
  }
  return out;
}

HighFloat EvenlySpaced::marginal(const PartialPairing& sub) const {
  validate_partial_pairing(sub);
  int top = 0;
  for (auto [a, b] : sub) top = std::max(top, b);
  int total = mode == Geometry::Limit ? top + top % 2 : 2 * n;
  if (top > total) throw ValidationError("pairing uses a node beyond the node count");
  std::function<HighFloat(const NodeSet&)> f = [this](const NodeSet& s) { return ratio(s); };
  return local_marginal_formula(total, sub).evaluate<HighFloat>(f);
}

}  // namespace dycktile
