#pragma once

// Double-dimer pairing probabilities and marginals from boundary
// measurements X_{i,j}.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dycktile/catalan.hpp"
#include "dycktile/exact.hpp"

namespace dycktile {

/// X_{i,j} for i odd, j even on nodes 1..2n. Symmetric access.
class XMatrix {
 public:
  explicit XMatrix(int n);
  int semilength() const { return n_; }
  /// One index odd and the other even.
  void set(int i, int j, const Rational& value);
  const Rational& get(int i, int j) const;

  nlohmann::json to_json() const;
  /// {"n": n, "entries": [[i, j, value], ...]}; value a number or "p/q".
  static XMatrix from_json(const nlohmann::json& j);

 private:
  std::size_t slot(int i, int j) const;
  int n_;
  std::vector<Rational> x_;  // n*n, row (odd-1)/2, column even/2-1
};

/// D_S for a balanced node set S.
Rational d_s(const XMatrix& x, const NodeSet& s);

struct PairingDistribution {
  int n = 0;
  std::vector<std::pair<NoncrossingPairing, Rational>> probabilities;  // table order
  bool has_negative = false;

  Rational total() const;
  const Rational& at(const NoncrossingPairing& p) const;
};

/// Pr(pi) = sum over S of M^{-1}_{pi,S} D_S / D_empty.
PairingDistribution pairing_distribution(const XMatrix& x);

/// Chords with a < b, sorted. Nodes need not be contiguous.
using PartialPairing = std::vector<std::pair<int, int>>;
/// "1-2,3-6,5-4,11-16".
PartialPairing parse_partial_pairing(std::string_view text);
std::string format_partial_pairing(const PartialPairing& p);
/// Odd-even chords, distinct nodes, noncrossing.
void validate_partial_pairing(const PartialPairing& p);

/// Formal integer combination of node subsets.
class FormalSetCombo {
 public:
  FormalSetCombo() = default;
  static FormalSetCombo single(NodeSet s, Integer coeff = Integer(1));

  const std::map<NodeSet, Integer>& terms() const { return terms_; }
  void add(const NodeSet& s, const Integer& coeff);
  FormalSetCombo& operator+=(const FormalSetCombo& o);
  FormalSetCombo& operator-=(const FormalSetCombo& o);
  FormalSetCombo operator*(const Integer& k) const;
  /// Bilinear extension of set union.
  FormalSetCombo unite(const FormalSetCombo& o) const;
  friend bool operator==(const FormalSetCombo&, const FormalSetCombo&) = default;

  template <typename T>
  T evaluate(const std::function<T(const NodeSet&)>& ratio) const {
    T out(0);
    for (const auto& [s, c] : terms_) out += from_integer<T>(c) * ratio(s);
    return out;
  }
  /// "D{1,2,3,6} - D{1,6} + 2 D{1,3,4,6}".
  std::string str() const;

 private:
  std::map<NodeSet, Integer> terms_;
};

/// M^{-1} row of the block's pairing, shifted so its first node is `start`.
/// `local` pairs nodes 1..2k.
FormalSetCombo contiguous_combo(const NoncrossingPairing& local, int start);
/// Marginal over a contiguous block.
Rational contiguous_marginal(const XMatrix& x, const NoncrossingPairing& local, int start);

/// Formula (in D_S/D_empty) for the probability that the full pairing
/// contains `sub`, on total_nodes boundary nodes.
FormalSetCombo local_marginal_formula(int total_nodes, const PartialPairing& sub);
Rational local_marginal(const XMatrix& x, const PartialPairing& sub);

/// Noncrossing odd-even perfect pairings of `nodes` that do not cross `fixed`.
std::vector<PartialPairing> noncrossing_completions(const std::vector<int>& nodes, const PartialPairing& fixed);

/// Full pairings consistent with `sub` (sub is a subset of their chords).
bool contains_subpairing(const NoncrossingPairing& full, const PartialPairing& sub);

/// D_S / D_empty for every S, cached on D_empty.
std::function<Rational(const NodeSet&)> d_ratio(const XMatrix& x);

}  // namespace dycktile
