#pragma once

// Brute-force ground truth on small graphs: perfect matchings, double-dimer
// superpositions, and groves. Exponential; caps apply.

#include <map>
#include <vector>

#include "dycktile/catalan.hpp"
#include "dycktile/double_dimer.hpp"
#include "dycktile/exact.hpp"
#include "dycktile/graph.hpp"

namespace dycktile::oracle {

struct Matching {
  std::vector<int> edges;  // indices into graph.edges()
  Rational weight;
};

/// Perfect matchings of g with `removed` vertices deleted.
std::vector<Matching> enumerate_matchings(const WeightedGraph& g, const std::vector<int>& removed = {});
Rational matching_sum(const WeightedGraph& g, const std::vector<int>& removed = {});

/// X_{i,j} = Z(G minus nodes i, j) / Z(G) for odd i, even j (node numbers 1-based).
XMatrix x_matrix(const WeightedGraph& g);

struct DoubleDimerSummary {
  NoncrossingPairing pairing;
  int loops;
  int doubled_edges;
};

/// Chains, loops and doubled edges of the superposition of a matching of G
/// and a matching of G minus the nodes.
DoubleDimerSummary decompose(const WeightedGraph& g, const Matching& m1, const Matching& m2);

/// Exact law of the chain pairing (table order, zero entries included).
PairingDistribution double_dimer_distribution(const WeightedGraph& g);

/// Partition of the node numbers 1..2n, blocks sorted, blocks in order.
using NodePartition = std::vector<std::vector<int>>;

/// Weighted grove sums keyed by the node partition they realise.
std::map<NodePartition, Rational> grove_table(const WeightedGraph& g);
/// Z_pi for one partition (0 if none).
Rational grove_partition(const WeightedGraph& g, const NodePartition& partition);
NodePartition as_partition(const NoncrossingPairing& p);
NodePartition singletons(int node_count);

}  // namespace dycktile::oracle
