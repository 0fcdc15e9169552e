#include <algorithm>

#include "dycktile/config.hpp"
#include "dycktile/errors.hpp"
#include "dycktile/oracle.hpp"

namespace dycktile::oracle {

namespace {

struct Search {
  const WeightedGraph& g;
  std::vector<std::vector<int>> incident;  // vertex -> edge indices
  std::vector<bool> covered;
  std::vector<int> chosen;
  std::vector<Matching> out;

  void run() {
    // lowest uncovered vertex must be matched now
    int v = 0;
    while (v < g.vertex_count() && covered[static_cast<std::size_t>(v)]) ++v;
    if (v == g.vertex_count()) {
      Rational w(1);
      for (int e : chosen) w *= g.edges()[static_cast<std::size_t>(e)].weight;
      out.push_back({chosen, w});
      return;
    }
    for (int e : incident[static_cast<std::size_t>(v)]) {
      const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
      const int u = ed.u == v ? ed.v : ed.u;
      if (covered[static_cast<std::size_t>(u)]) continue;
      covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = true;
      chosen.push_back(e);
      run();
      chosen.pop_back();
      covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = false;
    }
  }
};

}  // namespace

std::vector<Matching> enumerate_matchings(const WeightedGraph& g, const std::vector<int>& removed) {
  if (static_cast<int>(g.edges().size()) > caps().max_match_edges) throw CapExceeded("too many edges for matching enumeration");
  Search s{g, std::vector<std::vector<int>>(static_cast<std::size_t>(g.vertex_count())),
           std::vector<bool>(static_cast<std::size_t>(g.vertex_count()), false), {}, {}};
  for (int v : removed) s.covered.at(static_cast<std::size_t>(v)) = true;
  std::vector<int> order(g.edges().size());
  for (std::size_t e = 0; e < order.size(); ++e) order[e] = static_cast<int>(e);
  for (int e : order) {
    const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
    if (s.covered[static_cast<std::size_t>(ed.u)] || s.covered[static_cast<std::size_t>(ed.v)]) continue;
    s.incident[static_cast<std::size_t>(ed.u)].push_back(e);
    s.incident[static_cast<std::size_t>(ed.v)].push_back(e);
  }
  const long uncovered = std::count(s.covered.begin(), s.covered.end(), false);
  if (uncovered % 2) return {};
  s.run();
  return std::move(s.out);
}

Rational matching_sum(const WeightedGraph& g, const std::vector<int>& removed) {
  Rational z(0);
  for (const Matching& m : enumerate_matchings(g, removed)) z += m.weight;
  return z;
}

XMatrix x_matrix(const WeightedGraph& g) {
  if (g.node_count() % 2 || g.node_count() == 0) throw ValidationError("need an even, positive number of nodes");
  if (!g.nodes_alternate()) throw ValidationError("nodes must alternate in colour");
  const Rational z = matching_sum(g);
  if (sgn(z) == 0) throw ValidationError("graph has no perfect matching");
  const int n = g.node_count() / 2;
  XMatrix x(n);
  for (int i = 1; i <= 2 * n; i += 2)
    for (int j = 2; j <= 2 * n; j += 2)
      x.set(i, j, matching_sum(g, {g.nodes()[static_cast<std::size_t>(i - 1)], g.nodes()[static_cast<std::size_t>(j - 1)]}) / z);
  return x;
}

DoubleDimerSummary decompose(const WeightedGraph& g, const Matching& m1, const Matching& m2) {
  const auto k = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> mate1(k, -1), mate2(k, -1);
  for (int e : m1.edges) {
    const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
    mate1[static_cast<std::size_t>(ed.u)] = ed.v;
    mate1[static_cast<std::size_t>(ed.v)] = ed.u;
  }
  for (int e : m2.edges) {
    const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
    mate2[static_cast<std::size_t>(ed.u)] = ed.v;
    mate2[static_cast<std::size_t>(ed.v)] = ed.u;
  }
  std::vector<int> node_number(k, 0);
  for (int i = 0; i < g.node_count(); ++i) node_number[static_cast<std::size_t>(g.nodes()[static_cast<std::size_t>(i)])] = i + 1;

  std::vector<bool> seen(k, false);
  std::vector<std::pair<int, int>> chains;
  for (int i = 0; i < g.node_count(); ++i) {
    int v = g.nodes()[static_cast<std::size_t>(i)];
    if (seen[static_cast<std::size_t>(v)]) continue;
    if (mate2[static_cast<std::size_t>(v)] >= 0) throw ValidationError("second matching covers a node");
    seen[static_cast<std::size_t>(v)] = true;
    bool use_first = true;
    while (true) {
      int u = use_first ? mate1[static_cast<std::size_t>(v)] : mate2[static_cast<std::size_t>(v)];
      if (u < 0) throw ValidationError("broken chain in superposition");
      seen[static_cast<std::size_t>(u)] = true;
      v = u;
      use_first = !use_first;
      if (node_number[static_cast<std::size_t>(v)]) break;
    }
    chains.emplace_back(i + 1, node_number[static_cast<std::size_t>(v)]);
  }
  int loops = 0, doubled = 0;
  for (std::size_t v = 0; v < k; ++v) {
    if (seen[v]) continue;
    if (mate1[v] == mate2[v]) {
      seen[v] = seen[static_cast<std::size_t>(mate1[v])] = true;
      ++doubled;
      continue;
    }
    ++loops;
    int u = static_cast<int>(v);
    bool use_first = true;
    do {
      seen[static_cast<std::size_t>(u)] = true;
      u = use_first ? mate1[static_cast<std::size_t>(u)] : mate2[static_cast<std::size_t>(u)];
      use_first = !use_first;
    } while (u != static_cast<int>(v));
  }
  return {NoncrossingPairing::from_pairs(g.node_count() / 2, chains), loops, doubled};
}

PairingDistribution double_dimer_distribution(const WeightedGraph& g) {
  if (!g.nodes_alternate()) throw ValidationError("nodes must alternate in colour");
  const int n = g.node_count() / 2;
  const auto first = enumerate_matchings(g);
  const auto second = enumerate_matchings(g, g.nodes());
  if (first.empty() || second.empty()) throw ValidationError("no double-dimer configurations");
  PathIndex paths(n);
  std::vector<Rational> mass(static_cast<std::size_t>(paths.size()));
  Rational total(0);
  for (const Matching& a : first)
    for (const Matching& b : second) {
      Rational w = a.weight * b.weight;
      DoubleDimerSummary d = decompose(g, a, b);
      mass[static_cast<std::size_t>(paths.index_of(pairing_to_dyck(d.pairing)))] += w;
      total += w;
    }
  PairingDistribution out;
  out.n = n;
  for (int r = 0; r < paths.size(); ++r)
    out.probabilities.emplace_back(dyck_to_pairing(paths[r]), mass[static_cast<std::size_t>(r)] / total);
  return out;
}

}  // namespace dycktile::oracle
