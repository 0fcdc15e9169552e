#include <algorithm>
#include <numeric>

#include "dycktile/config.hpp"
#include "dycktile/errors.hpp"
#include "dycktile/oracle.hpp"

namespace dycktile::oracle {

namespace {

// Union-find with undo (union by size, no path compression).
class Forest {
 public:
  explicit Forest(int k) : parent_(static_cast<std::size_t>(k)), size_(static_cast<std::size_t>(k), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) const {
    while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    history_.push_back(b);
    return true;
  }
  void undo() {
    int b = history_.back();
    history_.pop_back();
    int a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

struct GroveSearch {
  const WeightedGraph& g;
  Forest forest;
  std::vector<int> node_number;  // vertex -> 1-based node number or 0
  std::map<NodePartition, Rational> table;

  void leaf(const Rational& w) {
    const int k = g.vertex_count();
    std::vector<bool> root_has_node(static_cast<std::size_t>(k), false);
    for (int v : g.nodes()) root_has_node[static_cast<std::size_t>(forest.find(v))] = true;
    for (int v = 0; v < k; ++v)
      if (!root_has_node[static_cast<std::size_t>(forest.find(v))]) return;
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < g.node_count(); ++i) blocks[forest.find(g.nodes()[static_cast<std::size_t>(i)])].push_back(i + 1);
    NodePartition p;
    for (auto& [root, b] : blocks) p.push_back(b);
    std::sort(p.begin(), p.end());
    table[p] += w;
  }

  void run(std::size_t e, const Rational& w) {
    if (e == g.edges().size()) {
      leaf(w);
      return;
    }
    run(e + 1, w);
    const Edge& ed = g.edges()[e];
    if (forest.unite(ed.u, ed.v)) {
      run(e + 1, w * ed.weight);
      forest.undo();
    }
  }
};

}  // namespace

std::map<NodePartition, Rational> grove_table(const WeightedGraph& g) {
  if (g.vertex_count() > caps().max_grove_vertices || static_cast<int>(g.edges().size()) > caps().max_grove_edges)
    throw CapExceeded("graph too large for grove enumeration");
  GroveSearch s{g, Forest(g.vertex_count()), std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0), {}};
  s.run(0, Rational(1));
  return std::move(s.table);
}

Rational grove_partition(const WeightedGraph& g, const NodePartition& partition) {
  NodePartition p = partition;
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end());
  auto table = grove_table(g);
  auto it = table.find(p);
  return it == table.end() ? Rational(0) : it->second;
}

NodePartition as_partition(const NoncrossingPairing& p) {
  NodePartition out;
  for (auto [a, b] : p.pairs()) out.push_back({a, b});
  std::sort(out.begin(), out.end());
  return out;
}

NodePartition singletons(int node_count) {
  NodePartition out;
  for (int i = 1; i <= node_count; ++i) out.push_back({i});
  return out;
}

}  // namespace dycktile::oracle
