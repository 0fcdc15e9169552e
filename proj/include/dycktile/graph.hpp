#pragma once

// Small weighted graphs with a circular list of boundary nodes.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dycktile/exact.hpp"

namespace dycktile {

struct Edge {
  int u;
  int v;
  Rational weight;
};

class WeightedGraph {
 public:
  WeightedGraph(int vertices, std::vector<Edge> edges, std::vector<int> nodes);

  int vertex_count() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Boundary vertices in circular order; node k (1-based) is nodes()[k-1].
  const std::vector<int>& nodes() const { return nodes_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  /// Weighted Laplacian: diagonal = weighted degree, off-diagonal = -weight.
  DenseMatrix<Rational> laplacian() const;
  /// Two-colouring (0/1 per vertex) if the graph is bipartite.
  std::optional<std::vector<int>> bipartition() const;
  /// Bipartite and consecutive nodes alternate colour.
  bool nodes_alternate() const;
  /// Same graph with the node list rotated left by k.
  WeightedGraph rotated(int k) const;

  nlohmann::json to_json() const;
  /// {"vertices": k, "edges": [[u, v, w], ...], "nodes": [...]}; 0-based ids;
  /// weight a number or "p/q".
  static WeightedGraph from_json(const nlohmann::json& j);

  /// rows x cols grid, vertex id r*cols + c, unit weights.
  static WeightedGraph grid(int rows, int cols, std::vector<int> nodes);

 private:
  int vertices_;
  std::vector<Edge> edges_;
  std::vector<int> nodes_;
};

}  // namespace dycktile
