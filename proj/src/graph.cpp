#include "dycktile/graph.hpp"

#include <queue>
#include <set>

#include "dycktile/errors.hpp"

namespace dycktile {

WeightedGraph::WeightedGraph(int vertices, std::vector<Edge> edges, std::vector<int> nodes)
    : vertices_(vertices), edges_(std::move(edges)), nodes_(std::move(nodes)) {
  if (vertices_ < 1) throw ValidationError("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (Edge& e : edges_) {
    e.weight.canonicalize();
    if (e.u < 0 || e.v < 0 || e.u >= vertices_ || e.v >= vertices_) throw ValidationError("edge endpoint out of range");
    if (e.u == e.v) throw ValidationError("self-loops are not allowed");
    if (sgn(e.weight) <= 0) throw ValidationError("edge weights must be positive");
    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) throw ValidationError("parallel edges are not allowed");
  }
  std::set<int> distinct;
  for (int v : nodes_) {
    if (v < 0 || v >= vertices_) throw ValidationError("node out of range");
    if (!distinct.insert(v).second) throw ValidationError("nodes must be distinct");
  }
}

DenseMatrix<Rational> WeightedGraph::laplacian() const {
  const auto k = static_cast<std::size_t>(vertices_);
  DenseMatrix<Rational> lap(k, std::vector<Rational>(k));
  for (const Edge& e : edges_) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    lap[u][u] += e.weight;
    lap[v][v] += e.weight;
    lap[u][v] -= e.weight;
    lap[v][u] -= e.weight;
  }
  return lap;
}

std::optional<std::vector<int>> WeightedGraph::bipartition() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices_));
  for (const Edge& e : edges_) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> colour(static_cast<std::size_t>(vertices_), -1);
  for (int s = 0; s < vertices_; ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        int& cv = colour[static_cast<std::size_t>(v)];
        if (cv < 0) {
          cv = 1 - colour[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (cv == colour[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool WeightedGraph::nodes_alternate() const {
  auto colour = bipartition();
  if (!colour || nodes_.size() % 2) return false;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    int a = (*colour)[static_cast<std::size_t>(nodes_[k])];
    int b = (*colour)[static_cast<std::size_t>(nodes_[(k + 1) % nodes_.size()])];
    if (a == b) return false;
  }
  return true;
}

WeightedGraph WeightedGraph::rotated(int k) const {
  std::vector<int> nodes;
  const int m = node_count();
  for (int i = 0; i < m; ++i) nodes.push_back(nodes_[static_cast<std::size_t>(((i + k) % m + m) % m)]);
  return WeightedGraph(vertices_, edges_, nodes);
}

nlohmann::json WeightedGraph::to_json() const {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : edges_) edges.push_back({e.u, e.v, to_string(e.weight)});
  return {{"vertices", vertices_}, {"edges", edges}, {"nodes", nodes_}};
}

WeightedGraph WeightedGraph::from_json(const nlohmann::json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      Rational w(1);
      if (e.size() > 2) w = e.at(2).is_string() ? parse_rational(e.at(2).get<std::string>()) : parse_rational(e.at(2).dump());
      edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), w});
    }
    return WeightedGraph(j.at("vertices").get<int>(), std::move(edges), j.at("nodes").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed graph JSON: ") + ex.what());
  }
}

WeightedGraph WeightedGraph::grid(int rows, int cols, std::vector<int> nodes) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1, Rational(1)});
      if (r + 1 < rows) edges.push_back({v, v + cols, Rational(1)});
    }
  return WeightedGraph(rows * cols, std::move(edges), std::move(nodes));
}

}  // namespace dycktile
