#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "wgl/errors.hpp"

namespace wgl {

using VertexId = std::int64_t;

struct HalfEdge {
  int target;   // internal index of the neighbor
  double cond;  // conductance c_{x,y}; stored on both directions
};

/// Locally finite weighted graph: strictly positive vertex weights omega and
/// strictly positive symmetric edge conductances. Immutable after
/// construction; safe to read from multiple threads.
class WeightedGraph {
 public:
  struct Edge {
    VertexId u, v;
    double cond;
  };

  // Validates positivity of all weights, rejects self-loops and duplicate
  // edges. Adjacency is stored symmetrically and sorted by neighbor id.
  WeightedGraph(const std::vector<std::pair<VertexId, double>>& vertex_weights,
                const std::vector<Edge>& edges);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<VertexId>& ids() const { return ids_; }
  VertexId id(int i) const { return ids_[static_cast<size_t>(i)]; }
  bool contains(VertexId x) const { return index_.count(x) != 0; }
  int index(VertexId x) const;  // throws lookup_error on unknown vertex

  double omega(VertexId x) const { return omega_[static_cast<size_t>(index(x))]; }
  double omega_at(int i) const { return omega_[static_cast<size_t>(i)]; }

  std::span<const HalfEdge> adj(int i) const { return adj_[static_cast<size_t>(i)]; }
  std::vector<VertexId> neighbors(VertexId x) const;
  bool has_edge(VertexId x, VertexId y) const;
  double cond(VertexId x, VertexId y) const;  // throws lookup_error if not an edge

  int degree(VertexId x) const { return static_cast<int>(adj_[static_cast<size_t>(index(x))].size()); }
  int max_degree() const;  // throws precondition_error on empty graph
  int edge_count() const { return n_edges_; }
  bool connected() const;

  // For finite truncations of infinite families: the vertices sitting on the
  // cut. Empty for genuinely finite graphs. Set once right after
  // construction, before the graph is shared.
  const std::vector<VertexId>& frontier() const { return frontier_; }
  void set_frontier(std::vector<VertexId> f) { frontier_ = std::move(f); }

 private:
  std::vector<VertexId> ids_;  // sorted ascending
  std::unordered_map<VertexId, int> index_;
  std::vector<double> omega_;
  std::vector<std::vector<HalfEdge>> adj_;
  std::vector<VertexId> frontier_;
  int n_edges_ = 0;
};

/// Finitely supported real-valued vertex function; reads as 0 off support.
class GraphFunction {
 public:
  GraphFunction() = default;
  explicit GraphFunction(std::map<VertexId, double> values) : values_(std::move(values)) {}

  double operator()(VertexId x) const {
    auto it = values_.find(x);
    return it == values_.end() ? 0.0 : it->second;
  }
  void set(VertexId x, double v) { values_[x] = v; }
  bool in_support(VertexId x) const { return values_.count(x) != 0; }
  size_t support_size() const { return values_.size(); }
  // ordered ascending by vertex id; sums over this are deterministic
  const std::map<VertexId, double>& values() const { return values_; }

  static GraphFunction indicator(VertexId x) {
    GraphFunction f;
    f.set(x, 1.0);
    return f;
  }

 private:
  std::map<VertexId, double> values_;
};

/// Finite vertex set K split into interior (all neighbors stay in K) and
/// boundary (the rest).
struct FiniteRegion {
  std::vector<VertexId> all;       // K, sorted
  std::vector<VertexId> interior;  // K̊, sorted
  std::vector<VertexId> boundary;  // ∂K, sorted
  bool interior_connected = false;
};

struct CombinatorialBall {
  VertexId center;
  int radius;
  std::vector<VertexId> members;  // sorted
};

FiniteRegion region_from_vertexset(const WeightedGraph& g, const std::set<VertexId>& K);

// BFS ball under edge-count distance; B_0 = {x0}.
CombinatorialBall combinatorial_ball(const WeightedGraph& g, VertexId x0, int n);

}  // namespace wgl
