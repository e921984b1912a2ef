#include "wgl/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace wgl {

WeightedGraph::WeightedGraph(const std::vector<std::pair<VertexId, double>>& vertex_weights,
                             const std::vector<Edge>& edges) {
  ids_.reserve(vertex_weights.size());
  for (const auto& [v, w] : vertex_weights) ids_.push_back(v);
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw precondition_error("duplicate vertex id");
  index_.reserve(ids_.size());
  for (int i = 0; i < static_cast<int>(ids_.size()); ++i) index_[ids_[static_cast<size_t>(i)]] = i;

  omega_.resize(ids_.size());
  for (const auto& [v, w] : vertex_weights) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw precondition_error("vertex weight must be strictly positive and finite (vertex " +
                               std::to_string(v) + ")");
    omega_[static_cast<size_t>(index_.at(v))] = w;
  }

  adj_.resize(ids_.size());
  for (const auto& e : edges) {
    if (e.u == e.v) throw precondition_error("self-loop at vertex " + std::to_string(e.u));
    if (!index_.count(e.u) || !index_.count(e.v))
      throw lookup_error("edge references unknown vertex");
    if (!(e.cond > 0.0) || !std::isfinite(e.cond))
      throw precondition_error("conductance must be strictly positive and finite on edge {" +
                               std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    int iu = index_.at(e.u), iv = index_.at(e.v);
    for (const auto& h : adj_[static_cast<size_t>(iu)])
      if (h.target == iv) throw precondition_error("duplicate edge");
    adj_[static_cast<size_t>(iu)].push_back({iv, e.cond});
    adj_[static_cast<size_t>(iv)].push_back({iu, e.cond});
    ++n_edges_;
  }
  for (auto& row : adj_)
    std::sort(row.begin(), row.end(),
              [this](const HalfEdge& a, const HalfEdge& b) {
                return ids_[static_cast<size_t>(a.target)] < ids_[static_cast<size_t>(b.target)];
              });
}

int WeightedGraph::index(VertexId x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw lookup_error("unknown vertex " + std::to_string(x));
  return it->second;
}

std::vector<VertexId> WeightedGraph::neighbors(VertexId x) const {
  std::vector<VertexId> out;
  for (const auto& h : adj_[static_cast<size_t>(index(x))]) out.push_back(id(h.target));
  return out;
}

bool WeightedGraph::has_edge(VertexId x, VertexId y) const {
  int iy = index(y);
  for (const auto& h : adj_[static_cast<size_t>(index(x))])
    if (h.target == iy) return true;
  return false;
}

double WeightedGraph::cond(VertexId x, VertexId y) const {
  int iy = index(y);
  for (const auto& h : adj_[static_cast<size_t>(index(x))])
    if (h.target == iy) return h.cond;
  throw lookup_error("no edge {" + std::to_string(x) + "," + std::to_string(y) + "}");
}

int WeightedGraph::max_degree() const {
  if (ids_.empty()) throw precondition_error("max_degree of empty graph");
  size_t d = 0;
  for (const auto& row : adj_) d = std::max(d, row.size());
  return static_cast<int>(d);
}

bool WeightedGraph::connected() const {
  if (ids_.empty()) return true;
  std::vector<char> seen(ids_.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  size_t count = 1;
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (const auto& h : adj_[static_cast<size_t>(i)]) {
      if (!seen[static_cast<size_t>(h.target)]) {
        seen[static_cast<size_t>(h.target)] = 1;
        ++count;
        q.push(h.target);
      }
    }
  }
  return count == ids_.size();
}

FiniteRegion region_from_vertexset(const WeightedGraph& g, const std::set<VertexId>& K) {
  FiniteRegion r;
  r.all.assign(K.begin(), K.end());
  for (VertexId x : r.all) {
    bool interior = true;
    for (const auto& h : g.adj(g.index(x))) {
      if (!K.count(g.id(h.target))) {
        interior = false;
        break;
      }
    }
    (interior ? r.interior : r.boundary).push_back(x);
  }
  // connectivity of K̊ through edges between interior vertices
  if (r.interior.empty()) {
    r.interior_connected = false;
  } else {
    std::set<VertexId> in(r.interior.begin(), r.interior.end());
    std::set<VertexId> seen;
    std::queue<VertexId> q;
    q.push(r.interior.front());
    seen.insert(r.interior.front());
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (VertexId y : g.neighbors(x)) {
        if (in.count(y) && !seen.count(y)) {
          seen.insert(y);
          q.push(y);
        }
      }
    }
    r.interior_connected = seen.size() == in.size();
  }
  return r;
}

CombinatorialBall combinatorial_ball(const WeightedGraph& g, VertexId x0, int n) {
  if (n < 0) throw precondition_error("ball radius must be non-negative");
  int start = g.index(x0);
  std::vector<int> depth(static_cast<size_t>(g.size()), -1);
  std::queue<int> q;
  q.push(start);
  depth[static_cast<size_t>(start)] = 0;
  CombinatorialBall ball{x0, n, {}};
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    ball.members.push_back(g.id(i));
    if (depth[static_cast<size_t>(i)] == n) continue;
    for (const auto& h : g.adj(i)) {
      if (depth[static_cast<size_t>(h.target)] < 0) {
        depth[static_cast<size_t>(h.target)] = depth[static_cast<size_t>(i)] + 1;
        q.push(h.target);
      }
    }
  }
  std::sort(ball.members.begin(), ball.members.end());
  return ball;
}

}  // namespace wgl
