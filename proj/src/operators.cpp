#include "wgl/operators.hpp"

#include <cmath>
#include <set>

namespace wgl {

SchrodingerOperator::SchrodingerOperator(std::shared_ptr<const WeightedGraph> graph,
                                         const std::function<double(VertexId, VertexId)>& a,
                                         const std::function<double(VertexId)>& W)
    : graph_(std::move(graph)) {
  const auto& g = *graph_;
  a_.resize(static_cast<size_t>(g.size()));
  W_.resize(static_cast<size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    VertexId x = g.id(i);
    W_[static_cast<size_t>(i)] = W(x);
    if (!std::isfinite(W_[static_cast<size_t>(i)]))
      throw precondition_error("potential not finite at vertex " + std::to_string(x));
    auto row = g.adj(i);
    a_[static_cast<size_t>(i)].reserve(row.size());
    for (const auto& h : row) {
      double v = a(x, g.id(h.target));
      if (!(v > 0.0) || !std::isfinite(v))
        throw precondition_error("conductance a must be strictly positive on edge {" +
                                 std::to_string(x) + "," + std::to_string(g.id(h.target)) + "}");
      a_[static_cast<size_t>(i)].push_back(v);
    }
  }
  // symmetry a_{x,y} = a_{y,x}
  for (int i = 0; i < g.size(); ++i) {
    auto row = g.adj(i);
    for (size_t k = 0; k < row.size(); ++k) {
      int j = row[k].target;
      auto back = g.adj(j);
      for (size_t m = 0; m < back.size(); ++m) {
        if (back[m].target == i && a_[static_cast<size_t>(j)][m] != a_[static_cast<size_t>(i)][k])
          throw precondition_error("conductance a is not symmetric");
      }
    }
  }
}

SchrodingerOperator SchrodingerOperator::uniform(std::shared_ptr<const WeightedGraph> graph,
                                                 double a0, double W0) {
  return SchrodingerOperator(
      std::move(graph), [a0](VertexId, VertexId) { return a0; }, [W0](VertexId) { return W0; });
}

double SchrodingerOperator::a(VertexId x, VertexId y) const {
  int i = graph_->index(x), j = graph_->index(y);
  auto row = graph_->adj(i);
  for (size_t k = 0; k < row.size(); ++k)
    if (row[k].target == j) return a_[static_cast<size_t>(i)][k];
  throw lookup_error("no edge {" + std::to_string(x) + "," + std::to_string(y) + "}");
}

double SchrodingerOperator::apply(const GraphFunction& f, VertexId x) const {
  int i = graph_->index(x);
  double fx = f(x);
  double acc = 0.0;
  auto row = graph_->adj(i);
  for (size_t k = 0; k < row.size(); ++k)
    acc += a_[static_cast<size_t>(i)][k] * (fx - f(graph_->id(row[k].target)));
  return acc + W_[static_cast<size_t>(i)] * fx;
}

double apply_laplacian(const LaplacianSpec& L, const GraphFunction& f, VertexId x) {
  const auto& g = *L.graph;
  int i = g.index(x);
  double fx = f(x);
  double acc = 0.0;
  for (const auto& h : g.adj(i)) acc += h.cond * (fx - f(g.id(h.target)));
  double w = g.omega_at(i);
  return acc / (w * w);
}

double apply_schrodinger(const SchrodingerOperator& P, const GraphFunction& f, VertexId x) {
  return P.apply(f, x);
}

double quadratic_form(const LaplacianSpec& L, const GraphFunction& f) {
  const auto& g = *L.graph;
  // edges meeting the support, each counted once, ascending (x, y) order
  double acc = 0.0;
  std::set<std::pair<VertexId, VertexId>> done;
  for (const auto& [x, fx] : f.values()) {
    int i = g.index(x);
    for (const auto& h : g.adj(i)) {
      VertexId y = g.id(h.target);
      auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
      if (!done.insert(key).second) continue;
      double d = f(key.first) - f(key.second);
      acc += h.cond * d * d;
    }
  }
  return acc;
}

double schrodinger_form(const SchrodingerOperator& P, const GraphFunction& f) {
  const auto& g = P.graph();
  double acc = 0.0;
  std::set<std::pair<VertexId, VertexId>> done;
  for (const auto& [x, fx] : f.values()) {
    int i = g.index(x);
    auto row = g.adj(i);
    for (size_t k = 0; k < row.size(); ++k) {
      VertexId y = g.id(row[k].target);
      auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
      if (!done.insert(key).second) continue;
      double d = f(key.first) - f(key.second);
      acc += P.a_at(i, k) * d * d;
    }
  }
  for (const auto& [x, fx] : f.values()) acc += P.W(x) * fx * fx;
  return acc;
}

double inner_product_weighted(const GraphFunction& f, const GraphFunction& g,
                              const WeightedGraph& g_omega) {
  double acc = 0.0;
  for (const auto& [x, fx] : f.values()) {
    double gx = g(x);
    if (gx == 0.0) continue;
    double w = g_omega.omega(x);
    acc += w * w * fx * gx;
  }
  return acc;
}

SchrodingerOperator gauge_to_schrodinger(const LaplacianSpec& L) {
  auto graph = L.graph;
  const WeightedGraph& g = *graph;
  auto a = [&g](VertexId x, VertexId y) { return g.cond(x, y) / (g.omega(x) * g.omega(y)); };
  auto W = [&g](VertexId x) {
    // W(x) = (1/ω_x) Σ_{y∼x} c_{x,y} (1/ω_x − 1/ω_y) = −(1/ω) Δ_{1,a} ω
    int i = g.index(x);
    double wx = g.omega_at(i);
    double acc = 0.0;
    for (const auto& h : g.adj(i)) acc += h.cond * (1.0 / wx - 1.0 / g.omega_at(h.target));
    return acc / wx;
  };
  return SchrodingerOperator(graph, a, W);
}

GraphFunction vertex_weight_unitary(const WeightedGraph& g, const GraphFunction& f,
                                    GaugeDirection dir) {
  GraphFunction out;
  for (const auto& [x, fx] : f.values()) {
    double w = g.omega(x);
    out.set(x, dir == GaugeDirection::forward ? fx * w : fx / w);
  }
  return out;
}

}  // namespace wgl
