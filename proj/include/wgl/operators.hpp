#pragma once

#include <functional>
#include <memory>

#include "wgl/graph.hpp"

namespace wgl {

/// The weighted graph Laplacian Δ_{ω,c}; ω and c live on the graph itself.
struct LaplacianSpec {
  std::shared_ptr<const WeightedGraph> graph;
};

/// Δ_{1,a} + W: unit vertex weight, edge conductance a, vertex potential W
/// (may be unbounded below). Only the adjacency of the underlying graph is
/// used; its ω and c are ignored.
class SchrodingerOperator {
 public:
  SchrodingerOperator(std::shared_ptr<const WeightedGraph> graph,
                      const std::function<double(VertexId, VertexId)>& a,
                      const std::function<double(VertexId)>& W);

  static SchrodingerOperator uniform(std::shared_ptr<const WeightedGraph> graph, double a0,
                                     double W0);

  const WeightedGraph& graph() const { return *graph_; }
  std::shared_ptr<const WeightedGraph> graph_ptr() const { return graph_; }

  double a(VertexId x, VertexId y) const;            // throws if not an edge
  double a_at(int i, size_t k) const { return a_[static_cast<size_t>(i)][k]; }
  double W(VertexId x) const { return W_[static_cast<size_t>(graph_->index(x))]; }
  double W_at(int i) const { return W_[static_cast<size_t>(i)]; }

  /// ((Δ_{1,a} + W) f)(x)
  double apply(const GraphFunction& f, VertexId x) const;

 private:
  std::shared_ptr<const WeightedGraph> graph_;
  std::vector<std::vector<double>> a_;  // parallel to graph adjacency
  std::vector<double> W_;
};

/// (Δ_{ω,c} f)(x) = (1/ω_x²) Σ_{y∼x} c_{x,y} (f(x) − f(y))
double apply_laplacian(const LaplacianSpec& L, const GraphFunction& f, VertexId x);

double apply_schrodinger(const SchrodingerOperator& P, const GraphFunction& f, VertexId x);

/// Q_c(f) = Σ_{{x,y}∈E} c_{x,y} (f(x) − f(y))², f finitely supported.
double quadratic_form(const LaplacianSpec& L, const GraphFunction& f);

/// Same form with the Schrödinger conductance a plus Σ W f².
double schrodinger_form(const SchrodingerOperator& P, const GraphFunction& f);

/// ⟨f,g⟩_{l²_ω} = Σ ω_x² f(x) g(x); ω read from the graph.
double inner_product_weighted(const GraphFunction& f, const GraphFunction& g,
                              const WeightedGraph& g_omega);

/// Gauge conjugation of Δ_{ω,c}: a = c/(ω_x ω_y), W = −(1/ω) Δ_{1,a} ω.
SchrodingerOperator gauge_to_schrodinger(const LaplacianSpec& L);

enum class GaugeDirection { forward, inverse };

/// U_ω f = ωf (forward, l²_ω → l²); inverse divides.
GraphFunction vertex_weight_unitary(const WeightedGraph& g, const GraphFunction& f,
                                    GaugeDirection dir);

}  // namespace wgl
