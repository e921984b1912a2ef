#pragma once

#include "wgl/catalog.hpp"
#include "wgl/operators.hpp"

namespace wgl {

/// Edge length 1/sqrt(a); throws on nonpositive a.
double edge_length(double a);

struct MetricBall {
  VertexId center;
  double radius;
  std::vector<VertexId> members;            // sorted
  std::map<VertexId, double> distances;     // delta_a(center, ·) for members
};

/// Shortest-path distance under edge lengths 1/sqrt(a). Returns +inf for a
/// disconnected pair. Only the adjacency and a of P are used.
double delta_a(const SchrodingerOperator& P, VertexId x, VertexId y);

/// {x : delta_a(x0, x) <= R}. Errors if the ball is not interior to the
/// truncation (some frontier vertex within distance R+1).
MetricBall metric_ball(const SchrodingerOperator& P, VertexId x0, double R);

/// f(x) = min(1, delta_a(x, V \ B_{R+1})): 1 on B_R, 0 off B_{R+1},
/// 1-Lipschitz for delta_a.
GraphFunction cutoff_function(const SchrodingerOperator& P, VertexId x0, double R);

struct SeriesDiagnostic {
  enum class SumVerdict { Divergent, Convergent, Inconclusive };
  SumVerdict sum = SumVerdict::Inconclusive;
  // For the ray diagnostic: divergent edge-length series <=> complete metric.
  CompletenessVerdict completeness = CompletenessVerdict::Inconclusive;
  double exponent_p = 0.0;      // fitted decay exponent of the terms
  double log_exponent_q = 0.0;  // fitted log-correction exponent (secondary fit)
  bool used_secondary = false;
  std::vector<std::pair<long, double>> partial_sums;  // (n, S_n) at decades
};

/// Classifies divergence of sum 1/sqrt(a_k) along the ray: complete iff the
/// edge-length series diverges. Asymptotic classifier with explicit margins;
/// never a hard claim.
SeriesDiagnostic ray_completeness_diagnostic(const PathFamily& fam, long n_max);

/// Same exponent-fit machinery applied to sum omega_n^2 (the Keller-Lenz
/// proxy). divergent=true means the sum is infinite.
SeriesDiagnostic kl_proxy_check(const PathFamily& fam, long n_max);

}  // namespace wgl
