#pragma once

#include <optional>

#include "wgl/dirichlet.hpp"

namespace wgl {

/// One ball-exhaustion iterate: the normalized solution of the Dirichlet
/// problem on B_radius with boundary data 1.
struct ExhaustionState {
  VertexId x0 = 0;
  int radius = 0;
  GraphFunction phi;  // phi(x0) = 1 exactly after normalization
  double psi_x0 = 0.0;
  double residual = 0.0;  // max |P phi| on the ball interior
  bool skipped = false;   // degenerate ball (empty interior)
};

struct ExhaustionRadiusRow {
  int radius = 0;
  double psi_x0 = 0.0;
  double residual = 0.0;
  std::map<VertexId, double> monitored_values;  // absent vertices not in ball yet
};

struct ExhaustionResult {
  GraphFunction phi;  // last iterate
  bool converged = false;
  int final_radius = 0;
  double residual = 0.0;
  std::vector<ExhaustionRadiusRow> rows;
  // per monitored vertex: log k of the certificate of the first ball whose
  // interior contains it; phi stays inside [exp(-log k), exp(log k)]
  std::map<VertexId, double> window_log_k;
  int window_violations = 0;
  std::string stop_reason;  // "converged", "n_max", "truncation"
};

/// Solve on B_{radius} with u ≡ 1 and normalize at x0; radius-0 balls with
/// empty interior are skipped with a diagnostic flag.
ExhaustionState exhaustion_step(const SchrodingerOperator& P, VertexId x0, int radius);

/// Grow balls until the monitored values are stable for 3 consecutive radii
/// (within tol), n_max is reached, or the ball hits the truncation frontier.
/// Non-convergence is a reported outcome, not an error.
ExhaustionResult run_exhaustion(const SchrodingerOperator& P, VertexId x0, int n_max, double tol,
                                std::vector<VertexId> monitored = {});

/// Ground-state transform: omega = phi, c_{x,y} = a_{x,y} phi(x) phi(y).
/// phi must be strictly positive on every vertex of P's graph. When
/// residual_check_vertices is given, |P phi| is verified small there.
LaplacianSpec ground_state_transform(const SchrodingerOperator& P, const GraphFunction& phi,
                                     const std::vector<VertexId>& residual_check_vertices = {});

}  // namespace wgl
