#pragma once

#include <map>

#include "wgl/operators.hpp"

namespace wgl {

struct DirichletProblem {
  const SchrodingerOperator& P;
  FiniteRegion region;
  std::map<VertexId, double> boundary_data;  // u on ∂K
};

struct DirichletSolution {
  GraphFunction f;             // defined on all of K
  double residual = 0.0;       // max |Pf| over K̊, relative to row scale
  double positivity_margin = 0.0;  // smallest Rayleigh quotient estimate of the interior system
  int cg_iterations = 0;       // 0 when the dense factorization was used
};

/// Unique solution of (Pf)|K̊ ≡ 0, f|∂K ≡ u. Requires connected interior and
/// a strictly positive form on functions supported in K̊.
DirichletSolution solve_dirichlet(const DirichletProblem& prob);

struct HarnackCertificate {
  double alpha = 0.0;  // min edge conductance over K
  double A = 0.0;      // sum of conductances over K-edges
  double maxW = 0.0;   // max(0, max_K W)
  double k0 = 0.0;     // (maxW + A)/alpha
  long D = 0;          // edge count of K
  double k = 0.0;      // max(k0,1)^D; +inf when it overflows
  double log_k = 0.0;  // D·log(max(k0,1)); overflow-safe form used for checks
};

/// Function-independent constants from the local Harnack inequality.
HarnackCertificate harnack_certificate(const SchrodingerOperator& P, const FiniteRegion& region);

/// True iff every interior ratio φ(x)/φ(y) lies in [1/k, k]. Requires φ > 0
/// on K and (Pφ)|K̊ ≡ 0 up to residual tolerance.
bool check_harnack(const SchrodingerOperator& P, const FiniteRegion& region,
                   const GraphFunction& phi, const HarnackCertificate& cert);

struct MinimumPrincipleReport {
  bool has_negative_interior_min = false;
  bool constant_on_K = false;
  bool consistent = true;  // no negative interior min, or f constant on K
  VertexId min_vertex = 0;
  double min_value = 0.0;
};

/// Minimum-principle consistency check for W > 0 on K and (Pf)|K̊ ≥ 0.
MinimumPrincipleReport check_minimum_principle(const SchrodingerOperator& P,
                                               const FiniteRegion& region,
                                               const GraphFunction& f);

}  // namespace wgl
