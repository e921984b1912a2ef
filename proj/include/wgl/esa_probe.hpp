#pragma once

#include <optional>
#include <string>

#include "wgl/catalog.hpp"
#include "wgl/operators.hpp"

namespace wgl {

/// Kernel-growth evidence for a shifted path-family operator. Values are kept
/// in log-magnitude form so exponential growth never overflows.
struct KernelProbeResult {
  std::string family_id;
  double lambda = 0.0;   // the shift actually used
  long n_terms = 0;
  std::vector<double> raw_head;  // first values, unscaled
  std::vector<double> log_abs;   // log |v(n)|, index n - first_vertex
  std::vector<int> sign;
  std::optional<long> monotone_from;   // index from which v is strictly increasing
  std::vector<double> l2_partial_log;  // log of partial sums of v²
  bool rescaled = false;
  enum class Verdict { Grows, Decays, Inconclusive } verdict = Verdict::Inconclusive;
};

/// Forward-solves (H + lambda) v = 0 along the ray from the degree-1 end with
/// v(first) = 1; H is the gauge conjugate of the family. Default shift makes
/// the effective potential >= 1 on the truncation.
KernelProbeResult kernel_growth_probe(const PathFamily& fam, std::optional<double> lambda,
                                      long n_max);

/// |LHS − RHS| / max(|LHS|, 1) for the summation identity
/// ⟨fv,(H−λ)(fv)⟩ = Σ_E a v(x)v(y)[f(x)−f(y)]², with (H−λ)v = 0 verified on
/// the support-neighborhood of f first. Also checks the half-sum form.
double agmon_identity_check(const SchrodingerOperator& H, double lambda, const GraphFunction& v,
                            const GraphFunction& f);

struct RingEstimateReport {
  double form_bound = 0.0;  // k
  double lower = 0.0;       // Σ_{B_R} v²
  double middle = 0.0;      // ⟨fv,(H−λ)(fv)⟩
  double ring_mass = 0.0;   // Σ_{B_{R+1}∖B_R} v², reported for reference
  double upper = 0.0;       // ½ N Σ v² over vertices meeting a cutoff jump
  bool chain_holds = false;
};

/// Verifies Σ_{B_R} v² ≤ ⟨fv,(H−λ)(fv)⟩ ≤ ½N Σ v² with the metric cutoff f;
/// the upper sum runs over every vertex incident to an edge where f changes
/// (the bare ring B_{R+1}∖B_R misses the jump edges into the complement).
/// Requires k − λ ≥ 1 and (H−λ)v = 0 near B_{R+1}.
RingEstimateReport ring_estimate_check(const SchrodingerOperator& H, double lambda,
                                       const GraphFunction& v, VertexId x0, double R);

/// Smallest Rayleigh quotient of the truncated form with Dirichlet (zero)
/// exterior condition on the non-free vertices; free empty means all.
double form_lower_bound(const SchrodingerOperator& H, const std::vector<VertexId>& free = {});

/// Same bound for Δ_{ω,c} in the ω-weighted norm (independent assembly).
double form_lower_bound_weighted(const LaplacianSpec& L, const std::vector<VertexId>& free = {});

}  // namespace wgl
