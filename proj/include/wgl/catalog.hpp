#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wgl/graph.hpp"

namespace wgl {

enum class CompletenessVerdict { Complete, Incomplete, Inconclusive };

std::string to_string(CompletenessVerdict v);

/// Closed-form 1-D weight family on a ray: vertex n carries omega(n), the
/// edge {n, n+1} carries cond(n). The vertex set starts at first_vertex; the
/// families mix ℕ, ℕ*, and ℕ∖{0,1}, recorded per family instead of being
/// normalized.
struct PathFamily {
  std::string id;
  std::string vertex_set;  // description, e.g. "N", "N*", "N\\{0,1}"
  VertexId first_vertex = 0;
  double alpha = 0.0, beta = 0.0, eps = 0.0;  // remark62 / remark63 parameters
  double omega0 = 1.0, c0 = 1.0;              // constant family parameters

  double omega(VertexId n) const;
  double cond(VertexId n) const;  // conductance of the edge {n, n+1}
  double a(VertexId n) const { return cond(n) / (omega(n) * omega(n + 1)); }

  std::string describe() const;
};

/// Known ids: remark23, remark61, remark62 (alpha, beta), remark63 (eps;
/// corrected growing-conductance exponent), remark63paper (eps; the exponent
/// as printed), remark64c1, remark64c2, constant (omega0, c0).
PathFamily make_family(const std::string& id, const std::map<std::string, double>& params = {});

std::vector<std::string> family_ids();

/// Truncated path graph on [first_vertex, n_max] with exact weights; the last
/// vertex is marked as the truncation frontier.
std::shared_ptr<WeightedGraph> instantiate(const PathFamily& fam, VertexId n_max);

/// Exact closed-form potential of the gauge-conjugated operator, valid at
/// interior vertices only (the degree-1 end gets a one-sided sum instead).
double closed_form_W(const PathFamily& fam, VertexId n);

/// Recorded leading term of W for families where the asymptotics are known.
double asymptotic_W(const PathFamily& fam, VertexId n);

/// Recorded asymptotic verdict for cross-checking the metric diagnostic.
CompletenessVerdict expected_completeness(const PathFamily& fam);

}  // namespace wgl
