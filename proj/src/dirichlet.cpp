#include "wgl/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "wgl/linalg.hpp"

namespace wgl {

namespace {

// max over interior of |Pf| relative to the local term scale
double interior_residual(const SchrodingerOperator& P, const std::vector<VertexId>& interior,
                         const GraphFunction& f) {
  const auto& g = P.graph();
  double worst = 0.0;
  for (VertexId x : interior) {
    int i = g.index(x);
    double fx = f(x);
    double scale = std::abs(P.W(x) * fx);
    auto row = g.adj(i);
    for (size_t k = 0; k < row.size(); ++k)
      scale += P.a_at(i, k) * (std::abs(fx) + std::abs(f(g.id(row[k].target))));
    worst = std::max(worst, std::abs(P.apply(f, x)) / std::max(1.0, scale));
  }
  return worst;
}

}  // namespace

DirichletSolution solve_dirichlet(const DirichletProblem& prob) {
  const auto& P = prob.P;
  const auto& g = P.graph();
  const auto& region = prob.region;

  if (region.boundary.empty()) {
    bool nonzero = false;
    for (const auto& [x, u] : prob.boundary_data) nonzero |= (u != 0.0);
    if (nonzero) throw precondition_error("boundary data given but the region has empty boundary");
  }
  for (VertexId x : region.boundary)
    if (!prob.boundary_data.count(x))
      throw precondition_error("boundary data missing at vertex " + std::to_string(x));
  if (region.interior.empty()) throw precondition_error("region has empty interior");
  if (!region.interior_connected) throw precondition_error("region interior is not connected");

  const auto& interior = region.interior;  // sorted ascending
  const int n = static_cast<int>(interior.size());
  std::map<VertexId, int> local;
  for (int i = 0; i < n; ++i) local[interior[static_cast<size_t>(i)]] = i;

  std::set<VertexId> bset(region.boundary.begin(), region.boundary.end());

  linalg::SymmetricSystem A;
  A.resize(n);
  std::vector<double> rhs(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    VertexId x = interior[static_cast<size_t>(i)];
    int gi = g.index(x);
    double diag = P.W(x);
    auto row = g.adj(gi);
    for (size_t k = 0; k < row.size(); ++k) {
      VertexId y = g.id(row[k].target);
      double axy = P.a_at(gi, k);
      diag += axy;
      if (auto it = local.find(y); it != local.end()) {
        A.add_offdiag(i, it->second, -axy);
      } else if (bset.count(y)) {
        rhs[static_cast<size_t>(i)] += axy * prob.boundary_data.at(y);
      } else {
        // interior vertices have all neighbors in K by definition
        throw precondition_error("region interior is inconsistent at vertex " + std::to_string(x));
      }
    }
    A.diag[static_cast<size_t>(i)] = diag;
  }

  const double tau = 1e-12 * std::max(1.0, A.norm_inf());
  if (!linalg::is_positive_definite(A, tau))
    throw numeric_error("form is not strictly positive on functions supported in the interior");
  auto eig = linalg::smallest_eigenvalue(A);
  if (!(eig.value > 1e-12))
    throw numeric_error("positivity margin " + std::to_string(eig.value) + " below threshold");

  linalg::SolveStats stats;
  std::vector<double> x = linalg::solve_spd(A, rhs, &stats);

  DirichletSolution out;
  out.positivity_margin = eig.value;
  out.cg_iterations = stats.iterations;
  for (VertexId b : region.boundary) out.f.set(b, prob.boundary_data.at(b));
  for (int i = 0; i < n; ++i) out.f.set(interior[static_cast<size_t>(i)], x[static_cast<size_t>(i)]);
  out.residual = interior_residual(P, interior, out.f);
  if (out.residual > 1e-8)
    throw numeric_error("Dirichlet residual " + std::to_string(out.residual) + " exceeds 1e-8");
  return out;
}

HarnackCertificate harnack_certificate(const SchrodingerOperator& P, const FiniteRegion& region) {
  const auto& g = P.graph();
  std::set<VertexId> K(region.all.begin(), region.all.end());
  HarnackCertificate cert;
  cert.alpha = std::numeric_limits<double>::infinity();
  bool any_edge = false;
  for (VertexId x : region.all) {
    int i = g.index(x);
    auto row = g.adj(i);
    for (size_t k = 0; k < row.size(); ++k) {
      VertexId y = g.id(row[k].target);
      if (y < x || !K.count(y)) continue;  // count each K-edge once
      any_edge = true;
      double axy = P.a_at(i, k);
      cert.alpha = std::min(cert.alpha, axy);
      cert.A += axy;
      ++cert.D;
    }
    cert.maxW = std::max(cert.maxW, P.W(x));
  }
  if (!any_edge) throw precondition_error("region has no edges; Harnack certificate undefined");
  cert.maxW = std::max(0.0, cert.maxW);
  cert.k0 = (cert.maxW + cert.A) / cert.alpha;
  // chaining needs k0 >= 1
  cert.log_k = static_cast<double>(cert.D) * std::log(std::max(cert.k0, 1.0));
  cert.k = std::exp(cert.log_k);  // may overflow to +inf; log_k stays usable
  return cert;
}

bool check_harnack(const SchrodingerOperator& P, const FiniteRegion& region,
                   const GraphFunction& phi, const HarnackCertificate& cert) {
  for (VertexId x : region.all)
    if (!(phi(x) > 0.0))
      throw precondition_error("phi is not strictly positive at vertex " + std::to_string(x));
  if (interior_residual(P, region.interior, phi) > 1e-8)
    throw precondition_error("phi is not P-harmonic on the region interior");
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (VertexId x : region.interior) {
    lo = std::min(lo, phi(x));
    hi = std::max(hi, phi(x));
  }
  if (region.interior.empty()) return true;
  // worst ratio is hi/lo; compare in log space since k may overflow
  return std::log(hi) - std::log(lo) <= cert.log_k + 1e-12;
}

MinimumPrincipleReport check_minimum_principle(const SchrodingerOperator& P,
                                               const FiniteRegion& region,
                                               const GraphFunction& f) {
  for (VertexId x : region.all)
    if (!(P.W(x) > 0.0))
      throw precondition_error("minimum principle requires W > 0 on K (fails at vertex " +
                               std::to_string(x) + ")");
  for (VertexId x : region.interior) {
    double v = apply_schrodinger(P, f, x);
    if (v < -1e-10 * std::max(1.0, std::abs(f(x))))
      throw precondition_error("Pf >= 0 fails at interior vertex " + std::to_string(x));
  }
  MinimumPrincipleReport rep;
  double min_all = std::numeric_limits<double>::infinity();
  double max_all = -std::numeric_limits<double>::infinity();
  for (VertexId x : region.all) {
    min_all = std::min(min_all, f(x));
    max_all = std::max(max_all, f(x));
  }
  for (VertexId x : region.interior) {
    double v = f(x);
    if (v < 0.0 && v <= min_all + 1e-14 * std::max(1.0, std::abs(min_all))) {
      rep.has_negative_interior_min = true;
      rep.min_vertex = x;
      rep.min_value = v;
      break;
    }
  }
  rep.constant_on_K = (max_all - min_all) <= 1e-12 * std::max(1.0, std::abs(max_all));
  rep.consistent = !rep.has_negative_interior_min || rep.constant_on_K;
  return rep;
}

}  // namespace wgl
