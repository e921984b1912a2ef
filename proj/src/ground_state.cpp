#include "wgl/ground_state.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wgl {

ExhaustionState exhaustion_step(const SchrodingerOperator& P, VertexId x0, int radius) {
  const auto& g = P.graph();
  auto ball = combinatorial_ball(g, x0, radius);
  auto region = region_from_vertexset(g, {ball.members.begin(), ball.members.end()});

  ExhaustionState st;
  st.x0 = x0;
  st.radius = radius;
  if (region.interior.empty()) {
    st.skipped = true;  // degenerate ball, nothing to solve
    return st;
  }
  std::map<VertexId, double> u;
  for (VertexId b : region.boundary) u[b] = 1.0;
  auto sol = solve_dirichlet({P, region, u});
  st.psi_x0 = sol.f(x0);
  if (!(st.psi_x0 > 0.0))
    throw numeric_error("exhaustion solution not positive at the origin");
  for (const auto& [x, v] : sol.f.values()) st.phi.set(x, v / st.psi_x0);
  st.phi.set(x0, 1.0);
  st.residual = 0.0;
  for (VertexId x : region.interior)
    st.residual = std::max(st.residual, std::abs(apply_schrodinger(P, st.phi, x)));
  return st;
}

ExhaustionResult run_exhaustion(const SchrodingerOperator& P, VertexId x0, int n_max, double tol,
                                std::vector<VertexId> monitored) {
  if (n_max < 1) throw precondition_error("run_exhaustion needs n_max >= 1");
  if (monitored.empty()) monitored.push_back(x0);
  const auto& g = P.graph();
  std::set<VertexId> frontier(g.frontier().begin(), g.frontier().end());

  ExhaustionResult res;
  GraphFunction prev;
  bool have_prev = false;
  int stable = 0;
  res.stop_reason = "n_max";

  for (int n = 1; n <= n_max; ++n) {
    auto ball = combinatorial_ball(g, x0, n);
    bool hits_frontier = false;
    for (VertexId m : ball.members) hits_frontier |= frontier.count(m) != 0;
    auto region = region_from_vertexset(g, {ball.members.begin(), ball.members.end()});
    if (hits_frontier || region.boundary.empty()) {
      res.stop_reason = "truncation";
      break;
    }

    auto st = exhaustion_step(P, x0, n);
    if (st.skipped) continue;
    res.phi = st.phi;
    res.final_radius = n;
    res.residual = st.residual;

    ExhaustionRadiusRow row;
    row.radius = n;
    row.psi_x0 = st.psi_x0;
    row.residual = st.residual;

    std::set<VertexId> interior(region.interior.begin(), region.interior.end());
    bool all_monitored_in = true;
    for (VertexId m : monitored) {
      if (!st.phi.in_support(m)) {
        all_monitored_in = false;
        continue;
      }
      row.monitored_values[m] = st.phi(m);
      if (!res.window_log_k.count(m) && interior.count(m)) {
        auto cert = harnack_certificate(P, region);
        res.window_log_k[m] = cert.log_k;
      }
      if (auto it = res.window_log_k.find(m); it != res.window_log_k.end()) {
        if (std::abs(std::log(st.phi(m))) > it->second + 1e-12) ++res.window_violations;
      }
      if (!interior.count(m)) all_monitored_in = false;
    }
    res.rows.push_back(row);

    if (have_prev && all_monitored_in) {
      double delta = 0.0;
      for (VertexId m : monitored) delta = std::max(delta, std::abs(st.phi(m) - prev(m)));
      stable = delta < tol ? stable + 1 : 0;
      if (stable >= 3) {
        res.converged = true;
        res.stop_reason = "converged";
        break;
      }
    }
    prev = st.phi;
    have_prev = true;
  }
  return res;
}

LaplacianSpec ground_state_transform(const SchrodingerOperator& P, const GraphFunction& phi,
                                     const std::vector<VertexId>& residual_check_vertices) {
  const auto& g = P.graph();
  for (int i = 0; i < g.size(); ++i)
    if (!(phi(g.id(i)) > 0.0))
      throw precondition_error("ground-state transform needs phi > 0 (fails at vertex " +
                               std::to_string(g.id(i)) + ")");
  for (VertexId x : residual_check_vertices) {
    double r = apply_schrodinger(P, phi, x);
    double scale = std::max(1.0, std::abs(P.W(x) * phi(x)));
    if (std::abs(r) > 1e-8 * scale)
      throw precondition_error("phi is not P-harmonic at vertex " + std::to_string(x));
  }
  std::vector<std::pair<VertexId, double>> vw;
  std::vector<WeightedGraph::Edge> edges;
  for (int i = 0; i < g.size(); ++i) vw.emplace_back(g.id(i), phi(g.id(i)));
  for (int i = 0; i < g.size(); ++i) {
    VertexId x = g.id(i);
    auto row = g.adj(i);
    for (size_t k = 0; k < row.size(); ++k) {
      VertexId y = g.id(row[k].target);
      if (y < x) continue;
      edges.push_back({x, y, P.a_at(i, k) * phi(x) * phi(y)});
    }
  }
  auto out = std::make_shared<WeightedGraph>(vw, edges);
  out->set_frontier(g.frontier());
  return LaplacianSpec{out};
}

}  // namespace wgl
