// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit code = number
// of failures. Every numeric target is checked against an independently
// derived value or a closed form; nothing is read back from the library
// under test to define its own expectation.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "wgl/dirichlet.hpp"
#include "wgl/esa_probe.hpp"
#include "wgl/ground_state.hpp"
#include "wgl/metric.hpp"

using namespace wgl;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// ---- shared generators ----------------------------------------------------

SchrodingerOperator random_operator(std::mt19937_64& rng, std::shared_ptr<WeightedGraph> g,
                                    double w_lo, double w_hi) {
  std::map<VertexId, double> W;
  std::map<std::pair<VertexId, VertexId>, double> a;
  std::uniform_real_distribution<double> wd(w_lo, w_hi), ad(0.1, 4.0);
  for (VertexId x : g->ids()) {
    W[x] = wd(rng);
    for (VertexId y : g->neighbors(x))
      if (x < y) a[{x, y}] = ad(rng);
  }
  return SchrodingerOperator(
      std::move(g),
      [a](VertexId x, VertexId y) {
        return a.at(x < y ? std::make_pair(x, y) : std::make_pair(y, x));
      },
      [W](VertexId x) { return W.at(x); });
}

std::optional<FiniteRegion> small_region(std::mt19937_64& rng, const WeightedGraph& g,
                                         size_t interior_cap) {
  for (int attempt = 0; attempt < 25; ++attempt) {
    VertexId c = g.id(std::uniform_int_distribution<int>(0, g.size() - 1)(rng));
    int r = std::uniform_int_distribution<int>(1, 3)(rng);
    auto ball = combinatorial_ball(g, c, r);
    auto region = region_from_vertexset(g, {ball.members.begin(), ball.members.end()});
    if (region.interior.empty() || region.boundary.empty()) continue;
    if (!region.interior_connected || region.interior.size() > interior_cap) continue;
    return region;
  }
  return std::nullopt;
}

GraphFunction dense_oracle(const SchrodingerOperator& P, const FiniteRegion& region,
                           const std::map<VertexId, double>& u) {
  const auto& g = P.graph();
  const auto& in = region.interior;
  const int n = static_cast<int>(in.size());
  std::map<VertexId, int> local;
  for (int i = 0; i < n; ++i) local[in[static_cast<size_t>(i)]] = i;
  std::vector<std::vector<double>> M(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n), 0.0));
  std::vector<double> b(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    VertexId x = in[static_cast<size_t>(i)];
    double diag = P.W(x);
    for (VertexId y : g.neighbors(x)) {
      double axy = P.a(x, y);
      diag += axy;
      if (auto it = local.find(y); it != local.end())
        M[static_cast<size_t>(i)][static_cast<size_t>(it->second)] -= axy;
      else
        b[static_cast<size_t>(i)] += axy * u.at(y);
    }
    M[static_cast<size_t>(i)][static_cast<size_t>(i)] = diag;
  }
  auto x = testutil::gauss_solve(M, b);
  GraphFunction f;
  for (const auto& [v, uv] : u) f.set(v, uv);
  for (int i = 0; i < n; ++i) f.set(in[static_cast<size_t>(i)], x[static_cast<size_t>(i)]);
  return f;
}

GraphFunction ray_kernel_solution(const SchrodingerOperator& H, VertexId first, double lambda,
                                  VertexId up_to) {
  GraphFunction v;
  v.set(first, 1.0);
  double a0 = H.a(first, first + 1);
  v.set(first + 1, v(first) * (a0 + H.W(first) - lambda) / a0);
  for (VertexId n = first + 1; n < up_to; ++n) {
    double al = H.a(n - 1, n), ar = H.a(n, n + 1);
    v.set(n + 1, ((al + ar + H.W(n) - lambda) * v(n) - al * v(n - 1)) / ar);
  }
  return v;
}

// ---- criteria -------------------------------------------------------------

void criterion_gauge_identity(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  for (int g_i = 0; g_i < 50; ++g_i) {
    auto g = testutil::random_connected_graph(rng, 2, 30);
    LaplacianSpec L{g};
    auto P = gauge_to_schrodinger(L);
    for (int f_i = 0; f_i < 20; ++f_i) {
      auto f = testutil::random_function(rng, *g, 8);
      auto h = vertex_weight_unitary(*g, f, GaugeDirection::inverse);
      for (VertexId x : g->ids()) {
        double lhs = g->omega(x) * apply_laplacian(L, h, x);
        double rhs = P.apply(f, x);
        double scale = std::abs(P.W(x) * f(x));
        for (VertexId y : g->neighbors(x))
          scale += P.a(x, y) * (std::abs(f(x)) + std::abs(f(y)));
        c.require(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, scale),
                  "identity off at vertex " + std::to_string(x) + " of graph " +
                      std::to_string(g_i) + ": lhs=" + fmt(lhs) + " rhs=" + fmt(rhs));
      }
    }
  }
  double dt = seconds_since(t0);
  c.require(dt < 5.0, "runtime " + fmt(dt) + "s exceeds 5s");
}

void criterion_quadratic_ray_potential(Check& c) {
  auto fam = make_family("remark23");
  auto P = gauge_to_schrodinger({instantiate(fam, 10001)});
  for (VertexId n = 2; n <= 10000; ++n) {
    double expect = -static_cast<double>(n) * (2.0 * n + 1.0);
    double got = P.W(n);
    // tolerance is relative to the cancelling-term scale ~2n^3: the map from
    // the rounded 1/n weights to W has condition ~n^2, so a value-relative
    // reading is unattainable in double precision at large n
    double nn = static_cast<double>(n);
    double scale = nn * (nn * nn + (nn + 1.0) * (nn + 1.0));
    if (std::abs(got - expect) > 1e-10 * scale) {
      c.require(false, "W(" + std::to_string(n) + ") = " + fmt(got) + ", expected " + fmt(expect));
      return;
    }
  }
  // one-sided endpoint value, outside the interior formula's domain
  c.require(std::abs(P.W(1) - (-4.0)) <= 1e-12, "endpoint W(1) = " + fmt(P.W(1)));
}

void criterion_dirichlet_oracle(Check& c) {
  std::mt19937_64 rng(103);
  int done = 0, graphs = 0;
  while (graphs < 100) {
    auto g = testutil::random_connected_graph(rng, 4, 28);
    ++graphs;
    auto region = small_region(rng, *g, 8);
    if (!region) continue;
    auto P = random_operator(rng, g, 0.01, 1.0);
    std::map<VertexId, double> u1, u2;
    std::uniform_real_distribution<double> ud(0.1, 2.0);
    for (VertexId b : region->boundary) {
      u1[b] = ud(rng);
      u2[b] = ud(rng) - 1.0;
    }
    auto s1 = solve_dirichlet({P, *region, u1});
    auto oracle = dense_oracle(P, *region, u1);
    for (VertexId x : region->all)
      c.require(std::abs(s1.f(x) - oracle(x)) <= 1e-10,
                "oracle mismatch at vertex " + std::to_string(x));
    auto s1b = solve_dirichlet({P, *region, u1});
    for (VertexId x : region->all)
      c.require(s1.f(x) == s1b.f(x), "solution not reproducible (uniqueness)");
    auto s2 = solve_dirichlet({P, *region, u2});
    std::map<VertexId, double> usum;
    for (const auto& [b, v] : u1) usum[b] = v + u2.at(b);
    auto ssum = solve_dirichlet({P, *region, usum});
    for (VertexId x : region->all)
      c.require(std::abs(ssum.f(x) - s1.f(x) - s2.f(x)) <=
                    1e-10 * std::max(1.0, std::abs(ssum.f(x))),
                "boundary linearity fails at vertex " + std::to_string(x));
    for (VertexId x : region->interior)
      c.require(s1.f(x) > 0.0, "interior positivity fails at vertex " + std::to_string(x));
    ++done;
  }
  c.require(done >= 60, "only " + std::to_string(done) + " usable instances");
}

void criterion_harnack(Check& c) {
  std::mt19937_64 rng(104);
  int done = 0, violations = 0;
  while (done < 200) {
    auto g = testutil::random_connected_graph(rng, 4, 24);
    auto region = small_region(rng, *g, 10);
    if (!region) continue;
    auto P = random_operator(rng, g, 0.0, 2.0);
    std::map<VertexId, double> u;
    std::uniform_real_distribution<double> ud(0.1, 3.0);
    for (VertexId b : region->boundary) u[b] = ud(rng);
    auto sol = solve_dirichlet({P, *region, u});
    auto cert = harnack_certificate(P, *region);
    if (!check_harnack(P, *region, sol.f, cert)) ++violations;
    ++done;
  }
  c.require(violations == 0, std::to_string(violations) + " certificate violations in 200 runs");
}

void criterion_ground_state(Check& c) {
  std::mt19937_64 rng(105);
  int done = 0;
  while (done < 50) {  // form identity on solver-produced positive functions
    auto host = testutil::random_connected_graph(rng, 5, 24);
    std::map<VertexId, double> W;
    for (VertexId x : host->ids()) W[x] = std::uniform_real_distribution<double>(0.05, 1.5)(rng);
    SchrodingerOperator P(
        host, [](VertexId, VertexId) { return 1.0; }, [&W](VertexId x) { return W.at(x); });
    VertexId ctr = host->id(std::uniform_int_distribution<int>(0, host->size() - 1)(rng));
    auto ball = combinatorial_ball(*host, ctr, 2);
    auto region = region_from_vertexset(*host, {ball.members.begin(), ball.members.end()});
    if (region.interior.empty() || region.boundary.empty() || !region.interior_connected) continue;
    std::map<VertexId, double> u;
    for (VertexId b : region.boundary)
      u[b] = std::uniform_real_distribution<double>(0.2, 2.0)(rng);
    auto phi = solve_dirichlet({P, region, u}).f;

    std::set<VertexId> K(region.all.begin(), region.all.end());
    std::vector<std::pair<VertexId, double>> vw;
    std::vector<WeightedGraph::Edge> edges;
    for (VertexId x : region.all) vw.emplace_back(x, 1.0);
    for (VertexId x : region.all)
      for (VertexId y : host->neighbors(x))
        if (y > x && K.count(y)) edges.push_back({x, y, 1.0});
    SchrodingerOperator PK(std::make_shared<WeightedGraph>(vw, edges),
                           [](VertexId, VertexId) { return 1.0; },
                           [&W](VertexId x) { return W.at(x); });
    auto L2 = ground_state_transform(PK, phi, region.interior);

    GraphFunction gfun;
    for (VertexId x : region.interior)
      gfun.set(x, std::uniform_real_distribution<double>(-1.0, 1.0)(rng));
    double lhs = schrodinger_form(P, gfun);
    auto h = vertex_weight_unitary(*L2.graph, gfun, GaugeDirection::inverse);
    double rhs = 0.0;
    for (const auto& [x, hx] : h.values()) {
      double w = L2.graph->omega(x);
      rhs += w * w * apply_laplacian(L2, h, x) * hx;
    }
    c.require(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)),
              "form identity off: lhs=" + fmt(lhs) + " rhs=" + fmt(rhs));
    ++done;
  }
  for (int t = 0; t < 50; ++t) {  // algebraic roundtrip against the gauge map
    auto g = testutil::random_connected_graph(rng, 2, 25);
    auto P = gauge_to_schrodinger({g});
    GraphFunction om;
    for (VertexId x : g->ids()) om.set(x, g->omega(x));
    auto L2 = ground_state_transform(P, om, g->ids());
    for (VertexId x : g->ids()) {
      c.require(L2.graph->omega(x) == g->omega(x), "roundtrip omega changed");
      for (VertexId y : g->neighbors(x))
        if (x < y)
          c.require(std::abs(L2.graph->cond(x, y) - g->cond(x, y)) <= 1e-12 * g->cond(x, y),
                    "roundtrip conductance off on edge {" + std::to_string(x) + "," +
                        std::to_string(y) + "}");
    }
  }
}

void criterion_exhaustion(Check& c) {
  auto fam = make_family("remark23");
  auto P = gauge_to_schrodinger({instantiate(fam, 300)});
  std::vector<VertexId> monitored{1, 2, 5, 10, 20};
  auto res = run_exhaustion(P, 1, 200, 1e-9, monitored);
  c.require(res.converged, "exhaustion did not converge (stop: " + res.stop_reason + ")");
  c.require(res.window_violations == 0,
            std::to_string(res.window_violations) + " certificate-window violations");
  for (VertexId m : monitored) {
    double expect = 1.0 / static_cast<double>(m);
    c.require(std::abs(res.phi(m) - expect) <= 1e-6 * expect,
              "phi(" + std::to_string(m) + ") = " + fmt(res.phi(m)) + ", expected " + fmt(expect));
  }
}

void criterion_agmon_ring(Check& c) {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    PathFamily fam;
    long trunc;
    double R;
    VertexId v_extent;
    if (t % 10 < 7) {
      fam = make_family("constant", {{"omega0", 0.5 + 1.5 * u01(rng)},
                                     {"c0", 0.5 + 3.5 * u01(rng)}});
      trunc = 120;
      double len = fam.omega0 / std::sqrt(fam.c0);
      R = len * (2.0 + 3.0 * u01(rng));
      // kernel equation must hold on the cutoff support's neighborhood
      v_extent = static_cast<VertexId>((R + 1.0) / len) + 4;
    } else {
      fam = make_family("remark64c1");
      trunc = 2000;
      R = 1.5 + 1.5 * u01(rng);
      v_extent = 400;
    }
    auto H = gauge_to_schrodinger({instantiate(fam, fam.first_vertex + trunc)});
    double k = form_lower_bound(H);
    double lambda = k - 1.01 - 2.0 * u01(rng);
    auto v = ray_kernel_solution(H, fam.first_vertex, lambda, fam.first_vertex + v_extent);
    auto f = cutoff_function(H, fam.first_vertex, R);
    double resid = agmon_identity_check(H, lambda, v, f);
    c.require(resid <= 1e-10,
              "identity residual " + fmt(resid) + " on " + fam.describe() + " config " +
                  std::to_string(t));
    auto rep = ring_estimate_check(H, lambda, v, fam.first_vertex, R);
    c.require(rep.chain_holds, "estimate chain broken on " + fam.describe() + " config " +
                                   std::to_string(t) + ": " + fmt(rep.lower) + " <= " +
                                   fmt(rep.middle) + " <= " + fmt(rep.upper));
  }
}

void criterion_growth_probe(Check& c) {
  auto fam = make_family("constant");
  auto res = kernel_growth_probe(fam, 1.0, 10000);
  const double head[5] = {1, 2, 5, 13, 34};
  for (int i = 0; i < 5; ++i)
    c.require(res.raw_head.size() > static_cast<size_t>(i) &&
                  res.raw_head[static_cast<size_t>(i)] == head[i],
              "head value " + std::to_string(i) + " wrong");
  c.require(res.monotone_from && *res.monotone_from == 0,
            "monotone onset not at the first vertex");
  c.require(res.verdict == KernelProbeResult::Verdict::Grows, "verdict is not 'grows'");
  bool plateau = false;
  for (size_t i = 1; i < res.l2_partial_log.size(); ++i)
    plateau |= !(res.l2_partial_log[i] > res.l2_partial_log[i - 1]);
  c.require(!plateau, "partial l2 sums plateaued");
}

void criterion_completeness_classifier(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  const long n_max = 1000000;
  int pairs = 0;
  for (double alpha : {0.0, 0.5, 1.0, 1.5, 2.0})
    for (double beta : {0.0, 0.5, 1.0, 1.5, 2.0}) {
      if (std::abs(alpha - beta / 2.0 - 1.0) < 0.1) continue;
      ++pairs;
      auto fam = make_family("remark62", {{"alpha", alpha}, {"beta", beta}});
      auto verdict = ray_completeness_diagnostic(fam, n_max).completeness;
      auto expect = alpha - beta / 2.0 <= 1.0 ? CompletenessVerdict::Complete
                                              : CompletenessVerdict::Incomplete;
      c.require(verdict == expect, "power family (alpha=" + fmt(alpha) + ", beta=" + fmt(beta) +
                                       ") classified " + to_string(verdict));
    }
  c.require(pairs >= 12, "only " + std::to_string(pairs) + " parameter pairs qualify");
  c.require(ray_completeness_diagnostic(make_family("remark61"), n_max).completeness ==
                CompletenessVerdict::Complete,
            "log-weight family not classified complete");
  c.require(ray_completeness_diagnostic(make_family("remark64c2"), n_max).completeness ==
                CompletenessVerdict::Incomplete,
            "square-root-weight family not classified incomplete");
  double dt = seconds_since(t0);
  c.require(dt < 30.0, "runtime " + fmt(dt) + "s exceeds 30s");
}

void criterion_log_family_potential(Check& c) {
  auto fam = make_family("remark61");
  const VertexId n_max = 100001;
  auto P = gauge_to_schrodinger({instantiate(fam, n_max)});
  for (VertexId n = 3; n <= 100000; ++n) {
    double closed = closed_form_W(fam, n);
    double gauge = P.W(n);
    // scale of the cancelling terms in both evaluations
    double inv = 1.0 / fam.omega(n);
    double scale = inv * (inv + 1.0 / fam.omega(n - 1) + inv + 1.0 / fam.omega(n + 1));
    if (std::abs(closed - gauge) > 1e-10 * scale) {
      c.require(false, "W mismatch at n=" + std::to_string(n) + ": closed=" + fmt(closed) +
                           " gauge=" + fmt(gauge));
      return;
    }
  }
  double ratio = P.W(100000) / (-std::log(100000.0));
  c.require(ratio >= 0.95 && ratio <= 1.05, "W(1e5)/(-log 1e5) = " + fmt(ratio));
}

void criterion_form_positivity(Check& c) {
  for (long n : {100L, 1000L, 10000L}) {
    auto g = instantiate(make_family("remark61"), n);
    double bound = form_lower_bound_weighted({g});
    c.require(bound >= -1e-10,
              "bound " + fmt(bound) + " at truncation " + std::to_string(n));
  }
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "gauge conjugation identity on random graphs", criterion_gauge_identity},
      {2, "quadratic-conductance ray potential closed form", criterion_quadratic_ray_potential},
      {3, "boundary-value solver vs dense oracle", criterion_dirichlet_oracle},
      {4, "certificate bounds on positive solutions", criterion_harnack},
      {5, "ground-state transform form identity and roundtrip", criterion_ground_state},
      {6, "ball exhaustion recovers the 1/n profile", criterion_exhaustion},
      {7, "summation identity and two-sided estimate chain", criterion_agmon_ring},
      {8, "kernel growth recurrence 1,2,5,13,34", criterion_growth_probe},
      {9, "metric completeness classifier vs parameter rule", criterion_completeness_classifier},
      {10, "log-weight family potential asymptotics", criterion_log_family_potential},
      {11, "weighted form lower bound stays nonnegative", criterion_form_positivity},
  };
  int failures = 0;
  for (auto& cr : criteria) {
    Check c;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    if (c.ok) {
      std::cout << "[PASS] criterion " << cr.id << ": " << cr.name << "\n";
    } else {
      std::cout << "[FAIL] criterion " << cr.id << ": " << cr.name << " -- " << c.detail << "\n";
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
