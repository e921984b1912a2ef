#include "wgl/esa_probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "wgl/linalg.hpp"
#include "wgl/metric.hpp"

namespace wgl {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

// strictly increasing comparison on (sign, log|v|) pairs
bool value_less(int s1, double l1, int s2, double l2) {
  if (s1 != s2) return s1 < s2;
  if (s1 > 0) return l1 < l2;
  if (s1 < 0) return l1 > l2;
  return false;
}

// gauge potential of a path family on the truncation [first, last]
double family_W(const PathFamily& fam, VertexId k, VertexId last) {
  double inv_k = 1.0 / fam.omega(k);
  double acc = 0.0;
  if (k > fam.first_vertex) acc += fam.cond(k - 1) * (inv_k - 1.0 / fam.omega(k - 1));
  if (k < last) acc += fam.cond(k) * (inv_k - 1.0 / fam.omega(k + 1));
  return acc * inv_k;
}

std::set<VertexId> support_neighborhood(const WeightedGraph& g, const GraphFunction& f) {
  std::set<VertexId> out;
  for (const auto& [x, v] : f.values()) {
    out.insert(x);
    for (VertexId y : g.neighbors(x)) out.insert(y);
  }
  return out;
}

void require_kernel_solution(const SchrodingerOperator& H, double lambda, const GraphFunction& v,
                             const std::set<VertexId>& where, double tol) {
  const auto& g = H.graph();
  for (VertexId x : where) {
    int i = g.index(x);
    double vx = v(x);
    double scale = std::abs((H.W(x) - lambda) * vx);
    auto row = g.adj(i);
    for (size_t k = 0; k < row.size(); ++k)
      scale += H.a_at(i, k) * (std::abs(vx) + std::abs(v(g.id(row[k].target))));
    double r = H.apply(v, x) - lambda * vx;
    if (std::abs(r) > tol * std::max(1.0, scale))
      throw precondition_error("(H-lambda)v != 0 at vertex " + std::to_string(x));
  }
}

// ⟨fv,(H−λ)(fv)⟩ summed directly over the support-neighborhood of f
double sesquilinear_direct(const SchrodingerOperator& H, double lambda, const GraphFunction& v,
                           const GraphFunction& f, const std::set<VertexId>& hood) {
  GraphFunction fv;
  for (const auto& [x, fx] : f.values())
    if (fx != 0.0) fv.set(x, fx * v(x));
  double acc = 0.0;
  for (VertexId x : hood) {
    double lhs = fv(x);
    if (lhs == 0.0) continue;
    acc += lhs * (H.apply(fv, x) - lambda * fv(x));
  }
  return acc;
}

struct Assembled {
  linalg::SymmetricSystem A;
  std::vector<VertexId> free;  // sorted
};

Assembled assemble_dirichlet(const SchrodingerOperator& H, std::vector<VertexId> free) {
  const auto& g = H.graph();
  if (free.empty()) free = g.ids();
  std::sort(free.begin(), free.end());
  std::map<VertexId, int> local;
  for (int i = 0; i < static_cast<int>(free.size()); ++i) local[free[static_cast<size_t>(i)]] = i;
  Assembled out;
  out.free = std::move(free);
  out.A.resize(static_cast<int>(out.free.size()));
  for (int i = 0; i < static_cast<int>(out.free.size()); ++i) {
    VertexId x = out.free[static_cast<size_t>(i)];
    int gi = g.index(x);
    double diag = H.W(x);
    auto row = g.adj(gi);
    for (size_t k = 0; k < row.size(); ++k) {
      diag += H.a_at(gi, k);  // Dirichlet: edges to non-free vertices stay on the diagonal
      if (auto it = local.find(g.id(row[k].target)); it != local.end())
        out.A.add_offdiag(i, it->second, -H.a_at(gi, k));
    }
    out.A.diag[static_cast<size_t>(i)] = diag;
  }
  return out;
}

}  // namespace

KernelProbeResult kernel_growth_probe(const PathFamily& fam, std::optional<double> lambda,
                                      long n_max) {
  if (n_max < 2) throw precondition_error("kernel_growth_probe needs n_max >= 2");
  const VertexId first = fam.first_vertex;
  const VertexId last = first + n_max;

  std::vector<double> W(static_cast<size_t>(n_max + 1));
  double min_W = std::numeric_limits<double>::infinity();
  for (long i = 0; i <= n_max; ++i) {
    W[static_cast<size_t>(i)] = family_W(fam, first + i, last);
    min_W = std::min(min_W, W[static_cast<size_t>(i)]);
  }
  KernelProbeResult res;
  res.family_id = fam.id;
  res.lambda = lambda ? *lambda : std::max(1.0, 1.0 - min_W);
  res.n_terms = n_max + 1;
  res.log_abs.resize(static_cast<size_t>(n_max + 1));
  res.sign.resize(static_cast<size_t>(n_max + 1));
  res.l2_partial_log.resize(static_cast<size_t>(n_max + 1));

  double prev = 0.0, cur = 1.0, offset = 0.0;  // v = (scaled value) * exp(offset)
  double l2 = kNegInf;
  for (long i = 0; i <= n_max; ++i) {
    res.sign[static_cast<size_t>(i)] = cur > 0.0 ? 1 : (cur < 0.0 ? -1 : 0);
    res.log_abs[static_cast<size_t>(i)] =
        cur == 0.0 ? kNegInf : offset + std::log(std::abs(cur));
    l2 = log_add_exp(l2, 2.0 * res.log_abs[static_cast<size_t>(i)]);
    res.l2_partial_log[static_cast<size_t>(i)] = l2;
    if (offset == 0.0 && static_cast<long>(res.raw_head.size()) == i && i < 64)
      res.raw_head.push_back(cur);
    if (i == n_max) break;

    VertexId k = first + i;
    double a_r = fam.a(k);
    double coeff = a_r + W[static_cast<size_t>(i)] + res.lambda;
    double next;
    if (i == 0) {
      next = coeff * cur / a_r;
    } else {
      double a_l = fam.a(k - 1);
      next = ((a_l + coeff) * cur - a_l * prev) / a_r;
    }
    if (!std::isfinite(next)) throw numeric_error("kernel recurrence overflow despite rescaling");
    prev = cur;
    cur = next;
    double mag = std::abs(cur);
    if (mag > 1e100) {
      prev /= mag;
      cur /= mag;
      offset += std::log(mag);
      res.rescaled = true;
    }
  }

  // scan from the tail for the onset of strict monotone increase
  long m = n_max + 1;
  for (long i = n_max; i >= 1; --i) {
    if (value_less(res.sign[static_cast<size_t>(i - 1)], res.log_abs[static_cast<size_t>(i - 1)],
                   res.sign[static_cast<size_t>(i)], res.log_abs[static_cast<size_t>(i)]))
      m = i - 1;
    else
      break;
  }
  if (m <= n_max - 1) res.monotone_from = m;

  const size_t half = static_cast<size_t>(n_max / 2);
  double tail_growth = res.l2_partial_log.back() - res.l2_partial_log[half];
  if (res.monotone_from && res.sign.back() > 0 && tail_growth > 0.05) {
    res.verdict = KernelProbeResult::Verdict::Grows;
  } else if (res.log_abs.back() < res.log_abs[half] - 1.0 && tail_growth < 1e-9) {
    res.verdict = KernelProbeResult::Verdict::Decays;
  }
  return res;
}

double agmon_identity_check(const SchrodingerOperator& H, double lambda, const GraphFunction& v,
                            const GraphFunction& f) {
  const auto& g = H.graph();
  auto hood = support_neighborhood(g, f);
  require_kernel_solution(H, lambda, v, hood, 1e-10);

  double lhs = sesquilinear_direct(H, lambda, v, f, hood);

  // edge form, each edge once, ascending order
  double edge_sum = 0.0;
  std::set<std::pair<VertexId, VertexId>> done;
  for (const auto& [x, fx] : f.values()) {
    int i = g.index(x);
    auto row = g.adj(i);
    for (size_t k = 0; k < row.size(); ++k) {
      VertexId y = g.id(row[k].target);
      auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
      if (!done.insert(key).second) continue;
      double d = f(key.first) - f(key.second);
      edge_sum += H.a_at(i, k) * v(key.first) * v(key.second) * d * d;
    }
  }
  // half-sum form over vertices (independent summation order)
  double half_sum = 0.0;
  for (VertexId x : hood) {
    double vx = v(x);
    int i = g.index(x);
    auto row = g.adj(i);
    double inner = 0.0;
    for (size_t k = 0; k < row.size(); ++k) {
      VertexId y = g.id(row[k].target);
      double d = f(x) - f(y);
      inner += H.a_at(i, k) * v(y) * d * d;
    }
    half_sum += vx * inner;
  }
  half_sum *= 0.5;

  double denom = std::max(std::abs(lhs), 1.0);
  return std::max(std::abs(lhs - edge_sum), std::abs(lhs - half_sum)) / denom;
}

RingEstimateReport ring_estimate_check(const SchrodingerOperator& H, double lambda,
                                       const GraphFunction& v, VertexId x0, double R) {
  const auto& g = H.graph();
  RingEstimateReport rep;
  rep.form_bound = form_lower_bound(H);
  if (!(rep.form_bound - lambda >= 1.0 - 1e-9))
    throw precondition_error("ring estimate needs lambda <= k - 1 (k = " +
                             std::to_string(rep.form_bound) + ")");
  const int N = g.max_degree();
  GraphFunction f = cutoff_function(H, x0, R);
  auto ball_R = metric_ball(H, x0, R);
  auto ball_R1 = metric_ball(H, x0, R + 1.0);

  std::set<VertexId> check(ball_R1.members.begin(), ball_R1.members.end());
  for (VertexId x : ball_R1.members)
    for (VertexId y : g.neighbors(x)) check.insert(y);
  require_kernel_solution(H, lambda, v, check, 1e-10);

  for (VertexId x : ball_R.members) rep.lower += v(x) * v(x);
  std::set<VertexId> inner(ball_R.members.begin(), ball_R.members.end());
  for (VertexId x : ball_R1.members)
    if (!inner.count(x)) rep.ring_mass += v(x) * v(x);
  // The sound upper bound runs over every vertex incident to an edge where
  // the cutoff changes value: a(df)^2 <= 1 by the Lipschitz property, and
  // each vertex meets at most N such edges. Restricting to the bare ring
  // B_{R+1} \ B_R would drop the jump edges into the complement.
  std::set<VertexId> jump;
  for (int i = 0; i < g.size(); ++i) {
    VertexId x = g.id(i);
    for (VertexId y : g.neighbors(x))
      if (f(x) != f(y)) {
        jump.insert(x);
        jump.insert(y);
      }
  }
  double jump_mass = 0.0;
  for (VertexId x : jump) jump_mass += v(x) * v(x);
  rep.upper = 0.5 * static_cast<double>(N) * jump_mass;
  rep.middle = sesquilinear_direct(H, lambda, v, f, support_neighborhood(g, f));

  double scale = std::max({1.0, std::abs(rep.lower), std::abs(rep.middle), std::abs(rep.upper)});
  rep.chain_holds = rep.lower <= rep.middle + 1e-9 * scale && rep.middle <= rep.upper + 1e-9 * scale;
  return rep;
}

double form_lower_bound(const SchrodingerOperator& H, const std::vector<VertexId>& free) {
  auto [A, verts] = assemble_dirichlet(H, free);
  auto eig = linalg::smallest_eigenvalue(A);
  if (!eig.converged) {
    std::string log;
    for (double r : eig.iterate_log) log += " " + std::to_string(r);
    throw numeric_error("form_lower_bound iteration did not converge; Rayleigh iterates:" + log);
  }
  // Re-evaluate the Rayleigh quotient through the edge form: the positive
  // part is a sum of squares, which keeps cancellation at the level of the
  // quotient instead of the matrix scale.
  const auto& g = H.graph();
  std::map<VertexId, int> local;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[static_cast<size_t>(i)]] = i;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    VertexId x = verts[static_cast<size_t>(i)];
    double vx = eig.vector[static_cast<size_t>(i)];
    den += vx * vx;
    num += H.W(x) * vx * vx;
    int gi = g.index(x);
    auto row = g.adj(gi);
    for (size_t k = 0; k < row.size(); ++k) {
      VertexId y = g.id(row[k].target);
      auto it = local.find(y);
      if (it == local.end()) {
        num += H.a_at(gi, k) * vx * vx;  // Dirichlet zero outside
      } else if (y > x) {
        double d = vx - eig.vector[static_cast<size_t>(it->second)];
        num += H.a_at(gi, k) * d * d;
      }
    }
  }
  return num / den;
}

double form_lower_bound_weighted(const LaplacianSpec& L, const std::vector<VertexId>& free_in) {
  const auto& g = *L.graph;
  std::vector<VertexId> free = free_in.empty() ? g.ids() : free_in;
  std::sort(free.begin(), free.end());
  std::map<VertexId, int> local;
  for (int i = 0; i < static_cast<int>(free.size()); ++i) local[free[static_cast<size_t>(i)]] = i;
  linalg::SymmetricSystem A;
  A.resize(static_cast<int>(free.size()));
  for (int i = 0; i < static_cast<int>(free.size()); ++i) {
    VertexId x = free[static_cast<size_t>(i)];
    int gi = g.index(x);
    double wx = g.omega_at(gi);
    double diag = 0.0;
    for (const auto& h : g.adj(gi)) {
      diag += h.cond / (wx * wx);
      if (auto it = local.find(g.id(h.target)); it != local.end())
        A.add_offdiag(i, it->second, -h.cond / (wx * g.omega_at(h.target)));
    }
    A.diag[static_cast<size_t>(i)] = diag;
  }
  auto eig = linalg::smallest_eigenvalue(A);
  if (!eig.converged) throw numeric_error("weighted form bound iteration did not converge");
  double num = 0.0, den = 0.0;
  for (int i = 0; i < static_cast<int>(free.size()); ++i) {
    VertexId x = free[static_cast<size_t>(i)];
    int gi = g.index(x);
    double wx = g.omega_at(gi);
    double vx = eig.vector[static_cast<size_t>(i)];
    den += vx * vx;
    for (const auto& h : g.adj(gi)) {
      VertexId y = g.id(h.target);
      auto it = local.find(y);
      if (it == local.end()) {
        num += h.cond * (vx / wx) * (vx / wx);
      } else if (y > x) {
        double d = vx / wx - eig.vector[static_cast<size_t>(it->second)] / g.omega_at(h.target);
        num += h.cond * d * d;
      }
    }
  }
  return num / den;
}

}  // namespace wgl
