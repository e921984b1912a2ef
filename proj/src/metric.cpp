#include "wgl/metric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

namespace wgl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// multi-source Dijkstra under edge lengths 1/sqrt(a); binary heap
std::vector<double> a_shortest_paths(const SchrodingerOperator& P, const std::vector<int>& sources) {
  const auto& g = P.graph();
  std::vector<double> dist(static_cast<size_t>(g.size()), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (int s : sources) {
    dist[static_cast<size_t>(s)] = 0.0;
    heap.emplace(0.0, s);
  }
  while (!heap.empty()) {
    auto [d, i] = heap.top();
    heap.pop();
    if (d > dist[static_cast<size_t>(i)]) continue;
    auto row = g.adj(i);
    for (size_t k = 0; k < row.size(); ++k) {
      double nd = d + edge_length(P.a_at(i, k));
      int j = row[k].target;
      if (nd < dist[static_cast<size_t>(j)]) {
        dist[static_cast<size_t>(j)] = nd;
        heap.emplace(nd, j);
      }
    }
  }
  return dist;
}

void require_ball_interior(const SchrodingerOperator& P, const std::vector<double>& dist,
                           double limit) {
  for (VertexId f : P.graph().frontier()) {
    if (!(dist[static_cast<size_t>(P.graph().index(f))] > limit))
      throw precondition_error("truncation too small: frontier within metric distance " +
                               std::to_string(limit));
  }
}

struct ExponentFit {
  double p = 0.0;
  double q = 0.0;
};

// least squares of log t on {-log k} (and optionally -log log k), centered
ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& kt, bool with_log_log) {
  std::vector<double> x1, x2, y;
  for (const auto& [k, t] : kt) {
    if (!(t > 0.0) || !std::isfinite(t)) continue;
    double lk = std::log(k);
    if (with_log_log && lk <= 1.0) continue;
    x1.push_back(lk);
    x2.push_back(with_log_log ? std::log(lk) : 0.0);
    y.push_back(std::log(t));
  }
  const size_t n = y.size();
  if (n < 8) throw numeric_error("too few usable samples for exponent fit");
  auto mean = [n](const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += e;
    return s / static_cast<double>(n);
  };
  double m1 = mean(x1), m2 = mean(x2), my = mean(y);
  double s11 = 0, s12 = 0, s22 = 0, s1y = 0, s2y = 0;
  for (size_t i = 0; i < n; ++i) {
    double d1 = x1[i] - m1, d2 = x2[i] - m2, dy = y[i] - my;
    s11 += d1 * d1;
    s12 += d1 * d2;
    s22 += d2 * d2;
    s1y += d1 * dy;
    s2y += d2 * dy;
  }
  ExponentFit fit;
  if (!with_log_log) {
    fit.p = -s1y / s11;
    return fit;
  }
  double det = s11 * s22 - s12 * s12;
  if (std::abs(det) < 1e-14 * s11 * std::max(s22, 1e-30))
    throw numeric_error("collinear regressors in log-correction fit");
  fit.p = -(s22 * s1y - s12 * s2y) / det;
  fit.q = -(s11 * s2y - s12 * s1y) / det;
  return fit;
}

std::vector<std::pair<double, double>> sample_terms(const std::function<double(long)>& term,
                                                    long lo, long hi, int count) {
  std::vector<std::pair<double, double>> out;
  long prev = -1;
  for (int i = 0; i < count; ++i) {
    double f = static_cast<double>(i) / (count - 1);
    long k = static_cast<long>(std::llround(std::exp(std::log(static_cast<double>(lo)) +
                                                     f * (std::log(static_cast<double>(hi)) -
                                                          std::log(static_cast<double>(lo))))));
    k = std::clamp(k, lo, hi);
    if (k == prev) continue;
    prev = k;
    out.emplace_back(static_cast<double>(k), term(k));
  }
  return out;
}

SeriesDiagnostic classify_series(const std::function<double(long)>& term, long k_first,
                                 long k_last) {
  if (k_last - k_first < 100) throw precondition_error("series diagnostic needs n_max >= 100");
  SeriesDiagnostic d;
  // partial sums at decades, ascending k
  double S = 0.0;
  long next_decade = 10;
  while (next_decade < k_first + 10) next_decade *= 10;
  for (long k = k_first; k <= k_last; ++k) {
    S += term(k);
    if (k == next_decade || k == k_last) {
      d.partial_sums.emplace_back(k, S);
      if (k == next_decade) next_decade *= 10;
    }
  }

  auto primary = fit_exponent(sample_terms(term, std::max(k_first, k_last / 10), k_last, 512),
                              /*with_log_log=*/false);
  d.exponent_p = primary.p;
  // A single-decade power fit carries an O(1/log n) bias for log-corrected
  // families (~0.086 at n = 2e5), so the secondary test triggers inside a
  // band wide enough to catch them at practical truncation sizes.
  const double band = 0.10;
  if (primary.p <= 1.0 - band) {
    d.sum = SeriesDiagnostic::SumVerdict::Divergent;
  } else if (primary.p >= 1.0 + band) {
    d.sum = SeriesDiagnostic::SumVerdict::Convergent;
  } else {
    d.used_secondary = true;
    long lo = std::max(k_first + 1, k_last / 100);
    auto fit = fit_exponent(sample_terms(term, lo, k_last, 1024), /*with_log_log=*/true);
    d.exponent_p = fit.p;
    d.log_exponent_q = fit.q;
    if (fit.p <= 0.95) {
      d.sum = SeriesDiagnostic::SumVerdict::Divergent;
    } else if (fit.p >= 1.05) {
      d.sum = SeriesDiagnostic::SumVerdict::Convergent;
    } else if (fit.q <= 1.02) {
      // sum 1/(k log^q k) diverges iff q <= 1
      d.sum = SeriesDiagnostic::SumVerdict::Divergent;
    } else if (fit.q >= 1.10) {
      d.sum = SeriesDiagnostic::SumVerdict::Convergent;
    } else {
      d.sum = SeriesDiagnostic::SumVerdict::Inconclusive;
    }
  }
  return d;
}

}  // namespace

double edge_length(double a) {
  if (!(a > 0.0)) throw precondition_error("edge conductance must be strictly positive");
  return 1.0 / std::sqrt(a);
}

double delta_a(const SchrodingerOperator& P, VertexId x, VertexId y) {
  const auto& g = P.graph();
  int iy = g.index(y);
  auto dist = a_shortest_paths(P, {g.index(x)});
  return dist[static_cast<size_t>(iy)];
}

MetricBall metric_ball(const SchrodingerOperator& P, VertexId x0, double R) {
  if (R < 0.0) throw precondition_error("metric ball radius must be >= 0");
  const auto& g = P.graph();
  auto dist = a_shortest_paths(P, {g.index(x0)});
  require_ball_interior(P, dist, R + 1.0);
  MetricBall ball{x0, R, {}, {}};
  for (int i = 0; i < g.size(); ++i) {
    if (dist[static_cast<size_t>(i)] <= R) {
      ball.members.push_back(g.id(i));
      ball.distances[g.id(i)] = dist[static_cast<size_t>(i)];
    }
  }
  return ball;
}

GraphFunction cutoff_function(const SchrodingerOperator& P, VertexId x0, double R) {
  const auto& g = P.graph();
  auto dist = a_shortest_paths(P, {g.index(x0)});
  // B_{R+1} itself must sit strictly inside the truncation
  require_ball_interior(P, dist, R + 2.0);
  std::vector<int> outside;
  for (int i = 0; i < g.size(); ++i)
    if (dist[static_cast<size_t>(i)] > R + 1.0) outside.push_back(i);
  if (outside.empty())
    throw precondition_error("truncation too small: complement of B_{R+1} is empty");
  auto to_out = a_shortest_paths(P, outside);
  GraphFunction f;
  for (int i = 0; i < g.size(); ++i) {
    if (dist[static_cast<size_t>(i)] > R + 1.0) continue;  // 0 off B_{R+1}
    f.set(g.id(i), std::min(1.0, to_out[static_cast<size_t>(i)]));
  }
  return f;
}

SeriesDiagnostic ray_completeness_diagnostic(const PathFamily& fam, long n_max) {
  auto term = [&fam](long k) { return edge_length(fam.a(k)); };
  // edges {k, k+1} for k in [first, n_max-1]
  auto d = classify_series(term, fam.first_vertex, n_max - 1);
  switch (d.sum) {
    case SeriesDiagnostic::SumVerdict::Divergent:
      d.completeness = CompletenessVerdict::Complete;
      break;
    case SeriesDiagnostic::SumVerdict::Convergent:
      d.completeness = CompletenessVerdict::Incomplete;
      break;
    default:
      d.completeness = CompletenessVerdict::Inconclusive;
  }
  return d;
}

SeriesDiagnostic kl_proxy_check(const PathFamily& fam, long n_max) {
  auto term = [&fam](long k) {
    double w = fam.omega(k);
    return w * w;
  };
  return classify_series(term, fam.first_vertex, n_max);
}

}  // namespace wgl
