#pragma once

// Shared test utilities: seeded random graph/function generators and a small
// dense Gaussian-elimination solver used as an independent oracle.

#include <cmath>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "wgl/graph.hpp"
#include "wgl/operators.hpp"

namespace testutil {

using wgl::GraphFunction;
using wgl::VertexId;
using wgl::WeightedGraph;

// Connected graph: random tree plus extra chords; omega in [0.2, 3],
// conductance in [0.1, 5].
inline std::shared_ptr<WeightedGraph> random_connected_graph(std::mt19937_64& rng, int n_lo,
                                                             int n_hi) {
  int n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
  std::uniform_real_distribution<double> wd(0.2, 3.0), cd(0.1, 5.0);
  std::vector<std::pair<VertexId, double>> vw;
  for (int i = 0; i < n; ++i) vw.emplace_back(i, wd(rng));
  std::vector<WeightedGraph::Edge> edges;
  std::set<std::pair<int, int>> used;
  for (int i = 1; i < n; ++i) {
    int p = std::uniform_int_distribution<int>(0, i - 1)(rng);
    edges.push_back({p, i, cd(rng)});
    used.insert({p, i});
  }
  for (int t = 0; t < n / 2; ++t) {
    int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (!used.insert({key.first, key.second}).second) continue;
    edges.push_back({key.first, key.second, cd(rng)});
  }
  return std::make_shared<WeightedGraph>(vw, edges);
}

inline GraphFunction random_function(std::mt19937_64& rng, const WeightedGraph& g,
                                     int support_max) {
  std::uniform_real_distribution<double> vd(-2.0, 2.0);
  int m = std::uniform_int_distribution<int>(1, std::min(support_max, g.size()))(rng);
  GraphFunction f;
  for (int t = 0; t < m; ++t) {
    int i = std::uniform_int_distribution<int>(0, g.size() - 1)(rng);
    f.set(g.id(i), vd(rng));
  }
  return f;
}

// path 0-1-...-(n-1), unit weights/conductances unless overridden
inline std::shared_ptr<WeightedGraph> unit_path(int n, double omega = 1.0, double cond = 1.0) {
  std::vector<std::pair<VertexId, double>> vw;
  std::vector<WeightedGraph::Edge> edges;
  for (int i = 0; i < n; ++i) vw.emplace_back(i, omega);
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, cond});
  return std::make_shared<WeightedGraph>(vw, edges);
}

// Gaussian elimination with partial pivoting; independent of the library's
// linear algebra.
inline std::vector<double> gauss_solve(std::vector<std::vector<double>> M, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    std::swap(M[piv], M[col]);
    std::swap(b[piv], b[col]);
    if (M[col][col] == 0.0) throw std::runtime_error("oracle: singular matrix");
    for (int r = col + 1; r < n; ++r) {
      double factor = M[r][col] / M[col][col];
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) M[r][c] -= factor * M[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(static_cast<size_t>(n));
  for (int r = n - 1; r >= 0; --r) {
    double acc = b[static_cast<size_t>(r)];
    for (int c = r + 1; c < n; ++c) acc -= M[static_cast<size_t>(r)][static_cast<size_t>(c)] * x[static_cast<size_t>(c)];
    x[static_cast<size_t>(r)] = acc / M[static_cast<size_t>(r)][static_cast<size_t>(r)];
  }
  return x;
}

}  // namespace testutil
