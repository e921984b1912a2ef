#pragma once

#include <utility>
#include <vector>

#include "wgl/errors.hpp"

namespace wgl::linalg {

/// Sparse symmetric matrix; both triangles of the off-diagonal are stored so
/// row iteration sees every neighbor.
struct SymmetricSystem {
  int n = 0;
  std::vector<double> diag;
  std::vector<std::vector<std::pair<int, double>>> offdiag;

  void resize(int size) {
    n = size;
    diag.assign(static_cast<size_t>(size), 0.0);
    offdiag.assign(static_cast<size_t>(size), {});
  }
  void add_offdiag(int i, int j, double v) {
    offdiag[static_cast<size_t>(i)].emplace_back(j, v);
  }
  double norm_inf() const;
};

std::vector<double> matvec(const SymmetricSystem& A, const std::vector<double>& x);

/// Cholesky success test on (A − shift·I); reliable positive-definiteness
/// check for symmetric matrices.
bool is_positive_definite(const SymmetricSystem& A, double shift = 0.0);

struct SolveStats {
  int iterations = 0;  // 0 for direct factorizations
  bool direct = true;
};

/// Solve A x = b for symmetric positive definite A. Dense LLT for n ≤ 512,
/// conjugate gradients with relative residual 1e−10 above.
std::vector<double> solve_spd(const SymmetricSystem& A, const std::vector<double>& b,
                              SolveStats* stats = nullptr);

struct EigenEstimate {
  double value = 0.0;
  std::vector<double> vector;
  bool converged = false;
  int iterations = 0;
  std::vector<double> iterate_log;  // Rayleigh quotient per iteration
};

/// Smallest eigenvalue of symmetric A: dense solver for small systems,
/// shift-regularized inverse power iteration (Rayleigh-quotient stopping rule,
/// 200-iteration cap) above.
EigenEstimate smallest_eigenvalue(const SymmetricSystem& A, double tol = 1e-8,
                                  int max_iterations = 200);

}  // namespace wgl::linalg
