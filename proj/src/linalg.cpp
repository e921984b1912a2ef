#include "wgl/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>

namespace wgl::linalg {

namespace {

Eigen::SparseMatrix<double> to_sparse(const SymmetricSystem& A, double shift) {
  std::vector<Eigen::Triplet<double>> trip;
  size_t nnz = static_cast<size_t>(A.n);
  for (const auto& row : A.offdiag) nnz += row.size();
  trip.reserve(nnz);
  for (int i = 0; i < A.n; ++i) {
    trip.emplace_back(i, i, A.diag[static_cast<size_t>(i)] + shift);
    for (const auto& [j, v] : A.offdiag[static_cast<size_t>(i)]) trip.emplace_back(i, j, v);
  }
  Eigen::SparseMatrix<double> M(A.n, A.n);
  M.setFromTriplets(trip.begin(), trip.end());
  return M;
}

Eigen::MatrixXd to_dense(const SymmetricSystem& A) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(A.n, A.n);
  for (int i = 0; i < A.n; ++i) {
    M(i, i) = A.diag[static_cast<size_t>(i)];
    for (const auto& [j, v] : A.offdiag[static_cast<size_t>(i)]) M(i, j) += v;
  }
  return M;
}

}  // namespace

double SymmetricSystem::norm_inf() const {
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag[static_cast<size_t>(i)]);
    for (const auto& [j, v] : offdiag[static_cast<size_t>(i)]) row += std::abs(v);
    best = std::max(best, row);
  }
  return best;
}

std::vector<double> matvec(const SymmetricSystem& A, const std::vector<double>& x) {
  std::vector<double> y(static_cast<size_t>(A.n), 0.0);
  for (int i = 0; i < A.n; ++i) {
    double acc = A.diag[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
    for (const auto& [j, v] : A.offdiag[static_cast<size_t>(i)]) acc += v * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = acc;
  }
  return y;
}

bool is_positive_definite(const SymmetricSystem& A, double shift) {
  if (A.n == 0) return true;
  if (A.n <= 512) {
    Eigen::MatrixXd M = to_dense(A);
    if (shift != 0.0) M.diagonal().array() -= shift;
    Eigen::LLT<Eigen::MatrixXd> llt(M);
    return llt.info() == Eigen::Success;
  }
  Eigen::SparseMatrix<double> M = to_sparse(A, -shift);
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(M);
  return llt.info() == Eigen::Success;
}

std::vector<double> solve_spd(const SymmetricSystem& A, const std::vector<double>& b,
                              SolveStats* stats) {
  if (A.n == 0) return {};
  if (static_cast<int>(b.size()) != A.n) throw precondition_error("rhs size mismatch");
  if (A.n <= 512) {
    Eigen::MatrixXd M = to_dense(A);
    Eigen::LLT<Eigen::MatrixXd> llt(M);
    if (llt.info() != Eigen::Success) throw numeric_error("Cholesky factorization failed");
    Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(), A.n);
    Eigen::VectorXd x = llt.solve(rhs);
    if (stats) *stats = {0, true};
    return std::vector<double>(x.data(), x.data() + A.n);
  }
  // conjugate gradients, relative residual 1e-10
  std::vector<double> x(static_cast<size_t>(A.n), 0.0);
  std::vector<double> r = b, p = b;
  double bnorm = 0.0, rr = 0.0;
  for (double v : b) bnorm += v * v;
  bnorm = std::sqrt(bnorm);
  if (bnorm == 0.0) {
    if (stats) *stats = {0, false};
    return x;
  }
  for (double v : r) rr += v * v;
  int it = 0;
  const int cap = 20 * A.n;
  for (; it < cap; ++it) {
    if (std::sqrt(rr) <= 1e-10 * bnorm) break;
    std::vector<double> Ap = matvec(A, p);
    double pAp = 0.0;
    for (int i = 0; i < A.n; ++i) pAp += p[static_cast<size_t>(i)] * Ap[static_cast<size_t>(i)];
    if (!(pAp > 0.0)) throw numeric_error("CG breakdown: matrix not positive definite");
    double alpha = rr / pAp;
    double rr_new = 0.0;
    for (int i = 0; i < A.n; ++i) {
      x[static_cast<size_t>(i)] += alpha * p[static_cast<size_t>(i)];
      r[static_cast<size_t>(i)] -= alpha * Ap[static_cast<size_t>(i)];
      rr_new += r[static_cast<size_t>(i)] * r[static_cast<size_t>(i)];
    }
    double beta = rr_new / rr;
    rr = rr_new;
    for (int i = 0; i < A.n; ++i)
      p[static_cast<size_t>(i)] = r[static_cast<size_t>(i)] + beta * p[static_cast<size_t>(i)];
  }
  if (std::sqrt(rr) > 1e-10 * bnorm)
    throw numeric_error("CG did not reach relative residual 1e-10 in " + std::to_string(cap) +
                        " iterations");
  if (stats) *stats = {it, false};
  return x;
}

EigenEstimate smallest_eigenvalue(const SymmetricSystem& A, double tol, int max_iterations) {
  EigenEstimate out;
  if (A.n == 0) throw precondition_error("smallest_eigenvalue of empty system");
  if (A.n <= 256) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_dense(A));
    if (es.info() != Eigen::Success) throw numeric_error("dense eigensolver failed");
    out.value = es.eigenvalues()(0);
    Eigen::VectorXd v = es.eigenvectors().col(0);
    out.vector.assign(v.data(), v.data() + A.n);
    out.converged = true;
    return out;
  }
  // Shift-regularized inverse power iteration. The small shift keeps the
  // factorization usable when the matrix is singular to working precision.
  const double sigma = std::max(1e-10, 1e-14 * A.norm_inf());
  Eigen::SparseMatrix<double> M = to_sparse(A, sigma);
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(M);
  if (lu.info() != Eigen::Success) throw numeric_error("sparse LU factorization failed");

  Eigen::SparseMatrix<double> Araw = to_sparse(A, 0.0);
  Eigen::VectorXd q = Eigen::VectorXd::Ones(A.n);
  q.normalize();
  double r_prev = q.dot(Araw * q);
  out.iterate_log.push_back(r_prev);
  for (int it = 1; it <= max_iterations; ++it) {
    Eigen::VectorXd z = lu.solve(q);
    double zn = z.norm();
    if (!(zn > 0.0) || !std::isfinite(zn)) throw numeric_error("inverse iteration breakdown");
    q = z / zn;
    double r = q.dot(Araw * q);
    out.iterations = it;
    out.iterate_log.push_back(r);
    if (std::abs(r - r_prev) <= tol * std::max(1.0, std::abs(r))) {
      out.value = r;
      out.vector.assign(q.data(), q.data() + A.n);
      out.converged = true;
      return out;
    }
    r_prev = r;
  }
  out.value = r_prev;
  out.vector.assign(q.data(), q.data() + A.n);
  out.converged = false;
  return out;
}

}  // namespace wgl::linalg
